"""Intersection lattice: flats, localizations, Moebius function, region count.

Flats are identified by their closed index set {i : X is inside H_i}; two
flats are equal iff those sets are.  The Moebius-based region count is the
independent cross-check for the chamber enumeration elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arrangement import Arrangement
from .errors import UnknownFlat
from .linalg import RatMatrix, RatVector, kernel_basis


def closure_of_forms(forms, dim, indices: frozenset[int]) -> frozenset[int]:
    """Indices j whose form vanishes on the intersection of the given ones."""
    if indices:
        sub = RatMatrix.of([forms[i] for i in sorted(indices)], dim)
    else:
        sub = RatMatrix((), dim)
    K = kernel_basis(sub)
    out = []
    for j, f in enumerate(forms):
        if all(f.dot(row) == 0 for row in K.rows):
            out.append(j)
    return frozenset(out)


def closed_sets_of_forms(forms, dim) -> dict[frozenset[int], int]:
    """All closed index sets of a central (not necessarily essential) family,
    mapped to their rank; computed by iterated pairwise intersection."""
    forms = [f if isinstance(f, RatVector) else RatVector.of(f) for f in forms]
    n = len(forms)

    def rank_of(S):
        if not S:
            return 0
        return dim - kernel_basis(RatMatrix.of([forms[i] for i in sorted(S)], dim)).nrows

    bottom = closure_of_forms(forms, dim, frozenset())
    known = {bottom: rank_of(bottom)}
    frontier = [bottom]
    while frontier:
        nxt = {}
        for S in frontier:
            for j in range(n):
                if j in S:
                    continue
                closed = closure_of_forms(forms, dim, S | {j})
                if closed not in known and closed not in nxt:
                    nxt[closed] = rank_of(closed)
        known.update(nxt)
        frontier = list(nxt)
    return known


@dataclass(frozen=True)
class Flat:
    """An intersection subspace with its closed index set and kernel basis."""

    contains: frozenset[int]
    codim: int
    kernel: RatMatrix

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.contains))


class Lattice:
    """All flats of a central essential arrangement, with Moebius values."""

    def __init__(self, arrangement: Arrangement, flats, moebius):
        self.arrangement = arrangement
        self.flats = tuple(flats)
        self.moebius = moebius  # key() -> int
        self.by_contains = {f.contains: f for f in self.flats}

    def flats_of_codim(self, c: int) -> tuple[Flat, ...]:
        return tuple(f for f in self.flats if f.codim == c)

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    @property
    def top(self) -> Flat:
        return next(f for f in self.flats if f.codim == self.arrangement.dim)

    def mu(self, X: Flat) -> int:
        return self.moebius[X.key()]

    def flat_for(self, indices) -> Flat:
        """The flat cut out by the given hyperplanes (its closure is taken)."""
        A = self.arrangement
        closed = closure_of_forms(A.forms, A.dim, frozenset(indices))
        try:
            return self.by_contains[closed]
        except KeyError:
            raise UnknownFlat(f"no flat for indices {sorted(indices)}") from None


def localization(L: Lattice, X: Flat) -> frozenset[int]:
    """Indices of the hyperplanes containing X."""
    if X.contains not in L.by_contains:
        raise UnknownFlat(f"flat {sorted(X.contains)} not in the lattice")
    return X.contains


@lru_cache(maxsize=256)
def build_lattice(A: Arrangement) -> Lattice:
    """Iterated pairwise intersection to a fixed point, level by level."""
    n, dim = A.n, A.dim
    forms = A.forms

    def make_flat(closed: frozenset[int]) -> Flat:
        if closed:
            sub = RatMatrix.of([forms[i] for i in sorted(closed)], dim)
        else:
            sub = RatMatrix((), dim)
        K = kernel_basis(sub)
        return Flat(closed, dim - K.nrows, K)

    bottom = make_flat(closure_of_forms(forms, dim, frozenset()))
    levels = [[bottom]]
    known = {bottom.contains}
    frontier = [bottom]
    while frontier:
        nxt = {}
        for X in frontier:
            for j in range(n):
                if j in X.contains:
                    continue
                closed = closure_of_forms(forms, dim, X.contains | {j})
                if closed in known or closed in nxt:
                    continue
                nxt[closed] = make_flat(closed)
        if not nxt:
            break
        frontier = [nxt[k] for k in sorted(nxt, key=lambda s: tuple(sorted(s)))]
        known.update(nxt)
        levels.append(frontier)

    flats = [f for level in levels for f in level]
    # Moebius recursion: mu(V) = 1, then the sum over flats above X is zero.
    mu = {bottom.key(): 1}
    for level in levels[1:]:
        for X in level:
            s = sum(mu[Y.key()] for Y in flats
                    if Y.contains < X.contains and Y.key() in mu)
            mu[X.key()] = -s
    L = Lattice(A, flats, mu)
    for X in flats[1:]:
        assert sum(L.mu(Y) for Y in flats if Y.contains <= X.contains) == 0
    return L


def chamber_count_oracle(L: Lattice) -> int:
    """Region count from the signed Moebius sum (independent of enumeration)."""
    return sum(L.mu(X) * (-1) ** X.codim for X in L.flats)


def characteristic_polynomial(L: Lattice) -> tuple[int, ...]:
    """Coefficients c[0..dim] with chi(t) = sum c[k] * t^k."""
    dim = L.arrangement.dim
    coeffs = [0] * (dim + 1)
    for X in L.flats:
        coeffs[dim - X.codim] += L.mu(X)
    return tuple(coeffs)
