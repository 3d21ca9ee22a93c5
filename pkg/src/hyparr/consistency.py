"""Consistency of half-space systems at flats and the Sigma filtration.

Sigma_k holds the sign vectors whose chosen half-spaces are consistent at
every flat of codimension at most k.  Sets are enumerated by depth-first sign
assignment: a branch dies as soon as a fully-assigned localization of
codimension <= k is infeasible.  Localizations on independent hyperplanes
are never checked (they are consistent for any signs), and per-flat verdicts
are memoized across branches.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import (Arrangement, SignVector, arrangement_from_obj,
                          arrangement_to_obj, primitive_rows, validate)
from .errors import TooLarge, UnknownFlat
from .feasibility import FeasibilityResult, _solve_int, signed_system, strict_feasible
from .lattice import Flat, Lattice, build_lattice, chamber_count_oracle

DEFAULT_ENUM_LIMIT = 22
REPORT_SET_LIMIT = 16


def global_consistency(A: Arrangement, eps: SignVector) -> FeasibilityResult:
    """Feasibility of the full signed system, with certificate."""
    return strict_feasible(signed_system(A, eps))


def is_globally_consistent(A: Arrangement, eps: SignVector) -> bool:
    return global_consistency(A, eps).feasible


def consistency_at(A: Arrangement, eps: SignVector, X: Flat,
                   lattice: Lattice | None = None) -> FeasibilityResult:
    """Feasibility of the subsystem over the hyperplanes containing X."""
    if lattice is not None and X.contains not in lattice.by_contains:
        raise UnknownFlat(f"flat {sorted(X.contains)} not in the lattice")
    return strict_feasible(signed_system(A, eps, sorted(X.contains)))


def is_consistent_at(A: Arrangement, eps: SignVector, X: Flat,
                     lattice: Lattice | None = None) -> bool:
    return consistency_at(A, eps, X, lattice).feasible


def is_locally_consistent(A: Arrangement, eps: SignVector,
                          lattice: Lattice | None = None) -> bool:
    """Consistent at every flat except the origin."""
    lat = lattice or build_lattice(A)
    for X in lat.flats:
        if X.codim >= A.dim:
            continue
        if len(X.contains) <= X.codim:
            continue  # independent localization, consistent for any signs
        if not is_consistent_at(A, eps, X):
            return False
    return True


def _signed_rows(rows, signs, indices):
    return tuple(tuple(signs[i] * v for v in rows[i]) for i in indices)


def _checks_by_last(lat: Lattice, max_codim: int):
    """Non-independent flats of codim 2..max_codim keyed by largest index."""
    by_last: dict[int, list[Flat]] = {}
    for X in lat.flats:
        if not (2 <= X.codim <= max_codim):
            continue
        if len(X.contains) <= X.codim:
            continue
        by_last.setdefault(max(X.contains), []).append(X)
    for v in by_last.values():
        v.sort(key=lambda f: f.key())
    return by_last


class _SigmaSearch:
    def __init__(self, A: Arrangement, lat: Lattice, k: int):
        self.A = A
        self.n = A.n
        self.dim = A.dim
        self.k = k
        self.rows = primitive_rows(A)
        self.by_last = _checks_by_last(lat, min(k, A.dim - 1))
        self.check_full = (k == A.dim)
        self.memo: dict = {}

    def flat_ok(self, X: Flat, signs) -> bool:
        idx = X.key()
        local = tuple(signs[i] for i in idx)
        key = (idx, local)
        hit = self.memo.get(key)
        if hit is None:
            kind, _ = _solve_int(_signed_rows(self.rows, signs, idx), self.dim)
            hit = kind != "dual"
            self.memo[key] = hit
        return hit

    def node_ok(self, signs) -> bool:
        i = len(signs) - 1
        for X in self.by_last.get(i, ()):
            if not self.flat_ok(X, signs):
                return False
        if self.check_full:
            kind, _ = _solve_int(_signed_rows(self.rows, signs, range(i + 1)), self.dim)
            if kind == "dual":
                return False
        return True

    def run(self, prefix=()) -> list[SignVector]:
        out: list[SignVector] = []
        signs = []
        for s in prefix:
            signs.append(s)
            if not self.node_ok(signs):
                return out

        def dfs():
            if len(signs) == self.n:
                out.append(SignVector(tuple(signs)))
                return
            for s in (1, -1):
                signs.append(s)
                if self.node_ok(signs):
                    dfs()
                signs.pop()

        dfs()
        return out


def sigma(A: Arrangement, k: int, lattice: Lattice | None = None,
          limit: int | None = None) -> tuple[SignVector, ...]:
    """The exact set Sigma_k, lexicographically ordered ('+' < '-')."""
    if not 1 <= k <= A.dim:
        raise ValueError(f"k must be in 1..{A.dim}")
    limit = DEFAULT_ENUM_LIMIT if limit is None else limit
    if A.n > limit:
        raise TooLarge(f"{A.n} hyperplanes exceed the enumeration limit {limit}")
    lat = lattice or build_lattice(A)
    return tuple(_SigmaSearch(A, lat, k).run())


def _sigma_subtree(args):
    obj, k, prefix = args
    A = validate(arrangement_from_obj(obj))
    lat = build_lattice(A)
    search = _SigmaSearch(A, lat, k)
    return [str(sv) for sv in search.run(prefix)]


def sigma_strings_parallel(A: Arrangement, k: int, jobs: int,
                           limit: int | None = None) -> list[str]:
    """Sigma_k as sorted sign strings, split across worker processes.

    The result is independent of the worker count: subtrees are disjoint by
    sign prefix and the merged list is sorted.
    """
    limit = DEFAULT_ENUM_LIMIT if limit is None else limit
    if A.n > limit:
        raise TooLarge(f"{A.n} hyperplanes exceed the enumeration limit {limit}")
    if jobs <= 1:
        return [str(sv) for sv in sigma(A, k, limit=limit)]
    depth = min(A.n, max(1, (jobs - 1).bit_length() + 1))
    prefixes = []

    def grow(p):
        if len(p) == depth:
            prefixes.append(tuple(p))
            return
        for s in (1, -1):
            grow(p + [s])

    grow([])
    obj = arrangement_to_obj(A)
    tasks = [(obj, k, p) for p in prefixes]
    out: list[str] = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_sigma_subtree, tasks):
            out.extend(part)
    return sorted(out)


@dataclass(frozen=True)
class GapWitness:
    """One element of Sigma_k \\ Sigma_{k+1} and a flat where it fails."""

    k: int
    eps: SignVector
    flat: Flat
    dual: tuple[Fraction, ...]


@dataclass(frozen=True)
class SigmaFiltration:
    n: int
    dim: int
    counts: dict[int, int]
    sets: dict[int, tuple[str, ...]]
    witnesses: dict[int, GapWitness]

    def has_gap_at(self, k: int) -> bool:
        return k in self.witnesses


def _gap_witness(A, lat, k, eps: SignVector) -> GapWitness:
    """The lexicographically smallest failing flat of codim k+1 for eps."""
    for X in sorted(lat.flats_of_codim(k + 1), key=lambda f: f.key()):
        res = consistency_at(A, eps, X)
        if not res.feasible:
            return GapWitness(k, eps, X, res.dual)
    raise AssertionError("gap witness without failing flat")


def sigma_filtration(A: Arrangement, lattice: Lattice | None = None,
                     limit: int | None = None,
                     include_sets: bool | None = None,
                     jobs: int = 1) -> SigmaFiltration:
    """Counts of every Sigma_k, plus a witness for each strict drop.

    Explicit sorted sets are included when include_sets is true, or by
    default when n <= REPORT_SET_LIMIT.  jobs > 1 spreads the base
    enumeration over worker processes; the result does not depend on it.
    """
    limit = DEFAULT_ENUM_LIMIT if limit is None else limit
    if A.n > limit:
        raise TooLarge(f"{A.n} hyperplanes exceed the enumeration limit {limit}")
    lat = lattice or build_lattice(A)
    n, dim = A.n, A.dim
    if include_sets is None:
        include_sets = n <= REPORT_SET_LIMIT

    counts = {1: 2 ** n}
    sets: dict[int, tuple[str, ...]] = {}
    witnesses: dict[int, GapWitness] = {}

    level_sets: dict[int, tuple[SignVector, ...]] = {}
    prev: tuple[SignVector, ...] | None = None
    for k in range(2, dim + 1):
        if prev is None:
            if jobs > 1:
                cur = tuple(SignVector.from_string(s)
                            for s in sigma_strings_parallel(A, k, jobs, limit=limit))
            else:
                cur = sigma(A, k, lattice=lat, limit=limit)
        else:
            search = _SigmaSearch(A, lat, k)
            new_checks = [X for X in lat.flats
                          if X.codim == k and (len(X.contains) > X.codim or k == dim)]
            new_checks.sort(key=lambda f: f.key())
            cur = tuple(sv for sv in prev
                        if all(search.flat_ok(X, sv.signs) for X in new_checks))
        level_sets[k] = cur
        counts[k] = len(cur)
        prev = cur

    if include_sets:
        from itertools import product

        sets[1] = tuple("".join(p) for p in product("+-", repeat=n))
        for k in range(2, dim + 1):
            sets[k] = tuple(str(sv) for sv in level_sets[k])

    # witnesses at each strict drop
    if dim >= 2 and counts[1] > counts[2]:
        member = {str(sv) for sv in level_sets[2]}
        from itertools import product

        for p in product("+-", repeat=n):
            s = "".join(p)
            if s not in member:
                witnesses[1] = _gap_witness(A, lat, 1, SignVector.from_string(s))
                break
    for k in range(2, dim):
        if counts[k] > counts[k + 1]:
            member = {str(sv) for sv in level_sets[k + 1]}
            eps = next(sv for sv in level_sets[k] if str(sv) not in member)
            witnesses[k] = _gap_witness(A, lat, k, eps)

    assert all(counts[k] >= counts[k + 1] for k in range(1, dim))
    assert counts[dim] == chamber_count_oracle(lat)
    return SigmaFiltration(n, dim, counts, sets, witnesses)
