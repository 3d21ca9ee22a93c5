"""Chambers of the real complement, walls, flows, and sinks.

A chamber is a globally consistent sign vector; its walls are the
hyperplanes supporting a facet, decided exactly by eliminating the equality
onto a kernel-basis parametrization of the hyperplane and testing the
reduced strict system.  A flow crosses, at each step, the lowest-index wall
whose side disagrees with the target system of half-spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arrangement import Arrangement, SignVector, primitive_rows
from .errors import Infeasible
from .feasibility import _solve_int, signed_system, strict_feasible
from .lattice import build_lattice
from .linalg import RatMatrix, RatVector, kernel_basis


@dataclass(frozen=True)
class Chamber:
    signs: SignVector
    witness: RatVector
    walls: frozenset[int]


@dataclass(frozen=True)
class FlowPath:
    """Chambers visited and the hyperplane crossed at each step."""

    chambers: tuple[Chamber, ...]
    crossed: tuple[int, ...]

    @property
    def sink(self) -> Chamber:
        return self.chambers[-1]


@lru_cache(maxsize=4096)
def _hyperplane_basis(A: Arrangement, i: int) -> tuple[tuple[int, ...], ...]:
    """Reduced integer rows of all other forms on a basis of hyperplane i."""
    K = kernel_basis(RatMatrix.of([A.hyperplanes[i].form], A.dim))
    rows = primitive_rows(A)
    reduced = []
    for j in range(A.n):
        if j == i:
            reduced.append(())
            continue
        reduced.append(tuple(
            sum(rows[j][t] * int(b[t]) for t in range(A.dim)) for b in K.rows))
    return tuple(reduced)


@lru_cache(maxsize=65536)
def _wall_set(A: Arrangement, signs: tuple[int, ...]) -> frozenset[int]:
    out = []
    for i in range(A.n):
        reduced = _hyperplane_basis(A, i)
        rows = tuple(tuple(signs[j] * v for v in reduced[j])
                     for j in range(A.n) if j != i)
        kind, _ = _solve_int(rows, A.dim - 1)
        if kind != "dual":
            out.append(i)
    return frozenset(out)


def walls(A: Arrangement, chamber_or_signs) -> frozenset[int]:
    """Indices i whose hyperplane supports a facet of the chamber."""
    signs = chamber_or_signs.signs if isinstance(chamber_or_signs, Chamber) else chamber_or_signs
    if isinstance(signs, SignVector):
        signs = signs.signs
    return _wall_set(A, signs)


def chamber_from_signs(A: Arrangement, eps: SignVector) -> Chamber:
    """Build the chamber with the given signs; Infeasible when it is empty."""
    res = strict_feasible(signed_system(A, eps))
    if not res.feasible:
        raise Infeasible(f"{eps} is not a chamber")
    return Chamber(eps, res.witness, _wall_set(A, eps.signs))


def enumerate_chambers(A: Arrangement, limit: int | None = None) -> tuple[Chamber, ...]:
    """All chambers in lexicographic sign order, with witness and wall set."""
    from .consistency import sigma

    lat = build_lattice(A)
    return tuple(chamber_from_signs(A, sv)
                 for sv in sigma(A, A.dim, lattice=lat, limit=limit))


def lex_smallest_chamber(A: Arrangement) -> Chamber:
    """Greedy prefix descent; '+' is preferred at every index."""
    rows = primitive_rows(A)
    signs: list[int] = []
    for i in range(A.n):
        signs.append(1)
        sys_rows = tuple(tuple(signs[j] * v for v in rows[j]) for j in range(i + 1))
        kind, _ = _solve_int(sys_rows, A.dim)
        if kind == "dual":
            signs[-1] = -1
    return chamber_from_signs(A, SignVector(tuple(signs)))


def is_sink(A: Arrangement, eps: SignVector, C: Chamber) -> bool:
    """True iff the chamber lies on the chosen side of each of its walls."""
    return all(C.signs[i] == eps[i] for i in C.walls)


def flow_to_sink(A: Arrangement, eps: SignVector, start: Chamber) -> FlowPath:
    """Cross the lowest-index disagreeing wall until a sink is reached."""
    path = [start]
    crossed: list[int] = []
    cur = start
    while True:
        bad = sorted(i for i in cur.walls if cur.signs[i] != eps[i])
        if not bad:
            break
        i = bad[0]
        assert i not in crossed, "a flow never crosses a hyperplane twice"
        cur = chamber_from_signs(A, cur.signs.flip(i))
        path.append(cur)
        crossed.append(i)
        assert len(crossed) <= A.n
    return FlowPath(tuple(path), tuple(crossed))


def all_sinks(A: Arrangement, eps: SignVector, limit: int | None = None) -> tuple[Chamber, ...]:
    """Every chamber that is a sink for the given system; always nonempty."""
    sinks = tuple(C for C in enumerate_chambers(A, limit=limit)
                  if is_sink(A, eps, C))
    assert sinks, "every system of half-spaces has a sink"
    return sinks
