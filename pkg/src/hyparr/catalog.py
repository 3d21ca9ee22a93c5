"""Catalog of named arrangements and seeded generic constructions.

Randomized constructors are deterministic for a fixed seed and verify their
defining combinatorics before returning: genericity is rank-checked, never
assumed, and the fixed six-line realization is checked against its intended
incidence data (two triple points, all other crossings double, three
parallel classes).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from itertools import product

from .arrangement import (AffineArrangement, Arrangement, SignVector, cone,
                          essentialize, validate)
from .consistency import is_globally_consistent, is_locally_consistent, sigma
from .errors import (GenericityFailed, HyparrError, RealizationInvalid,
                     WitnessNotFound)
from .feasibility import StrictSystem, strict_feasible
from .lattice import closed_sets_of_forms
from .linalg import RatMatrix, RatVector, invert, rank

RETRY_BUDGET = 64


@dataclass(frozen=True)
class GenericitySeed:
    seed: int
    coefficient_bound: int = 9


def boolean(dim: int) -> Arrangement:
    """The coordinate hyperplanes x_1, ..., x_dim."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    forms = [[1 if j == i else 0 for j in range(dim)] for i in range(dim)]
    labels = [f"x{i + 1}" for i in range(dim)]
    return validate(Arrangement.from_forms(dim, forms, labels))


def generic4() -> Arrangement:
    """x = 0, y = 0, z = 0 and x + y + z = 0 in R^3."""
    return validate(Arrangement.from_forms(
        3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]],
        ["x", "y", "z", "x+y+z"]))


def generic(n: int, dim: int, seed: int | GenericitySeed,
            coefficient_bound: int = 9) -> Arrangement:
    """n random integer forms in R^dim, redrawn until every subset of size
    <= dim is independent (checked by rank).  Deterministic per seed."""
    if isinstance(seed, GenericitySeed):
        coefficient_bound = seed.coefficient_bound
        seed = seed.seed
    if not n >= dim >= 1:
        raise ValueError("need n >= dim >= 1")
    rng = random.Random(seed)
    for _ in range(RETRY_BUDGET):
        forms = []
        for _ in range(n):
            row = [rng.randint(-coefficient_bound, coefficient_bound) for _ in range(dim)]
            forms.append(row)
        if any(all(v == 0 for v in row) for row in forms):
            continue
        if _all_small_subsets_independent(forms, dim):
            return validate(Arrangement.from_forms(dim, forms))
    raise GenericityFailed(f"no generic draw in {RETRY_BUDGET} tries (seed {seed})")


def _all_small_subsets_independent(forms, dim) -> bool:
    size = min(dim, len(forms))
    for S in combinations(range(len(forms)), size):
        if rank(RatMatrix.of([forms[i] for i in S], dim)) < size:
            return False
    return True


# Fixed realization of the six-line figure with two triple points:
#   H1: x+2y=10  H2: x+2y=8  H3: x=6  H4: x=4  H5: x-2y=2  H6: x-2y=0
_X2_LINES = [
    ((1, 2), 10), ((1, 2), 8), ((1, 0), 6), ((1, 0), 4), ((1, -2), 2), ((1, -2), 0),
]


def x2_affine() -> AffineArrangement:
    """Six affine lines with triple points exactly at {1,3,5} and {2,4,6}."""
    forms = [a for a, _ in _X2_LINES]
    constants = [-b for _, b in _X2_LINES]
    arr = AffineArrangement.of(2, forms, constants)
    _verify_x2(arr)
    return arr


def _verify_x2(arr: AffineArrangement) -> None:
    parallel = []
    points: dict[tuple[Fraction, Fraction], set[int]] = {}
    for i, j in combinations(range(arr.n), 2):
        a, b = arr.forms[i], arr.forms[j]
        d = a[0] * b[1] - a[1] * b[0]
        if d == 0:
            parallel.append({i, j})
            continue
        ci, cj = arr.constants[i], arr.constants[j]
        x = (-ci * b[1] + cj * a[1]) / d
        y = (-a[0] * cj + b[0] * ci) / d
        points.setdefault((x, y), set()).update((i, j))
    triples = sorted(tuple(sorted(k + 1 for k in v))
                     for v in points.values() if len(v) > 2)
    if triples != [(1, 3, 5), (2, 4, 6)]:
        raise RealizationInvalid(f"triple points {triples} != [(1,3,5), (2,4,6)]")
    if any(len(v) > 3 for v in points.values()):
        raise RealizationInvalid("an intersection point of multiplicity > 3")
    if sorted(tuple(sorted(k + 1 for k in p)) for p in parallel) != \
            [(1, 2), (3, 4), (5, 6)]:
        raise RealizationInvalid("parallel classes are not {1,2}, {3,4}, {5,6}")
    expected = {(Fraction(6), Fraction(2)), (Fraction(4), Fraction(2))}
    got = {pt for pt, v in points.items() if len(v) > 2}
    if got != expected:
        raise RealizationInvalid(f"triple points at {sorted(got)}")


def x2_coned() -> Arrangement:
    """The coning of the six-line figure: 7 planes in R^3, z = 0 last."""
    return cone(x2_affine())


def braid(m: int) -> Arrangement:
    """Forms x_i - x_j (i < j) in R^m, restricted to essential coordinates."""
    if m < 2:
        raise ValueError("m must be >= 2")
    forms = []
    labels = []
    for i, j in combinations(range(m), 2):
        row = [0] * m
        row[i] = 1
        row[j] = -1
        forms.append(row)
        labels.append(f"x{i + 1}-x{j + 1}")
    return validate(essentialize(
        [RatVector.of(r) for r in forms], m, labels))


def generic_union(A: Arrangement, B: Arrangement,
                  seed: int | GenericitySeed) -> tuple[Arrangement, SignVector]:
    """A union A and g(B) for a seeded random g, with a verified witness.

    g is redrawn until it is invertible and every flat of A is in general
    position with every flat of g(B); the returned sign vector takes a
    chamber of A, the side of g(B)'s first hyperplane away from it, and a
    chamber of g(B) on that side.  It is verified locally consistent and
    globally inconsistent before returning.
    """
    if isinstance(seed, GenericitySeed):
        bound = seed.coefficient_bound
        seed = seed.seed
    else:
        bound = 9
    if B.n == 0:
        raise ValueError("B must be nonempty")
    if A.dim != B.dim:
        raise ValueError("A and B must live in the same dimension")
    validate(A)
    dim = A.dim
    rng = random.Random(seed)
    a_flats = closed_sets_of_forms(A.forms, dim)
    b_forms_raw = B.forms
    failed_witness = False
    for _ in range(RETRY_BUDGET):
        g = RatMatrix.of([[rng.randint(-bound, bound) for _ in range(dim)]
                          for _ in range(dim)], dim)
        try:
            ginv = invert(g)
        except ValueError:
            continue
        gb_forms = [RatVector(tuple(sum(f[i] * ginv.rows[i][j] for i in range(dim))
                                    for j in range(dim)))
                    for f in b_forms_raw]
        union_forms = list(A.forms) + gb_forms
        try:
            union = validate(Arrangement.from_forms(
                dim, union_forms,
                list(A.labels) + [f"g.{l}" for l in B.labels]))
        except HyparrError:
            continue
        gb_flats = closed_sets_of_forms(gb_forms, dim)
        if not _flats_in_general_position(A.forms, gb_forms, a_flats, gb_flats, dim):
            continue
        eps = _union_witness(A, gb_forms)
        if eps is None:
            continue
        if is_locally_consistent(union, eps) and not is_globally_consistent(union, eps):
            return union, eps
        failed_witness = True
    if failed_witness:
        raise WitnessNotFound(f"no verified witness in {RETRY_BUDGET} tries (seed {seed})")
    raise GenericityFailed(f"no generic g in {RETRY_BUDGET} tries (seed {seed})")


def _flats_in_general_position(a_forms, gb_forms, a_flats, gb_flats, dim) -> bool:
    for S, ra in a_flats.items():
        for T, rb in gb_flats.items():
            rows = [a_forms[i] for i in sorted(S)] + [gb_forms[j] for j in sorted(T)]
            if not rows:
                continue
            if rank(RatMatrix.of(rows, dim)) != min(ra + rb, dim):
                return False
    return True


def _union_witness(A: Arrangement, gb_forms):
    """Build the witness sign vector of the union per the generic recipe."""
    n, dim = A.n, A.dim
    first = gb_forms[0]
    for c0 in sigma(A, A.dim):
        plus = strict_feasible(StrictSystem.of(
            [A.hyperplanes[i].form.scale(c0[i]) for i in range(n)] + [first], dim))
        minus = strict_feasible(StrictSystem.of(
            [A.hyperplanes[i].form.scale(c0[i]) for i in range(n)] + [-first], dim))
        if plus.feasible == minus.feasible:
            continue  # g(B)'s first hyperplane cuts this chamber
        eps_next = -1 if plus.feasible else 1
        # a chamber of g(B) on the chosen side of its first hyperplane
        for signs in product((1, -1), repeat=len(gb_forms)):
            if signs[0] != eps_next:
                continue
            rows = [f.scale(s) for f, s in zip(gb_forms, signs)]
            if strict_feasible(StrictSystem.of(rows, dim)).feasible:
                return SignVector(tuple(c0.signs) + signs)
    return None
