import random
from collections import Counter

import pytest

from hyparr import catalog
from hyparr.errors import UnknownFlat
from hyparr.lattice import (Flat, build_lattice, chamber_count_oracle,
                            characteristic_polynomial, localization)
from hyparr.linalg import RatMatrix, rank

from conftest import random_arrangement
from oracles import brute_force_flats


def _forms_int(A):
    return [tuple(int(x) for x in h.form) for h in A.hyperplanes]


def test_boolean_r2_four_flats():
    L = build_lattice(catalog.boolean(2))
    assert len(L.flats) == 4
    assert [len(L.flats_of_codim(c)) for c in range(3)] == [1, 2, 1]


def test_generic4_flats_match_brute_force(generic4):
    L = build_lattice(generic4)
    brute = brute_force_flats(_forms_int(generic4), 3)
    assert {f.contains for f in L.flats} == set(brute)
    for f in L.flats:
        assert f.codim == brute[f.contains]
    assert Counter(f.codim for f in L.flats) == Counter({0: 1, 1: 4, 2: 6, 3: 1})


def test_cx2_flats_match_brute_force(cx2):
    L = build_lattice(cx2)
    brute = brute_force_flats(_forms_int(cx2), 3)
    assert {f.contains for f in L.flats} == set(brute)
    assert Counter(f.codim for f in L.flats) == Counter({0: 1, 1: 7, 2: 11, 3: 1})
    # triple points {1,3,5} and {2,4,6} and the three infinity flats contain 3 planes
    big = sorted(tuple(sorted(i + 1 for i in f.contains))
                 for f in L.flats if f.codim == 2 and len(f.contains) == 3)
    assert big == [(1, 2, 7), (1, 3, 5), (2, 4, 6), (3, 4, 7), (5, 6, 7)]


def test_localization(generic4):
    L = build_lattice(generic4)
    origin = L.top
    assert localization(L, origin) == frozenset({0, 1, 2, 3})
    pair = L.flat_for({0, 1})
    assert localization(L, pair) == frozenset({0, 1})
    assert localization(L, L.bottom) == frozenset()


def test_localization_unknown_flat(generic4):
    L = build_lattice(generic4)
    # {0,1,2} is not closed for generic4: those three forms already cut {0}
    stray = Flat(frozenset({0, 1, 2}), 3, L.top.kernel)
    with pytest.raises(UnknownFlat):
        localization(L, stray)


def test_chamber_counts():
    assert chamber_count_oracle(build_lattice(catalog.boolean(2))) == 4
    assert chamber_count_oracle(build_lattice(catalog.generic4())) == 14
    assert chamber_count_oracle(build_lattice(catalog.x2_coned())) == 34


def test_generic4_moebius_values(generic4):
    L = build_lattice(generic4)
    assert L.mu(L.bottom) == 1
    for X in L.flats_of_codim(1):
        assert L.mu(X) == -1
    for X in L.flats_of_codim(2):
        assert L.mu(X) == 1
    assert L.mu(L.top) == -3


def test_cx2_moebius_values(cx2):
    L = build_lattice(cx2)
    for X in L.flats_of_codim(2):
        assert L.mu(X) == (2 if len(X.contains) == 3 else 1)
    assert L.mu(L.top) == -10


def test_moebius_sum_invariant_random():
    rng = random.Random(19)
    for _ in range(15):
        A = random_arrangement(rng, dim=rng.randint(2, 3), n=rng.randint(3, 6))
        L = build_lattice(A)
        for X in L.flats:
            if X is L.bottom:
                continue
            assert sum(L.mu(Y) for Y in L.flats if Y.contains <= X.contains) == 0


def test_codim_equals_rank_and_distinct_contains():
    rng = random.Random(23)
    for _ in range(10):
        A = random_arrangement(rng)
        L = build_lattice(A)
        seen = set()
        for X in L.flats:
            assert X.contains not in seen
            seen.add(X.contains)
            if X.contains:
                sub = RatMatrix.of([A.hyperplanes[i].form for i in sorted(X.contains)],
                                   A.dim)
                assert rank(sub) == X.codim
            else:
                assert X.codim == 0
        assert len(L.flats_of_codim(1)) == A.n
        assert len(L.flats_of_codim(0)) == 1
        assert len(L.flats_of_codim(A.dim)) == 1


def test_characteristic_polynomial_generic4(generic4):
    # chi(t) = t^3 - 4t^2 + 6t - 3; coefficients are listed c[0]..c[dim]
    assert characteristic_polynomial(build_lattice(generic4)) == (-3, 6, -4, 1)
