from collections import Counter

import pytest

from hyparr import catalog
from hyparr.arrangement import Arrangement, validate
from hyparr.catalog import GenericitySeed
from hyparr.consistency import (is_globally_consistent, is_locally_consistent,
                                sigma_filtration)
from hyparr.lattice import build_lattice, chamber_count_oracle
from hyparr.obstruction import detect_obstruction


def test_boolean():
    for dim, chambers in ((1, 2), (2, 4), (3, 8)):
        A = catalog.boolean(dim)
        assert A.n == dim
        assert chamber_count_oracle(build_lattice(A)) == chambers


def test_generic4_properties(generic4):
    from hyparr.arrangement import SignVector

    L = build_lattice(generic4)
    assert Counter(f.codim for f in L.flats) == Counter({0: 1, 1: 4, 2: 6, 3: 1})
    assert chamber_count_oracle(L) == 14
    w = SignVector.from_string("+++-")
    assert is_locally_consistent(generic4, w)
    assert not is_globally_consistent(generic4, w)


def test_generic_lattice_shape_and_determinism():
    for seed in (1, 2, 3):
        A = catalog.generic(4, 3, seed)
        L = build_lattice(A)
        assert Counter(f.codim for f in L.flats) == Counter({0: 1, 1: 4, 2: 6, 3: 1})
        assert A == catalog.generic(4, 3, seed)
    A = catalog.generic(5, 3, GenericitySeed(7, coefficient_bound=5))
    for f in build_lattice(A).flats:
        if f.codim < 3:
            assert len(f.contains) == f.codim  # generic: only small circuits


def test_generic_excess_gap():
    A = catalog.generic(5, 3, 11)
    filt = sigma_filtration(A)
    assert filt.counts[2] > filt.counts[3]
    rep = detect_obstruction(A)
    assert rep.minimal_k == 2


def test_generic_boolean_equivalent():
    A = catalog.generic(3, 3, 13)
    assert chamber_count_oracle(build_lattice(A)) == 8


def test_x2_realization():
    arr = catalog.x2_affine()
    assert arr.n == 6
    cx2 = catalog.x2_coned()
    L = build_lattice(cx2)
    assert len(L.flats_of_codim(2)) == 11
    assert chamber_count_oracle(L) == 34


def test_braid():
    b2 = catalog.braid(2)
    assert (b2.dim, b2.n) == (1, 1)
    assert chamber_count_oracle(build_lattice(b2)) == 2
    b3 = catalog.braid(3)
    assert (b3.dim, b3.n) == (2, 3)
    assert chamber_count_oracle(build_lattice(b3)) == 6
    b4 = catalog.braid(4)
    assert chamber_count_oracle(build_lattice(b4)) == 24
    filt = sigma_filtration(b4)
    assert filt.counts[2] == filt.counts[3] == 24


def test_generic_union_boolean3_plus_plane():
    B = Arrangement.from_forms(3, [[1, 1, 1]])
    union, eps = catalog.generic_union(catalog.boolean(3), B, seed=4)
    assert union.n == 4
    assert is_locally_consistent(union, eps)
    assert not is_globally_consistent(union, eps)
    rep = detect_obstruction(union)
    assert rep.minimal_k == 2  # same combinatorial obstruction as generic4


def test_generic_union_two_boolean_planes_in_r2():
    union, eps = catalog.generic_union(catalog.boolean(2), catalog.boolean(2), seed=6)
    assert union.n == 4 and union.dim == 2
    assert is_locally_consistent(union, eps)
    assert not is_globally_consistent(union, eps)
    # the drop happens at k = 1 only, so no homotopy claim is made
    rep = detect_obstruction(union)
    assert rep.gaps == ()
    assert rep.kpi1_possible is True
    filt = sigma_filtration(union)
    assert filt.counts[1] > filt.counts[2]
    assert 1 in filt.witnesses


def test_generic_union_deterministic():
    B = Arrangement.from_forms(3, [[1, 1, 1]])
    a1 = catalog.generic_union(catalog.boolean(3), B, seed=4)
    a2 = catalog.generic_union(catalog.boolean(3), B, seed=4)
    assert a1 == a2


def test_generic_union_empty_b_rejected():
    with pytest.raises(ValueError):
        catalog.generic_union(catalog.boolean(2), Arrangement(2, ()), seed=1)


def test_all_builtins_validate():
    for A in (catalog.boolean(4), catalog.generic4(), catalog.x2_coned(),
              catalog.braid(4), catalog.generic(5, 4, 3)):
        assert validate(A) is A
