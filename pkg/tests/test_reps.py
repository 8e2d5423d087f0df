"""Weight multisets and dimensions against independent oracles.

Type A dimensions are cross-checked with the hook content formula, which
shares no code with the Weyl dimension product; small multisets are frozen by
hand.
"""

import math

import pytest

from charlattice.reps import (DimensionBoundError, FormalCharacter,
                              HighestWeight, SemisimpleAlgebra, direct_sum,
                              dual_highest_weight, enumerate_irreps_up_to_dim,
                              irreducible_character, is_multiplicity_free,
                              is_self_dual, multiplicity_free_catalog,
                              negate_character, restrict_to_subsystem,
                              trivial_character, weight_multiset,
                              weyl_dimension)
from charlattice.rootsys import (SimpleType, build_root_system, reflect_coords,
                                 type_a_equal_rank)


def algebra(name: str) -> SemisimpleAlgebra:
    return SemisimpleAlgebra.parse(name)


def char(name: str, hw) -> FormalCharacter:
    return irreducible_character(algebra(name), tuple(hw))


# ---------------------------------------------------------------------------
# Dimensions.

def hook_content_dim(n_plus_1: int, partition: tuple[int, ...]) -> int:
    """Independent sl_{n+1} dimension via the hook content formula."""
    rows = [p for p in partition if p]
    num, den = 1, 1
    for i, row in enumerate(rows):
        for j in range(row):
            num *= n_plus_1 + j - i
            arm = row - j - 1
            leg = sum(1 for r in rows[i + 1:] if r > j)
            den *= arm + leg + 1
    return num // den


def partition_to_coords(n: int, partition: tuple[int, ...]) -> tuple[int, ...]:
    padded = list(partition) + [0] * (n + 1 - len(partition))
    return tuple(padded[i] - padded[i + 1] for i in range(n))


@pytest.mark.parametrize("n,partition", [
    (2, (1,)), (2, (2,)), (2, (1, 1)), (2, (2, 1)), (2, (3, 1)),
    (3, (1,)), (3, (2, 1)), (3, (2, 2)), (3, (1, 1, 1)), (3, (3, 2, 1)),
    (4, (2,)), (4, (1, 1)), (4, (2, 2, 1)), (4, (3, 1)),
    (5, (1, 1, 1)), (5, (2, 1, 1)),
])
def test_type_a_dimensions_match_hook_content(n, partition):
    alg = algebra(f"A{n}")
    coords = partition_to_coords(n, partition)
    dim = weyl_dimension(alg, HighestWeight.from_flat(alg, coords))
    assert dim == hook_content_dim(n + 1, partition)


def test_alternating_and_symmetric_power_dimensions():
    for n in range(1, 8):
        alg = algebra(f"A{n}")
        for a in range(1, n + 1):
            hw = tuple(1 if i == a - 1 else 0 for i in range(n))
            assert weyl_dimension(alg, HighestWeight.from_flat(alg, hw)) == \
                math.comb(n + 1, a)
        for a in range(1, 5):
            hw = tuple(a if i == 0 else 0 for i in range(n))
            assert weyl_dimension(alg, HighestWeight.from_flat(alg, hw)) == \
                math.comb(n + a, a)


def test_product_algebra_dimension_multiplies():
    alg = algebra("A2+B2")
    hw = HighestWeight.from_flat(alg, (1, 0, 0, 1))
    assert weyl_dimension(alg, hw) == 3 * 4


# ---------------------------------------------------------------------------
# Frozen small multisets.

def test_sl2_symmetric_powers():
    for a in range(6):
        fc = char("A1", (a,))
        assert fc.weights == tuple(((a - 2 * i,), 1) for i in range(a, -1, -1))


def test_sl3_adjoint_multiset():
    fc = char("A2", (1, 1))
    assert fc.size == 8
    assert fc.multiplicity((0, 0)) == 2
    roots = {(1, 1), (-1, 2), (2, -1), (-2, 1), (1, -2), (-1, -1)}
    assert {w for w, m in fc.weights if m == 1} == roots


def test_sl4_adjoint_zero_weight():
    fc = char("A3", (1, 0, 1))
    assert fc.size == 15
    assert fc.multiplicity((0, 0, 0)) == 3


def test_g2_adjoint_and_short_fundamental():
    adj = char("G2", (0, 1))
    assert adj.size == 14
    assert adj.multiplicity((0, 0)) == 2
    v7 = char("G2", (1, 0))
    assert v7.size == 7
    assert v7.multiplicity((0, 0)) == 1
    assert is_multiplicity_free(v7)
    assert not is_multiplicity_free(adj)


def test_b3_spin_multiset():
    fc = char("B3", (0, 0, 1))
    assert fc.size == 8
    assert is_multiplicity_free(fc)
    assert is_self_dual(fc)


def test_c3_primitive_fundamental():
    fc = char("C3", (0, 0, 1))
    assert fc.size == 14
    assert is_multiplicity_free(fc)
    assert fc.multiplicity((0, 0, 0)) == 0


@pytest.mark.parametrize("name,hw", [
    ("A3", (1, 0, 1)), ("B2", (1, 1)), ("C3", (0, 1, 0)),
    ("D4", (0, 1, 0, 0)), ("G2", (0, 1)), ("A2+A1", (1, 1, 2)),
])
def test_multiset_invariants(name, hw):
    alg = algebra(name)
    fc = irreducible_character(alg, hw)
    assert fc.size == weyl_dimension(alg, HighestWeight.from_flat(alg, hw))
    # weights sum to zero with multiplicity
    total = [0] * alg.rank
    for w, m in fc.weights:
        for i, c in enumerate(w):
            total[i] += m * c
    assert all(t == 0 for t in total)
    # stability under every simple reflection of every factor
    offset = 0
    for rs in alg.root_systems():
        for i in range(rs.rank):
            reflected = {}
            for w, m in fc.weights:
                part = w[offset:offset + rs.rank]
                image = w[:offset] + reflect_coords(rs, part, i) + \
                    w[offset + rs.rank:]
                reflected[image] = reflected.get(image, 0) + m
            assert reflected == fc.counts()
        offset += rs.rank


def test_dimension_bound_enforced():
    with pytest.raises(DimensionBoundError):
        irreducible_character(algebra("A7"), (3, 3, 3, 3, 3, 3, 3))
    # explicit larger bound admits a character the default would accept anyway
    fc = irreducible_character(algebra("A2"), (3, 3), dim_bound=100)
    assert fc.size == 64


# ---------------------------------------------------------------------------
# Duality and sums.

def test_dual_highest_weights():
    a3 = algebra("A3")
    std = HighestWeight.from_flat(a3, (1, 0, 0))
    assert dual_highest_weight(a3, std).flat() == (0, 0, 1)
    d5 = algebra("D5")
    hs = HighestWeight.from_flat(d5, (0, 0, 0, 1, 0))
    assert dual_highest_weight(d5, hs).flat() == (0, 0, 0, 0, 1)
    d4 = algebra("D4")
    hs4 = HighestWeight.from_flat(d4, (0, 0, 1, 0))
    assert dual_highest_weight(d4, hs4).flat() == (0, 0, 1, 0)


def test_dual_character_is_negation():
    fc = char("A2", (2, 1))
    alg = algebra("A2")
    dual_hw = dual_highest_weight(alg, HighestWeight.from_flat(alg, (2, 1)))
    assert irreducible_character(alg, dual_hw.flat()) == negate_character(fc)


def test_direct_sum_and_trivial():
    a2 = algebra("A2")
    s = direct_sum(char("A2", (1, 0)), char("A2", (0, 1)), trivial_character(a2))
    assert s.size == 7
    assert s.multiplicity((0, 0)) == 1
    assert is_self_dual(s)
    assert not is_self_dual(char("A2", (1, 0)))


# ---------------------------------------------------------------------------
# Catalog and enumeration.

def test_catalog_frozen_examples():
    c3 = {(e.hw, e.dim) for e in multiplicity_free_catalog(SimpleType.parse("C3"))}
    assert c3 == {((1, 0, 0), 6), ((0, 0, 1), 14)}

    d5 = {(e.hw, e.dim) for e in multiplicity_free_catalog(SimpleType.parse("D5"))}
    assert d5 == {((1, 0, 0, 0, 0), 10), ((0, 0, 0, 1, 0), 16),
                  ((0, 0, 0, 0, 1), 16)}

    e6 = {(e.hw, e.dim) for e in multiplicity_free_catalog(SimpleType.parse("E6"))}
    assert e6 == {((1, 0, 0, 0, 0, 0), 27), ((0, 0, 0, 0, 0, 1), 27)}

    assert multiplicity_free_catalog(SimpleType.parse("E8")) == ()
    assert multiplicity_free_catalog(SimpleType.parse("F4")) == ()

    b4 = {(e.hw, e.dim) for e in multiplicity_free_catalog(SimpleType.parse("B4"))}
    assert b4 == {((1, 0, 0, 0), 9), ((0, 0, 0, 1), 16)}


def test_catalog_type_a_needs_bound():
    with pytest.raises(ValueError):
        multiplicity_free_catalog(SimpleType.parse("A3"))
    entries = multiplicity_free_catalog(SimpleType.parse("A3"), max_dim=20)
    seen = {(e.hw, e.dim, e.label) for e in entries}
    assert ((1, 0, 0), 4, "std") in seen
    assert ((0, 1, 0), 6, "alt^2(std)") in seen
    assert ((0, 0, 1), 4, "std*") in seen
    assert ((2, 0, 0), 10, "sym^2(std)") in seen
    assert ((0, 0, 3), 20, "sym^3(std*)") in seen
    assert all(e.dim <= 20 for e in entries)


def test_catalog_entries_expand_multiplicity_free():
    for name in ("A4", "B3", "C3", "D4", "G2"):
        st = SimpleType.parse(name)
        alg = SemisimpleAlgebra((st,))
        for entry in multiplicity_free_catalog(st, max_dim=60):
            fc = irreducible_character(alg, entry.hw)
            assert is_multiplicity_free(fc), (name, entry)


def test_enumerate_irreps_frozen_a2():
    alg = algebra("A2")
    got = [(hw.flat(), d) for hw, d in enumerate_irreps_up_to_dim(alg, 10)]
    assert got == [
        ((0, 0), 1), ((0, 1), 3), ((1, 0), 3), ((0, 2), 6), ((2, 0), 6),
        ((1, 1), 8), ((0, 3), 10), ((3, 0), 10),
    ]


def test_enumerate_irreps_product_budget():
    alg = algebra("A1+A1")
    got = {(hw.flat(), d) for hw, d in enumerate_irreps_up_to_dim(alg, 4)}
    assert got == {
        ((0, 0), 1), ((1, 0), 2), ((0, 1), 2), ((2, 0), 3), ((0, 2), 3),
        ((3, 0), 4), ((0, 3), 4), ((1, 1), 4),
    }


# ---------------------------------------------------------------------------
# Restriction.

def test_b3_standard_restricts_to_a3():
    rs = build_root_system(SimpleType.parse("B3"))
    sub = type_a_equal_rank(rs)
    assert tuple(str(t) for t in sub.component_types) == ("A3",)
    fc = char("B3", (1, 0, 0))
    restricted = restrict_to_subsystem(fc, sub)
    a3 = algebra("A3")
    expected = direct_sum(irreducible_character(a3, (0, 1, 0)),
                          trivial_character(a3))
    assert restricted == expected
