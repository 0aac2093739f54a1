import itertools

import pytest
from hypothesis import given, settings

from implicit3.boolean import BooleanFunction, post_member
from implicit3.classes import (
    BY_ID,
    CLASS_IDS,
    REGISTRY,
    UnknownClass,
    Violation,
    all_constants_classes,
    binary_fragment,
    confirms,
    descriptor,
    duality_orbit,
    evaluation_order,
    fingerprint,
    member,
    normalize_class_id,
    selects_vertex,
    unary_fragment,
    violation,
)
from implicit3.core import ALL_PERMUTATIONS, IDENTITY, Permutation, all_functions, constant, dual_transform, parse_literal, projection
from implicit3.verify import closure_stays_inside
from oracles import linear_tables, points, selects_no_vertex_binary, table_index
from strategies import functions, functions_of


def test_registry_has_54_distinct_ids():
    assert len(CLASS_IDS) == 54 == len(set(CLASS_IDS)) == len(BY_ID)


def test_identity_and_projections_everywhere():
    for cid in CLASS_IDS:
        assert member(IDENTITY, cid)
        assert member(projection(1, 2), cid) and member(projection(2, 2), cid)


def test_member_examples():
    assert member(parse_literal("102"), "Fp2")
    v = violation(parse_literal("012112222"), "N")
    assert v is not None and v.test == "square"
    assert [tuple(s) for s in v.detail["square"]] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert v.detail["square"][v.detail["selected"]] == (0, 0)


def test_sum_mod_three_selects_a_vertex():
    # values 0,1,1,2 on {0,1}^2: both 0 and 2 occur once
    assert not member(parse_literal("012120201"), "N")


def test_selected_vertex_reading():
    assert selects_vertex([0, 1, 1, 1]) == 0
    assert selects_vertex([0, 0, 1, 1]) is None
    assert selects_vertex([2, 2, 2, 2]) is None
    assert selects_vertex([0, 1, 1, 2]) in (0, 3)


def test_unary_fragment_examples():
    assert [f.literal for f in unary_fragment("Fp2")] == ["000", "002", "012", "102", "111", "112", "222"]
    assert [f.literal for f in unary_fragment("Y2")] == ["000", "002", "012", "102", "111", "112"]
    got = [f.literal for f in unary_fragment("SigmaPartition({0,1}{2}, T0)")]
    assert got == ["000", "002", "010", "012", "220", "222"]


def test_binary_fragment_examples():
    assert parse_literal("000010000") in binary_fragment("T0_0")
    # shifting both arguments of x+y shifts the value by 2, not 1
    assert parse_literal("012120201") not in binary_fragment("S")
    assert parse_literal("021210102") in binary_fragment("S")
    assert len(binary_fragment("S")) % 3 == 0


def test_linear_class_matches_coefficient_enumeration():
    assert {f.table for f in binary_fragment("L")} == linear_tables(2)
    assert len(binary_fragment("L")) == 27
    assert {f.table for f in unary_fragment("L")} == linear_tables(1)


@settings(max_examples=300)
@given(functions_of(3))
def test_linear_ternary(f):
    assert member(f, "L") == (f.table in linear_tables(3))


def test_square_class_matches_binary_oracle():
    assert {f.table for f in binary_fragment("N")} == {f.table for f in all_functions(2) if selects_no_vertex_binary(f.table)}


def restriction(f, pair, fixed_positions=()):
    a, b = pair
    (c,) = {0, 1, 2} - set(pair)
    free = [i for i in range(f.arity) if i not in fixed_positions]
    vals = []
    for s in itertools.product((0, 1), repeat=len(free)):
        args = [c] * f.arity
        for i, bit in zip(free, s):
            args[i] = (a, b)[bit]
        vals.append(f.table[table_index(args)])
    return vals


def sigma_pair_oracle(f, pair, post):
    vals = restriction(f, pair)
    if any(v not in pair for v in vals):
        return False
    return post_member(BooleanFunction(f.arity, tuple(0 if v == pair[0] else 1 for v in vals)), post)


def sigma_partition_oracle(f, pair, post):
    (c,) = {0, 1, 2} - set(pair)
    for x, y in itertools.product(points(f.arity), repeat=2):
        if all((p == c) == (q == c) for p, q in zip(x, y)):
            if (f.table[table_index(x)] == c) != (f.table[table_index(y)] == c):
                return False
    for r in range(f.arity + 1):
        for fixed in itertools.combinations(range(f.arity), r):
            vals = restriction(f, pair, fixed)
            if vals[0] == c:
                continue
            bits = tuple(0 if v == pair[0] else 1 for v in vals)
            g = BooleanFunction(1, bits * 2) if r == f.arity else BooleanFunction(f.arity - r, bits)
            if not post_member(g, post):
                return False
    return True


@pytest.mark.parametrize("post", ["K", "L", "S"])
@pytest.mark.parametrize("pair", [(0, 1), (1, 2)])
def test_sigma_pair_against_oracle(pair, post):
    cid = f"SigmaPair({pair[0]}{pair[1]},{post})"
    for f in itertools.chain(all_functions(1), all_functions(2)):
        assert member(f, cid) == sigma_pair_oracle(f, pair, post), f.literal


@pytest.mark.parametrize("post", ["T0", "D", "L"])
def test_sigma_partition_against_oracle(post):
    cid = f"SigmaPartition(02|1,{post})"
    for f in itertools.chain(all_functions(1), all_functions(2)):
        assert member(f, cid) == sigma_partition_oracle(f, (0, 2), post), f.literal


def test_flags_agree_with_constants():
    for d in REGISTRY:
        has_all = all(d.contains(constant(c)) for c in range(3))
        assert d.contains_all_constants == has_all, d.id


def test_all_constants_census():
    got = all_constants_classes()
    assert len(got) == 29 and "L" in got and "N" in got


def test_duality_orbit_examples():
    orbit = dict(duality_orbit("Fp2"))
    assert orbit == {
        "Fp0": Permutation.transposition(0, 2),
        "Fp1": Permutation.transposition(1, 2),
        "Fp2": Permutation.parse("012"),
    }
    assert [c for c, _ in duality_orbit("N")] == ["N"]
    sig = dict(duality_orbit("SigmaPartition(01|2,T0)"))
    assert sig["SigmaPartition(01|2,T1)"] == Permutation.transposition(0, 1)


def test_orbits_partition_the_registry():
    seen = {}
    for cid in CLASS_IDS:
        orbit = frozenset(c for c, _ in duality_orbit(cid))
        for c in orbit:
            assert seen.setdefault(c, orbit) == orbit
    assert sum(len(o) for o in set(seen.values())) == 54


def test_orbits_match_full_fragments():
    index = {fingerprint(c): c for c in CLASS_IDS}
    for cid in CLASS_IDS:
        direct = {}
        for pi in sorted(ALL_PERMUTATIONS, key=lambda p: (sum(p(v) != v for v in range(3)), p.images)):
            image = frozenset(dual_transform(f, pi) for f in fingerprint(cid))
            direct.setdefault(index[image], pi)
        assert dict(duality_orbit(cid)) == direct, cid


def test_classes_distinct_on_small_arity():
    prints = [fingerprint(cid) for cid in CLASS_IDS]
    assert len(set(prints)) == 54


@settings(max_examples=40)
@given(functions(1, 3))
def test_stored_duality_on_random_functions(f):
    for d in REGISTRY:
        base = descriptor(d.base)
        assert d.contains(f) == base.contains(dual_transform(f, d.duality.inverse())), d.id


@settings(max_examples=40)
@given(functions(1, 3))
def test_violations_are_confirmed(f):
    for d in REGISTRY:
        v = d.violation(f)
        if v is not None:
            assert confirms(f, d.id, v), (d.id, f.literal)


def test_tampered_violation_is_rejected():
    f = parse_literal("202")
    v = violation(f, "Fp2")
    forged = Violation(v.test, {**v.detail, "result": [0, 0, 0]})
    assert confirms(f, "Fp2", v) and not confirms(f, "Fp2", forged)
    assert not confirms(IDENTITY, "Fp2", v)


def test_kernel_w1_no_pair_differs_only_at_one():
    frag = unary_fragment("W1")
    for f, g in itertools.combinations(frag, 2):
        assert not (f.table[0] == g.table[0] and f.table[2] == g.table[2] and f.table[1] != g.table[1])


def test_kernel_fp2_pairs_agreeing_at_zero():
    frag = unary_fragment("Fp2")
    for f, g in itertools.combinations(frag, 2):
        if f.table[0] == g.table[0] and f.table[2] != g.table[2]:
            assert 2 in (f.table[2], g.table[2])


def test_kernel_y2_value_at_21_is_determined():
    buckets = {}
    for f in binary_fragment("Y2"):
        key = (f(0, 0), f(1, 1), f(2, 0))
        assert buckets.setdefault(key, f(2, 1)) == f(2, 1)


@pytest.mark.parametrize("cid", ["Fp2", "W1", "Y2", "N", "SigmaPartition(01|2,T0)", "KM1", "Rp2", "Qp2"])
def test_fragment_closure_stays_inside(cid):
    inside, _, escape = closure_stays_inside(cid)
    assert inside, escape


def test_id_spellings():
    assert normalize_class_id("SigmaPair({0,1}, K)") == "SigmaPair(01,K)"
    assert normalize_class_id("T0") == "T0_0"
    with pytest.raises(UnknownClass):
        normalize_class_id("Fp9")


def test_evaluation_order_is_cheap_first():
    costs = [d.cost for d in evaluation_order()]
    assert costs == sorted(costs)
    assert evaluation_order()[-1].id == "N"


def test_descriptor_json():
    doc = descriptor("Fp2").to_json()
    assert doc["id"] == "Fp2" and doc["orbit_base"] == "Fp2" and doc["duality_permutation"] == "012"
