import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from implicit3.boolean import (
    CONSTANT_C,
    POST_CLASSES,
    BooleanFunction,
    NotPartitionPreserving,
    NotSetPreserving,
    all_boolean,
    block_restriction,
    blocks,
    boolean_restriction,
    dual_class,
    lift,
    negation_dual,
    partition_violation,
    post_member,
)
from implicit3.core import IDENTITY, LogicError, parse_literal, superpose
from implicit3.relations import partition_relation, preserves


def bpoints(n):
    return list(itertools.product((0, 1), repeat=n))


def brute_class(cls, n):
    """Tables of the n-ary members, built from the class definitions directly."""
    pts = bpoints(n)
    out = set()
    for t in itertools.product((0, 1), repeat=2**n):
        f = dict(zip(pts, t))
        if cls == "T0":
            ok = f[pts[0]] == 0
        elif cls == "T1":
            ok = f[pts[-1]] == 1
        elif cls == "S":
            ok = all(f[tuple(1 - x for x in p)] == 1 - f[p] for p in pts)
        elif cls == "M":
            ok = all(f[p] <= f[q] for p in pts for q in pts if all(a <= b for a, b in zip(p, q)))
        elif cls == "L":
            ok = any(
                all(f[p] == (c[0] + sum(ci * x for ci, x in zip(c[1:], p))) % 2 for p in pts)
                for c in itertools.product((0, 1), repeat=n + 1)
            )
        elif cls in ("K", "D"):
            op = min if cls == "K" else max
            targets = {tuple(0 for _ in pts), tuple(1 for _ in pts)}
            for r in range(1, n + 1):
                for vs in itertools.combinations(range(n), r):
                    targets.add(tuple(op(p[i] for i in vs) for p in pts))
            ok = t in targets
        if ok:
            out.add(t)
    return out


@pytest.mark.parametrize("cls", POST_CLASSES)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_post_membership_matches_definitions(cls, n):
    got = {g.table for g in all_boolean(n) if post_member(g, cls)}
    assert got == brute_class(cls, n)


def test_post_examples():
    assert post_member(BooleanFunction.parse("0001"), "K")
    assert not post_member(BooleanFunction.parse("0111"), "K")
    assert post_member(BooleanFunction.parse("0110"), "L")


def test_k_and_d_are_monotone():
    for n in (1, 2, 3):
        for g in all_boolean(n):
            if post_member(g, "K") or post_member(g, "D"):
                assert post_member(g, "M")


def test_two_binary_functions_escape_the_six():
    escaping = [
        g.literal for g in all_boolean(2) if not any(post_member(g, c) for c in ("T0", "T1", "S", "L", "K", "D"))
    ]
    assert sorted(escaping) == ["1000", "1110"]


def test_unknown_post_class():
    with pytest.raises(LogicError):
        post_member(BooleanFunction.parse("01"), "Q")


def test_boolean_parse_rejects():
    for bad in ("012", "010", ""):
        with pytest.raises(LogicError):
            BooleanFunction.parse(bad)


def test_boolean_restriction_examples():
    assert boolean_restriction(parse_literal("002012222"), {0, 1}).literal == "0001"
    assert boolean_restriction(IDENTITY, {0, 2}).literal == "01"
    with pytest.raises(NotSetPreserving) as err:
        boolean_restriction(parse_literal("202"), {0, 1})
    assert err.value.args_tuple == (0,) and err.value.value == 2


def test_block_restriction_examples():
    f = parse_literal("002012222")
    assert block_restriction(f, (0, 1)).literal == "0001"
    assert block_restriction(f, (0, 1), {2}) is CONSTANT_C
    with pytest.raises(NotPartitionPreserving) as err:
        block_restriction(parse_literal("202"), (0, 1))
    assert set(err.value.values) == {2, 0}


def test_block_with_no_free_positions_is_unary_constant():
    f = parse_literal("002012221")
    g = block_restriction(f, (0, 1), {1, 2})
    assert g.arity == 1 and g.table == (1, 1)


def test_blocks_enumeration():
    assert len(blocks(3)) == 8
    assert blocks(2)[0] == frozenset()


def test_partition_violation_agrees_with_matrix_test():
    for f in map(parse_literal, ("202", "002012222", "120", "210", "000001002")):
        for pair in ((0, 1), (0, 2), (1, 2)):
            assert (partition_violation(f, pair) is None) == preserves(f, partition_relation(pair))


def test_dual_classes_and_negation():
    assert dual_class("K") == "D" and dual_class("L") == "L"
    for n in (1, 2):
        for g in all_boolean(n):
            for cls in POST_CLASSES:
                assert post_member(g, cls) == post_member(negation_dual(g), dual_class(cls))


bool_fn = st.integers(1, 2).flatmap(
    lambda n: st.lists(st.integers(0, 1), min_size=2**n, max_size=2**n).map(lambda t: BooleanFunction(n, tuple(t)))
)


@given(bool_fn, st.sampled_from([(0, 1), (0, 2), (1, 2)]), st.data())
def test_restriction_of_superposition(f, pair, data):
    m = data.draw(st.integers(1, 2))
    inner = [
        data.draw(st.lists(st.integers(0, 1), min_size=2**m, max_size=2**m).map(lambda t: BooleanFunction(m, tuple(t))))
        for _ in range(f.arity)
    ]
    sup = superpose(lift(f, pair), [lift(g, pair) for g in inner])
    got = boolean_restriction(sup, pair)
    want = tuple(f(*(g.table[i] for g in inner)) for i in range(2**m))
    assert got.table == want


@given(bool_fn, st.sampled_from([(0, 1), (0, 2), (1, 2)]))
def test_lift_round_trip(g, pair):
    assert boolean_restriction(lift(g, pair), pair) == g
