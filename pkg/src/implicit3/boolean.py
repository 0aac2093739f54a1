"""Two-valued restrictions of three-valued functions and the seven Boolean classes.

A pair ``{a, b}`` (a < b) is read as Boolean through ``a -> 0, b -> 1``.  For
a partition ``{a, b}{c}`` a *block* is named by the set of argument positions
that hold ``c``; the main block is the empty set.  On a block the function is
either identically ``c`` (reported as :data:`CONSTANT_C`) or takes values in
``{a, b}`` and restricts to a Boolean function of the free positions.  A block
with no free positions restricts to a unary Boolean constant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Sequence

from .core import Function, LogicError, check_arity_cap, index_of, tuples

POST_CLASSES = ("T0", "T1", "S", "L", "M", "K", "D")


class NotSetPreserving(LogicError):
    def __init__(self, args: tuple[int, ...], value: int):
        super().__init__(f"f{args} = {value} leaves the pair")
        self.args_tuple = args
        self.value = value


class NotPartitionPreserving(LogicError):
    def __init__(self, first: tuple[int, ...], second: tuple[int, ...], values: tuple[int, int]):
        super().__init__(f"equivalent tuples {first} and {second} map to inequivalent values {values}")
        self.first = first
        self.second = second
        self.values = values


@dataclass(frozen=True, order=True)
class BooleanFunction:
    arity: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.arity < 1 or len(self.table) != 2**self.arity:
            raise LogicError(f"Boolean table of length {len(self.table)} does not fit arity {self.arity}")
        if any(v not in (0, 1) for v in self.table):
            raise LogicError("Boolean table entries must be 0 or 1")

    @classmethod
    def parse(cls, text: str) -> "BooleanFunction":
        if any(ch not in "01" for ch in text):
            raise LogicError(f"Boolean literal {text!r} has a non-binary digit")
        n = len(text).bit_length() - 1
        if n < 1 or 2**n != len(text):
            raise LogicError(f"Boolean literal length {len(text)} is not a power of 2")
        return cls(n, tuple(int(ch) for ch in text))

    @property
    def literal(self) -> str:
        return "".join(map(str, self.table))

    def __str__(self) -> str:
        return self.literal

    def __call__(self, *args: int) -> int:
        return self.table[_bindex(args)]


class _ConstantC:
    """Marker: the function is identically the singleton value on a block."""

    def __repr__(self) -> str:
        return "CONSTANT_C"


CONSTANT_C = _ConstantC()


@cache
def btuples(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.product((0, 1), repeat=n))


def _bindex(args: Sequence[int]) -> int:
    idx = 0
    for a in args:
        idx = 2 * idx + a
    return idx


def encoding(pair: Iterable[int]) -> tuple[int, int]:
    a, b = sorted(set(pair))
    return a, b


def boolean_restriction(f: Function, pair: Iterable[int]) -> BooleanFunction:
    """theta^-1 . f . theta on ``pair^n``; raises if ``f`` leaves the pair."""
    a, b = encoding(pair)
    theta = (a, b)
    out = []
    for s in btuples(f.arity):
        args = tuple(theta[v] for v in s)
        v = f.table[index_of(args)]
        if v == a:
            out.append(0)
        elif v == b:
            out.append(1)
        else:
            raise NotSetPreserving(args, v)
    return BooleanFunction(f.arity, tuple(out))


def blocks(n: int) -> list[frozenset[int]]:
    """All blocks of arity ``n``, named by their 1-based positions fixed to the singleton."""
    return [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]


def block_restriction(
    f: Function, pair: Iterable[int], block: Iterable[int] = ()
) -> BooleanFunction | _ConstantC:
    a, b = encoding(pair)
    (c,) = {0, 1, 2} - {a, b}
    fixed = frozenset(block)
    if any(not 1 <= i <= f.arity for i in fixed):
        raise LogicError(f"block positions {sorted(fixed)} outside 1..{f.arity}")
    free = [i for i in range(1, f.arity + 1) if i not in fixed]
    theta = (a, b)
    values = []
    first_args = None
    for s in btuples(len(free)):
        args = [c] * f.arity
        for i, v in zip(free, s):
            args[i - 1] = theta[v]
        args_t = tuple(args)
        v = f.table[index_of(args_t)]
        if first_args is None:
            first_args, first_v = args_t, v
        elif (v == c) != (first_v == c):
            raise NotPartitionPreserving(first_args, args_t, (first_v, v))
        values.append(v)
    if values[0] == c:
        return CONSTANT_C
    bits = tuple(0 if v == a else 1 for v in values)
    if not free:
        return BooleanFunction(1, bits * 2)
    return BooleanFunction(len(free), bits)


def partition_violation(f: Function, pair: Iterable[int]) -> NotPartitionPreserving | None:
    """Two equivalent tuples with inequivalent values, if any."""
    a, b = encoding(pair)
    (c,) = {0, 1, 2} - {a, b}
    seen: dict[tuple[bool, ...], tuple[tuple[int, ...], int]] = {}
    for args, v in zip(tuples(f.arity), f.table):
        key = tuple(x == c for x in args)
        if key in seen:
            other, w = seen[key]
            if (w == c) != (v == c):
                return NotPartitionPreserving(other, args, (w, v))
        else:
            seen[key] = (args, v)
    return None


# -- Post classes ------------------------------------------------------------


def _monotone(g: BooleanFunction) -> bool:
    n = g.arity
    for idx, s in enumerate(btuples(n)):
        if not g.table[idx]:
            continue
        for i in range(n):
            if not s[i] and not g.table[idx + 2 ** (n - 1 - i)]:
                return False
    return True


def _linear(g: BooleanFunction) -> bool:
    n = g.arity
    c0 = g.table[0]
    coeffs = [g.table[2 ** (n - 1 - i)] ^ c0 for i in range(n)]
    for idx, s in enumerate(btuples(n)):
        v = c0
        for ci, si in zip(coeffs, s):
            v ^= ci & si
        if v != g.table[idx]:
            return False
    return True


def _conjunction_like(g: BooleanFunction, one: int) -> bool:
    """Constant, or ``g^-1(one)`` is the principal filter above its meet.

    With ``one = 1`` this is K (conjunctions and constants); with ``one = 0``
    and the order flipped it is D (disjunctions and constants).
    """
    support = [s for s, v in zip(btuples(g.arity), g.table) if v == one]
    if not support or len(support) == len(g.table):
        return True
    if one == 1:
        bound = tuple(min(col) for col in zip(*support))
        return all((v == one) == all(x >= m for x, m in zip(s, bound)) for s, v in zip(btuples(g.arity), g.table))
    bound = tuple(max(col) for col in zip(*support))
    return all((v == one) == all(x <= m for x, m in zip(s, bound)) for s, v in zip(btuples(g.arity), g.table))


def post_member(g: BooleanFunction, cls: str) -> bool:
    check_arity_cap(g.arity)
    n = g.arity
    if cls == "T0":
        return g.table[0] == 0
    if cls == "T1":
        return g.table[-1] == 1
    if cls == "S":
        size = 2**n
        return all(g.table[size - 1 - i] != g.table[i] for i in range(size))
    if cls == "L":
        return _linear(g)
    if cls == "M":
        return _monotone(g)
    if cls == "K":
        return _conjunction_like(g, 1)
    if cls == "D":
        return _conjunction_like(g, 0)
    raise LogicError(f"unknown Boolean class {cls!r}; expected one of {POST_CLASSES}")


def dual_class(cls: str) -> str:
    """The class of negation-conjugates ``~g(~x)``."""
    return {"T0": "T1", "T1": "T0", "K": "D", "D": "K"}.get(cls, cls)


def negation_dual(g: BooleanFunction) -> BooleanFunction:
    size = len(g.table)
    return BooleanFunction(g.arity, tuple(1 - g.table[size - 1 - i] for i in range(size)))


def all_boolean(arity: int) -> list[BooleanFunction]:
    return [BooleanFunction(arity, t) for t in itertools.product((0, 1), repeat=2**arity)]


def lift(g: BooleanFunction, pair: Iterable[int], filler: int | None = None) -> Function:
    """A three-valued function whose restriction to ``pair`` is ``g``; other inputs get ``filler``.

    ``filler`` defaults to the element outside the pair.
    """
    a, b = encoding(pair)
    (c,) = {0, 1, 2} - {a, b}
    fill = c if filler is None else filler
    out = []
    for args in tuples(g.arity):
        if all(x in (a, b) for x in args):
            v = g.table[_bindex([0 if x == a else 1 for x in args])]
            out.append(a if v == 0 else b)
        else:
            out.append(fill)
    return Function(g.arity, tuple(out))

