"""Truth-table functions of three-valued logic and superposition primitives.

A function of arity ``n`` is stored as the tuple of its ``3**n`` values in
canonical order: the argument tuple ``(x1, ..., xn)`` sits at index
``x1*3**(n-1) + ... + xn``, so ``x1`` is the most significant digit.  The
unary literal ``"abc"`` is the value column ``f(0) f(1) f(2)``; a binary
literal is the 3x3 value matrix read row by row with the row given by the
first argument.

Constants are unary constant functions.  Variable positions (for minors,
constant substitution and essential variables) are 1-based.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator, Sequence

K = 3
VALUES = (0, 1, 2)
DEFAULT_MAX_ARITY = 8

_max_arity_override: int | None = None


class LogicError(ValueError):
    """Base class for bad input to the library."""


class BadLength(LogicError):
    pass


class BadDigit(LogicError):
    pass


class ArityMismatch(LogicError):
    pass


class BadIndex(LogicError):
    pass


class ArityUnderflow(LogicError):
    pass


class ArityCapExceeded(LogicError):
    pass


def max_arity() -> int:
    """Arity cap for expensive tests: explicit override, then ``P3_MAX_ARITY``, then 8."""
    if _max_arity_override is not None:
        return _max_arity_override
    env = os.environ.get("P3_MAX_ARITY")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise LogicError(f"P3_MAX_ARITY must be an integer, got {env!r}") from exc
    return DEFAULT_MAX_ARITY


def set_max_arity(n: int | None) -> None:
    global _max_arity_override
    if n is not None and n < 1:
        raise LogicError("max arity must be at least 1")
    _max_arity_override = n


def check_arity_cap(arity: int) -> None:
    cap = max_arity()
    if arity > cap:
        raise ArityCapExceeded(f"arity {arity} exceeds the configured cap {cap}")


@cache
def tuples(n: int) -> tuple[tuple[int, ...], ...]:
    """All argument tuples of length ``n`` in canonical index order."""
    return tuple(itertools.product(VALUES, repeat=n))


def index_of(args: Sequence[int]) -> int:
    idx = 0
    for a in args:
        idx = idx * K + a
    return idx


@dataclass(frozen=True, order=True)
class Function:
    arity: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise LogicError("functions have arity at least 1; constants are unary")
        if len(self.table) != K**self.arity:
            raise BadLength(f"table of length {len(self.table)} does not fit arity {self.arity}")
        if any(v not in VALUES for v in self.table):
            raise BadDigit(f"table entries must lie in {{0,1,2}}: {self.table}")

    @classmethod
    def from_table(cls, table: Iterable[int]) -> "Function":
        table = tuple(table)
        n, size = 0, 1
        while size < len(table):
            size *= K
            n += 1
        if size != len(table) or n == 0:
            raise BadLength(f"table length {len(table)} is not a power of 3")
        return cls(n, table)

    @property
    def literal(self) -> str:
        return "".join(map(str, self.table))

    def __str__(self) -> str:
        return self.literal

    def __call__(self, *args: int) -> int:
        return evaluate(self, args)

    def values(self) -> set[int]:
        return set(self.table)


def parse_literal(text: str) -> Function:
    """Read a base-3 digit string such as ``"002012222"`` into a function."""
    text = text.strip()
    bad = [ch for ch in text if ch not in "012"]
    if bad:
        raise BadDigit(f"literal {text!r} contains non-ternary digit {bad[0]!r}")
    return Function.from_table(int(ch) for ch in text)


def fn(text: str) -> Function:
    return parse_literal(text)


def evaluate(f: Function, args: Sequence[int]) -> int:
    if len(args) != f.arity:
        raise ArityMismatch(f"{f.arity}-ary function applied to {len(args)} arguments")
    if any(a not in VALUES for a in args):
        raise BadDigit(f"arguments must lie in {{0,1,2}}: {tuple(args)}")
    return f.table[index_of(args)]


def constant(c: int, arity: int = 1) -> Function:
    return Function(arity, (c,) * K**arity)


def projection(i: int, m: int) -> Function:
    """The ``i``-th (1-based) projection of arity ``m``."""
    if not 1 <= i <= m:
        raise BadIndex(f"projection index {i} outside 1..{m}")
    return Function(m, tuple(t[i - 1] for t in tuples(m)))


IDENTITY = Function(1, (0, 1, 2))


def all_functions(arity: int) -> Iterator[Function]:
    """Every function of the given arity in canonical order (27 unary, 19683 binary)."""
    for table in itertools.product(VALUES, repeat=K**arity):
        yield Function(arity, table)


def superpose(f: Function, gs: Sequence[Function]) -> Function:
    """``x -> f(g1(x), ..., gn(x))`` for inner functions of a common arity."""
    if len(gs) != f.arity:
        raise ArityMismatch(f"{f.arity}-ary function given {len(gs)} inner functions")
    m = gs[0].arity
    if any(g.arity != m for g in gs):
        raise ArityMismatch("inner functions must share one arity")
    ft = f.table
    columns = [g.table for g in gs]
    out = []
    for k in range(K**m):
        idx = 0
        for col in columns:
            idx = idx * K + col[k]
        out.append(ft[idx])
    return Function(m, tuple(out))


def compose(g: Function, h: Function) -> Function:
    """Unary composition ``g(h(x))``, written g∘h in the boxed-column notation."""
    return superpose(g, [h])


def minor(f: Function, var_map: Sequence[int], m: int) -> Function:
    """``r(y1..ym) = f(y[var_map[0]], ..., y[var_map[n-1]])`` with 1-based indices.

    Covers identification of variables (repeated indices), permutation and
    adding fictitious variables.
    """
    if len(var_map) != f.arity:
        raise ArityMismatch(f"variable map of length {len(var_map)} for arity {f.arity}")
    if m < 1 or any(not 1 <= j <= m for j in var_map):
        raise BadIndex(f"variable map {tuple(var_map)} must index into 1..{m}")
    ft = f.table
    pos = [j - 1 for j in var_map]
    out = []
    for y in tuples(m):
        idx = 0
        for p in pos:
            idx = idx * K + y[p]
        out.append(ft[idx])
    return Function(m, tuple(out))


def substitute_constant(f: Function, position: int, c: int) -> Function:
    """Fix the argument at 1-based ``position`` to ``c``; arity drops by one."""
    if f.arity < 2:
        raise ArityUnderflow("cannot substitute into a unary function; constants are unary")
    if not 1 <= position <= f.arity:
        raise BadIndex(f"position {position} outside 1..{f.arity}")
    if c not in VALUES:
        raise BadDigit(f"constant {c} not in {{0,1,2}}")
    out = [f.table[index_of(t[: position - 1] + (c,) + t[position - 1 :])] for t in tuples(f.arity - 1)]
    return Function(f.arity - 1, tuple(out))


def restrict(f: Function, fixed: dict[int, int]) -> Function | int:
    """Fix several 1-based positions at once; returns a bare value if nothing is left free."""
    free = [i for i in range(1, f.arity + 1) if i not in fixed]
    if not free:
        return f.table[index_of([fixed[i] for i in range(1, f.arity + 1)])]
    out = []
    for t in tuples(len(free)):
        args = dict(zip(free, t))
        args.update(fixed)
        out.append(f.table[index_of([args[i] for i in range(1, f.arity + 1)])])
    return Function(len(free), tuple(out))


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, int, int]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(VALUES):
            raise LogicError(f"{self.images} is not a permutation of {{0,1,2}}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """``"102"`` is the permutation 0->1, 1->0, 2->2."""
        if len(text) != 3 or any(ch not in "012" for ch in text):
            raise LogicError(f"permutation literal must be 3 ternary digits, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def transposition(cls, a: int, b: int) -> "Permutation":
        images = list(VALUES)
        images[a], images[b] = b, a
        return cls(tuple(images))

    def __call__(self, v: int) -> int:
        return self.images[v]

    def inverse(self) -> "Permutation":
        inv = [0, 0, 0]
        for a, b in enumerate(self.images):
            inv[b] = a
        return Permutation(tuple(inv))

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(v)) for v in VALUES))

    @property
    def literal(self) -> str:
        return "".join(map(str, self.images))

    def cycle_notation(self) -> str:
        seen, parts = set(), []
        for start in VALUES:
            if start in seen or self(start) == start:
                seen.add(start)
                continue
            cyc, v = [], start
            while v not in seen:
                seen.add(v)
                cyc.append(str(v))
                v = self(v)
            parts.append("(" + "".join(cyc) + ")")
        return "".join(parts) or "id"

    def __str__(self) -> str:
        return self.cycle_notation()


ID_PERM = Permutation((0, 1, 2))
ALL_PERMUTATIONS = tuple(Permutation(p) for p in itertools.permutations(VALUES))


def dual_transform(f: Function, pi: Permutation) -> Function:
    """``f^pi(x) = pi(f(pi^-1(x1), ..., pi^-1(xn)))``."""
    inv = pi.inverse().images
    img = pi.images
    out = [img[f.table[index_of([inv[a] for a in t])]] for t in tuples(f.arity)]
    return Function(f.arity, tuple(out))


def essential_variables(f: Function) -> set[int]:
    ess = set()
    for i in range(1, f.arity + 1):
        stride = K ** (f.arity - i)
        for idx, t in enumerate(tuples(f.arity)):
            if t[i - 1] == 0 and not (f.table[idx] == f.table[idx + stride] == f.table[idx + 2 * stride]):
                ess.add(i)
                break
    return ess


@dataclass(frozen=True)
class System:
    name: str
    functions: tuple[Function, ...]

    def __post_init__(self) -> None:
        if not self.functions:
            raise LogicError("a system needs at least one function")
        if len(set(self.functions)) != len(self.functions):
            raise LogicError(f"system {self.name!r} lists a function twice")

    @classmethod
    def of(cls, name: str, *literals: str | Function) -> "System":
        funcs = tuple(parse_literal(x) if isinstance(x, str) else x for x in literals)
        return cls(name, funcs)

    def __iter__(self) -> Iterator[Function]:
        return iter(self.functions)

    def __len__(self) -> int:
        return len(self.functions)

    def with_functions(self, extra: Iterable[Function], name: str | None = None) -> "System":
        funcs = list(self.functions)
        for g in extra:
            if g not in funcs:
                funcs.append(g)
        return System(name or self.name, tuple(funcs))

    @property
    def max_arity(self) -> int:
        return max(f.arity for f in self.functions)
