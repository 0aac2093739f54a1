"""Bounded-arity superposition closure and enumeration of unary closed classes.

The m-ary part of the clone generated by a system is the least set of m-ary
functions containing the m projections and closed under applying every
generator to tuples of members: every term over m variables has m-ary
subterms, so no intermediate arity is ever needed.  The fixpoint is computed
semi-naively (each round only applies generators to tuples that involve a
member found in the previous round) on numpy digit arrays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Sequence

import numpy as np

from .core import (
    ALL_PERMUTATIONS,
    IDENTITY,
    K,
    VALUES,
    Function,
    LogicError,
    System,
    all_functions,
    compose,
    constant,
    dual_transform,
    parse_literal,
    projection,
    superpose,
)

DEFAULT_TERNARY_BUDGET = 2_000_000
DEFAULT_WORK_BUDGET = 2_000_000_000
_CHUNK = 1 << 22


class BudgetExceeded(LogicError):
    pass


@dataclass(frozen=True)
class ClosureFragment:
    arity: int
    members: tuple[Function, ...]
    generators: System

    def __contains__(self, f: Function) -> bool:
        return f in self._set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def _set(self) -> frozenset[Function]:
        s = self.__dict__.get("_cached_set")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_cached_set", s)
        return s

    @property
    def literals(self) -> list[str]:
        return [f.literal for f in self.members]


class _Closure:
    """Incremental fixpoint over m-ary tables; generators can be added later.

    Members are stored as integer codes (the table read as a base-3 number).
    A generator is applied chunk-wise: each group of three consecutive table
    entries is a digit in 0..26, and a lookup table indexed by the argument
    chunks gives the result chunk directly.
    """

    def __init__(self, m: int, budget: int | None, work_budget: int):
        self.m = m
        self.size = K**m
        self.chunks = self.size // 3 if m > 1 else 1
        self.budget = budget
        self.work_budget = work_budget
        self.work = 0
        self.dense = m <= 2
        if self.dense:
            self.present = np.zeros(K**self.size, dtype=bool)
        else:
            self.known: set[int] = set()
        self.codes = np.zeros(0, dtype=np.int64)
        self.gens: list[Function] = []
        self._luts: dict[Function, np.ndarray] = {}
        self._insert(np.array([_code(projection(i, m)) for i in range(1, m + 1)], dtype=np.int64))

    def _insert(self, cand: np.ndarray) -> np.ndarray:
        """Add unseen codes of ``cand``; return the newly added ones."""
        if len(cand) == 0:
            return cand
        cand = np.unique(cand)
        if self.dense:
            new = cand[~self.present[cand]]
            self.present[new] = True
        else:
            fresh = [c for c in cand.tolist() if c not in self.known]
            self.known.update(fresh)
            new = np.array(fresh, dtype=np.int64)
        self.codes = np.concatenate([self.codes, new])
        if self.budget is not None and len(self.codes) > self.budget:
            raise BudgetExceeded(f"arity-{self.m} closure passed the budget of {self.budget} members")
        return new

    def _lut(self, g: Function) -> np.ndarray:
        lut = self._luts.get(g)
        if lut is None:
            n = g.arity
            cs = np.arange(27**n, dtype=np.int64)
            table = np.asarray(g.table, dtype=np.int64)
            out = np.zeros(len(cs), dtype=np.int64)
            for d in range(3):
                idx = np.zeros(len(cs), dtype=np.int64)
                for i in range(n):
                    chunk = (cs // 27 ** (n - 1 - i)) % 27
                    idx = idx * K + (chunk // 3 ** (2 - d)) % 3
                out = out * K + table[idx]
            lut = out.astype(np.int16)
            self._luts[g] = lut
        return lut

    def _split(self, codes: np.ndarray) -> np.ndarray:
        """Chunk digits of shape (len, chunks), most significant first."""
        if self.m == 1:
            return codes[:, None]
        shifts = 27 ** np.arange(self.chunks - 1, -1, -1, dtype=np.int64)
        return (codes[:, None] // shifts[None, :]) % 27

    def _apply(self, g: Function, parts: Sequence[np.ndarray]) -> np.ndarray:
        """Codes of ``g`` applied to every tuple drawn from ``parts`` (one code array per argument)."""
        count = 1
        for p in parts:
            count *= len(p)
        if count == 0:
            return np.zeros(0, dtype=np.int64)
        self.work += count
        if self.work > self.work_budget:
            raise BudgetExceeded(f"closure needed more than {self.work_budget} generator applications")
        if 27**g.arity > 20_000_000:
            return self._apply_digits(g, parts)
        lut = self._lut(g)
        split = [self._split(p) for p in parts]
        head, rest = split[0], split[1:]
        tail = count // len(parts[0])
        step = max(1, _CHUNK // max(1, tail * self.chunks))
        out = []
        for start in range(0, len(head), step):
            idx = head[start : start + step]
            for p in rest:
                idx = (idx[:, None, :] * 27 + p[None, :, :]).reshape(-1, self.chunks)
            res = np.zeros(len(idx), dtype=np.int64)
            for j in range(self.chunks):
                res = res * 27 + lut[idx[:, j]]
            if self.dense:
                res = res[~self.present[res]]
            out.append(res)
        return np.concatenate(out)

    def _apply_digits(self, g: Function, parts: Sequence[np.ndarray]) -> np.ndarray:
        weights = K ** np.arange(self.size - 1, -1, -1, dtype=np.int64)
        digits = [(p[:, None] // weights[None, :]) % K for p in parts]
        table = np.asarray(g.table, dtype=np.int64)
        head, rest = digits[0], digits[1:]
        tail = 1
        for p in rest:
            tail *= len(p)
        step = max(1, _CHUNK // max(1, tail * self.size))
        out = []
        for start in range(0, len(head), step):
            idx = head[start : start + step]
            for p in rest:
                idx = (idx[:, None, :] * K + p[None, :, :]).reshape(-1, self.size)
            res = table[idx] @ weights
            if self.dense:
                res = res[~self.present[res]]
            out.append(res)
        return np.concatenate(out)

    def _round(self, old: np.ndarray, new: np.ndarray) -> np.ndarray:
        every = np.concatenate([old, new])
        cand = []
        for g in self.gens:
            n = g.arity
            for p in range(n):
                parts = [old] * p + [new] + [every] * (n - p - 1)
                cand.append(self._apply(g, parts))
        return self._insert(np.concatenate(cand)) if cand else new[:0]

    def add(self, extra: Iterable[Function]) -> None:
        extra = [g for g in extra if g not in self.gens]
        if not extra:
            return
        # the new generators see every current member once
        new = self._insert(np.concatenate([self._apply(g, [self.codes] * g.arity) for g in extra]))
        self.gens.extend(extra)
        while len(new) and not self.full():
            old = self.codes[: len(self.codes) - len(new)]
            new = self._round(old, new)

    def full(self) -> bool:
        return self.dense and len(self.codes) == len(self.present)

    def functions(self) -> tuple[Function, ...]:
        return tuple(_decode(int(c), self.m) for c in np.sort(self.codes))

    def contains(self, f: Function) -> bool:
        code = _code(f)
        return bool(self.present[code]) if self.dense else code in self.known


def _code(f: Function) -> int:
    c = 0
    for v in f.table:
        c = c * K + v
    return c


def _decode(code: int, m: int) -> Function:
    size = K**m
    digits = [0] * size
    for i in range(size - 1, -1, -1):
        code, digits[i] = divmod(code, K)
    return Function(m, tuple(digits))


def _as_system(gens: System | Iterable[Function | str]) -> System:
    if isinstance(gens, System):
        return gens
    return System.of("generators", *gens)


def _check_arity(m: int, budget: int | None) -> int | None:
    if m < 1:
        raise LogicError("closure arity must be at least 1")
    if m >= 3 and budget is None:
        if m > 3:
            raise LogicError("closure fragments are supported up to arity 3")
        return DEFAULT_TERNARY_BUDGET
    return budget


def closure_fragment(
    gens: System | Iterable[Function | str],
    m: int = 2,
    budget: int | None = None,
    work_budget: int = DEFAULT_WORK_BUDGET,
) -> ClosureFragment:
    """The m-ary functions in the clone generated by ``gens`` and the identity."""
    system = _as_system(gens)
    budget = _check_arity(m, budget)
    engine = _Closure(m, budget, work_budget)
    engine.add(system.functions)
    return ClosureFragment(m, engine.functions(), system)


def is_in_fragment(f: Function, gens: System | Iterable[Function | str], budget: int | None = None) -> bool:
    return f in closure_fragment(gens, f.arity, budget)


def closure_round_adds(frag: ClosureFragment) -> set[Function]:
    """Functions one more round of generator application would add (empty at a fixpoint)."""
    members = frag._set
    out = set()
    for g in frag.generators:
        for args in itertools.product(frag.members, repeat=g.arity):
            r = superpose(g, list(args))
            if r not in members:
                out.add(r)
    return out


class IncrementalClosure:
    """Arity-m closure that grows as generators are added; used for generator reduction."""

    def __init__(self, m: int = 2, budget: int | None = None, work_budget: int = DEFAULT_WORK_BUDGET):
        self._engine = _Closure(m, _check_arity(m, budget), work_budget)

    def add(self, gens: Iterable[Function]) -> None:
        self._engine.add(list(gens))

    def __contains__(self, f: Function) -> bool:
        return self._engine.contains(f)

    def __len__(self) -> int:
        return len(self._engine.codes)

    @property
    def generators(self) -> list[Function]:
        return list(self._engine.gens)

    def members(self) -> tuple[Function, ...]:
        return self._engine.functions()


# -- unary monoids -----------------------------------------------------------


UNARY = tuple(all_functions(1))
_CODE = {f: i for i, f in enumerate(UNARY)}
ID_CODE = _CODE[IDENTITY]


@cache
def composition_table() -> tuple[tuple[int, ...], ...]:
    """``table[g][h]`` is the code of g∘h (apply h, then g)."""
    return tuple(tuple(_CODE[compose(g, h)] for h in UNARY) for g in UNARY)


def _mask(codes: Iterable[int]) -> int:
    m = 0
    for c in codes:
        m |= 1 << c
    return m


def _codes(mask: int) -> list[int]:
    return [i for i in range(27) if mask >> i & 1]


def monoid_closure_mask(mask: int) -> int:
    """Least composition-closed set containing ``mask`` and the identity."""
    comp = composition_table()
    mask |= 1 << ID_CODE
    frontier = _codes(mask)
    members = list(frontier)
    while frontier:
        fresh = []
        for a in frontier:
            for b in members:
                for c in (comp[a][b], comp[b][a]):
                    if not mask >> c & 1:
                        mask |= 1 << c
                        fresh.append(c)
        members.extend(fresh)
        frontier = fresh
    return mask


def monoid_closure(funcs: Iterable[Function]) -> frozenset[Function]:
    return frozenset(UNARY[i] for i in _codes(monoid_closure_mask(_mask(_CODE[f] for f in funcs))))


@dataclass(frozen=True, order=True)
class MonoidSet:
    members: tuple[Function, ...]

    @classmethod
    def from_mask(cls, mask: int) -> "MonoidSet":
        return cls(tuple(UNARY[i] for i in _codes(mask)))

    @classmethod
    def of(cls, *literals: str) -> "MonoidSet":
        return cls(tuple(sorted(parse_literal(x) for x in literals)))

    @property
    def mask(self) -> int:
        return _mask(_CODE[f] for f in self.members)

    @property
    def literals(self) -> list[str]:
        return [f.literal for f in self.members]

    def __contains__(self, f: Function) -> bool:
        return f in self.members

    def __len__(self) -> int:
        return len(self.members)

    def dual(self, pi) -> "MonoidSet":
        return MonoidSet(tuple(sorted(dual_transform(f, pi) for f in self.members)))

    def canonical(self) -> "MonoidSet":
        """Least member of the duality orbit, compared by sorted literal lists."""
        return min((self.dual(p) for p in ALL_PERMUTATIONS), key=lambda s: s.literals)


@cache
def _all_monoid_masks() -> tuple[int, ...]:
    start = monoid_closure_mask(0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mask in frontier:
            for c in range(27):
                if mask >> c & 1:
                    continue
                grown = monoid_closure_mask(mask | 1 << c)
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return tuple(sorted(seen, key=lambda m: _codes(m)))


def enumerate_unary_monoids(
    constants_required: Iterable[int] = (),
    constants_forbidden: Iterable[int] = (),
    mod_duality: bool = False,
) -> list[MonoidSet]:
    """All composition-closed sets of unary functions with the identity, filtered by constants."""
    need, ban = set(constants_required), set(constants_forbidden)
    if need & ban:
        raise LogicError(f"constants {sorted(need & ban)} both required and forbidden")
    if not need | ban <= set(VALUES):
        raise LogicError("constant filters must be subsets of {0,1,2}")
    const = {c: _CODE[constant(c)] for c in VALUES}
    out = []
    for mask in _all_monoid_masks():
        if all(mask >> const[c] & 1 for c in need) and not any(mask >> const[c] & 1 for c in ban):
            out.append(MonoidSet.from_mask(mask))
    if mod_duality:
        out = sorted({m.canonical() for m in out}, key=lambda s: s.literals)
    else:
        out.sort(key=lambda s: s.literals)
    return out


def is_composition_closed(funcs: Iterable[Function]) -> bool:
    s = set(funcs)
    return all(compose(g, h) in s for g in s for h in s)
