"""Relations on {0,1,2} written as matrices of columns, and the preservation test.

A function preserves a matrix when applying it row-wise to any (possibly
repeated) choice of columns yields a column of the matrix again.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Sequence

import numpy as np

from .core import K, VALUES, Function, LogicError, Permutation, check_arity_cap

Column = tuple[int, ...]

# Below this many column tuples the plain loop beats numpy set-up cost.
_VECTOR_THRESHOLD = 4096
_CHUNK_ROWS = 1 << 17


class UnknownId(LogicError):
    pass


@dataclass(frozen=True)
class Matrix:
    rows: int
    columns: tuple[Column, ...]

    def __post_init__(self) -> None:
        if self.rows < 1:
            raise LogicError("a matrix needs at least one row")
        if not self.columns:
            raise LogicError("a matrix needs at least one column")
        for col in self.columns:
            if len(col) != self.rows or any(v not in VALUES for v in col):
                raise LogicError(f"column {col} does not fit a {self.rows}-row matrix over {{0,1,2}}")

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]]) -> "Matrix":
        cols = tuple(tuple(c) for c in columns)
        return cls(len(cols[0]) if cols else 0, cols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Matrix":
        return cls.from_columns(zip(*rows))

    @property
    def column_set(self) -> frozenset[Column]:
        return frozenset(self.columns)

    def distinct_columns(self) -> tuple[Column, ...]:
        return tuple(dict.fromkeys(self.columns))

    def same_relation(self, other: "Matrix") -> bool:
        return self.rows == other.rows and self.column_set == other.column_set

    def sorted(self) -> "Matrix":
        return Matrix(self.rows, tuple(sorted(self.column_set)))

    def delete_rows(self, drop: Iterable[int]) -> "Matrix":
        """Remove 0-based row indices."""
        drop = set(drop)
        keep = [r for r in range(self.rows) if r not in drop]
        return Matrix(len(keep), tuple(tuple(c[r] for r in keep) for c in self.columns))

    def with_column(self, col: Sequence[int]) -> "Matrix":
        return Matrix(self.rows, self.columns + (tuple(col),))

    def row_strings(self) -> list[str]:
        return [" ".join(str(c[r]) for c in self.columns) for r in range(self.rows)]

    def to_json(self) -> dict:
        return {"rows": self.rows, "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, data: dict) -> "Matrix":
        m = cls.from_columns(data["columns"])
        if m.rows != data["rows"]:
            raise LogicError(f"declared {data['rows']} rows but columns have length {m.rows}")
        return m


@dataclass(frozen=True)
class PreservationWitness:
    column_indices: tuple[int, ...]
    result: Column

    def to_json(self) -> dict:
        return {"column_indices": list(self.column_indices), "result": list(self.result)}


def apply_rowwise(f: Function, cols: Sequence[Column]) -> Column:
    rows = len(cols[0])
    out = []
    for r in range(rows):
        idx = 0
        for c in cols:
            idx = idx * K + c[r]
        out.append(f.table[idx])
    return tuple(out)


def find_violation(f: Function, a: Matrix) -> PreservationWitness | None:
    """First column tuple (in lexicographic order) whose image leaves ``a``; None if preserved."""
    check_arity_cap(f.arity)
    distinct = a.distinct_columns()
    original = {col: a.columns.index(col) for col in distinct}
    s, n = len(distinct), f.arity
    if s**n <= _VECTOR_THRESHOLD:
        hit = _scan_python(f, distinct, a.column_set)
    else:
        hit = _scan_numpy(f, distinct, a.rows)
    if hit is None:
        return None
    chosen = [distinct[j] for j in hit]
    return PreservationWitness(tuple(original[c] for c in chosen), apply_rowwise(f, chosen))


def preserves(f: Function, a: Matrix) -> bool:
    return find_violation(f, a) is None


def _scan_python(f: Function, distinct: Sequence[Column], allowed: frozenset[Column]) -> tuple[int, ...] | None:
    rows = len(distinct[0])
    table = f.table
    for choice in itertools.product(range(len(distinct)), repeat=f.arity):
        out = []
        for r in range(rows):
            idx = 0
            for j in choice:
                idx = idx * K + distinct[j][r]
            out.append(table[idx])
        if tuple(out) not in allowed:
            return choice
    return None


def _scan_numpy(f: Function, distinct: Sequence[Column], rows: int) -> tuple[int, ...] | None:
    s, n = len(distinct), f.arity
    cols = np.array(distinct, dtype=np.int64)  # (s, rows)
    table = np.array(f.table, dtype=np.int8)
    allowed = np.zeros(K**rows, dtype=bool)
    weights = K ** np.arange(rows - 1, -1, -1, dtype=np.int64)
    allowed[cols @ weights] = True
    # vectorise the trailing ``tail`` positions, loop over the leading ones
    tail = n
    while tail > 1 and s**tail > _CHUNK_ROWS:
        tail -= 1
    head = n - tail
    tail_idx = np.zeros((1, rows), dtype=np.int64)
    for i in range(head, n):
        place = K ** (n - 1 - i)
        tail_idx = (tail_idx[:, None, :] + (cols * place)[None, :, :]).reshape(-1, rows)
    for prefix in itertools.product(range(s), repeat=head):
        offset = np.zeros(rows, dtype=np.int64)
        for i, j in enumerate(prefix):
            offset += cols[j] * K ** (n - 1 - i)
        values = table[tail_idx + offset].astype(np.int64)
        bad = ~allowed[values @ weights]
        if bad.any():
            pos = int(np.argmax(bad))
            rest = np.unravel_index(pos, (s,) * tail) if tail else ()
            return tuple(prefix) + tuple(int(v) for v in rest)
    return None


def matrix_dual(a: Matrix, pi: Permutation) -> Matrix:
    """Replace every entry ``v`` by ``pi(v)``; Pol of the result is the pi-dual class."""
    return Matrix(a.rows, tuple(tuple(pi(v) for v in c) for c in a.columns))


# -- relation builders -------------------------------------------------------

Order = frozenset[tuple[int, int]]


def linear_order(chain: Sequence[int]) -> Order:
    """``chain`` lists the elements from smallest to largest."""
    return frozenset((chain[i], chain[j]) for i in range(3) for j in range(i, 3))


def top_order(top: int) -> Order:
    """``top`` lies above the two other elements, which are incomparable."""
    pairs = {(v, v) for v in VALUES}
    pairs |= {(v, top) for v in VALUES}
    return frozenset(pairs)


def rho(order: Order) -> Matrix:
    """Triples (a, b, c) with c the larger of two comparable a, b."""
    cols = sorted(
        {(a, b, b) for a, b in order} | {(b, a, b) for a, b in order}
    )
    return Matrix(3, tuple(cols))


def rho_prime(order: Order) -> Matrix:
    """Triples (a, b, c) with c the smaller of two comparable a, b."""
    cols = sorted(
        {(a, b, a) for a, b in order} | {(b, a, a) for a, b in order}
    )
    return Matrix(3, tuple(cols))


def set_relation(subset: Iterable[int]) -> Matrix:
    return Matrix(1, tuple((v,) for v in sorted(set(subset))))


def partition_relation(block: Iterable[int]) -> Matrix:
    """Equivalence pairs of the partition ``{block}{rest}``."""
    block = set(block)
    cols = sorted((x, y) for x in VALUES for y in VALUES if (x in block) == (y in block))
    return Matrix(2, tuple(cols))


def central_relation(c: int) -> Matrix:
    cols = [(0, 1, 2, 2, 2, 0, 1), (0, 1, 2, 0, 1, 2, 2)]
    base = Matrix.from_rows(cols)
    if c == 2:
        return base
    return matrix_dual(base, Permutation.transposition(c, 2))


def graph_relation(g: Function) -> Matrix:
    """Columns ``(x1, ..., xn, g(x))``."""
    from .core import tuples

    return Matrix(g.arity + 1, tuple(t + (v,) for t, v in zip(tuples(g.arity), g.table)))


# -- registry ----------------------------------------------------------------

A1 = Matrix.from_rows([(0, 1, 0, 1, 2, 2, 2), (0, 1, 2, 2, 0, 1, 2), (0, 1, 2, 2, 2, 2, 2)])
A2 = Matrix.from_rows([(0, 1, 0, 1, 2, 2, 2), (0, 1, 2, 2, 0, 1, 2), (0, 1, 0, 1, 0, 1, 2)])
A3 = Matrix.from_rows([(0, 1, 0, 0, 1, 1, 2), (0, 1, 0, 1, 0, 1, 2), (0, 1, 2, 2, 2, 2, 2)])
A4 = Matrix.from_rows([(0, 0, 0, 1, 1, 1, 2, 2, 2), (0, 1, 2, 0, 1, 2, 0, 1, 2), (0, 0, 0, 0, 1, 1, 0, 1, 2)])
A4_PRIME = Matrix.from_rows([(0, 0, 0, 1, 1, 1, 2, 2, 2), (0, 1, 2, 0, 1, 2, 0, 1, 2), (0, 1, 2, 1, 1, 2, 2, 2, 2)])
CYCLE_GRAPH = Matrix.from_rows([(0, 1, 2), (1, 2, 0)])
MAX_GRAPH = Matrix(3, tuple((a, b, max(a, b)) for a in VALUES for b in VALUES))
MIN_GRAPH = Matrix(3, tuple((a, b, min(a, b)) for a in VALUES for b in VALUES))

PAIRS = ((0, 1), (0, 2), (1, 2))

_FIXED = {
    "A1": A1,
    "A2": A2,
    "A3": A3,
    "A4": A4,
    "A4prime": A4_PRIME,
    "CYCLE_GRAPH": CYCLE_GRAPH,
    "MAX_GRAPH": MAX_GRAPH,
    "MIN_GRAPH": MIN_GRAPH,
}


def _digits(body: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in body if ch in "012")


def normalize_id(name: str) -> str:
    """Canonical spelling: ``CENTRAL(2)``, ``SET(01)``, ``PARTITION(01|2)``."""
    name = name.strip()
    if name in _FIXED:
        return name
    m = re.fullmatch(r"(CENTRAL|SET|PARTITION)\((.*)\)", name)
    if not m:
        raise UnknownId(f"unknown matrix id {name!r}")
    kind, body = m.groups()
    if kind == "CENTRAL":
        ds = _digits(body)
        if len(ds) != 1:
            raise UnknownId(f"CENTRAL takes one centre, got {name!r}")
        return f"CENTRAL({ds[0]})"
    if kind == "SET":
        ds = tuple(sorted(set(_digits(body))))
        if not ds or len(ds) == 3 or len(ds) != len(_digits(body)):
            raise UnknownId(f"SET needs a proper nonempty subset, got {name!r}")
        return "SET(" + "".join(map(str, ds)) + ")"
    parts = [p for p in re.split(r"[|}]", body.replace("{", "")) if p.strip(" ,")]
    if len(parts) != 2:
        raise UnknownId(f"PARTITION needs two blocks, got {name!r}")
    blocks = sorted((tuple(sorted(_digits(p))) for p in parts), key=len, reverse=True)
    if sorted(blocks[0] + blocks[1]) != [0, 1, 2] or len(blocks[0]) != 2:
        raise UnknownId(f"PARTITION must split {{0,1,2}} into a pair and a singleton, got {name!r}")
    return "PARTITION(" + "".join(map(str, blocks[0])) + "|" + str(blocks[1][0]) + ")"


@cache
def named_matrix(name: str) -> Matrix:
    key = normalize_id(name)
    if key in _FIXED:
        return _FIXED[key]
    kind, body = key.split("(", 1)
    ds = _digits(body)
    if kind == "CENTRAL":
        return central_relation(ds[0])
    if kind == "SET":
        return set_relation(ds)
    return partition_relation(ds[:2])


def registry_ids() -> list[str]:
    ids = list(_FIXED)
    ids += [f"CENTRAL({c})" for c in VALUES]
    ids += ["SET(" + "".join(map(str, s)) + ")" for r in (1, 2) for s in itertools.combinations(VALUES, r)]
    ids += [f"PARTITION({a}{b}|{3 - a - b})" for a, b in PAIRS]
    return ids
