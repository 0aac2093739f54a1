"""Registry of the 54 implicitly precomplete classes of three-valued logic.

Every class is defined directly by its own relation, pair, partition or
square condition; duality to an orbit representative is recorded alongside
and checked in the test-suite rather than used for membership.

Naming conventions for classes the literature only names up to duality:

* ``Y_c``, ``R'_c``, ``Q'_c``, ``F'_c`` carry the image of the distinguished
  element 2 of the representative; ``W_a`` the image of 1; ``T_{a},0`` the
  preserved constant.
* ``KM_i`` / ``DM_i`` are Pol of the min / max graph for the linear order with
  middle element 1, 0, 2 for i = 1, 2, 3; the orders are 0<1<2, 1<0<2 and
  0<2<1 (images of 0<1<2 under id, (01), (12)).
* Boolean restrictions encode the smaller element of a pair as 0.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Sequence

from . import boolean as B
from .core import (
    ALL_PERMUTATIONS,
    ID_PERM,
    K,
    VALUES,
    Function,
    LogicError,
    Permutation,
    all_functions,
    check_arity_cap,
    constant,
    dual_transform,
    index_of,
    tuples,
)
from .relations import (
    A3,
    CYCLE_GRAPH,
    Matrix,
    apply_rowwise,
    central_relation,
    find_violation,
    linear_order,
    matrix_dual,
    rho,
    rho_prime,
    top_order,
)


class UnknownClass(LogicError):
    pass


# -- violations --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Violation:
    """Why a function is outside a class; ``test`` selects how to read ``detail``.

    ``matrix``: column tuple whose image leaves the relation; ``set``: argument
    tuple inside the subset mapped outside it; ``partition``: two equivalent
    tuples with inequivalent values; ``boolean``: a block (or pair) whose
    Boolean restriction is outside the two-valued class; ``square``: a square
    with a selected vertex; ``linear``: a point where the table leaves its
    mod-3 interpolant.
    """

    test: str
    detail: dict

    def to_json(self) -> dict:
        return {"test": self.test, **_jsonable(self.detail)}

    def summary(self) -> str:
        d = self.detail
        if self.test == "matrix":
            cols = " ".join("".join(map(str, c)) for c in d["columns"])
            return f"columns {cols} -> {''.join(map(str, d['result']))} not in {d['relation']}"
        if self.test == "set":
            return f"f{tuple(d['args'])} = {d['value']} outside {{{','.join(map(str, d['subset']))}}}"
        if self.test == "partition":
            return (
                f"equivalent {tuple(d['first'])}, {tuple(d['second'])} map to "
                f"inequivalent {d['values'][0]}, {d['values'][1]}"
            )
        if self.test == "boolean":
            where = "pair" if d["block"] is None else f"block {sorted(d['block'])}"
            return f"restriction on {where} is {d['restriction']}, not in {d['post_class']}"
        if self.test == "square":
            sq = d["square"]
            return f"square {' '.join(map(str, map(tuple, sq)))} selects vertex {tuple(sq[d['selected']])}"
        if self.test == "linear":
            return f"f{tuple(d['args'])} = {d['value']} but the linear interpolant gives {d['expected']}"
        return str(d)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (frozenset, set)) else obj
        return [_jsonable(v) for v in items]
    return obj


# -- component tests ---------------------------------------------------------


def _set_violation(f: Function, subset: frozenset[int]) -> Violation | None:
    inside = sorted(subset)
    for args in itertools.product(inside, repeat=f.arity):
        v = f.table[index_of(args)]
        if v not in subset:
            return Violation("set", {"subset": tuple(inside), "args": args, "value": v})
    return None


def _partition_violation(f: Function, pair: tuple[int, int]) -> Violation | None:
    hit = B.partition_violation(f, pair)
    if hit is None:
        return None
    return Violation("partition", {"pair": pair, "first": hit.first, "second": hit.second, "values": hit.values})


def _matrix_violation(f: Function, a: Matrix, name: str) -> Violation | None:
    hit = find_violation(f, a)
    if hit is None:
        return None
    cols = tuple(a.columns[j] for j in hit.column_indices)
    return Violation(
        "matrix",
        {"relation": name, "column_indices": hit.column_indices, "columns": cols, "result": hit.result},
    )


def _linear_violation(f: Function) -> Violation | None:
    n = f.arity
    a0 = f.table[0]
    coeffs = [(f.table[K ** (n - 1 - i)] - a0) % K for i in range(n)]
    for args, v in zip(tuples(n), f.table):
        w = (a0 + sum(c * x for c, x in zip(coeffs, args))) % K
        if w != v:
            return Violation("linear", {"args": args, "value": v, "expected": w})
    return None


def _sigma_pair_violation(f: Function, pair: tuple[int, int], post: str) -> Violation | None:
    try:
        g = B.boolean_restriction(f, pair)
    except B.NotSetPreserving as exc:
        return Violation("set", {"subset": pair, "args": exc.args_tuple, "value": exc.value})
    if not B.post_member(g, post):
        return Violation("boolean", {"pair": pair, "block": None, "restriction": g.literal, "post_class": post})
    return None


def _sigma_partition_violation(f: Function, pair: tuple[int, int], post: str) -> Violation | None:
    v = _partition_violation(f, pair)
    if v is not None:
        return v
    for block in B.blocks(f.arity):
        g = B.block_restriction(f, pair, block)
        if g is B.CONSTANT_C:
            continue
        if not B.post_member(g, post):
            return Violation(
                "boolean", {"pair": pair, "block": tuple(sorted(block)), "restriction": g.literal, "post_class": post}
            )
    return None


def _square_violation(f: Function) -> Violation | None:
    n = f.arity
    t = f.table
    for i, j in itertools.combinations(range(n), 2):
        rest = [p for p in range(n) if p not in (i, j)]
        for a1, a2 in itertools.combinations(VALUES, 2):
            for b1, b2 in itertools.combinations(VALUES, 2):
                for ctx in tuples(n - 2):
                    square = []
                    for a, b in ((a1, b1), (a1, b2), (a2, b1), (a2, b2)):
                        args = [0] * n
                        for p, c in zip(rest, ctx):
                            args[p] = c
                        args[i], args[j] = a, b
                        square.append(tuple(args))
                    vals = [t[index_of(s)] for s in square]
                    for k, v in enumerate(vals):
                        if vals.count(v) == 1:
                            return Violation("square", {"square": tuple(square), "selected": k, "values": tuple(vals)})
    return None


def selects_vertex(values: Sequence[int]) -> int | None:
    """Index of a vertex whose value differs from each of the other three."""
    for k, v in enumerate(values):
        if list(values).count(v) == 1:
            return k
    return None


# -- descriptors -------------------------------------------------------------


@dataclass(frozen=True)
class ClassDescriptor:
    id: str
    label: str
    kind: str  # pol | intersection | linear | sigma_pair | sigma_partition | square
    contains_all_constants: bool
    base: str
    duality: Permutation
    matrix: Matrix | None = None
    components: tuple = ()
    pair: tuple[int, int] | None = None
    post_class: str | None = None
    relation_name: str | None = None
    cost: int = 0
    definition: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def violation(self, f: Function) -> Violation | None:
        check_arity_cap(f.arity)
        if self.kind == "pol":
            return _matrix_violation(f, self.matrix, self.relation_name)
        if self.kind == "intersection":
            for comp in self.components:
                tag, arg = comp[0], comp[1]
                if tag == "set":
                    v = _set_violation(f, arg)
                elif tag == "partition":
                    v = _partition_violation(f, arg)
                else:
                    v = _matrix_violation(f, arg, comp[2])
                if v is not None:
                    return v
            return None
        if self.kind == "linear":
            return _linear_violation(f)
        if self.kind == "sigma_pair":
            return _sigma_pair_violation(f, self.pair, self.post_class)
        if self.kind == "sigma_partition":
            return _sigma_partition_violation(f, self.pair, self.post_class)
        if self.kind == "square":
            return _square_violation(f)
        raise AssertionError(self.kind)

    def contains(self, f: Function) -> bool:
        return self.violation(f) is None

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "label": self.label,
            "kind": self.kind,
            "definition": self.definition,
            "contains_all_constants": self.contains_all_constants,
            "orbit_base": self.base,
            "duality_permutation": self.duality.literal,
        }
        if self.matrix is not None:
            out["matrix"] = self.matrix.to_json()
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.post_class is not None:
            out["boolean_class"] = self.post_class
        if self.kind == "intersection":
            parts = []
            for comp in self.components:
                if comp[0] == "set":
                    parts.append({"set": sorted(comp[1])})
                elif comp[0] == "partition":
                    parts.append({"partition": list(comp[1])})
                else:
                    parts.append({"relation": comp[2], "matrix": comp[1].to_json()})
            out["components"] = parts
        return out


def _other(pair: Iterable[int]) -> int:
    (c,) = set(VALUES) - set(pair)
    return c


def _perm(images: Sequence[int]) -> Permutation:
    return Permutation(tuple(images))


def _swap(a: int, b: int) -> Permutation:
    return ID_PERM if a == b else Permutation.transposition(a, b)


def _pair_perm(pair: tuple[int, int], flip: bool, c_image: int | None = None) -> Permutation:
    """Permutation sending 0, 1 onto ``pair`` (reversed when ``flip``)."""
    lo, hi = pair
    img0, img1 = (hi, lo) if flip else (lo, hi)
    return _perm((img0, img1, _other((img0, img1))))


KM_ORDERS = {1: (0, 1, 2), 2: (1, 0, 2), 3: (0, 2, 1)}
SIGMA_PAIR_CLASSES = ("L", "S", "K", "D")
SIGMA_PARTITION_CLASSES = ("L", "T0", "T1", "K", "D")


def _pair_text(pair: tuple[int, int]) -> str:
    return f"{pair[0]}{pair[1]}"


def sigma_pair_id(pair: tuple[int, int], post: str) -> str:
    return f"SigmaPair({_pair_text(pair)},{post})"


def sigma_partition_id(pair: tuple[int, int], post: str) -> str:
    return f"SigmaPartition({_pair_text(pair)}|{_other(pair)},{post})"


def _build() -> tuple[ClassDescriptor, ...]:
    out: list[ClassDescriptor] = []

    out.append(
        ClassDescriptor(
            "S", "S", "pol", False, "S", ID_PERM, matrix=CYCLE_GRAPH, relation_name="CYCLE_GRAPH", cost=2,
            definition="preserves the graph of x -> x+1 (self-dual functions)",
        )
    )
    out.append(
        ClassDescriptor(
            "L", "L", "linear", True, "L", ID_PERM, cost=1, definition="a0 + a1*x1 + ... + an*xn mod 3",
        )
    )
    for a in VALUES:
        out.append(
            ClassDescriptor(
                f"T{a}_0", f"T_{{{a}}},0", "intersection", False, "T0_0", _swap(0, a),
                components=(("set", frozenset({a})),), cost=0, definition=f"f({a},...,{a}) = {a}",
            )
        )
    for a in VALUES:
        b, c = [v for v in VALUES if v != a]
        p1, p2 = tuple(sorted((a, b))), tuple(sorted((a, c)))
        out.append(
            ClassDescriptor(
                f"W{a}", f"W_{a}", "intersection", True, "W1", _swap(1, a),
                components=(("partition", p1), ("partition", p2)), cost=1,
                definition=f"preserves partitions {{{_pair_text(p1)}}}{{{c}}} and {{{_pair_text(p2)}}}{{{b}}}",
            )
        )
    for c in VALUES:
        pair = tuple(v for v in VALUES if v != c)
        out.append(
            ClassDescriptor(
                f"Y{c}", f"Y_{c}", "intersection", False, "Y2", _swap(2, c),
                components=(
                    ("set", frozenset(pair)),
                    ("partition", pair),
                    ("matrix", central_relation(c), f"CENTRAL({c})"),
                ),
                cost=1,
                definition=f"preserves {{{_pair_text(pair)}}}, partition {{{_pair_text(pair)}}}{{{c}}} and CENTRAL({c})",
            )
        )
    for pair in ((0, 1), (0, 2), (1, 2)):
        for post in SIGMA_PAIR_CLASSES:
            flip = post == "D"
            base_post = "K" if post in ("K", "D") else post
            out.append(
                ClassDescriptor(
                    sigma_pair_id(pair, post), f"Σ^{{{_pair_text(pair)}}}_{post}", "sigma_pair",
                    False, sigma_pair_id((0, 1), base_post), _pair_perm(pair, flip),
                    pair=pair, post_class=post, cost=3,
                    definition=f"preserves {{{_pair_text(pair)}}} with Boolean restriction in {post}",
                )
            )
    for pair in ((0, 1), (0, 2), (1, 2)):
        for post in SIGMA_PARTITION_CLASSES:
            base_post = {"T1": "T0", "D": "K"}.get(post, post)
            flip = post in ("T1", "D")
            out.append(
                ClassDescriptor(
                    sigma_partition_id(pair, post),
                    f"Σ^{{{_pair_text(pair)}}}{{{_other(pair)}}}_{post}",
                    "sigma_partition",
                    post in ("L", "K", "D"),
                    sigma_partition_id((0, 1), base_post),
                    _pair_perm(pair, flip),
                    pair=pair, post_class=post, cost=3,
                    definition=(
                        f"preserves partition {{{_pair_text(pair)}}}{{{_other(pair)}}}, "
                        f"every block restriction in {post}"
                    ),
                )
            )
    for i, chain in KM_ORDERS.items():
        order = linear_order(chain)
        text = "<".join(map(str, chain))
        out.append(
            ClassDescriptor(
                f"KM{i}", f"KM_{i}", "pol", True, "KM1", _perm(chain),
                matrix=rho_prime(order), relation_name=f"MIN_GRAPH[{text}]", cost=4,
                definition=f"preserves the graph of min for {text}",
            )
        )
    for i, chain in KM_ORDERS.items():
        order = linear_order(chain)
        text = "<".join(map(str, chain))
        out.append(
            ClassDescriptor(
                f"DM{i}", f"DM_{i}", "pol", True, "KM1", _perm(chain[::-1]),
                matrix=rho(order), relation_name=f"MAX_GRAPH[{text}]", cost=4,
                definition=f"preserves the graph of max for {text}",
            )
        )
    for c in VALUES:
        out.append(
            ClassDescriptor(
                f"Rp{c}", f"R'_{c}", "pol", True, "Rp2", _swap(2, c),
                matrix=rho(top_order(c)), relation_name=f"A1[top {c}]", cost=4,
                definition=f"preserves rho for the order with {c} above two incomparable elements",
            )
        )
    for c in VALUES:
        out.append(
            ClassDescriptor(
                f"Qp{c}", f"Q'_{c}", "pol", True, "Qp2", _swap(2, c),
                matrix=rho_prime(top_order(c)), relation_name=f"A2[top {c}]", cost=4,
                definition=f"preserves rho' for the order with {c} above two incomparable elements",
            )
        )
    for c in VALUES:
        out.append(
            ClassDescriptor(
                f"Fp{c}", f"F'_{c}", "pol", True, "Fp2", _swap(2, c),
                matrix=matrix_dual(A3, _swap(2, c)), relation_name=f"A3[{c}]", cost=4,
                definition=f"preserves A3 with 2 renamed to {c}",
            )
        )
    out.append(
        ClassDescriptor(
            "N", "𝔑", "square", True, "N", ID_PERM, cost=5,
            definition="selects no vertex of any square (quasilinear)",
        )
    )
    return tuple(out)


REGISTRY: tuple[ClassDescriptor, ...] = _build()
BY_ID: dict[str, ClassDescriptor] = {d.id: d for d in REGISTRY}
CLASS_IDS: tuple[str, ...] = tuple(BY_ID)

if len(CLASS_IDS) != 54:
    raise AssertionError(f"registry holds {len(CLASS_IDS)} classes, expected 54")


def normalize_class_id(name: str) -> str:
    """Accept the canonical ids and a few spellings such as ``SigmaPartition({0,1}{2},T0)``."""
    name = name.strip()
    if name in BY_ID:
        return name
    m = re.fullmatch(r"Sigma(Pair|Partition)\((.*),\s*(\w+)\)", name)
    if m:
        kind, body, post = m.groups()
        ds = [int(ch) for ch in body if ch in "012"]
        if kind == "Pair" and len(ds) == 2:
            cid = sigma_pair_id(tuple(sorted(ds)), post)
        elif kind == "Partition" and len(ds) == 3:
            cid = sigma_partition_id(tuple(sorted(ds[:2])), post)
        else:
            cid = name
        if cid in BY_ID:
            return cid
    alias = {"T0": "T0_0", "T1": "T1_0", "T2": "T2_0"}
    if name in alias:
        return alias[name]
    raise UnknownClass(f"unknown class id {name!r}")


def descriptor(cid: str) -> ClassDescriptor:
    return BY_ID[normalize_class_id(cid)]


def violation(f: Function, cid: str) -> Violation | None:
    return descriptor(cid).violation(f)


def member(f: Function, cid: str) -> bool:
    return descriptor(cid).violation(f) is None


def confirms(f: Function, cid: str, v: Violation) -> bool:
    """Re-derive a violation from its own data without trusting the search that found it."""
    d = v.detail
    desc = descriptor(cid)
    try:
        if v.test == "matrix":
            rel = _relation_for(desc, d["relation"])
            cols = [tuple(c) for c in d["columns"]]
            if any(c not in rel.column_set for c in cols):
                return False
            out = apply_rowwise(f, cols)
            return out == tuple(d["result"]) and out not in rel.column_set
        if v.test == "set":
            subset = set(d["subset"])
            if not _uses_set(desc, subset):
                return False
            args = tuple(d["args"])
            return all(a in subset for a in args) and f.table[index_of(args)] not in subset
        if v.test == "partition":
            pair = tuple(d["pair"])
            c = _other(pair)
            t1, t2 = tuple(d["first"]), tuple(d["second"])
            same_block = len(t1) == len(t2) == f.arity and all((x == c) == (y == c) for x, y in zip(t1, t2))
            v1, v2 = f.table[index_of(t1)], f.table[index_of(t2)]
            return same_block and (v1 == c) != (v2 == c)
        if v.test == "boolean":
            pair = tuple(d["pair"])
            if d["block"] is None:
                g = B.boolean_restriction(f, pair)
            else:
                g = B.block_restriction(f, pair, d["block"])
                if g is B.CONSTANT_C:
                    return False
            return g.literal == d["restriction"] and d["post_class"] == desc.post_class and not B.post_member(
                g, desc.post_class
            )
        if v.test == "square":
            if desc.kind != "square":
                return False
            square = [tuple(s) for s in d["square"]]
            if not _is_square(square):
                return False
            vals = [f.table[index_of(s)] for s in square]
            k = d["selected"]
            return vals.count(vals[k]) == 1
        if v.test == "linear":
            return desc.kind == "linear" and _linear_violation(f) is not None and (
                f.table[index_of(tuple(d["args"]))] == d["value"] != d["expected"]
            )
    except (LogicError, KeyError, IndexError, ValueError):
        return False
    return False


def _relation_for(desc: ClassDescriptor, name: str) -> Matrix:
    if desc.kind == "pol" and desc.relation_name == name:
        return desc.matrix
    for comp in desc.components:
        if comp[0] == "matrix" and comp[2] == name:
            return comp[1]
    raise KeyError(name)


def _uses_set(desc: ClassDescriptor, subset: set[int]) -> bool:
    if desc.kind == "sigma_pair":
        return set(desc.pair) == subset
    return any(comp[0] == "set" and set(comp[1]) == subset for comp in desc.components)


def _is_square(square: list[tuple[int, ...]]) -> bool:
    if len(set(square)) != 4 or len({len(s) for s in square}) != 1:
        return False
    n = len(square[0])
    varying = [p for p in range(n) if len({s[p] for s in square}) > 1]
    if len(varying) != 2:
        return False
    for p in varying:
        col = [s[p] for s in square]
        if sorted(col.count(v) for v in set(col)) != [2, 2]:
            return False
    i, j = varying
    return len({(s[i], s[j]) for s in square}) == 4


# -- fragments and orbits ----------------------------------------------------


@cache
def unary_fragment(cid: str) -> tuple[Function, ...]:
    d = descriptor(cid)
    return tuple(f for f in all_functions(1) if d.contains(f))


@cache
def binary_fragment(cid: str) -> tuple[Function, ...]:
    d = descriptor(cid)
    return tuple(f for f in all_functions(2) if d.contains(f))


@cache
def fingerprint(cid: str) -> frozenset[Function]:
    """All members of arity at most 2."""
    return frozenset(unary_fragment(cid)) | frozenset(binary_fragment(cid))


def contains_constants(cid: str) -> bool:
    d = descriptor(cid)
    return all(d.contains(constant(c)) for c in VALUES)


def _perm_rank(p: Permutation) -> tuple[int, tuple[int, ...]]:
    return (sum(1 for v in VALUES if p(v) != v), p.images)


ORDERED_PERMUTATIONS = tuple(sorted(ALL_PERMUTATIONS, key=_perm_rank))


# Binary functions whose duality orbits, together with all unary functions,
# give the 54 classes pairwise distinct membership patterns.
ORBIT_PROBES = ("000011012", "012112222")


@cache
def _probe_set() -> tuple[Function, ...]:
    probes = set(all_functions(1))
    for lit in ORBIT_PROBES:
        f = Function(2, tuple(int(c) for c in lit))
        probes |= {dual_transform(f, pi) for pi in ALL_PERMUTATIONS}
    return tuple(sorted(probes))


@cache
def _signature(cid: str) -> frozenset[Function]:
    d = descriptor(cid)
    return frozenset(f for f in _probe_set() if d.contains(f))


@cache
def _signature_index() -> dict[frozenset[Function], str]:
    index = {_signature(c): c for c in CLASS_IDS}
    if len(index) != len(CLASS_IDS):
        raise AssertionError("probe set does not separate the classes")
    return index


def duality_orbit(cid: str) -> tuple[tuple[str, Permutation], ...]:
    """Classes ``{f^pi : f in cid}`` for the six permutations.

    Images are matched on a duality-closed probe set that separates all
    classes, so the match is exact whenever membership commutes with duality
    (compared against the full arity-2 fragments in the test-suite).
    """
    cid = normalize_class_id(cid)
    index = _signature_index()
    members = _signature(cid)
    found: dict[str, Permutation] = {}
    for pi in ORDERED_PERMUTATIONS:
        image = frozenset(dual_transform(f, pi) for f in members)
        if image not in index:
            raise AssertionError(f"dual of {cid} under {pi} matches no class")
        found.setdefault(index[image], pi)
    return tuple(sorted(found.items(), key=lambda kv: CLASS_IDS.index(kv[0])))


def evaluation_order() -> list[ClassDescriptor]:
    """Cheap tests first so incomplete systems exit early."""
    return sorted(REGISTRY, key=lambda d: d.cost)


def all_constants_classes() -> list[str]:
    return [d.id for d in REGISTRY if d.contains_all_constants]
