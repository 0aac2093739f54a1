"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines as they
happen; they are also collected into the terminal summary.  Criteria that do
not hold are kept as real failing assertions under ``xfail(strict=True)``.
"""

import time

import pytest

from implicit3 import corpus
from implicit3.classes import CLASS_IDS, all_constants_classes, duality_orbit, member, unary_fragment
from implicit3.closure import closure_fragment, enumerate_unary_monoids
from implicit3.core import IDENTITY, System, all_functions, constant, parse_literal, projection
from implicit3.criterion import check_implicit_completeness, validate_verdict
from implicit3.verify import (
    INAPPLICABLE,
    VERIFIED,
    base_list_diagnostics,
    bounded_implicit_oracle,
    check_base_lists,
    check_closure_property,
    check_orbits,
    check_separation,
    kernel_fp2,
    kernel_w1,
    kernel_y2,
    run_paper_suite,
    umatrix_crosscheck,
)
from oracles import compose_tables, naive_closure, unary_compose

LINES: list[str] = []
WEBB = "120220000"


def gate(number, claim, ok, started, limit=None, detail=""):
    elapsed = time.perf_counter() - started
    in_time = limit is None or elapsed <= limit
    status = "PASS" if ok and in_time else "FAIL"
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"{status} [{number:>2}] {claim}: {elapsed:.2f}s{budget}"
    if detail:
        line += f" | {detail}"
    LINES.append(line)
    print(line)
    assert ok, detail or claim
    assert in_time, f"took {elapsed:.2f}s, limit {limit}s"


def test_01_registry_integrity():
    t = time.perf_counter()
    proj = [projection(1, 2), projection(2, 2)]
    missing = [c for c in CLASS_IDS if not (member(IDENTITY, c) and all(member(p, c) for p in proj))]
    orbits = check_orbits()
    total = sum(len(o) for o in {frozenset(c for c, _ in duality_orbit(cid)) for cid in CLASS_IDS})
    ok = len(CLASS_IDS) == 54 == len(set(CLASS_IDS)) and not missing and orbits.status == VERIFIED and total == 54
    gate(1, "registry of 54 classes, identity and projections, orbit sizes", ok, t, 10, f"orbit sum {total}")


def test_02_unary_fragments():
    t = time.perf_counter()
    sizes = {"Fp2": 7, "W1": 8, "Y2": 6, "SigmaPartition(01|2,T0)": 6}
    bad = {}
    for cid, n in sizes.items():
        got = [f.literal for f in unary_fragment(cid)]
        if got != sorted(corpus.UNARY_LISTS[cid]) or len(got) != n:
            bad[cid] = got
    gate(2, "unary fragments match the displayed lists", not bad, t, detail=str(bad) if bad else "")


@pytest.mark.xfail(strict=True, reason="the linear class also contains all constants: 29 classes, not 28")
def test_03_constants_census():
    t = time.perf_counter()
    # independent count straight from membership of the three constants
    computed = {c for c in CLASS_IDS if all(member(constant(v), c) for v in range(3))}
    assert computed == set(all_constants_classes())
    printed = set(corpus.PRINTED_WEAK_LIST)
    ok = len(computed) == 28 and computed == printed
    detail = f"{len(computed)} classes; extra {sorted(computed - printed)}, missing {sorted(printed - computed)}"
    gate(3, "exactly 28 classes contain all constants and equal the printed list", ok, t, detail=detail)


def verdicts(systems):
    out = {}
    for name, lits in systems.items():
        s = System.of(name, *lits)
        v = check_implicit_completeness(s)
        out[name] = (v, validate_verdict(s, v))
    return out


def test_04_completeness_fixtures():
    t = time.perf_counter()
    complete = {k: v for k, v in corpus.MINIMAL_COMPLETE_SYSTEMS.items() if k != "S6"}
    complete.update({k: lits for k, (_, _, lits) in corpus.DUAL_SYSTEMS.items()})
    complete["webb"] = (WEBB,)
    incomplete = {"x+1": ("120",), "identity": ("012",)}
    for cid in CLASS_IDS:
        incomplete[f"unary part of {cid}"] = tuple(f.literal for f in unary_fragment(cid))
    bad = [n for n, (v, sound) in verdicts(complete).items() if not (v.complete and sound)]
    bad += [n for n, (v, sound) in verdicts(incomplete).items() if v.complete or not sound]
    gate(4, "S1-S5, displayed duals and the Webb function complete; small systems incomplete", not bad, t, 30, str(bad) if bad else "")


@pytest.mark.xfail(strict=True, reason="S6 as tabulated preserves {0,2} with an S/L restriction and the partition 01|2")
def test_04_system_s6():
    t = time.perf_counter()
    (v, sound), = verdicts({"S6": corpus.MINIMAL_COMPLETE_SYSTEMS["S6"]}).values()
    assert sound
    gate(4, "S6 complete", v.complete, t, 30, f"contained in {', '.join(v.containing_classes)}")


def test_05_closure_property():
    t = time.perf_counter()
    r = check_closure_property()
    gate(5, "arity-2 closure of every class fragment stays inside", r.status == VERIFIED, t, 120, str(r.evidence.get("counterexample", "")))


@pytest.mark.xfail(strict=True, reason="self-dual Boolean functions of arity <= 2 are linear, so S-type pair classes need arity 3")
def test_06_pairwise_separation():
    t = time.perf_counter()
    r = check_separation()
    witnesses = r.evidence.get("ternary_witnesses", {})
    assert all(witnesses.values()), witnesses
    detail = "; ".join(f"{pair} separated at arity 3 by {lit}" for pair, lit in witnesses.items())
    gate(6, "every ordered pair of classes separated at arity <= 2", r.status == VERIFIED, t, 60, detail)


def test_07_pol_base():
    t = time.perf_counter()
    monoids = enumerate_unary_monoids()
    bad = []
    for m in monoids:
        tables = {f.table for f in m.members}
        # a unary g preserves the columns of M iff g composed after each member stays in M
        preserving = {g.table for g in all_functions(1) if all(unary_compose(g.table, f) in tables for f in tables)}
        if preserving != tables:
            bad.append(m.literals)
    ok = len(monoids) == 699 and not bad
    gate(7, "unary part of Pol of each unary monoid is the monoid", ok, t, 30, f"{len(monoids)} monoids")


def test_08_base_lists():
    t = time.perf_counter()
    reports = [r for r in check_base_lists() if r.status != INAPPLICABLE]
    bad = [r.evidence["counterexample"] for r in reports if r.status != VERIFIED]
    notes = "; ".join(f"{d['list']} not closed as printed, closure adds {','.join(d['missing'])}" for d in base_list_diagnostics())
    gate(8, "displayed bases appear among enumerated unary classes", not bad, t, detail=str(bad) if bad else notes)


def test_09_kernels_and_oracle():
    t = time.perf_counter()
    kernels = [kernel_w1(), kernel_fp2(), kernel_y2()]
    blocked = [(lit, cid) for lit, cid in (("202", "Fp2"), ("002", "W1"), ("010", "Y2"))
               if bounded_implicit_oracle(parse_literal(lit), cid).status != "NotExpressibleWithinShape"]
    ident = [cid for cid in CLASS_IDS if bounded_implicit_oracle(IDENTITY, cid).status != "Expressible"]
    ok = all(r.status == VERIFIED for r in kernels) and not blocked and not ident
    gate(9, "structural kernels hold; oracle verdicts as expected", ok, t, 60, f"{blocked} {ident}" if not ok else "")


def test_10_composition_corpus():
    t = time.perf_counter()
    reports = run_paper_suite("composition_corpus")
    u = [tuple(int(c) for c in s) for s in ("020", "112", "200", "002", "102", "221", "122")]
    h = tuple(int(c) for c in "002002000")
    direct = [
        unary_compose(u[0], u[1]) == (2, 2, 0),
        unary_compose(u[2], u[3]) == (2, 2, 0),
        unary_compose(u[4], u[5]) == (2, 2, 0),
        unary_compose(u[4], u[6]) == (0, 2, 2),
        compose_tables(h, [(0, 1, 2), (2, 2, 2)], 1) == (2, 2, 0),
    ]
    ok = len(reports) >= 12 and all(r.status == VERIFIED for r in reports) and all(direct)
    gate(10, "composition identities recompute bit-exactly", ok, t, detail=f"{len(reports)} identities")


def test_11_umatrix():
    t = time.perf_counter()
    pairs = ((0, 1), (0, 2), (1, 2))
    bad = [(p, q) for p in ("K", "D", "L") for q in pairs if umatrix_crosscheck(p, q).status != VERIFIED]
    bad += [(p, q) for p in ("T0", "T1") for q in pairs if umatrix_crosscheck(p, q).status != INAPPLICABLE]
    gate(11, "K, D, L verified on all pairs; T0, T1 inapplicable", not bad, t, 60, str(bad) if bad else "")


def test_12_nonlin():
    t = time.perf_counter()
    frag = closure_fragment(["120", "001"], 1)
    elapsed_ok = time.perf_counter() - t
    need = {f.table for f in all_functions(1) if len(set(f.table)) < 3}
    got = {f.table for f in frag}
    ok = len(need) == 21 and need <= got and got == naive_closure([(1, (1, 2, 0)), (1, (0, 0, 1))], 1)
    gate(12, "120 and 001 generate all 21 non-surjective unary functions", ok, t, 1, f"closure {elapsed_ok:.3f}s")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
