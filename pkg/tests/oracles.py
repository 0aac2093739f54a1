"""Independent reference implementations used only by the tests.

They work directly on tuples and share no code with the package, so the
package's fast paths are checked against something written differently.
"""

import itertools


def table_index(args):
    idx = 0
    for a in args:
        idx = idx * 3 + a
    return idx


def points(n):
    return list(itertools.product(range(3), repeat=n))


def compose_tables(outer, inners, m):
    """outer(inner_1(y), ..., inner_k(y)) on m variables, all as raw tables."""
    return tuple(outer[table_index([g[table_index(y)] for g in inners])] for y in points(m))


def projections(m):
    return [tuple(y[i] for y in points(m)) for i in range(m)]


def naive_closure(generators, m):
    """m-ary closure by repeated full rounds over all argument tuples."""
    members = set(projections(m))
    gens = [(arity, tuple(t)) for arity, t in generators]
    while True:
        grown = set(members)
        for arity, t in gens:
            for args in itertools.product(sorted(members), repeat=arity):
                grown.add(compose_tables(t, args, m))
        if grown == members:
            return members
        members = grown


def unary_compose(g, h):
    return tuple(g[h[x]] for x in range(3))


def unary_close(seed):
    s = set(seed) | {(0, 1, 2)}
    while True:
        new = {unary_compose(g, h) for g in s for h in s} - s
        if not new:
            return frozenset(s)
        s |= new


def backtrack_monoids():
    """Every composition-closed set of unary maps containing the identity.

    Decides each of the 27 maps in order: include it (and close) or exclude
    it; a branch dies when closure pulls in an excluded map.
    """
    maps = [tuple(t) for t in itertools.product(range(3), repeat=3)]
    found = set()

    def go(i, current, excluded):
        if i == len(maps):
            found.add(current)
            return
        f = maps[i]
        if f in current:
            go(i + 1, current, excluded)
            return
        go(i + 1, current, excluded | {f})
        grown = unary_close(current | {f})
        if not grown & excluded:
            go(i + 1, grown, excluded)

    go(0, unary_close(()), frozenset())
    return found


def brute_preserves(table, arity, columns):
    cols = [tuple(c) for c in columns]
    allowed = set(cols)
    rows = len(cols[0])
    for choice in itertools.product(cols, repeat=arity):
        image = tuple(table[table_index([c[r] for c in choice])] for r in range(rows))
        if image not in allowed:
            return False
    return True


def linear_tables(n):
    """All tables of a0 + a1 x1 + ... + an xn mod 3."""
    out = set()
    for coeffs in itertools.product(range(3), repeat=n + 1):
        out.add(tuple((coeffs[0] + sum(c * x for c, x in zip(coeffs[1:], p))) % 3 for p in points(n)))
    return out


def selects_no_vertex_binary(table):
    """Square test for binary functions: no square has a value occurring exactly once."""
    for a1, a2 in itertools.combinations(range(3), 2):
        for b1, b2 in itertools.combinations(range(3), 2):
            vals = [table[table_index(p)] for p in ((a1, b1), (a1, b2), (a2, b1), (a2, b2))]
            if any(vals.count(v) == 1 for v in vals):
                return False
    return True
