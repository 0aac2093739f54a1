"""Counts of unary closed classes (monoids with identity) by constant content, with and without duality."""

import itertools
import sys

from implicit3.closure import enumerate_unary_monoids


def main() -> int:
    print("required\tforbidden\tcount\tup_to_duality")
    for k in range(4):
        for req in itertools.combinations(range(3), k):
            forb = tuple(c for c in range(3) if c not in req)
            full = enumerate_unary_monoids(req, forb)
            mod = enumerate_unary_monoids(req, forb, mod_duality=True)
            print(f"{''.join(map(str, req)) or '-'}\t{''.join(map(str, forb)) or '-'}\t{len(full)}\t{len(mod)}")
    print(f"all\t-\t{len(enumerate_unary_monoids())}\t{len(enumerate_unary_monoids(mod_duality=True))}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
