"""Table of the 54 classes: fragment sizes, constants, duality orbit and arity-2 closure size."""

import argparse
import csv
import sys

from implicit3.classes import REGISTRY, binary_fragment, duality_orbit, unary_fragment
from implicit3.verify import closure_stays_inside


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--closure", action="store_true", help="also compute the arity-2 closure of each fragment (slow)")
    args = parser.parse_args(argv)
    out = csv.writer(sys.stdout, delimiter="\t", lineterminator="\n")
    header = ["class", "kind", "unary", "binary", "all_constants", "orbit_size"]
    out.writerow(header + (["closure", "closed"] if args.closure else []))
    for d in REGISTRY:
        row = [d.id, d.kind, len(unary_fragment(d.id)), len(binary_fragment(d.id)),
               int(d.contains_all_constants), len(duality_orbit(d.id))]
        if args.closure:
            inside, size, _ = closure_stays_inside(d.id)
            row += [size, int(inside)]
        out.writerow(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
