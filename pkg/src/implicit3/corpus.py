"""Reference data: generating systems, unary class lists, composition identities, unary bases.

Literals follow the core convention (unary ``f(0)f(1)f(2)``; binary row-major
with the row given by the first argument).
"""

from __future__ import annotations

from dataclasses import dataclass

# Systems whose closures are the minimal implicitly complete classes (up to duality).
MINIMAL_COMPLETE_SYSTEMS: dict[str, tuple[str, ...]] = {
    "S1": ("000010000", "011111111", "000", "111"),
    "S2": ("000011011", "011111111", "001", "000", "111"),
    "S3": ("002012222", "012112222", "001", "000", "111"),
    "S4": ("002012222", "012112222", "000002002", "000", "111"),
    "S5": ("002012222", "012112222", "220", "000", "111", "222"),
    "S6": ("002012002", "012112002", "220"),
}

# Duals of the systems above that appear explicitly, with the permutation used.
DUAL_SYSTEMS: dict[str, tuple[str, str, tuple[str, ...]]] = {
    "S1^(12)": ("S1", "021", ("022222222", "000000002", "000", "222")),
    "S2^(021)": ("S2", "201", ("002002222", "000000002", "000", "202")),
}

# Unary parts of four classes, as displayed.
UNARY_LISTS: dict[str, tuple[str, ...]] = {
    "Fp2": ("000", "002", "012", "102", "111", "112", "222"),
    "W1": ("000", "011", "012", "100", "111", "112", "221", "222"),
    "Y2": ("000", "002", "012", "102", "111", "112"),
    "SigmaPartition(01|2,T0)": ("000", "002", "010", "012", "220", "222"),
}

# The weak-completeness list as printed (28 classes).
PRINTED_WEAK_LIST: tuple[str, ...] = (
    "W0", "W1", "W2",
    "SigmaPartition(01|2,L)", "SigmaPartition(01|2,K)", "SigmaPartition(01|2,D)",
    "SigmaPartition(02|1,L)", "SigmaPartition(02|1,K)", "SigmaPartition(02|1,D)",
    "SigmaPartition(12|0,L)", "SigmaPartition(12|0,K)", "SigmaPartition(12|0,D)",
    "KM1", "KM2", "KM3", "DM1", "DM2", "DM3",
    "Rp0", "Rp1", "Rp2", "Qp0", "Qp1", "Qp2",
    "Fp0", "Fp1", "Fp2",
    "N",
)

# Classes by the number of constants they contain, as tallied class by class.
CLASSES_BY_CONSTANT_COUNT: dict[int, tuple[str, ...]] = {
    0: ("S", "SigmaPair(01,S)", "SigmaPair(02,S)", "SigmaPair(12,S)"),
    1: ("T0_0", "T1_0", "T2_0"),
    2: (
        "SigmaPair(01,K)", "SigmaPair(02,K)", "SigmaPair(12,K)",
        "SigmaPair(01,D)", "SigmaPair(02,D)", "SigmaPair(12,D)",
        "SigmaPair(01,L)", "SigmaPair(02,L)", "SigmaPair(12,L)",
        "SigmaPartition(01|2,T0)", "SigmaPartition(02|1,T0)", "SigmaPartition(12|0,T0)",
        "SigmaPartition(01|2,T1)", "SigmaPartition(02|1,T1)", "SigmaPartition(12|0,T1)",
        "Y0", "Y1", "Y2",
    ),
}


@dataclass(frozen=True)
class Identity:
    """``outer(inner(x)) = result`` for unary literals, or a binary superposition."""

    outer: str
    inners: tuple[str, ...]
    result: str
    context: str


COMPOSITION_CORPUS: tuple[Identity, ...] = (
    Identity("020", ("112",), "220", "F'2, escaping 112 gives 220"),
    Identity("200", ("002",), "220", "F'2, building 220 from 200"),
    Identity("102", ("221",), "220", "F'2, swapping the low pair of 221"),
    Identity("102", ("122",), "022", "F'2, swapping the low pair of 122"),
    Identity("202", ("102",), "022", "F'2, 202 after the swap"),
    Identity("102", ("212",), "202", "F'2, swapping the low pair of 212"),
    Identity("102", ("110",), "001", "F'2, swapping the low pair of 110"),
    Identity("010", ("112",), "110", "F'2 and N, collapsing 112"),
    Identity("011", ("002",), "001", "F'2 and Y2, collapsing 002"),
    Identity("102", ("100",), "011", "W1, swapping values of 100"),
    Identity("102", ("101",), "010", "W1, swapping values of 101"),
    Identity("220", ("020",), "202", "Sigma T0, 220 after 020"),
    Identity("022", ("010",), "020", "Sigma T0, 022 after 010"),
    Identity("200", ("200",), "022", "Sigma T0, squaring 200"),
    Identity("022", ("110",), "220", "N, 022 after 110"),
    Identity("220", ("220",), "002", "N, squaring 220"),
    Identity("002002222", ("022", "022"), "022222222", "binary with unary inner functions"),
    Identity("000011011", ("010", "010"), "000010000", "S2 part collapsed to the S1 part"),
)

# (function, position, constant, result): fixing one argument of a binary function.
SUBSTITUTION_CORPUS: tuple[tuple[str, int, int, str], ...] = (
    ("002002000", 2, 2, "220"),
)


@dataclass(frozen=True)
class BaseFamily:
    """Displayed unary bases, transcribed as printed; each is completed by ``added``."""

    name: str
    required: tuple[int, ...]
    forbidden: tuple[int, ...]
    added: tuple[str, ...]
    lists: tuple[tuple[str, tuple[str, ...]], ...]


NO_CONSTANTS = BaseFamily(
    "no constants",
    (),
    (0, 1, 2),
    ("012",),
    (
        ("1.1", ("012",)),
        ("1.2", ("012", "021")),
        ("1.3", ("010", "012")),
        ("1.4", ("010", "011", "012")),
        ("1.5", ("010", "012", "212")),
        ("1.5'", ("002", "012", "102", "112")),
        ("2.1", ("012", "120", "201")),
        ("3.1", ("010", "011", "012", "100", "101", "102")),
        ("3.2", ("010", "011", "012", "100", "101")),
        ("3.3", ("010", "012", "101")),
        ("4.1", ("012", "021", "102", "120", "201", "210")),
        ("5.1", ("002", "012", "112", "220", "221")),
        ("5.2", ("002", "012", "102", "112", "220", "221")),
    ),
)

TWO_CONSTANTS = BaseFamily(
    "constants 0 and 1",
    (0, 1),
    (2,),
    ("000", "111", "012"),
    (
        ("1.1", ("010", "011")),
        ("1.2", ("001", "010", "011")),
        ("1.3", ("001", "002", "010", "011")),
        ("1.4", ("001", "010", "011", "110")),
        ("1.5", ("001", "002", "010", "011", "110")),
        ("1.6", ("001", "002", "010", "011", "110", "112")),
        ("1.7", ("010", "011", "100", "101")),
        ("1.8", ("001", "010", "011", "100", "101", "110")),
        ("1.9", ("001", "002", "010", "011", "100", "101", "110")),
        ("1.10", ("001", "002", "010", "011", "100", "101", "110", "112")),
        ("1.11", ("010", "011", "100", "101", "102")),
        ("1.12", ("001", "010", "011", "100", "101", "102", "110")),
        ("1.13", ("001", "002", "010", "011", "100", "101", "102", "110", "112")),
        ("2.1", ("001", "010")),
        ("2.2", ("001", "002", "010")),
        ("2.3", ("001", "010", "101", "110")),
        ("2.4", ("001", "002", "010", "101", "110")),
        ("2.5", ("001", "010", "101", "110", "112")),
        ("2.6", ("001", "002", "010", "101", "110", "112")),
        ("3.1", ("010", "110")),
        ("3.2", ("010", "110", "112")),
        ("3.3", ("001", "010", "110")),
        ("3.4", ("002", "010", "110")),
        ("3.5", ("001", "002", "010", "110")),
        ("3.6", ("001", "010", "110", "112")),
        ("3.7", ("002", "010", "110", "112")),
        ("3.8", ("001", "002", "010", "110", "112")),
        ("4.1", ("001",)),
        ("4.2", ("001", "002")),
        ("4.3", ("001", "110")),
        ("4.4", ("001", "112")),
        ("4.5", ("001", "110")),
        ("4.6", ("001", "002", "110")),
        ("4.7", ("001", "002", "110")),
        ("4.8", ("001", "002", "112")),
        ("4.9", ("001", "002", "110", "112")),
        ("4.10", ("001", "102", "110")),
        ("4.11", ("001", "002", "102", "110", "112")),
        ("5.1", ()),
        ("5.2", ("002",)),
        ("5.3", ("010",)),
        ("5.4", ("010", "002")),
        ("6.1", ("102",)),
        ("6.2", ("002", "112")),
        ("6.3", ("002", "102", "112")),
    ),
)

U_TYPE = BaseFamily(
    "all constants, partition type",
    (0, 1, 2),
    (),
    ("000", "111", "222", "012"),
    (
        ("6.2+2", ("000", "012", "111", "002", "112", "222")),
        ("6.2+2+220,221", ("000", "012", "111", "002", "112", "220", "221", "222")),
        ("6.3+2", ("000", "012", "111", "002", "102", "112", "222")),
        ("6.3+2+220,221", ("000", "012", "111", "002", "102", "112", "220", "221", "222")),
    ),
)

M_TYPE = BaseFamily(
    "all constants, monotone type",
    (0, 1, 2),
    (),
    ("000", "111", "222", "012"),
    (
        ("M.1", ("000", "001", "011", "012", "111", "112", "122", "222")),
        ("M.2", ("000", "002", "012", "022", "111", "112", "122", "222")),
        ("M.3", ("000", "001", "002", "011", "012", "022", "111", "112", "122", "222")),
    ),
)

T1_TYPE = BaseFamily(
    "all constants, central type",
    (0, 1, 2),
    (),
    ("000", "111", "222", "012"),
    (
        ("1.1", ("022", "212", "122", "202")),
        ("1.2", ("022", "212", "122", "202", "102")),
        ("1.3", ("022", "212", "122", "211", "202", "020", "200", "121")),
        ("1.4", ("022", "212", "122", "211", "202", "020", "200", "121", "102")),
        ("2.1", ("002", "022", "112", "200", "211", "220", "221")),
        ("2.2", ("002", "022", "112", "200", "211", "220", "221", "102")),
        ("3.1", ("002", "022", "112", "212", "122", "202")),
        ("3.2", ("002", "022", "112", "212", "122", "202", "102")),
        ("3.3", ("002", "020", "112", "212", "122", "202", "020", "121", "200", "211", "220", "221")),
        ("3.4", ("002", "022", "112", "212", "122", "202", "020", "121", "200", "211", "220", "221", "102")),
    ),
)

LINEAR_TYPE = BaseFamily(
    "all constants, linear type",
    (0, 1, 2),
    (),
    ("000", "111", "222", "012"),
    (
        ("L.1", ("000", "012", "111", "120", "202", "222")),
        ("L.2", ("000", "012", "021", "102", "111", "120", "202", "210", "222")),
    ),
)

BASE_FAMILIES: tuple[BaseFamily, ...] = (NO_CONSTANTS, TWO_CONSTANTS, U_TYPE, M_TYPE, T1_TYPE, LINEAR_TYPE)

# Non-expressibility kernels: (target, class) pairs that no binary-equation system over the class can express.
NONEXPRESSIBLE_KERNELS: tuple[tuple[str, str], ...] = (
    ("202", "Fp2"),
    ("002", "W1"),
    ("010", "Y2"),
)

# Single escaping unary functions from the case analyses: adding one to the class
# yields, at arity 2, a system equal to a minimal complete system up to duality.
ESCAPE_CASES: tuple[tuple[str, str], ...] = (
    ("Y2", "220"),
)
