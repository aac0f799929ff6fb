"""Gaussian normal basis multipliers for GF(2^k).

Basis construction, multiplication matrices, reference arithmetic, and
gate-level synthesis of bit-parallel multipliers (naive, ONB type 1/2
sharing, and odd-type matrix decomposition).
"""

from gnbmul.gnb_core import (
    GnbCheck,
    GnbNotFoundError,
    GnbParams,
    build_params,
    check_gnb,
    find_lambda,
    multiplicative_order,
    smallest_type,
)
from gnbmul.matrix import (
    MultMatrix,
    antidiagonal_usage,
    count_ones,
    matrix_for_bit,
    mult_matrix_c0,
)
from gnbmul.arith import Element, gf_add, gf_mult, gf_square
from gnbmul.netlist import GateMetrics, Netlist, export_text, import_text, metrics, simulate
from gnbmul.synth import (
    METHODS,
    synth_naive,
    synth_odd_gnb,
    synth_onb_type1,
    synth_onb_type2,
    synthesize,
)
from gnbmul.analysis import ComparisonRow, ScanRecord, comparison_table, scan

__version__ = "0.1.0"

__all__ = [
    "ComparisonRow",
    "Element",
    "GateMetrics",
    "GnbCheck",
    "GnbNotFoundError",
    "GnbParams",
    "METHODS",
    "MultMatrix",
    "Netlist",
    "ScanRecord",
    "antidiagonal_usage",
    "build_params",
    "check_gnb",
    "comparison_table",
    "count_ones",
    "export_text",
    "find_lambda",
    "gf_add",
    "gf_mult",
    "gf_square",
    "import_text",
    "matrix_for_bit",
    "metrics",
    "mult_matrix_c0",
    "multiplicative_order",
    "scan",
    "simulate",
    "smallest_type",
    "synth_naive",
    "synth_odd_gnb",
    "synth_onb_type1",
    "synth_onb_type2",
    "synthesize",
]
