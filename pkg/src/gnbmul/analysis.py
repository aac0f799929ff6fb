"""Closed-form cost comparison and the survey of which k use which basis type."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from gnbmul.gnb_core import DEFAULT_T_MAX, build_params, smallest_type
from gnbmul.synth import field_c_n

CLASSES = ("onb-type1", "onb-type2", "even-gnb", "odd-gnb", "none")


def _clog2(n: int) -> int:
    return (n - 1).bit_length()


@dataclass(frozen=True)
class ComparisonRow:
    method: str
    and_count: int
    xor_count: int
    and_levels: int
    xor_levels: int

    def delay_str(self) -> str:
        return f"T_A + {self.xor_levels}T_X"


def comparison_table(k: int, T: int, c_n: int) -> list[ComparisonRow]:
    """Cost rows for naive, XEBP, AEBP and the odd-type decomposition.

    XEBP and AEBP are formula-only; no circuit is built for them.
    """
    if T % 2 == 0 or k % 2:
        raise ValueError(f"comparison is defined for odd T and even k, got k={k}, T={T}")
    h = k // 2
    base = _clog2(c_n)
    return [
        ComparisonRow("naive", k * k, k * (c_n - 1), 1, base),
        ComparisonRow("XEBP", k * k, h * (c_n + k - 2), 1, base),
        ComparisonRow("AEBP", h * (k - 1), h * (c_n + 2 * k - 3), 1, base),
        ComparisonRow("ours", k * k, h * (c_n + 2 * T - 1) - 1, 1, 1 + _clog2(c_n - k + 2 * T - 1)),
    ]


def classify(T: int | None) -> str:
    if T is None:
        return "none"
    if T == 1:
        return "onb-type1"
    if T == 2:
        return "onb-type2"
    return "even-gnb" if T % 2 == 0 else "odd-gnb"


@dataclass(frozen=True)
class ScanRecord:
    k: int
    smallest_type: int | None
    classification: str
    c_n: int | None = None

    def csv(self) -> str:
        t = "" if self.smallest_type is None else str(self.smallest_type)
        row = f"{self.k},{t},{self.classification}"
        if self.c_n is not None:
            row += f",{self.c_n}"
        return row


def scan(k_min: int, k_max: int, t_max: int = DEFAULT_T_MAX, with_cn: bool = False) -> list[ScanRecord]:
    """Smallest GNB type and class for every k in [k_min, k_max]."""
    if not 2 <= k_min <= k_max:
        raise ValueError(f"need 2 <= k_min <= k_max, got {k_min}, {k_max}")
    out = []
    for k in range(k_min, k_max + 1):
        T = smallest_type(k, t_max)
        c_n = field_c_n(build_params(k, T)) if with_cn and T is not None else None
        out.append(ScanRecord(k, T, classify(T), c_n))
    return out


def summarize(records) -> dict[str, int]:
    c = Counter(r.classification for r in records)
    return {cls: c[cls] for cls in CLASSES}


def scan_csv(records, odd_only: bool = False) -> str:
    with_cn = any(r.c_n is not None for r in records)
    lines = ["k,smallest_type,classification" + (",c_n" if with_cn else "")]
    lines += [r.csv() for r in records if not odd_only or r.classification == "odd-gnb"]
    summary = summarize(records)
    lines.append("# " + " ".join(f"{cls}={n}" for cls, n in summary.items()))
    return "\n".join(lines) + "\n"
