"""Normal-basis multiplication matrices.

``c_l = sum_{i,j} M_l[i][j] a_i b_j`` over GF(2).  Only M_0 is stored; the
matrix for output bit l is the double cyclic shift
``M_l[i][j] = M_0[(i-l) % k][(j-l) % k]`` (squaring is a coordinate rotation).

Rows are packed into ints: bit j of ``rows[i]`` is entry (i, j).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from gnbmul.gnb_core import GnbParams


@dataclass(frozen=True)
class MultMatrix:
    k: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.k:
            raise ValueError(f"expected {self.k} rows, got {len(self.rows)}")
        if any(r >> self.k for r in self.rows):
            raise ValueError("row wider than k bits")

    @classmethod
    def from_lists(cls, bits: Sequence[Sequence[int]]) -> MultMatrix:
        k = len(bits)
        rows = []
        for r in bits:
            if len(r) != k:
                raise ValueError("matrix is not square")
            rows.append(sum(1 << j for j, v in enumerate(r) if v))
        return cls(k, tuple(rows))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.k)] for r in self.rows]

    def is_symmetric(self) -> bool:
        return all(self[i, j] == self[j, i] for i in range(self.k) for j in range(i))

    def diagonal_ones(self) -> list[int]:
        return [i for i in range(self.k) if self[i, i]]


def mult_matrix_c0(params: GnbParams) -> MultMatrix:
    """Multiplication matrix for output bit c_0.

    Entry (i, j) is the parity of the number of exponent pairs (s, t) with
    2^i lam^s + 2^j lam^t equal to 1 (landing on the representative of D_0)
    or to 0 (gamma^0 = 1 = sum of all beta, so it feeds every coefficient).
    Both equations pin t down uniquely from (i, s, j), which makes this
    O(k T) instead of the O(k^2 T^2) double sum.
    """
    k, T, p, lam = params.k, params.T, params.p, params.lam
    rows = [0] * k
    two_i = 1
    for i in range(k):
        u = two_i
        for _ in range(T):
            if u != 1:
                rows[i] ^= 1 << params.F(1 - u)
            rows[i] ^= 1 << params.F(-u)
            u = u * lam % p
        two_i = two_i * 2 % p
    return MultMatrix(k, tuple(rows))


def _rotl(r: int, n: int, k: int) -> int:
    n %= k
    if n == 0:
        return r
    return ((r << n) | (r >> (k - n))) & ((1 << k) - 1)


def matrix_for_bit(m0: MultMatrix, l: int) -> MultMatrix:
    k = m0.k
    if not 0 <= l < k:
        raise IndexError(f"bit index {l} out of range for k={k}")
    if l == 0:
        return m0
    return MultMatrix(k, tuple(_rotl(m0.rows[(i - l) % k], l, k) for i in range(k)))


def count_ones(m: MultMatrix) -> int:
    """C_N, the weight of the matrix (the same for every output bit)."""
    return sum(r.bit_count() for r in m.rows)


def antidiagonal_usage(params: GnbParams, m0: MultMatrix | None = None) -> list[int]:
    """For each i, how many output bits use the product a_i b_{(i+k/2) % k}."""
    k = params.k
    if k % 2:
        raise ValueError(f"anti-diagonal needs even k, got k={k}")
    if m0 is None:
        m0 = mult_matrix_c0(params)
    h = k // 2
    usage = [0] * k
    for l in range(k):
        view = matrix_for_bit(m0, l)
        for i in range(k):
            usage[i] += view[i, (i + h) % k]
    return usage


def antidiagonal_weight(m: MultMatrix) -> int:
    """Number of ones among the cells (i, (i+k/2) % k) of one matrix."""
    k = m.k
    if k % 2:
        raise ValueError(f"anti-diagonal needs even k, got k={k}")
    return sum(m[i, (i + k // 2) % k] for i in range(k))


def cn_upper_bound(k: int, T: int) -> int:
    return T * k - 1 if T % 2 == 0 else (T + 1) * k - T


def render(m: MultMatrix, fmt: str = "ascii") -> str:
    sep = {"ascii": " ", "csv": ","}.get(fmt)
    if sep is None:
        raise ValueError(f"unknown matrix format {fmt!r}")
    return "\n".join(sep.join(str(v) for v in row) for row in m.to_lists()) + "\n"
