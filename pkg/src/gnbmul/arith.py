"""Reference normal-basis arithmetic, used as the oracle for synthesized circuits.

Elements are packed ints: bit i is the coefficient of beta_i.  Hex encoding
puts a_0 in the least-significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gnbmul.gnb_core import GnbParams
from gnbmul.matrix import MultMatrix, _rotl, matrix_for_bit


@dataclass(frozen=True)
class Element:
    k: int
    value: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if not 0 <= self.value < 1 << self.k:
            raise ValueError(f"value {self.value:#x} does not fit in {self.k} bits")

    @classmethod
    def from_bits(cls, bits) -> Element:
        """From coordinates listed a_0, a_1, ..., a_{k-1}."""
        bits = list(bits)
        return cls(len(bits), sum(1 << i for i, v in enumerate(bits) if v))

    @classmethod
    def from_hex(cls, text: str, k: int) -> Element:
        text = text.strip().lower()
        if text.startswith("0x"):
            text = text[2:]
        try:
            v = int(text, 16)
        except ValueError:
            raise ValueError(f"not a hex string: {text!r}") from None
        return cls(k, v)

    @classmethod
    def zero(cls, k: int) -> Element:
        return cls(k, 0)

    @classmethod
    def one(cls, k: int) -> Element:
        # sum of all basis elements is 1
        return cls(k, (1 << k) - 1)

    @property
    def bits(self) -> list[int]:
        return [self.value >> i & 1 for i in range(self.k)]

    def to_hex(self) -> str:
        return format(self.value, f"0{(self.k + 3) // 4}x")

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def _same_k(a: Element, b: Element) -> int:
    if a.k != b.k:
        raise ValueError(f"mismatched field widths {a.k} and {b.k}")
    return a.k


def gf_add(a: Element, b: Element) -> Element:
    return Element(_same_k(a, b), a.value ^ b.value)


def gf_square(a: Element) -> Element:
    return Element(a.k, _rotl(a.value, 1, a.k))


def _rotr(v: int, n: int, k: int) -> int:
    return _rotl(v, k - n % k, k)


def _c0(rows: tuple[int, ...], a: int, b: int) -> int:
    acc = 0
    i = 0
    while a:
        if a & 1:
            acc ^= rows[i] & b
        a >>= 1
        i += 1
    return acc.bit_count() & 1


def gf_mult(params: GnbParams | None, m0: MultMatrix, a: Element, b: Element) -> Element:
    """Normal-basis product via the c_0 matrix and coordinate rotation.

    c_l = sum M_0[i][j] a_{i+l} b_{j+l}, i.e. c_0 evaluated on both inputs
    rotated down by l.
    """
    k = _same_k(a, b)
    if m0.k != k or (params is not None and params.k != k):
        raise ValueError(f"element width {k} does not match matrix width {m0.k}")
    c = 0
    for l in range(k):
        if _c0(m0.rows, _rotr(a.value, l, k), _rotr(b.value, l, k)):
            c |= 1 << l
    return Element(k, c)


def gf_mult_bits(m0: MultMatrix, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Batched product on (N, k) 0/1 arrays, evaluated through the per-bit views."""
    A = np.asarray(A, dtype=np.float64)
    B = np.asarray(B, dtype=np.float64)
    k = m0.k
    if A.shape != B.shape or A.ndim != 2 or A.shape[1] != k:
        raise ValueError(f"expected two (N, {k}) arrays, got {A.shape} and {B.shape}")
    C = np.empty(A.shape, dtype=np.uint8)
    for l in range(k):
        M = np.array(matrix_for_bit(m0, l).to_lists(), dtype=np.float64)
        C[:, l] = np.rint(((A @ M) * B).sum(axis=1)).astype(np.int64) & 1
    return C


def bits_to_ints(X: np.ndarray) -> list[int]:
    X = np.asarray(X, dtype=np.uint8)
    packed = np.packbits(X, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def ints_to_bits(values, k: int) -> np.ndarray:
    nb = (k + 7) // 8
    raw = b"".join(v.to_bytes(nb, "little") for v in values)
    arr = np.frombuffer(raw, dtype=np.uint8).reshape(-1, nb)
    return np.unpackbits(arr, axis=1, bitorder="little")[:, :k]
