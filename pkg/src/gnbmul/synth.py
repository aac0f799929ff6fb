"""Bit-parallel multiplier emitters.

Every emitter starts with the k^2 products ``a_i b_j`` in (i, j) order, so the
product for (i, j) is always gate ``g{i*k + j}``.  Operand lists handed to the
balanced XOR trees are ordered lexicographically by (i, j).
"""

from __future__ import annotations

import warnings

from gnbmul.gnb_core import GnbParams
from gnbmul.matrix import MultMatrix, count_ones, matrix_for_bit, mult_matrix_c0
from gnbmul.netlist import Netlist, NetlistBuilder


class SpaceComplexityWarning(UserWarning):
    """The decomposition is not expected to beat the baselines for this field."""


def _clog2(n: int) -> int:
    return (n - 1).bit_length()


def _setup(params: GnbParams, m0: MultMatrix | None, method: str):
    if m0 is None:
        m0 = mult_matrix_c0(params)
    if m0.k != params.k:
        raise ValueError(f"matrix width {m0.k} does not match k={params.k}")
    k = params.k
    nb = NetlistBuilder(k, params.T, method)
    prod = {}
    for i in range(k):
        for j in range(k):
            prod[i, j] = nb.and_(f"a{i}", f"b{j}")
            nb.roles["prod", i, j] = prod[i, j]
    return m0, nb, prod


def _add_mus(nb: NetlistBuilder, prod: dict, k: int) -> dict:
    mu = {}
    for i in range(k):
        for j in range(i + 1, k):
            mu[i, j] = nb.xor(prod[i, j], prod[j, i])
            nb.roles["mu", i, j] = mu[i, j]
    return mu


def _diag_index(view: MultMatrix, l: int) -> int:
    diag = view.diagonal_ones()
    if diag != [(l - 1) % view.k]:
        raise ValueError(f"bit {l}: expected a single diagonal one at {(l - 1) % view.k}, got {diag}")
    return diag[0]


def synth_naive(params: GnbParams, m0: MultMatrix | None = None) -> Netlist:
    """Sum the C_N selected products of each output bit directly."""
    m0, nb, prod = _setup(params, m0, "naive")
    for l in range(params.k):
        view = matrix_for_bit(m0, l)
        terms = [prod[i, j] for i in range(params.k) for j in range(params.k) if view[i, j]]
        nb.output(l, nb.xor_tree(terms))
    return nb.build()


def synth_onb_type1(params: GnbParams, m0: MultMatrix | None = None) -> Netlist:
    """Share omega = sum_i a_i b_{i+k/2}, which every output bit of a type-1 ONB uses."""
    if params.T != 1:
        raise ValueError(f"onb1 needs a type-1 basis, got T={params.T}")
    m0, nb, prod = _setup(params, m0, "onb1")
    k, h = params.k, params.k // 2
    anti = {(i, (i + h) % k) for i in range(k)}
    omega = nb.xor_tree([prod[i, j] for i, j in sorted(anti)])
    nb.roles["omega",] = omega
    for l in range(k):
        view = matrix_for_bit(m0, l)
        if any(not view[i, j] for i, j in anti):
            raise ValueError(f"bit {l} does not use every anti-diagonal product")
        rest = [prod[i, j] for i in range(k) for j in range(k) if view[i, j] and (i, j) not in anti]
        nb.output(l, nb.xor(nb.xor_tree(rest), omega) if rest else omega)
    return nb.build()


def synth_onb_type2(params: GnbParams, m0: MultMatrix | None = None) -> Netlist:
    """Share mu_ij = a_i b_j + a_j b_i across output bits."""
    if params.T != 2:
        raise ValueError(f"onb2 needs a type-2 basis, got T={params.T}")
    m0, nb, prod = _setup(params, m0, "onb2")
    k = params.k
    mu = _add_mus(nb, prod, k)
    for l in range(k):
        view = matrix_for_bit(m0, l)
        d = _diag_index(view, l)
        pairs = [mu[i, j] for i in range(k) for j in range(i + 1, k) if view[i, j]]
        nb.output(l, nb.xor_tree([prod[d, d]] + pairs))
    return nb.build()


def correction_pairs(m0: MultMatrix, l: int) -> list[tuple[int, int]]:
    """The mu_ij (i < j) that output bit l adds on top of omega.

    Off-anti-diagonal pairs set in the bit's matrix, plus the anti-diagonal
    pairs the bit does *not* use: omega contains every anti-diagonal pair, so
    adding those again cancels them over GF(2).
    """
    k = m0.k
    if k % 2:
        raise ValueError("decomposition needs even k")
    h = k // 2
    view = matrix_for_bit(m0, l)
    out = []
    for i in range(k):
        for j in range(i + 1, k):
            on_anti = j == i + h
            if on_anti != bool(view[i, j]):
                out.append((i, j))
    return out


def synth_odd_gnb(params: GnbParams, m0: MultMatrix | None = None) -> Netlist:
    """Odd-type GNB matrix decomposition.

    c_l = a_{l-1} b_{l-1} + omega + (correction mu terms); the diagonal
    product and the corrections form one balanced tree, and omega is merged
    last so its own tree overlaps with the correction subtree.
    """
    k, T = params.k, params.T
    if T % 2 == 0:
        raise ValueError(f"odd-decomp needs odd T, got T={T}")
    if k % 2:
        raise ValueError(f"odd-decomp needs even k, got k={k}")
    if k < 2 * T + 1:
        warnings.warn(f"k={k} < 2T+1={2 * T + 1}: decomposition may not reduce the XOR count",
                      SpaceComplexityWarning, stacklevel=2)
    m0, nb, prod = _setup(params, m0, "odd-decomp")
    h = k // 2
    mu = _add_mus(nb, prod, k)
    omega = nb.xor_tree([mu[i, i + h] for i in range(h)])
    nb.roles["omega",] = omega
    for l in range(k):
        d = _diag_index(matrix_for_bit(m0, l), l)
        terms = [prod[d, d]] + [mu[p] for p in correction_pairs(m0, l)]
        nb.output(l, nb.xor(nb.xor_tree(terms), omega))
    return nb.build()


METHODS = {
    "naive": synth_naive,
    "onb1": synth_onb_type1,
    "onb2": synth_onb_type2,
    "odd-decomp": synth_odd_gnb,
}


def applicable_methods(T: int, k: int) -> list[str]:
    out = ["naive"]
    if T == 1:
        out.append("onb1")
    if T == 2:
        out.append("onb2")
    if T % 2 and k % 2 == 0:
        out.append("odd-decomp")
    return out


def synthesize(params: GnbParams, method: str, m0: MultMatrix | None = None) -> Netlist:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(params, m0)


def correction_size(k: int, T: int, c_n: int, anti_weight: int | None = None) -> int:
    """Correction mu terms per output bit of the odd-type decomposition.

    ``anti_weight`` is the number of anti-diagonal ones per matrix; it is
    k - T + 1 whenever the T - 1 non-unit groups of beta_0 * beta_{k/2} hit
    distinct basis elements, which gives (C_N - k + 2T - 3) / 2.
    """
    if anti_weight is None:
        anti_weight = k - T + 1
    return (c_n - 1 + k - 2 * anti_weight) // 2


def expected_counts(method: str, k: int, T: int, c_n: int,
                    anti_weight: int | None = None) -> tuple[int, int]:
    """Closed-form (AND, XOR) totals for each emitter."""
    if method == "odd-decomp":
        corr = correction_size(k, T, c_n, anti_weight)
        xor = k * (k - 1) // 2 + (k // 2 - 1) + k * (corr + 1)
    else:
        xor = {
            "naive": k * (c_n - 1),
            "onb1": k * k - 1,
            "onb2": 3 * k * (k - 1) // 2,
        }[method]
    return k * k, xor


def xor_depth_bound(method: str, k: int, T: int, c_n: int, anti_weight: int | None = None) -> int:
    if method == "naive":
        return _clog2(c_n)
    if method in ("onb1", "onb2"):
        return 1 + _clog2(k)
    # diagonal product + corrections, then omega: 1 + ceil(log2(C_N - k + 2T - 1)) in closed form
    return 1 + _clog2(2 * (correction_size(k, T, c_n, anti_weight) + 1))


def field_c_n(params: GnbParams) -> int:
    return count_ones(mult_matrix_c0(params))
