import itertools

import numpy as np
import pytest

from gnbmul.arith import Element, gf_mult
from gnbmul.gnb_core import build_params
from gnbmul.matrix import mult_matrix_c0
from gnbmul.netlist import (
    Gate,
    Netlist,
    NetlistBuilder,
    NetlistError,
    NetlistFormatError,
    export_text,
    import_text,
    metrics,
    simulate,
    simulate_bits,
    simulate_slices,
    xor_leaves,
)
from gnbmul.synth import synthesize


def tiny():
    nb = NetlistBuilder(2, 1, "naive")
    g0 = nb.and_("a0", "b0")
    g1 = nb.and_("a1", "b1")
    g2 = nb.xor(g0, g1)
    nb.output(0, nb.xor(g2, "a0"))
    nb.output(1, g1)
    return nb.build()


def test_builder_and_metrics_on_hand_netlist():
    n = tiny()
    assert [g.name for g in n.gates] == ["g0", "g1", "g2", "g3"]
    m = metrics(n)
    assert (m.and_count, m.xor_count, m.and_depth, m.xor_depth) == (2, 2, 1, 2)
    assert m.depth_str() == "1A+2X"
    assert m.delay(t_and=2.0, t_xor=3.0) == 8.0


def test_critical_path_uses_delay_weights():
    # c0: two XORs on raw inputs; c1: one AND. With a slow AND the AND path dominates.
    nb = NetlistBuilder(2, 1, "naive")
    nb.output(0, nb.xor(nb.xor("a0", "a1"), "b0"))
    nb.output(1, nb.and_("a0", "b1"))
    n = nb.build()
    assert metrics(n).depth_str() == "0A+2X"
    assert metrics(n, t_and=5.0).depth_str() == "1A+0X"


def test_simulate_hand_netlist_truth_table():
    n = tiny()
    for a0, a1, b0, b1 in itertools.product((0, 1), repeat=4):
        c = simulate(n, Element.from_bits([a0, a1]), Element.from_bits([b0, b1]))
        assert c.bits == [(a0 & b0) ^ (a1 & b1) ^ a0, a1 & b1]


def test_xor_tree_is_balanced_and_ordered():
    nb = NetlistBuilder(3, 2, "naive")
    root = nb.xor_tree(["a0", "a1", "a2", "b0", "b1"])
    ops = [(g.x, g.y) for g in nb.gates]
    assert ops == [("a0", "a1"), ("a2", "b0"), ("g0", "g1"), ("g2", "b1")]
    assert root == "g3"
    assert nb.xor_tree(["b2"]) == "b2"
    with pytest.raises(ValueError):
        nb.xor_tree([])


def test_construction_rejects_bad_structure():
    with pytest.raises(NetlistError):
        Netlist(1, 1, "naive", (Gate(0, "AND", "a0", "g1"),), ("g0",))
    with pytest.raises(NetlistError):
        Netlist(1, 1, "naive", (Gate(1, "AND", "a0", "b0"),), ("g1",))
    with pytest.raises(NetlistError):
        Netlist(1, 1, "naive", (Gate(0, "OR", "a0", "b0"),), ("g0",))
    with pytest.raises(NetlistError):
        Netlist(2, 1, "naive", (Gate(0, "AND", "a0", "b0"),), ("g0",))
    nb = NetlistBuilder(2, 1, "naive")
    nb.output(0, "a0")
    with pytest.raises(NetlistError):
        nb.build()


def test_simulate_slices_reports_dangling_reference():
    n = tiny()
    # bypass validation to model a corrupted netlist
    object.__setattr__(n, "gates", n.gates + (Gate(4, "XOR", "g9", "a0"),))
    with pytest.raises(NetlistError, match="dangling"):
        simulate_slices(n, [0, 0], [0, 0])


def test_simulate_width_mismatch():
    with pytest.raises(ValueError):
        simulate(tiny(), Element(3, 0), Element(2, 0))


def field(k, T):
    prm = build_params(k, T)
    return prm, mult_matrix_c0(prm)


@pytest.mark.parametrize("k,T,method", [
    (3, 2, "naive"), (3, 2, "onb2"), (4, 1, "onb1"), (6, 3, "odd-decomp"), (5, 2, "naive"),
])
def test_zero_input_gives_zero(k, T, method):
    prm, m0 = field(k, T)
    n = synthesize(prm, method, m0)
    for v in range(1 << k):
        assert simulate(n, Element(k, 0), Element(k, v)).value == 0


def test_onb2_k3_exhaustive():
    prm, m0 = field(3, 2)
    n = synthesize(prm, "onb2", m0)
    for a, b in itertools.product(range(8), repeat=2):
        A, B = Element(3, a), Element(3, b)
        assert simulate(n, A, B) == gf_mult(prm, m0, A, B)


def test_odd_decomp_k6_random_pairs():
    prm, m0 = field(6, 3)
    n = synthesize(prm, "odd-decomp", m0)
    rng = np.random.default_rng(6)
    for a, b in rng.integers(0, 64, size=(200, 2)):
        A, B = Element(6, int(a)), Element(6, int(b))
        assert simulate(n, A, B) == gf_mult(prm, m0, A, B)


def test_simulate_bits_matches_scalar_simulation():
    prm, m0 = field(20, 3)
    n = synthesize(prm, "odd-decomp", m0)
    rng = np.random.default_rng(0)
    A = rng.integers(0, 2, size=(37, 20), dtype=np.uint8)
    B = rng.integers(0, 2, size=(37, 20), dtype=np.uint8)
    C = simulate_bits(n, A, B)
    for t in range(37):
        c = simulate(n, Element.from_bits(A[t]), Element.from_bits(B[t]))
        assert c.bits == list(C[t])


@pytest.mark.parametrize("k,T,method", [
    (3, 2, "naive"), (3, 2, "onb2"), (4, 1, "onb1"), (4, 1, "odd-decomp"),
    (6, 3, "odd-decomp"), (6, 3, "naive"), (20, 3, "odd-decomp"),
])
def test_export_import_roundtrip(k, T, method):
    prm, m0 = field(k, T)
    n = synthesize(prm, method, m0)
    text = export_text(n)
    back = import_text(text)
    assert back == n
    assert export_text(back) == text
    assert metrics(back) == metrics(n)


def test_export_header_lines():
    prm, m0 = field(3, 2)
    lines = export_text(synthesize(prm, "naive", m0)).splitlines()
    assert lines[0] == "GNBMUL v1 k=3 type=2 method=naive"
    assert lines[1] == "INPUT a0 a1 a2 b0 b1 b2"
    assert lines[2] == "GATE g0 AND a0 b0"
    assert lines[-3:][0].startswith("OUTPUT c0 ")


HEADER = "GNBMUL v1 k=1 type=1 method=naive\nINPUT a0 b0\n"


@pytest.mark.parametrize("body,lineno,fragment", [
    ("GATE g0 AND a0 g1\nOUTPUT c0 g0\n", 3, "earlier gate"),
    ("GATE g1 AND a0 b0\nOUTPUT c0 g1\n", 3, "expected g0"),
    ("GATE g0 NAND a0 b0\nOUTPUT c0 g0\n", 3, "unknown op"),
    ("GATE g0 AND a0\nOUTPUT c0 g0\n", 3, "malformed"),
    ("GATE g0 AND a0 b0\n", 3, "OUTPUT"),
    ("GATE g0 AND a0 b0\nOUTPUT c0 g0\nGATE g1 XOR a0 b0\n", 5, "after OUTPUT"),
    ("GATE g0 AND a0 b0\nOUTPUT c1 g0\n", 4, "expected c0"),
    ("GATE g0 AND a0 b0\nOUTPUT c0 g7\n", 4, "unknown ref"),
    ("\nGATE g0 AND a0 b0\nOUTPUT c0 g0\n", 3, "expected GATE"),
])
def test_import_errors_carry_line_numbers(body, lineno, fragment):
    with pytest.raises(NetlistFormatError) as exc:
        import_text(HEADER + body)
    assert exc.value.lineno == lineno
    assert fragment in str(exc.value)


@pytest.mark.parametrize("text,lineno", [
    ("", 1),
    ("GNBMUL v2 k=1 type=1 method=naive\n", 1),
    ("GNBMUL v1 k=1 type=1 method=fancy\nINPUT a0 b0\n", 1),
    ("GNBMUL v1 k=1 type=1 method=naive\nINPUT b0 a0\n", 2),
])
def test_import_header_errors(text, lineno):
    with pytest.raises(NetlistFormatError) as exc:
        import_text(text)
    assert exc.value.lineno == lineno


def test_xor_leaves_flattens_until_stop():
    n = tiny()
    assert xor_leaves(n, "g3") == {"g0": 1, "g1": 1, "a0": 1}
    assert xor_leaves(n, "g3", stop={"g2"}) == {"g2": 1, "a0": 1}
