"""Two-input AND/XOR netlists: construction, simulation, metrics, text format.

Refs are strings: ``a<i>``, ``b<i>`` for inputs and ``g<N>`` for gates.  Gate
N may only reference inputs and gates < N, so the gate list is always in
topological order.

Text format (GNBMUL v1)::

    GNBMUL v1 k=<k> type=<T> method=<method>
    INPUT a0 ... a<k-1> b0 ... b<k-1>
    GATE g<N> <AND|XOR> <ref> <ref>        (N = 0, 1, 2, ...)
    OUTPUT c<l> <ref>                      (l = 0 .. k-1)
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from gnbmul.arith import Element

OPS = ("AND", "XOR")
FORMAT_METHODS = ("naive", "onb1", "onb2", "odd-decomp")


class NetlistError(ValueError):
    pass


class NetlistFormatError(NetlistError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class Gate(NamedTuple):
    id: int
    op: str
    x: str
    y: str

    @property
    def name(self) -> str:
        return f"g{self.id}"


def input_names(k: int) -> list[str]:
    return [f"a{i}" for i in range(k)] + [f"b{i}" for i in range(k)]


@dataclass(frozen=True)
class Netlist:
    k: int
    T: int
    method: str
    gates: tuple[Gate, ...]
    outputs: tuple[str, ...]
    # role label -> ref, e.g. ("prod", i, j), ("mu", i, j), ("omega",)
    roles: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        known = set(input_names(self.k))
        for n, g in enumerate(self.gates):
            if g.id != n:
                raise NetlistError(f"gate id {g.id} at position {n}")
            if g.op not in OPS:
                raise NetlistError(f"g{n}: unknown op {g.op!r}")
            for r in (g.x, g.y):
                if r not in known:
                    raise NetlistError(f"g{n}: operand {r} is not an input or earlier gate")
            known.add(g.name)
        if len(self.outputs) != self.k:
            raise NetlistError(f"expected {self.k} outputs, got {len(self.outputs)}")
        for l, r in enumerate(self.outputs):
            if r not in known:
                raise NetlistError(f"output c{l} bound to unknown ref {r}")

    @property
    def inputs(self) -> list[str]:
        return input_names(self.k)

    def gate(self, ref: str) -> Gate | None:
        if ref.startswith("g"):
            return self.gates[int(ref[1:])]
        return None


class NetlistBuilder:
    def __init__(self, k: int, T: int, method: str):
        self.k, self.T, self.method = k, T, method
        self.gates: list[Gate] = []
        self.outputs: list[str | None] = [None] * k
        self.roles: dict = {}

    def _add(self, op: str, x: str, y: str) -> str:
        g = Gate(len(self.gates), op, x, y)
        self.gates.append(g)
        return g.name

    def and_(self, x: str, y: str) -> str:
        return self._add("AND", x, y)

    def xor(self, x: str, y: str) -> str:
        return self._add("XOR", x, y)

    def xor_tree(self, operands: Sequence[str]) -> str:
        """Balanced sum: pair neighbours left to right, carry an odd tail up a level."""
        level = list(operands)
        if not level:
            raise ValueError("empty sum")
        while len(level) > 1:
            nxt = [self.xor(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
            if len(level) % 2:
                nxt.append(level[-1])
            level = nxt
        return level[0]

    def output(self, l: int, ref: str) -> None:
        self.outputs[l] = ref

    def build(self) -> Netlist:
        missing = [l for l, r in enumerate(self.outputs) if r is None]
        if missing:
            raise NetlistError(f"unbound outputs: {missing}")
        return Netlist(self.k, self.T, self.method, tuple(self.gates), tuple(self.outputs), dict(self.roles))


# -- simulation ---------------------------------------------------------------

def simulate_slices(n: Netlist, a_slices: Sequence[int], b_slices: Sequence[int]) -> list[int]:
    """Evaluate on bit-sliced inputs: bit t of slice i is a_i of test vector t."""
    if len(a_slices) != n.k or len(b_slices) != n.k:
        raise ValueError(f"need {n.k} slices per operand")
    vals: dict[str, int] = {}
    for i in range(n.k):
        vals[f"a{i}"] = a_slices[i]
        vals[f"b{i}"] = b_slices[i]
    try:
        for g in n.gates:
            x, y = vals[g.x], vals[g.y]
            vals[g.name] = x & y if g.op == "AND" else x ^ y
        return [vals[r] for r in n.outputs]
    except KeyError as e:
        raise NetlistError(f"dangling reference {e.args[0]}") from None


def simulate(n: Netlist, a: Element, b: Element) -> Element:
    if a.k != n.k or b.k != n.k:
        raise ValueError(f"netlist width {n.k}, operands {a.k} and {b.k}")
    out = simulate_slices(n, a.bits, b.bits)
    return Element(n.k, sum(v << l for l, v in enumerate(out)))


def _columns_to_slices(X: np.ndarray) -> list[int]:
    return [int.from_bytes(np.packbits(X[:, i], bitorder="little").tobytes(), "little")
            for i in range(X.shape[1])]


def simulate_bits(n: Netlist, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Evaluate on (N, k) 0/1 arrays of test vectors; returns (N, k) outputs."""
    A = np.asarray(A, dtype=np.uint8)
    B = np.asarray(B, dtype=np.uint8)
    N = A.shape[0]
    out = simulate_slices(n, _columns_to_slices(A), _columns_to_slices(B))
    nbytes = (N + 7) // 8
    C = np.empty((N, n.k), dtype=np.uint8)
    for l, s in enumerate(out):
        raw = np.frombuffer(s.to_bytes(nbytes, "little"), dtype=np.uint8)
        C[:, l] = np.unpackbits(raw, bitorder="little")[:N]
    return C


# -- metrics ------------------------------------------------------------------

@dataclass(frozen=True)
class GateMetrics:
    and_count: int
    xor_count: int
    and_depth: int
    xor_depth: int

    def delay(self, t_and: float = 1.0, t_xor: float = 1.0) -> float:
        return t_and * self.and_depth + t_xor * self.xor_depth

    def depth_str(self) -> str:
        return f"{self.and_depth}A+{self.xor_depth}X"


def metrics(n: Netlist, t_and: float = 1.0, t_xor: float = 1.0) -> GateMetrics:
    """Gate counts plus the AND/XOR level counts along the critical path.

    The critical path maximises t_and*ands + t_xor*xors; ties prefer more XOR levels.
    """
    zero = (0.0, 0, 0)  # (delay, xor levels, and levels)
    arrival: dict[str, tuple] = {r: zero for r in n.inputs}
    counts = Counter()
    for g in n.gates:
        d, x, a = max(arrival[g.x], arrival[g.y])
        if g.op == "AND":
            arrival[g.name] = (d + t_and, x, a + 1)
        else:
            arrival[g.name] = (d + t_xor, x + 1, a)
        counts[g.op] += 1
    _, xd, ad = max((arrival[r] for r in n.outputs), default=zero)
    return GateMetrics(counts["AND"], counts["XOR"], ad, xd)


def xor_leaves(n: Netlist, ref: str, stop: Iterable[str] = ()) -> Counter:
    """Flatten the XOR tree rooted at ref into a multiset of operand refs.

    Expansion stops at inputs, AND gates, and any ref in ``stop``.
    """
    stop = set(stop)
    leaves = Counter()
    todo = [ref]
    while todo:
        r = todo.pop()
        g = n.gate(r)
        if g is None or g.op != "XOR" or (r in stop and r != ref):
            leaves[r] += 1
        else:
            todo += [g.x, g.y]
    return leaves


# -- text format --------------------------------------------------------------

def export_text(n: Netlist) -> str:
    lines = [f"GNBMUL v1 k={n.k} type={n.T} method={n.method}",
             "INPUT " + " ".join(n.inputs)]
    lines += [f"GATE {g.name} {g.op} {g.x} {g.y}" for g in n.gates]
    lines += [f"OUTPUT c{l} {r}" for l, r in enumerate(n.outputs)]
    return "\n".join(lines) + "\n"


_HEADER = re.compile(r"GNBMUL v1 k=(\d+) type=(\d+) method=(\S+)")
_GATE = re.compile(r"GATE g(\d+) (\S+) (\S+) (\S+)")
_OUTPUT = re.compile(r"OUTPUT c(\d+) (\S+)")


def import_text(text: str) -> Netlist:
    lines = text.split("\n")
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise NetlistFormatError(1, "empty netlist")

    m = _HEADER.fullmatch(lines[0])
    if not m:
        raise NetlistFormatError(1, "bad header")
    k, T, method = int(m[1]), int(m[2]), m[3]
    if method not in FORMAT_METHODS:
        raise NetlistFormatError(1, f"unknown method {method!r}")
    if k < 1:
        raise NetlistFormatError(1, "k must be positive")
    if len(lines) < 2 or lines[1] != "INPUT " + " ".join(input_names(k)):
        raise NetlistFormatError(2, f"expected INPUT line for k={k}")

    known = set(input_names(k))
    gates: list[Gate] = []
    outputs: list[str] = []
    for lineno, line in enumerate(lines[2:], start=3):
        if line.startswith("GATE "):
            if outputs:
                raise NetlistFormatError(lineno, "GATE after OUTPUT")
            m = _GATE.fullmatch(line)
            if not m:
                raise NetlistFormatError(lineno, "malformed GATE line")
            gid, op, x, y = int(m[1]), m[2], m[3], m[4]
            if gid != len(gates):
                raise NetlistFormatError(lineno, f"expected g{len(gates)}, got g{gid}")
            if op not in OPS:
                raise NetlistFormatError(lineno, f"unknown op {op!r}")
            for r in (x, y):
                if r not in known:
                    raise NetlistFormatError(lineno, f"reference {r} is not an input or earlier gate")
            gates.append(Gate(gid, op, x, y))
            known.add(f"g{gid}")
        elif line.startswith("OUTPUT "):
            m = _OUTPUT.fullmatch(line)
            if not m:
                raise NetlistFormatError(lineno, "malformed OUTPUT line")
            l, r = int(m[1]), m[2]
            if l != len(outputs) or l >= k:
                raise NetlistFormatError(lineno, f"expected c{len(outputs)}, got c{l}")
            if r not in known:
                raise NetlistFormatError(lineno, f"output bound to unknown ref {r}")
            outputs.append(r)
        else:
            raise NetlistFormatError(lineno, "expected GATE or OUTPUT")
    if len(outputs) != k:
        raise NetlistFormatError(len(lines), f"expected {k} OUTPUT lines, got {len(outputs)}")
    return Netlist(k, T, method, tuple(gates), tuple(outputs))
