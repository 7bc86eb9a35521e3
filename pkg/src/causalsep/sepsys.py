"""Separating-system matrices over a vertex set.

A design is an n x m binary matrix: row v is the label of vertex v, column j
is the membership vector of intervention I_j.  A design separates a graph
when the two endpoints of every edge receive distinct rows.  Proper
colorings with distinct class labels are exactly the separating designs,
which is what the conversion functions below implement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .chordal import Coloring
from .errors import (
    DuplicateLabel,
    GraphError,
    LabelLengthMismatch,
    NotEnoughLabels,
    NotSeparating,
    VertexOutOfRange,
)
from .graph import Cost, Edge, Graph, exact_sum


@dataclass(frozen=True, order=True)
class Label:
    """Binary row of length m; column j says whether the vertex joins
    intervention j.  Ordering is (popcount, big-endian numeric value)."""

    sort_index: tuple[int, int]
    bits: tuple[int, ...]

    def __init__(self, bits: Iterable[int]):
        b = tuple(int(x) for x in bits)
        if any(x not in (0, 1) for x in b):
            raise GraphError(f"label bits must be 0/1, got {b}")
        object.__setattr__(self, "bits", b)
        object.__setattr__(self, "sort_index", (sum(b), _bits_value(b)))

    @property
    def weight(self) -> int:
        return self.sort_index[0]

    @property
    def m(self) -> int:
        return len(self.bits)

    def bitstring(self) -> str:
        return "".join(str(x) for x in self.bits)

    @staticmethod
    def from_bitstring(s: str) -> "Label":
        if any(ch not in "01" for ch in s):
            raise ValueError(f"invalid bitstring {s!r}")
        return Label(int(ch) for ch in s)

    def __repr__(self) -> str:
        return f"Label({self.bitstring()!r})"


def _bits_value(bits: Sequence[int]) -> int:
    v = 0
    for b in bits:
        v = (v << 1) | b
    return v


def _label_from_value(value: int, m: int) -> Label:
    return Label((value >> (m - 1 - j)) & 1 for j in range(m))


@dataclass(frozen=True)
class Design:
    """Intervention design: one length-m row per vertex."""

    m: int
    rows: tuple[Label, ...]

    def __post_init__(self):
        for v, row in enumerate(self.rows):
            if row.m != self.m:
                raise LabelLengthMismatch(
                    f"row of vertex {v} has length {row.m}, expected {self.m}")

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def interventions(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(v for v in range(self.n) if self.rows[v].bits[j])
            for j in range(self.m))

    def row_of(self, v: int) -> Label:
        return self.rows[v]


def design_from_interventions(n: int, m: int,
                              interventions: Sequence[Iterable[int]]) -> Design:
    """Design from explicit intervention sets (column form).

    Fewer than m sets is allowed; missing columns are all-zero.
    """
    if len(interventions) > m:
        raise GraphError(f"{len(interventions)} interventions exceed m={m}")
    bits = [[0] * m for _ in range(n)]
    for j, I in enumerate(interventions):
        for v in I:
            if not (0 <= int(v) < n):
                raise VertexOutOfRange(f"vertex {v} outside 0..{n - 1}")
            bits[int(v)][j] = 1
    return Design(m=m, rows=tuple(Label(b) for b in bits))


@dataclass(frozen=True)
class LabelPool:
    """The t = min(2^m, n) lightest length-m labels in canonical order.

    The weight sequence b starts [0, 1, ..., 1, 2, ...] with weight w
    appearing C(m, w) times until t labels are collected.
    """

    m: int
    labels: tuple[Label, ...]

    @property
    def t(self) -> int:
        return len(self.labels)

    @property
    def b(self) -> tuple[int, ...]:
        return tuple(l.weight for l in self.labels)


def label_pool(m: int, n: int) -> LabelPool:
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    t = min(2 ** m, n)
    labels: list[Label] = []
    for w in range(m + 1):
        if len(labels) == t:
            break
        if w == 0:
            labels.append(_label_from_value(0, m))
            continue
        v = (1 << w) - 1
        while v < (1 << m) and len(labels) < t:
            labels.append(_label_from_value(v, m))
            # Gosper's hack: next larger integer with the same popcount
            low = v & -v
            ripple = v + low
            v = ripple | (((v ^ ripple) >> 2) // low)
    return LabelPool(m=m, labels=tuple(labels))


# --- conversions and checks --------------------------------------------------


def coloring_to_design(coloring: Coloring,
                       label_of_class: Sequence[Label] | Mapping[int, Label],
                       m: int) -> Design:
    """Design whose row for v is the label of v's color class."""
    labels = [label_of_class[c] for c in range(coloring.num_classes)]
    if len(set(labels)) != len(labels):
        raise DuplicateLabel("classes must receive distinct labels")
    for lab in labels:
        if lab.m != m:
            raise LabelLengthMismatch(
                f"label {lab.bitstring()!r} has length {lab.m}, expected {m}")
    rows = tuple(labels[c] for c in coloring.class_of)
    return Design(m=m, rows=rows)


def design_to_coloring(G: Graph, design: Design) -> Coloring:
    """Group vertices by identical rows; proper whenever the design
    separates G, otherwise NotSeparating carries a violated edge."""
    report = verify_graph_separating(G, design)
    if not report.separating:
        raise NotSeparating(
            f"design does not separate edge {report.violations[0]}",
            edge=report.violations[0])
    index: dict[Label, int] = {}
    class_of = []
    for v in range(G.n):
        row = design.rows[v]
        if row not in index:
            index[row] = len(index)
        class_of.append(index[row])
    return Coloring(class_of=tuple(class_of), num_classes=len(index))


@dataclass(frozen=True)
class SeparationReport:
    separating: bool
    violations: tuple[Edge, ...]


def verify_graph_separating(G: Graph, design: Design) -> SeparationReport:
    """Check every edge gets two distinct rows; lists all violations."""
    if design.n != G.n:
        raise VertexOutOfRange(
            f"design has {design.n} rows for a graph on {G.n} vertices")
    bad = tuple((u, v) for u, v in G.edges
                if design.rows[u] == design.rows[v])
    return SeparationReport(separating=not bad, violations=bad)


def design_cost(design: Design, weights: Sequence[Cost]) -> Cost:
    """Total cost: sum over vertices of row weight times vertex cost.

    Also computed column-wise (sum of member costs per intervention); the
    two are the same multiset of addends so they must agree exactly, which
    is asserted.
    """
    if len(weights) != design.n:
        raise GraphError(f"expected {design.n} weights, got {len(weights)}")
    by_rows = exact_sum(weights[v]
                        for v in range(design.n)
                        for bit in design.rows[v].bits if bit)
    by_cols = exact_sum(weights[v]
                        for I in design.interventions
                        for v in I)
    assert by_rows == by_cols, "cost formulas disagree"
    return by_rows


def assign_labels_min_cost(class_costs: Sequence[Cost],
                           labels: Sequence[Label]) -> tuple[Label, ...]:
    """Match classes to labels: heaviest class cost takes the lightest label.

    ``labels`` must already be in canonical (weight, value) order, as a
    LabelPool slice is.  Ties between equal class costs break on class
    index, so the output is deterministic.  Among all ways to assign these
    labels to these classes this minimizes total cost (rearrangement
    inequality).
    """
    if len(labels) < len(class_costs):
        raise NotEnoughLabels(
            f"{len(class_costs)} classes but only {len(labels)} labels")
    order = sorted(range(len(class_costs)),
                   key=lambda c: (-class_costs[c], c))
    out: list[Label | None] = [None] * len(class_costs)
    for rank, c in enumerate(order):
        out[c] = labels[rank]
    return tuple(out)  # type: ignore[arg-type]


# --- JSON interface -----------------------------------------------------------
#
# {"m": int, "interventions": [[v, ...], ...], "rows": {"v": "bits", ...},
#  "cost": number}
#
# All-zero columns are dropped: "interventions" lists only nonempty sets and
# the row bitstrings keep only those columns, while "m" still reports the
# design's full width.  Loading appends zero columns back on the right, which
# preserves the row partition, the cost, and the nonempty interventions.


def design_to_dict(design: Design, weights: Sequence[Cost] | None = None) -> dict:
    nonzero = [j for j in range(design.m) if design.interventions[j]]
    rows = {
        str(v): "".join(str(design.rows[v].bits[j]) for j in nonzero)
        for v in range(design.n)
    }
    d: dict = {
        "m": design.m,
        "interventions": [list(design.interventions[j]) for j in nonzero],
        "rows": rows,
    }
    if weights is not None:
        cost = design_cost(design, weights)
        if isinstance(cost, Fraction):
            raise GraphError("cannot serialize Fraction cost to JSON")
        d["cost"] = cost
    return d


def design_from_dict(d: dict) -> Design:
    try:
        m = int(d["m"])
        interventions = d["interventions"]
        rows = d["rows"]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed design object: {exc}") from exc
    n = len(rows)
    width = len(interventions)
    if width > m:
        raise GraphError(f"{width} interventions exceed m={m}")
    bits = []
    widths = set()
    for v in range(n):
        key = str(v)
        if key not in rows:
            raise GraphError(f"missing row for vertex {v}")
        s = rows[key]
        # rows may be stored compacted (empty columns dropped) or full width
        if len(s) not in {width, m} or any(ch not in "01" for ch in s):
            raise GraphError(
                f"row of vertex {v} must be {width} or {m} bits, got {s!r}")
        widths.add(len(s))
        bits.append(tuple(int(ch) for ch in s) + (0,) * (m - len(s)))
    if len(widths) > 1:
        raise GraphError("rows mix compacted and full-width bitstrings")
    design = Design(m=m, rows=tuple(Label(b) for b in bits))
    stated = [sorted(int(v) for v in I) for I in interventions]
    actual = [list(I) for I in design.interventions if I]
    if stated != actual:
        raise GraphError("interventions do not match rows")
    return design


def design_to_json(design: Design, weights: Sequence[Cost] | None = None) -> str:
    return json.dumps(design_to_dict(design, weights), indent=2)


def design_from_json(text: str) -> Design:
    return design_from_dict(json.loads(text))
