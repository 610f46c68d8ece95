"""Bridge between the two finite-approximation pictures of a group.

One picture assigns a self-map phi(g) to every window element g (see
approx.py).  The other decorates a finite vertex set with generator-labeled
edges and asks that around most vertices the graph looks exactly like the
ball of the Cayley graph.  This module constructs labeled ball graphs,
recognizes chart vertices (vertices whose neighborhood is isomorphic to the
Cayley ball as a labeled graph), and converts each picture into the other.

The conversion from maps to a graph keeps the vertices where two exactness
conditions hold:

  (A) phi(b g)(v) == phi(b)(phi(g)(v)) for every generator b and every g in
      the radius-r ball, and
  (C) v separates the radius-(r+1) ball: g -> phi(g)(v) is injective on it.

The conversion back reads one self-map per ball element off the charts and
leaves non-chart vertices fixed.  A counting inequality bounds the number
of discarded vertices by the measured defects, with the exact threshold
given by epsilon_threshold.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._util import exact_fraction, format_fraction
from .approx import MapOnV, SoficApproximation, defect_report
from .errors import DomainError
from .groups import Ball, Group, ball


@dataclass(eq=False)
class LabeledDigraph:
    """A directed graph with string-labeled edges on vertices 0..n-1.

    Labels are expected to be functional (at most one out-edge per label per
    vertex); graphs read from files may break that, and the chart ops then
    reject them.
    """

    n_vertices: int
    edges: dict

    def __post_init__(self):
        if self.n_vertices < 0:
            raise DomainError("vertex count must be nonnegative")
        canon: dict = {}
        for label in sorted(self.edges):
            if not label or any(ch.isspace() for ch in str(label)):
                raise DomainError(f"label {label!r} is empty or contains whitespace")
            pairs = []
            for src, dst in self.edges[label]:
                src, dst = int(src), int(dst)
                if not (0 <= src < self.n_vertices and 0 <= dst < self.n_vertices):
                    raise DomainError(
                        f"edge ({src}, {dst}) outside vertex range 0..{self.n_vertices - 1}"
                    )
                pairs.append((src, dst))
            canon[str(label)] = tuple(sorted(set(pairs)))
        self.edges = canon
        succ: dict = {}
        functional = True
        for label, pairs in canon.items():
            table: dict = {}
            for src, dst in pairs:
                if src in table:
                    functional = False
                table[src] = dst
            succ[label] = table
        self._succ = succ
        self.functional_per_label = functional

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledDigraph):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.edges == other.edges

    @classmethod
    def from_edge_iter(cls, n_vertices: int, edge_iter) -> "LabeledDigraph":
        edges: dict = {}
        for label, src, dst in edge_iter:
            edges.setdefault(str(label), []).append((src, dst))
        return cls(n_vertices, edges)

    def successor(self, label: str, v: int):
        """The unique label-successor of v, or None if absent."""
        return self._succ.get(label, {}).get(v)

    def out_edges(self, v: int) -> list:
        """Sorted (label, dst) pairs leaving v."""
        out = []
        for label in self.edges:
            dst = self._succ[label].get(v)
            if dst is not None:
                out.append((label, dst))
        return out

    def edge_count(self) -> int:
        return sum(len(pairs) for pairs in self.edges.values())

    def to_text(self) -> str:
        """Edge-list form: a 'vertices N' header, then 'label src dst' lines."""
        lines = [f"vertices {self.n_vertices}"]
        for label in sorted(self.edges):
            for src, dst in self.edges[label]:
                lines.append(f"{label} {src} {dst}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "LabeledDigraph":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines or not lines[0].startswith("vertices"):
            raise DomainError("edge list must start with a 'vertices N' header")
        head = lines[0].split()
        if len(head) != 2:
            raise DomainError(f"malformed header {lines[0]!r}")
        try:
            n = int(head[1])
        except ValueError as exc:
            raise DomainError(f"malformed vertex count {head[1]!r}") from exc
        triples = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 3:
                raise DomainError(f"malformed edge line {ln!r}")
            try:
                triples.append((parts[0], int(parts[1]), int(parts[2])))
            except ValueError as exc:
                raise DomainError(f"malformed edge line {ln!r}") from exc
        return cls.from_edge_iter(n, triples)


def union_graphs(graphs) -> LabeledDigraph:
    """Disjoint union; vertex blocks are shifted in input order."""
    graphs = list(graphs)
    if not graphs:
        raise DomainError("cannot union zero graphs")
    offset = 0
    edges: dict = {}
    for g in graphs:
        for label, pairs in g.edges.items():
            edges.setdefault(label, []).extend(
                (src + offset, dst + offset) for src, dst in pairs
            )
        offset += g.n_vertices
    return LabeledDigraph(offset, edges)


def generator_labels(group: Group, generators=None) -> dict:
    """Label string for each generator; labels must be distinct words."""
    gens = list(generators) if generators is not None else list(group.generators)
    labels = {}
    for b in gens:
        name = group.element_name(b)
        if name in labels:
            raise DomainError(f"two generators share the label {name!r}")
        labels[name] = b
    return labels


def cayley_ball_graph(group: Group, radius: int, generators=None) -> LabeledDigraph:
    """The radius-r ball of the Cayley graph, vertices in ball order.

    Edges run from g to b*g with label b, kept when both ends lie in the
    ball (left multiplication, matching the word metric of ball()).
    """
    nb = ball(group, radius, generators)
    labels = generator_labels(group, nb.generators)
    triples = []
    for name, b in sorted(labels.items()):
        for g in nb.elements:
            tgt = group.mul(b, g)
            if tgt in nb:
                triples.append((name, nb.index(g), nb.index(tgt)))
    return LabeledDigraph.from_edge_iter(len(nb), triples)


@dataclass(frozen=True)
class BallChart:
    """A labeled-graph isomorphism from a Cayley ball onto a neighborhood.

    mapping sends each ball element to a vertex; the base vertex is the
    image of the identity."""

    base_vertex: int
    radius: int
    mapping: dict


@dataclass(frozen=True)
class ChartResult:
    """Outcome of chart recognition at one vertex."""

    ok: bool
    chart: BallChart | None
    reason: str | None = None
    locus: tuple | None = None

    def require(self) -> BallChart:
        if not self.ok:
            raise DomainError(f"no chart: {self.reason} at {self.locus}")
        return self.chart


def chart_from_graph(
    graph: LabeledDigraph,
    base_vertex: int,
    radius: int,
    group: Group,
    generators=None,
) -> ChartResult:
    """Try to chart the radius-r Cayley ball onto the graph at base_vertex.

    Success requires a label-respecting walk assignment that is consistent,
    injective, edge-preserving, and lands exactly on the radius-r graph
    neighborhood with no extra labeled edges inside it.  The first failed
    condition is reported with its location.
    """
    if not 0 <= base_vertex < graph.n_vertices:
        raise DomainError(f"vertex {base_vertex} outside the graph")
    if not graph.functional_per_label:
        return ChartResult(False, None, "not-functional", ())
    nb = ball(group, radius, generators)
    labels = generator_labels(group, nb.generators)
    name_of = {b: name for name, b in labels.items()}
    mapping: dict = {group.identity: base_vertex}
    for el in nb.elements[1:]:
        candidates = []
        for b in nb.generators:
            pred = group.mul(group.inv(b), el)
            if nb.word_length.get(pred) == nb.word_length[el] - 1:
                src = mapping[pred]
                dst = graph.successor(name_of[b], src)
                if dst is None:
                    return ChartResult(False, None, "missing-edge", (src, name_of[b]))
                candidates.append(dst)
        if len(set(candidates)) != 1:
            return ChartResult(
                False, None, "inconsistent", (group.element_name(el),)
            )
        mapping[el] = candidates[0]
    seen: dict = {}
    for el in nb.elements:
        v = mapping[el]
        if v in seen:
            return ChartResult(
                False,
                None,
                "not-injective",
                (group.element_name(seen[v]), group.element_name(el)),
            )
        seen[v] = el
    for el in nb.elements:
        for b in nb.generators:
            tgt = group.mul(b, el)
            if tgt in nb:
                if graph.successor(name_of[b], mapping[el]) != mapping[tgt]:
                    return ChartResult(
                        False,
                        None,
                        "edge-not-preserved",
                        (group.element_name(el), name_of[b]),
                    )
    image = set(mapping.values())
    reach = {base_vertex}
    frontier = [base_vertex]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for _, dst in graph.out_edges(v):
                if dst not in reach:
                    reach.add(dst)
                    nxt.append(dst)
        frontier = nxt
    if reach != image:
        extra = min(reach - image)
        return ChartResult(False, None, "ball-too-large", (extra,))
    for el in nb.elements:
        v = mapping[el]
        for label, dst in graph.out_edges(v):
            if dst not in image:
                continue
            if label not in labels:
                return ChartResult(False, None, "extra-edge", (v, label))
            if group.mul(labels[label], el) not in nb:
                return ChartResult(False, None, "extra-edge", (v, label))
    return ChartResult(True, BallChart(base_vertex, radius, mapping))


@dataclass(frozen=True)
class GoodSet:
    """Vertices where the labeled graph is exactly chart-like.

    delta is the target fraction of discarded vertices; measured is the
    actual discarded fraction when known."""

    vertices: tuple
    delta: Fraction
    measured: Fraction | None = None

    def __len__(self) -> int:
        return len(self.vertices)

    def meets_target(self, n_vertices: int) -> bool:
        return Fraction(len(self.vertices)) >= (1 - exact_fraction(self.delta)) * n_vertices

    def to_text(self) -> str:
        lines = [f"delta {format_fraction(exact_fraction(self.delta))}"]
        lines.extend(str(v) for v in self.vertices)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GoodSet":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("delta"):
            raise DomainError("good-set text must start with a 'delta' header")
        parts = lines[0].split()
        if len(parts) != 2:
            raise DomainError(f"malformed good-set header {lines[0]!r}")
        delta = exact_fraction(parts[1])
        try:
            vertices = tuple(int(ln) for ln in lines[1:])
        except ValueError as exc:
            raise DomainError(f"malformed good-set vertex line: {exc}") from exc
        return cls(vertices=vertices, delta=delta)


def maps_to_graph(
    approx: SoficApproximation,
    radius: int,
    delta=Fraction(1, 10),
    generators=None,
) -> tuple[LabeledDigraph, GoodSet]:
    """Turn a self-map approximation into a labeled graph plus good set.

    Edges follow the generator maps.  A vertex enters the good set when
    conditions (A) and (C) hold there exactly; the stored window must
    contain the radius-(2r+2) ball so all required maps exist.
    """
    group = approx.group
    gens = list(generators) if generators is not None else list(group.generators)
    delta = exact_fraction(delta)
    if not 0 < delta <= 1:
        raise DomainError(f"delta must lie in (0, 1], got {delta}")
    needed = ball(group, 2 * radius + 2, gens)
    for g in needed.elements:
        if not approx.has(g):
            raise DomainError(
                f"window must cover the radius-{2 * radius + 2} ball; missing "
                f"{group.element_name(g)!r}"
            )
    labels = generator_labels(group, gens)
    n = approx.n_points
    triples = []
    for name, b in sorted(labels.items()):
        imgs = approx.map_for(b).images
        triples.extend((name, v, int(imgs[v])) for v in range(n))
    graph = LabeledDigraph.from_edge_iter(n, triples)
    bad = np.zeros(n, dtype=bool)
    inner = ball(group, radius, gens)
    for g in inner.elements:
        g_imgs = approx.map_for(g).images
        for b in gens:
            lhs = approx.map_for(group.mul(b, g)).images
            rhs = approx.map_for(b).images[g_imgs]
            bad |= lhs != rhs
    outer = ball(group, radius + 1, gens)
    stack = np.stack([approx.map_for(g).images for g in outer.elements])
    stack_sorted = np.sort(stack, axis=0)
    collide = (stack_sorted[1:] == stack_sorted[:-1]).any(axis=0)
    bad |= collide
    good = np.nonzero(~bad)[0]
    return graph, GoodSet(
        vertices=tuple(int(v) for v in good),
        delta=delta,
        measured=Fraction(n - good.size, n),
    )


def graph_to_maps(
    graph: LabeledDigraph,
    good_vertices,
    radius: int,
    elements,
    group: Group,
    epsilon=Fraction(1, 2),
    label: str = "",
    generators=None,
) -> SoficApproximation:
    """Turn a labeled graph with chart vertices into a self-map approximation.

    Every good vertex must chart the radius-r Cayley ball; phi(g) moves each
    good vertex along its chart and fixes every other vertex.  The window's
    pair products must stay inside the radius-r ball so that all stored maps
    are chart-driven.
    """
    if isinstance(good_vertices, GoodSet):
        good = list(good_vertices.vertices)
    else:
        good = [int(v) for v in good_vertices]
    good = sorted(set(good))
    nb = ball(group, radius, generators)
    window = _window_closure_check(group, elements, nb)
    charts = {}
    for v in good:
        result = chart_from_graph(graph, v, radius, group, generators)
        if not result.ok:
            raise DomainError(
                f"vertex {v} is not a chart vertex: {result.reason} at {result.locus}"
            )
        charts[v] = result.chart.mapping
    n = graph.n_vertices
    if n == 0:
        raise DomainError("graph has no vertices")
    phi: dict = {}
    for g in nb.elements:
        images = np.arange(n, dtype=np.int64)
        for v in good:
            images[v] = charts[v][g]
        phi[g] = MapOnV(images)
    return SoficApproximation(
        group=group,
        n_points=n,
        window=window,
        phi=phi,
        epsilon=epsilon,
        label=label or f"charted:{n}",
    )


def _window_closure_check(group: Group, elements, nb: Ball) -> tuple:
    if isinstance(elements, Ball):
        items = list(elements.elements)
    else:
        items = list(elements)
    window = [group.identity]
    seen = {group.identity}
    for el in items:
        if el not in seen:
            seen.add(el)
            window.append(el)
    for e, f in itertools.product(window, repeat=2):
        prod = group.mul(e, f)
        if prod not in nb:
            raise DomainError(
                f"window product {group.element_name(prod)!r} falls outside the "
                f"radius-{nb.radius} ball"
            )
    return tuple(window)


def epsilon_threshold(delta, ball_size: int, next_ball_size: int, generator_count: int) -> Fraction:
    """Exact tolerance threshold for graph conversion at accuracy delta:
    delta / (4 * |N_{r+1}|**2 + |N_r| * |B|)."""
    d = exact_fraction(delta)
    if not 0 < d <= 1:
        raise DomainError(f"delta must lie in (0, 1], got {d}")
    if ball_size < 1 or next_ball_size < 1 or generator_count < 1:
        raise DomainError("ball sizes and generator count must be positive")
    return d / (4 * next_ball_size**2 + ball_size * generator_count)


@dataclass(frozen=True)
class CountingBoundRecord:
    """Exact accounting of discarded vertices against measured defects.

    The discarded fraction is bounded by |N_r| * |B| * max_a plus
    4 * |N_{r+1}|**2 * max(all defects); ok records whether the bound held.
    """

    excluded: int
    n_points: int
    ball_size: int
    next_ball_size: int
    generator_count: int
    max_a: Fraction
    defect_b: Fraction
    max_agreement: Fraction
    bound: Fraction
    ok: bool

    def to_text(self) -> str:
        frac = Fraction(self.excluded, self.n_points)
        return (
            f"excluded: {self.excluded} of {self.n_points} "
            f"({format_fraction(frac)})\n"
            f"ball-size: {self.ball_size}\n"
            f"next-ball-size: {self.next_ball_size}\n"
            f"generators: {self.generator_count}\n"
            f"max-a: {format_fraction(self.max_a)}\n"
            f"defect-b: {format_fraction(self.defect_b)}\n"
            f"max-agreement-c: {format_fraction(self.max_agreement)}\n"
            f"bound: {format_fraction(self.bound)}\n"
            f"ok: {self.ok}\n"
        )


def counting_bound(
    approx: SoficApproximation,
    radius: int,
    good: GoodSet,
    generators=None,
) -> CountingBoundRecord:
    """Check the discarded-vertex count against the defect bound.

    Uses the defect report over the stored domain: max_a over all measured
    pairs (the conversion needs products up to radius 2r+2, all stored).
    """
    group = approx.group
    gens = list(generators) if generators is not None else list(group.generators)
    report = defect_report(approx)
    max_a = report.max_a_extended if report.max_a_extended is not None else Fraction(0)
    max_c = report.max_agreement if report.max_agreement is not None else Fraction(0)
    worst = max(max_a, report.defect_b, max_c)
    n_r = len(ball(group, radius, gens))
    n_r1 = len(ball(group, radius + 1, gens))
    n = approx.n_points
    excluded = n - len(good.vertices)
    bound = n_r * len(gens) * max_a + 4 * n_r1 * n_r1 * worst
    ok = Fraction(excluded, n) <= bound
    return CountingBoundRecord(
        excluded=excluded,
        n_points=n,
        ball_size=n_r,
        next_ball_size=n_r1,
        generator_count=len(gens),
        max_a=max_a,
        defect_b=report.defect_b,
        max_agreement=max_c,
        bound=bound,
        ok=ok,
    )


def map_agreement_diff(
    original: SoficApproximation,
    rebuilt: SoficApproximation,
    elements,
    vertices,
) -> list:
    """Pointwise differences phi_original vs phi_rebuilt on given elements
    and vertices; empty means exact agreement there."""
    diffs = []
    for g in elements:
        a = original.map_for(g).images
        b = rebuilt.map_for(g).images
        for v in vertices:
            if a[v] != b[v]:
                diffs.append((g, int(v), int(a[v]), int(b[v])))
    return diffs


__all__ = [
    "BallChart",
    "ChartResult",
    "CountingBoundRecord",
    "GoodSet",
    "LabeledDigraph",
    "cayley_ball_graph",
    "chart_from_graph",
    "counting_bound",
    "epsilon_threshold",
    "generator_labels",
    "graph_to_maps",
    "map_agreement_diff",
    "maps_to_graph",
    "union_graphs",
]
