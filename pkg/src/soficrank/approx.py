"""Finite self-map approximations of groups.

A map e on a finite vertex set V is a point in the monoid Map(V); two maps
are compared by their normalized Hamming distance (the fraction of vertices
where they disagree).  An approximation assigns a map phi(g) to each element
g of a finite window F (identity always included), and its quality is
measured by three defects:

  (a) multiplicativity: distance between phi(e) phi(f) and phi(ef),
  (b) unit: distance between phi(1) and the identity map,
  (c) freeness: agreement fraction between phi(e) and the identity map for
      e != 1, which must stay below the tolerance.

Builders materialize phi on the closure F union F*F, so every pair product
has a stored map to compare against; the headline multiplicativity defect
max_a is taken over pairs whose product lies back in F, and pairs landing
outside F are tracked separately.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._util import exact_fraction, format_fraction
from .errors import DomainError
from .groups import (
    Ball,
    FreeAbelianGroup,
    Group,
    QuotientHom,
    TableGroup,
    ball,
    parse_word,
)


@dataclass(frozen=True, eq=False)
class MapOnV:
    """A self-map of {0, ..., n-1}, stored as its image array."""

    images: np.ndarray

    def __post_init__(self):
        a = np.array(self.images, dtype=np.int64)
        if a.ndim != 1:
            raise DomainError(f"map images must be 1-dimensional, got shape {a.shape}")
        n = a.shape[0]
        if n == 0:
            raise DomainError("maps need a nonempty vertex set")
        if a.size and (a.min() < 0 or a.max() >= n):
            raise DomainError(f"map images must lie in [0, {n})")
        a.setflags(write=False)
        object.__setattr__(self, "images", a)

    @property
    def size(self) -> int:
        return self.images.shape[0]

    def __call__(self, v: int) -> int:
        return int(self.images[v])

    def __eq__(self, other) -> bool:
        if not isinstance(other, MapOnV):
            return NotImplemented
        return self.size == other.size and bool(np.array_equal(self.images, other.images))

    def __repr__(self) -> str:
        return f"MapOnV(size={self.size})"

    @classmethod
    def identity(cls, n: int) -> "MapOnV":
        return cls(np.arange(n, dtype=np.int64))

    @classmethod
    def constant(cls, n: int, value: int) -> "MapOnV":
        return cls(np.full(n, value, dtype=np.int64))

    @property
    def image_count(self) -> int:
        """Number of distinct image points (n for a bijection)."""
        return int(np.unique(self.images).size)


def similarity_fraction(e: MapOnV, f: MapOnV) -> Fraction:
    """Fraction of vertices where the two maps disagree (exact rational).

    This is a pseudometric on Map(V): zero on equal maps, symmetric, and
    subadditive along triples.
    """
    if e.size != f.size:
        raise DomainError(f"maps live on different vertex sets: {e.size} vs {f.size}")
    return Fraction(int(np.count_nonzero(e.images != f.images)), e.size)


def compose(e: MapOnV, f: MapOnV) -> MapOnV:
    """The composite map e after f."""
    if e.size != f.size:
        raise DomainError(f"maps live on different vertex sets: {e.size} vs {f.size}")
    return MapOnV(e.images[f.images])


def _normalize_window(elements, group: Group) -> tuple:
    """Accept a Ball or an iterable of elements; identity first, no repeats."""
    if isinstance(elements, Ball):
        items = list(elements.elements)
    else:
        items = list(elements)
    out = [group.identity]
    seen = {group.identity}
    for el in items:
        if el not in seen:
            seen.add(el)
            out.append(el)
    return tuple(out)


@dataclass(eq=False)
class SoficApproximation:
    """Maps phi(g) on a fixed vertex set for every g in the window F.

    phi may cover more than F (builders store the pair products too); F is
    the window the defect report quantifies over.  epsilon is the target
    tolerance the approximation is meant to satisfy.
    """

    group: Group
    n_points: int
    window: tuple
    phi: dict
    epsilon: Fraction
    label: str = ""

    def __post_init__(self):
        self.epsilon = exact_fraction(self.epsilon)
        if not 0 < self.epsilon < 1:
            raise DomainError(f"tolerance must lie in (0, 1), got {self.epsilon}")
        if self.n_points < 1:
            raise DomainError("approximations need at least one vertex")
        if not self.window or self.window[0] != self.group.identity:
            raise DomainError("window must start with the group identity")
        if len(set(self.window)) != len(self.window):
            raise DomainError("window has repeated elements")
        for g in self.window:
            if g not in self.phi:
                raise DomainError(
                    f"phi is missing the window element {self.group.element_name(g)!r}"
                )
        for g, m in self.phi.items():
            if not isinstance(m, MapOnV) or m.size != self.n_points:
                raise DomainError(
                    f"phi({self.group.element_name(g)!r}) is not a map on "
                    f"{self.n_points} vertices"
                )

    def map_for(self, g) -> MapOnV:
        try:
            return self.phi[g]
        except KeyError:
            raise DomainError(
                f"element {self.group.element_name(g)!r} is outside the stored domain"
            ) from None

    def has(self, g) -> bool:
        return g in self.phi

    def domain(self) -> tuple:
        """All elements with stored maps: the window first, extras after."""
        extras = [g for g in self.phi if g not in set(self.window)]
        return self.window + tuple(sorted(extras, key=self.group.sort_key))


@dataclass(frozen=True, eq=False)
class DefectReport:
    """Measured defects of one approximation, all exact rationals.

    pair_defects covers every (e, f) in F x F whose product has a stored
    map; max_a maximizes over pairs with ef back in F, max_a_extended over
    all measured pairs.  missing_pairs lists products with no stored map.
    """

    label: str
    n_points: int
    window: tuple
    pair_defects: dict
    missing_pairs: tuple
    external_pairs: tuple
    defect_b: Fraction
    agreement_c: dict
    max_a: Fraction | None
    max_a_extended: Fraction | None
    max_agreement: Fraction | None

    def meets(self, epsilon) -> bool:
        """Conditions (a) and (b) within epsilon, condition (c) below it."""
        eps = exact_fraction(epsilon)
        if self.max_a is not None and self.max_a > eps:
            return False
        if self.defect_b > eps:
            return False
        if self.max_agreement is not None and self.max_agreement >= eps:
            return False
        return True


def defect_report(approx: SoficApproximation) -> DefectReport:
    """Measure all three defects of an approximation over its window."""
    group = approx.group
    n = approx.n_points
    window = approx.window
    wset = set(window)
    ident = MapOnV.identity(n)
    pair_defects: dict = {}
    missing: list = []
    external: list = []
    max_a: Fraction | None = None
    max_ext: Fraction | None = None
    for e, f in itertools.product(window, repeat=2):
        prod = group.mul(e, f)
        if not approx.has(prod):
            missing.append((e, f))
            continue
        d = similarity_fraction(compose(approx.map_for(e), approx.map_for(f)), approx.map_for(prod))
        pair_defects[(e, f)] = d
        if prod in wset:
            max_a = d if max_a is None else max(max_a, d)
        else:
            external.append((e, f))
        max_ext = d if max_ext is None else max(max_ext, d)
    defect_b = similarity_fraction(approx.map_for(group.identity), ident)
    agreement: dict = {}
    max_c: Fraction | None = None
    for e in window[1:]:
        agree = Fraction(n, n) - similarity_fraction(approx.map_for(e), ident)
        agreement[e] = agree
        max_c = agree if max_c is None else max(max_c, agree)
    return DefectReport(
        label=approx.label,
        n_points=n,
        window=window,
        pair_defects=pair_defects,
        missing_pairs=tuple(missing),
        external_pairs=tuple(external),
        defect_b=defect_b,
        agreement_c=agreement,
        max_a=max_a,
        max_a_extended=max_ext,
        max_agreement=max_c,
    )


# ---------------------------------------------------------------------------
# builders


def _window_with_products(group: Group, window: tuple) -> tuple:
    """The window followed by all pair products not already in it."""
    extra = []
    seen = set(window)
    for e, f in itertools.product(window, repeat=2):
        prod = group.mul(e, f)
        if prod not in seen:
            seen.add(prod)
            extra.append(prod)
    return window + tuple(sorted(extra, key=group.sort_key))


def _box_bounds(group: FreeAbelianGroup, window_spec) -> list[tuple[int, int]]:
    d = group.rank
    if isinstance(window_spec, int):
        if window_spec < 1:
            raise DomainError(f"box side must be positive, got {window_spec}")
        return [(0, window_spec)] * d
    spec = list(window_spec)
    if len(spec) != d:
        raise DomainError(f"window needs {d} per-axis entries, got {len(spec)}")
    bounds = []
    for item in spec:
        if isinstance(item, int):
            if item < 1:
                raise DomainError(f"box side must be positive, got {item}")
            bounds.append((0, item))
        else:
            lo, hi = item
            if hi <= lo:
                raise DomainError(f"empty axis range [{lo}, {hi})")
            bounds.append((int(lo), int(hi)))
    return bounds


def folner_approx(
    group: Group,
    window_spec,
    elements,
    epsilon=Fraction(1, 2),
    label: str = "",
) -> SoficApproximation:
    """Translation-on-a-window approximation.

    For Z^d the vertex set is a box of lattice points and
    phi(g)(v) = g + v when that stays inside the box, v otherwise.  For a
    finite table group the window is the whole group and phi is exact left
    translation (pass None as the window spec).
    """
    window = _normalize_window(elements, group)
    dom = _window_with_products(group, window)
    if isinstance(group, FreeAbelianGroup):
        bounds = _box_bounds(group, window_spec)
        axes = [range(lo, hi) for lo, hi in bounds]
        points = sorted(itertools.product(*axes))
        n = len(points)
        index = {pt: i for i, pt in enumerate(points)}
        phi: dict = {}
        for g in dom:
            images = np.empty(n, dtype=np.int64)
            for i, v in enumerate(points):
                moved = tuple(gv + vv for gv, vv in zip(g, v))
                images[i] = index.get(moved, i)
            phi[g] = MapOnV(images)
        return SoficApproximation(
            group=group,
            n_points=n,
            window=window,
            phi=phi,
            epsilon=epsilon,
            label=label or f"box:{'x'.join(str(hi - lo) for lo, hi in bounds)}",
        )
    if isinstance(group, TableGroup):
        if window_spec is not None:
            raise DomainError("finite groups use the whole group; pass None as window")
        n = group.order
        phi = {
            g: MapOnV(np.array([group.mul(g, v) for v in range(n)], dtype=np.int64))
            for g in dom
        }
        return SoficApproximation(
            group=group,
            n_points=n,
            window=window,
            phi=phi,
            epsilon=epsilon,
            label=label or f"regular:{group.name}",
        )
    raise DomainError(f"no translation builder for group kind {group.kind!r}")


def verify_quotient_hom(hom: QuotientHom, elements=(), sample_cap: int = 2000) -> None:
    """Check a claimed homomorphism onto a finite group.

    Verifies the identity, multiplicativity on all pairs from the source
    generators and the given elements (sampled deterministically past the
    cap), and surjectivity by closing the generator images in the target.
    """
    src, tgt = hom.source, hom.target
    if not tgt.is_finite():
        raise DomainError("quotient target must be a finite group")
    if hom(src.identity) != tgt.identity:
        raise DomainError("claimed homomorphism does not send identity to identity")
    probes = list(src.generators) + [el for el in elements if el not in set(src.generators)]
    pairs = list(itertools.product(probes, repeat=2))
    if len(pairs) > sample_cap:
        stride = len(pairs) // sample_cap + 1
        pairs = pairs[::stride]
    for a, b in pairs:
        if hom(src.mul(a, b)) != tgt.mul(hom(a), hom(b)):
            raise DomainError(
                "claimed homomorphism is not multiplicative at "
                f"({src.element_name(a)!r}, {src.element_name(b)!r})"
            )
    reached = {tgt.identity}
    frontier = [tgt.identity]
    images = [hom(g) for g in src.generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in images:
                y = tgt.mul(g, x)
                if y not in reached:
                    reached.add(y)
                    nxt.append(y)
        frontier = nxt
    if len(reached) != tgt.order:
        raise DomainError(
            f"generator images reach only {len(reached)} of {tgt.order} target elements"
        )


def quotient_approx(
    group: Group,
    hom: QuotientHom,
    elements,
    copies: int = 1,
    epsilon=Fraction(1, 2),
    label: str = "",
) -> SoficApproximation:
    """Exact approximation through a finite quotient.

    Vertices are `copies` disjoint copies of the quotient group Q acting on
    itself by left translation through the homomorphism.  Defects (a) and
    (b) vanish identically; the freeness agreement of g is 1 when g lies in
    the kernel and 0 otherwise.
    """
    if hom.source is not group:
        raise DomainError("homomorphism source does not match the group")
    copies = int(copies)
    if copies < 1:
        raise DomainError(f"copies must be positive, got {copies}")
    window = _normalize_window(elements, group)
    dom = _window_with_products(group, window)
    verify_quotient_hom(hom, dom)
    tgt = hom.target
    q_order = tgt.order
    q_elements = list(tgt.elements())
    n = q_order * copies
    phi: dict = {}
    for g in dom:
        img = hom(g)
        translated = np.array(
            [tgt.element_index(tgt.mul(img, q)) for q in q_elements], dtype=np.int64
        )
        images = np.empty(n, dtype=np.int64)
        for c in range(copies):
            images[c * q_order : (c + 1) * q_order] = translated + c * q_order
        phi[g] = MapOnV(images)
    return SoficApproximation(
        group=group,
        n_points=n,
        window=window,
        phi=phi,
        epsilon=epsilon,
        label=label or f"quotient:{q_order}" + (f"x{copies}" if copies > 1 else ""),
    )


# ---------------------------------------------------------------------------
# report rendering and serialization


def defect_pair_table(report: DefectReport, group: Group) -> str:
    """Human-readable defect listing, deterministically ordered."""
    lines = [
        f"approximation: {report.label}",
        f"vertices: {report.n_points}",
        f"window-size: {len(report.window)}",
        f"defect-b: {format_fraction(report.defect_b)}",
        f"max-a: {_fmt_opt(report.max_a)}",
        f"max-a-extended: {_fmt_opt(report.max_a_extended)}",
        f"max-agreement-c: {_fmt_opt(report.max_agreement)}",
        "",
        "pair defects (e, f, defect, product-in-window):",
    ]
    key = lambda pair: (group.sort_key(pair[0]), group.sort_key(pair[1]))  # noqa: E731
    external = set(report.external_pairs)
    for e, f in sorted(report.pair_defects, key=key):
        d = report.pair_defects[(e, f)]
        inside = "window" if (e, f) not in external else "outside"
        lines.append(
            f"  {group.element_name(e)} , {group.element_name(f)} : "
            f"{format_fraction(d)} [{inside}]"
        )
    if report.missing_pairs:
        lines.append("pairs with no stored product map:")
        for e, f in sorted(report.missing_pairs, key=key):
            lines.append(f"  {group.element_name(e)} , {group.element_name(f)}")
    lines.append("")
    lines.append("freeness agreement (element, fraction):")
    for e in sorted(report.agreement_c, key=group.sort_key):
        lines.append(
            f"  {group.element_name(e)} : {format_fraction(report.agreement_c[e])}"
        )
    return "\n".join(lines) + "\n"


def _fmt_opt(value: Fraction | None) -> str:
    return format_fraction(value) if value is not None else "-"


DEFECT_CSV_HEADER = "label,vertices,max_a,defect_b,max_agreement_c"


def defect_summary_csv(reports) -> str:
    """One CSV row per report: label, size, and the three headline defects."""
    lines = [DEFECT_CSV_HEADER]
    for rep in reports:
        lines.append(
            ",".join(
                [
                    rep.label,
                    str(rep.n_points),
                    _fmt_opt(rep.max_a),
                    format_fraction(rep.defect_b),
                    _fmt_opt(rep.max_agreement),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def save_approximation(approx: SoficApproximation, path) -> None:
    """Write an approximation as JSON, elements encoded as canonical words."""
    group = approx.group
    data = {
        "label": approx.label,
        "vertices": approx.n_points,
        "epsilon": format_fraction(approx.epsilon),
        "window": [group.element_name(g) for g in approx.window],
        "phi": {
            group.element_name(g): [int(v) for v in approx.phi[g].images]
            for g in approx.domain()
        },
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_approximation(path, group: Group) -> SoficApproximation:
    """Load an approximation saved by save_approximation, resolving words
    against the given group."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read approximation file {path}: {exc}") from exc
    try:
        window = tuple(parse_word(group, w) for w in data["window"])
        phi = {
            parse_word(group, w): MapOnV(np.array(images, dtype=np.int64))
            for w, images in data["phi"].items()
        }
        return SoficApproximation(
            group=group,
            n_points=int(data["vertices"]),
            window=window,
            phi=phi,
            epsilon=exact_fraction(data["epsilon"]),
            label=str(data.get("label", "")),
        )
    except KeyError as exc:
        raise DomainError(f"approximation file {path} is missing field {exc}") from exc


__all__ = [
    "DEFECT_CSV_HEADER",
    "DefectReport",
    "MapOnV",
    "SoficApproximation",
    "compose",
    "defect_pair_table",
    "defect_report",
    "defect_summary_csv",
    "folner_approx",
    "load_approximation",
    "quotient_approx",
    "save_approximation",
    "similarity_fraction",
    "verify_quotient_hom",
]
