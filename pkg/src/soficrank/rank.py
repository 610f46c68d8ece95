"""Linearization of self-map approximations and pseudo-rank sequences.

Each self-map e on n vertices linearizes to the n x n column-map matrix
with a single 1 per column: column v carries e_{e(v)}.  A group-ring
element then acts through the window maps, and the normalized matrix rank
rank/n plays the role of a rank function at finite scale: it is exactly 1
on the identity, submultiplicative, and additive on orthogonal idempotents.

The homomorphism defect of a pair (g, h) is the normalized rank of
phi(g) phi(h) - phi(gh).  Both factors are column maps, so the difference
has columns of the form e_a - e_b; the rank of such a matrix is the number
of touched basis vectors minus the number of connected components of the
graph on them, which lets large instances skip dense elimination.  The
dense route stays available for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._util import format_fraction
from .approx import SoficApproximation, compose, similarity_fraction
from .errors import DomainError
from .groups import (
    GroupRingElement,
    ring_element,
    ring_is_one,
    ring_mul,
    ring_one,
    ring_sub,
    ring_text,
)
from .linalg.dense import (
    FpMatrix,
    _require_prime,
    inverse,
    mat_mul,
    rank,
    random_invertible,
    random_matrix,
    regular_witness,
)


@dataclass(eq=False)
class Linearization:
    """Lazy column-map matrices over GF(p) for one approximation."""

    approx: SoficApproximation
    p: int
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.p = _require_prime(self.p)

    def matrix(self, g) -> FpMatrix:
        """The 0/1 matrix of phi(g): column v has its 1 in row phi(g)(v)."""
        if g not in self._cache:
            images = self.approx.map_for(g).images
            n = self.approx.n_points
            m = np.zeros((n, n), dtype=np.int64)
            m[images, np.arange(n)] = 1
            self._cache[g] = FpMatrix(self.p, m)
        return self._cache[g]

    def matrices(self) -> dict:
        """Matrices for every window element."""
        return {g: self.matrix(g) for g in self.approx.window}


def linearize(approx: SoficApproximation, p: int) -> Linearization:
    return Linearization(approx=approx, p=p)


def represent(a: GroupRingElement, lin: Linearization) -> FpMatrix:
    """The matrix of a group-ring element: sum of coeff * phi(s) over the
    support.  Every support element needs a stored map."""
    approx = lin.approx
    if a.group is not approx.group:
        raise DomainError("ring element and approximation live over different groups")
    if a.p != lin.p:
        raise DomainError(f"coefficient fields differ: GF({a.p}) vs GF({lin.p})")
    n = approx.n_points
    out = np.zeros((n, n), dtype=np.int64)
    cols = np.arange(n)
    for s, c in a.coeffs.items():
        images = approx.map_for(s).images
        np.add.at(out, (images, cols), c)
    return FpMatrix(lin.p, out)


def normalized_rank(m: FpMatrix) -> Fraction:
    """rank / n for a square matrix, as an exact rational in [0, 1]."""
    if not m.is_square:
        raise DomainError(f"normalized rank needs a square matrix, got {m.shape}")
    if m.rows == 0:
        raise DomainError("normalized rank needs a nonempty matrix")
    return Fraction(rank(m), m.rows)


def column_difference_rank(a_images: np.ndarray, b_images: np.ndarray) -> int:
    """Rank (over any field) of the matrix whose column v is
    e_{a(v)} - e_{b(v)}.

    Nonzero columns span the cut space of the multigraph joining a(v) to
    b(v), so the rank is (number of touched rows) minus (number of connected
    components among them); this is field-independent because each column
    has one +1 and one -1.
    """
    differ = a_images != b_images
    if not differ.any():
        return 0
    heads = a_images[differ]
    tails = b_images[differ]
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    components = 0
    for h, t in zip(heads.tolist(), tails.tolist()):
        for node in (h, t):
            if node not in parent:
                parent[node] = node
                components += 1
        rh, rt = find(h), find(t)
        if rh != rt:
            parent[rh] = rt
            components -= 1
    return len(parent) - components


def hom_defect(g, h, lin: Linearization) -> Fraction:
    """Normalized rank of phi(g) phi(h) - phi(gh).

    Computed structurally through column_difference_rank; never exceeds the
    disagreement fraction of the two maps, since each disagreeing vertex
    contributes at most one to the rank.
    """
    approx = lin.approx
    group = approx.group
    prod = group.mul(g, h)
    composite = compose(approx.map_for(g), approx.map_for(h))
    direct = approx.map_for(prod)
    r = column_difference_rank(composite.images, direct.images)
    value = Fraction(r, approx.n_points)
    assert value <= similarity_fraction(composite, direct)
    return value


def hom_defect_dense(g, h, lin: Linearization) -> Fraction:
    """Dense-elimination route for the same quantity, for cross-checking."""
    approx = lin.approx
    prod = approx.group.mul(g, h)
    m = mat_mul(lin.matrix(g), lin.matrix(h)) - lin.matrix(prod)
    return normalized_rank(m)


def separated_set(approx: SoficApproximation, support) -> list[int]:
    """Greedy maximal set of vertices with disjoint, collision-free images.

    A vertex v is admissible when the values phi(s)(v) over the support are
    pairwise distinct and disjoint from the values used by the vertices
    already chosen.  Vertices are scanned in index order, so the result is
    deterministic and maximal: no further vertex can be added.
    """
    support = list(support)
    if not support:
        raise DomainError("separated set needs a nonempty support")
    images = np.stack([approx.map_for(s).images for s in support])
    used: set[int] = set()
    chosen: list[int] = []
    k = len(support)
    for v in range(approx.n_points):
        vals = {int(x) for x in images[:, v]}
        if len(vals) != k or vals & used:
            continue
        chosen.append(v)
        used |= vals
    return chosen


@dataclass(frozen=True)
class InjectivityRecord:
    """One-level audit of the separated-set injectivity bound.

    injectivity_defect is the worst per-element failure of injectivity
    (fraction of vertices lost by phi(s) collapsing points).  The bound
    (1 - defect * |S|) / |S|**2 lower-bounds the separated fraction, and the
    represented matrix rank is at least the separated count.
    """

    support_size: int
    n_points: int
    separated_count: int
    rank_value: int
    injectivity_defect: Fraction
    lower_bound: Fraction
    separated_fraction: Fraction
    rank_ok: bool
    fraction_ok: bool

    @property
    def limit_floor(self) -> Fraction:
        return Fraction(1, self.support_size**2)

    def to_text(self) -> str:
        return (
            f"support-size: {self.support_size}\n"
            f"vertices: {self.n_points}\n"
            f"separated: {self.separated_count}\n"
            f"rank: {self.rank_value}\n"
            f"injectivity-defect: {format_fraction(self.injectivity_defect)}\n"
            f"lower-bound: {format_fraction(self.lower_bound)}\n"
            f"separated-fraction: {format_fraction(self.separated_fraction)}\n"
            f"rank-ok: {self.rank_ok}\n"
            f"fraction-ok: {self.fraction_ok}\n"
        )


def injectivity_bound_check(a: GroupRingElement, approx: SoficApproximation) -> InjectivityRecord:
    """Audit the rank lower bound for one nonzero element at one level.

    The separated vertices contribute independent columns to the matrix of
    a, so rank >= |X|; and greedy maximality forces
    |X| / n >= (1 - defect * |S|) / |S|**2.
    """
    if a.is_zero:
        raise DomainError("injectivity bound needs a nonzero ring element")
    if a.group is not approx.group:
        raise DomainError("ring element and approximation live over different groups")
    support = list(a.support)
    k = len(support)
    n = approx.n_points
    chosen = separated_set(approx, support)
    lin = linearize(approx, a.p)
    r = rank(represent(a, lin))
    defect = Fraction(0)
    for s in support:
        m = approx.map_for(s)
        defect = max(defect, Fraction(n - m.image_count, n))
    bound = max(Fraction(0), (1 - defect * k) / (k * k))
    frac = Fraction(len(chosen), n)
    return InjectivityRecord(
        support_size=k,
        n_points=n,
        separated_count=len(chosen),
        rank_value=r,
        injectivity_defect=defect,
        lower_bound=bound,
        separated_fraction=frac,
        rank_ok=r >= len(chosen),
        fraction_ok=frac >= bound,
    )


# ---------------------------------------------------------------------------
# rank sequences along families


@dataclass(frozen=True)
class LevelValue:
    label: str
    n_points: int
    value: Fraction


@dataclass(frozen=True)
class RankSequence:
    """Normalized ranks of one element along a family of approximations.

    Levels whose window misses part of the support are skipped and recorded
    as warnings.  The tail statistics summarize the later half of the
    levels, where the family has refined."""

    element_text: str
    levels: tuple
    warnings: tuple

    @property
    def last(self) -> Fraction:
        if not self.levels:
            raise DomainError("rank sequence has no computed levels")
        return self.levels[-1].value

    def _tail(self) -> tuple:
        if not self.levels:
            raise DomainError("rank sequence has no computed levels")
        return self.levels[len(self.levels) // 2 :]

    @property
    def tail_min(self) -> Fraction:
        return min(lv.value for lv in self._tail())

    @property
    def tail_max(self) -> Fraction:
        return max(lv.value for lv in self._tail())

    def to_csv(self) -> str:
        lines = ["label,vertices,normalized_rank"]
        for lv in self.levels:
            lines.append(f"{lv.label},{lv.n_points},{format_fraction(lv.value)}")
        return "\n".join(lines) + "\n"


def pseudo_rank_sequence(a: GroupRingElement, family) -> RankSequence:
    """Normalized rank of a at every level of a family.

    Any level not covering the support is skipped with a warning rather
    than failing, so coarse early levels are usable."""
    family = list(family)
    if not family:
        raise DomainError("rank sequences need at least one level")
    levels: list[LevelValue] = []
    warnings: list[str] = []
    for approx in family:
        if approx.group is not a.group:
            raise DomainError("family level lives over a different group")
        missing = [s for s in a.support if not approx.has(s)]
        if missing:
            names = ", ".join(a.group.element_name(s) for s in missing)
            warnings.append(f"level {approx.label}: support not covered ({names})")
            continue
        lin = linearize(approx, a.p)
        levels.append(
            LevelValue(
                label=approx.label,
                n_points=approx.n_points,
                value=normalized_rank(represent(a, lin)),
            )
        )
    return RankSequence(
        element_text=ring_text(a), levels=tuple(levels), warnings=tuple(warnings)
    )


# ---------------------------------------------------------------------------
# direct finiteness


@dataclass(frozen=True)
class FinitenessVerdict:
    """Exact one-sided-inverse audit for a pair of ring elements.

    ab_is_one / ba_is_one are decided by exact ring arithmetic; consistency
    means neither one-sided identity occurs without the other.  The two rank
    sequences track N(ab - 1) and N(ba - 1) along the family and must hit
    zero wherever the ring-side product is 1."""

    a_text: str
    b_text: str
    ab_is_one: bool
    ba_is_one: bool
    consistent: bool
    ab_sequence: RankSequence
    ba_sequence: RankSequence

    def to_text(self) -> str:
        lines = [
            f"a: {self.a_text}",
            f"b: {self.b_text}",
            f"ab-is-one: {self.ab_is_one}",
            f"ba-is-one: {self.ba_is_one}",
            f"consistent: {self.consistent}",
            "levels (label, vertices, N(ab-1), N(ba-1)):",
        ]
        ba_by_label = {lv.label: lv for lv in self.ba_sequence.levels}
        for lv in self.ab_sequence.levels:
            other = ba_by_label.get(lv.label)
            rhs = format_fraction(other.value) if other else "-"
            lines.append(
                f"  {lv.label} {lv.n_points} {format_fraction(lv.value)} {rhs}"
            )
        for w in self.ab_sequence.warnings + self.ba_sequence.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines) + "\n"


def direct_finiteness_check(
    a: GroupRingElement, b: GroupRingElement, family
) -> FinitenessVerdict:
    """Check ab = 1 iff ba = 1, with rank-sequence corroboration.

    The verdict is computed exactly on the ring side; the sequences of
    N(ab - 1) and N(ba - 1) along the family corroborate it at every level
    that covers the supports."""
    if a.group is not b.group or a.p != b.p:
        raise DomainError("direct finiteness needs elements over one ring")
    ab = ring_mul(a, b)
    ba = ring_mul(b, a)
    one = ring_one(a.group, a.p)
    ab_is_one = ring_is_one(ab)
    ba_is_one = ring_is_one(ba)
    return FinitenessVerdict(
        a_text=ring_text(a),
        b_text=ring_text(b),
        ab_is_one=ab_is_one,
        ba_is_one=ba_is_one,
        consistent=ab_is_one == ba_is_one,
        ab_sequence=pseudo_rank_sequence(ring_sub(ab, one), family),
        ba_sequence=pseudo_rank_sequence(ring_sub(ba, one), family),
    )


def regular_rep_matrix(a: GroupRingElement) -> FpMatrix:
    """Matrix of left multiplication by a on the group algebra of a finite
    group, in the element_index basis."""
    group = a.group
    if not group.is_finite():
        raise DomainError("regular representation needs a finite group")
    n = group.order
    out = np.zeros((n, n), dtype=np.int64)
    elements = list(group.elements())
    for s, c in a.coeffs.items():
        for h in elements:
            out[group.element_index(group.mul(s, h)), group.element_index(h)] += c
    return FpMatrix(a.p, out)


def ring_inverse_via_regular_rep(a: GroupRingElement):
    """Two-sided inverse of a in GF(p)[G] for finite G, or None.

    Inverts the left-regular matrix and reads the inverse element off the
    identity column; the caller can verify by ring multiplication."""
    group = a.group
    m = regular_rep_matrix(a)
    try:
        x = inverse(m)
    except DomainError:
        return None
    ident_col = x.entries[:, group.element_index(group.identity)]
    pairs = [(h, int(ident_col[group.element_index(h)])) for h in group.elements()]
    return ring_element(group, a.p, pairs)


# ---------------------------------------------------------------------------
# axiom audits on random matrices


@dataclass(frozen=True)
class AxiomsReport:
    """Outcome of randomized checks of the rank-function axioms on
    GF(p)^(n x n): normalization on 0 and 1, submultiplicativity, and
    additivity on orthogonal idempotents."""

    p: int
    size: int
    trials: int
    seed: int
    constants_ok: bool
    product_checked: int
    product_failures: int
    additivity_checked: int
    additivity_failures: int
    first_failure: str | None

    @property
    def ok(self) -> bool:
        return (
            self.constants_ok
            and self.product_failures == 0
            and self.additivity_failures == 0
        )

    def to_text(self) -> str:
        return (
            f"prime: {self.p}\n"
            f"size: {self.size}\n"
            f"trials: {self.trials}\n"
            f"seed: {self.seed}\n"
            f"constants-ok: {self.constants_ok}\n"
            f"product-checked: {self.product_checked}\n"
            f"product-failures: {self.product_failures}\n"
            f"additivity-checked: {self.additivity_checked}\n"
            f"additivity-failures: {self.additivity_failures}\n"
            f"ok: {self.ok}\n"
        )


def pseudo_rank_axioms_check(p: int, size: int, trials: int, seed: int) -> AxiomsReport:
    """Randomized audit of the rank-function axioms at one matrix size.

    Idempotent pairs are built as conjugates of projections onto disjoint
    coordinate blocks, so orthogonality is exact by construction and then
    re-verified before testing additivity."""
    p = _require_prime(p)
    if size < 1 or trials < 0:
        raise DomainError("size must be positive and trials nonnegative")
    rng = np.random.default_rng(seed)
    ident = FpMatrix.identity(p, size)
    zero = FpMatrix.zeros(p, size, size)
    constants_ok = normalized_rank(ident) == 1 and normalized_rank(zero) == 0
    first_failure = None if constants_ok else "constants: N(1) != 1 or N(0) != 0"
    product_failures = 0
    for t in range(trials):
        x = random_matrix(rng, p, size, size)
        y = random_matrix(rng, p, size, size)
        nx, ny, nxy = normalized_rank(x), normalized_rank(y), normalized_rank(mat_mul(x, y))
        if nxy > nx or nxy > ny:
            product_failures += 1
            if first_failure is None:
                first_failure = f"product trial {t}: N(xy) exceeds a factor"
    additivity_failures = 0
    for t in range(trials):
        k1 = int(rng.integers(0, size + 1))
        k2 = int(rng.integers(0, size - k1 + 1))
        basis = random_invertible(rng, p, size)
        basis_inv = inverse(basis)
        e = _conjugated_projector(basis, basis_inv, 0, k1)
        f = _conjugated_projector(basis, basis_inv, k1, k1 + k2)
        if (
            mat_mul(e, e) != e
            or mat_mul(f, f) != f
            or mat_mul(e, f) != zero
            or mat_mul(f, e) != zero
        ):
            raise DomainError("constructed idempotents failed orthogonality")
        if normalized_rank(e + f) != normalized_rank(e) + normalized_rank(f):
            additivity_failures += 1
            if first_failure is None:
                first_failure = f"additivity trial {t}: N(e+f) != N(e) + N(f)"
    return AxiomsReport(
        p=p,
        size=size,
        trials=trials,
        seed=seed,
        constants_ok=constants_ok,
        product_checked=trials,
        product_failures=product_failures,
        additivity_checked=trials,
        additivity_failures=additivity_failures,
        first_failure=first_failure,
    )


def _conjugated_projector(basis: FpMatrix, basis_inv: FpMatrix, lo: int, hi: int) -> FpMatrix:
    n = basis.rows
    j = np.zeros((n, n), dtype=np.int64)
    for i in range(lo, hi):
        j[i, i] = 1
    return mat_mul(mat_mul(basis, FpMatrix(basis.p, j)), basis_inv)


@dataclass(frozen=True)
class RegularityReport:
    """Outcome of randomized regular-witness verification."""

    p: int
    max_size: int
    trials: int
    seed: int
    checked: int
    failures: int
    first_failure: str | None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_text(self) -> str:
        return (
            f"prime: {self.p}\n"
            f"max-size: {self.max_size}\n"
            f"trials: {self.trials}\n"
            f"seed: {self.seed}\n"
            f"checked: {self.checked}\n"
            f"failures: {self.failures}\n"
            f"ok: {self.ok}\n"
        )


def regularity_witness_check(p: int, max_size: int, trials: int, seed: int) -> RegularityReport:
    """Draw random square matrices and verify x y x == x exactly for the
    computed witness y."""
    p = _require_prime(p)
    if max_size < 1 or trials < 0:
        raise DomainError("max_size must be positive and trials nonnegative")
    rng = np.random.default_rng(seed)
    failures = 0
    first_failure = None
    for t in range(trials):
        n = int(rng.integers(1, max_size + 1))
        x = random_matrix(rng, p, n, n)
        y = regular_witness(x)
        if mat_mul(mat_mul(x, y), x) != x:
            failures += 1
            if first_failure is None:
                first_failure = f"trial {t}: witness failed at size {n}"
    return RegularityReport(
        p=p,
        max_size=max_size,
        trials=trials,
        seed=seed,
        checked=trials,
        failures=failures,
        first_failure=first_failure,
    )


__all__ = [
    "AxiomsReport",
    "FinitenessVerdict",
    "InjectivityRecord",
    "LevelValue",
    "Linearization",
    "RankSequence",
    "RegularityReport",
    "column_difference_rank",
    "direct_finiteness_check",
    "hom_defect",
    "hom_defect_dense",
    "injectivity_bound_check",
    "linearize",
    "normalized_rank",
    "pseudo_rank_axioms_check",
    "pseudo_rank_sequence",
    "regular_rep_matrix",
    "regularity_witness_check",
    "represent",
    "ring_inverse_via_regular_rep",
    "separated_set",
]
