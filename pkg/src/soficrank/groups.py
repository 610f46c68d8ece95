"""Finitely generated groups with exact arithmetic, word-metric balls, and
group-ring elements over prime fields.

Three group kinds are supported, chosen so the word problem is decidable by
construction: finite groups given by multiplication tables (or built from
permutation generators), free-abelian groups Z^d, and finite quotients
Z^d / (m_1 Z x ... x m_d Z).  Elements are plain hashable values: integer
indices for table groups, integer tuples for the abelian kinds.

Each group carries a fixed symmetric generating set; balls are enumerated
breadth-first in the word metric of that set, with ties inside a shell
broken by the group's canonical sort key, so enumeration order is
deterministic.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .errors import DomainError, ResourceLimitError
from .linalg.dense import _require_prime

DEFAULT_BALL_CAP = 200_000

# how many triples to sample when full associativity checking is too big
_ASSOC_SAMPLE = 500
_ASSOC_EXHAUSTIVE_LIMIT = 12


class Group:
    """Base class: exact group arithmetic plus naming and ordering hooks."""

    kind: str = ""

    def __init__(self, name: str):
        self.name = name
        self.identity = None
        self.generators: list = []
        self.generator_names: dict = {}  # base name -> generator element

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sort_key(self, el):
        """Total order on elements used for deterministic tie-breaking."""
        raise NotImplementedError

    def element_name(self, el) -> str:
        """Short canonical word naming an element ('1' for the identity)."""
        raise NotImplementedError

    def power(self, el, k: int):
        if k < 0:
            el = self.inv(el)
            k = -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, el)
        return out

    def is_finite(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


def _check_symmetric_generators(group: Group) -> None:
    gens = group.generators
    if not gens:
        raise DomainError(f"group {group.name!r} has no generators")
    gen_set = set(gens)
    if len(gen_set) != len(gens):
        raise DomainError(f"group {group.name!r} has duplicate generators")
    if group.identity in gen_set:
        raise DomainError(f"group {group.name!r} lists the identity as a generator")
    for g in gens:
        if group.inv(g) not in gen_set:
            raise DomainError(
                f"generating set of {group.name!r} is not closed under inverses"
            )


class TableGroup(Group):
    """A finite group given by its full multiplication table.

    Elements are the indices 0..n-1; table[i][j] is the index of the product
    of element i by element j (in that order).
    """

    kind = "finite-by-table"

    def __init__(
        self,
        name: str,
        table,
        generator_ids,
        element_names=None,
        check_associativity: bool = True,
    ):
        super().__init__(name)
        self.table = [list(map(int, row)) for row in table]
        n = len(self.table)
        if n == 0:
            raise DomainError(f"group {name!r} has an empty table")
        for row in self.table:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise DomainError(f"table of {name!r} is not a square over 0..{n - 1}")
        self._validate_latin(name, n)
        self.order = n
        ident = self._find_identity(name, n)
        self.identity = ident
        self._inverse = self._build_inverses(name, n, ident)
        if check_associativity:
            self._validate_associativity(name, n)
        if element_names is None:
            element_names = [("1" if i == ident else f"g{i}") for i in range(n)]
        element_names = [str(s) for s in element_names]
        if len(element_names) != n or len(set(element_names)) != n:
            raise DomainError(f"group {name!r} needs {n} distinct element names")
        self.element_names = element_names
        self._name_to_id = {s: i for i, s in enumerate(element_names)}
        self.generators = [int(g) for g in generator_ids]
        for g in self.generators:
            if not 0 <= g < n:
                raise DomainError(f"generator id {g} outside 0..{n - 1} in {name!r}")
        _check_symmetric_generators(self)
        self.generator_names = {element_names[g]: g for g in self.generators}
        self._validate_generating(name, n)

    def _validate_latin(self, name: str, n: int) -> None:
        full = set(range(n))
        for i, row in enumerate(self.table):
            if set(row) != full:
                raise DomainError(f"row {i} of {name!r} is not a permutation")
        for j in range(n):
            if {row[j] for row in self.table} != full:
                raise DomainError(f"column {j} of {name!r} is not a permutation")

    def _find_identity(self, name: str, n: int) -> int:
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                return e
        raise DomainError(f"table of {name!r} has no identity element")

    def _build_inverses(self, name: str, n: int, ident: int) -> list[int]:
        inv = [-1] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == ident and self.table[b][a] == ident:
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise DomainError(f"element {a} of {name!r} has no two-sided inverse")
        return inv

    def _validate_associativity(self, name: str, n: int) -> None:
        if n <= _ASSOC_EXHAUSTIVE_LIMIT:
            triples = itertools.product(range(n), repeat=3)
        else:
            rnd = random.Random(0)
            triples = (
                (rnd.randrange(n), rnd.randrange(n), rnd.randrange(n))
                for _ in range(_ASSOC_SAMPLE)
            )
        t = self.table
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise DomainError(f"table of {name!r} is not associative at {(a, b, c)}")

    def _validate_generating(self, name: str, n: int) -> None:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = self.table[g][x]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(seen) != n:
            raise DomainError(
                f"generators of {name!r} reach only {len(seen)} of {n} elements"
            )

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inverse[a]

    def sort_key(self, el):
        return el

    def element_name(self, el) -> str:
        return self.element_names[el]

    def element_by_name(self, name: str) -> int:
        if name not in self._name_to_id:
            raise DomainError(f"group {self.name!r} has no element named {name!r}")
        return self._name_to_id[name]

    def is_finite(self) -> bool:
        return True

    def elements(self):
        return range(self.order)

    def element_index(self, el) -> int:
        return int(el)

    @classmethod
    def from_permutations(
        cls, name: str, perms: dict, max_order: int = 10_000
    ) -> "TableGroup":
        """Close a set of named permutations (tuples over 0..k-1) into a group.

        Inverses are adjoined automatically; element names are shortest-word
        products of the generator names, composition acting on the left.
        """
        degree = None
        base: dict[str, tuple[int, ...]] = {}
        for pname, perm in perms.items():
            perm = tuple(int(v) for v in perm)
            if degree is None:
                degree = len(perm)
            if len(perm) != degree or sorted(perm) != list(range(degree)):
                raise DomainError(f"{pname!r} is not a permutation of 0..{degree - 1}")
            base[str(pname)] = perm
        if not base:
            raise DomainError(f"group {name!r} needs at least one permutation")
        ident = tuple(range(degree))
        gens: dict[str, tuple[int, ...]] = {}
        for pname, perm in base.items():
            gens[pname] = perm
        for pname, perm in base.items():
            inv = tuple(perm.index(i) for i in range(degree))
            if inv not in gens.values():
                gens[f"{pname}^-1"] = inv
        # breadth-first closure; names record one shortest word per element
        names: dict[tuple[int, ...], str] = {ident: "1"}
        order: list[tuple[int, ...]] = [ident]
        frontier = [ident]
        gen_items = sorted(gens.items())
        while frontier:
            nxt = []
            for x in frontier:
                for gname, g in gen_items:
                    y = tuple(g[x[i]] for i in range(degree))
                    if y not in names:
                        word = gname if names[x] == "1" else f"{gname} {names[x]}"
                        names[y] = word
                        order.append(y)
                        nxt.append(y)
                        if len(order) > max_order:
                            raise ResourceLimitError(
                                f"closure of {name!r} exceeds {max_order} elements"
                            )
            frontier = nxt
        index = {perm: i for i, perm in enumerate(order)}
        table = [
            [index[tuple(a[b[i]] for i in range(degree))] for b in order] for a in order
        ]
        return cls(
            name,
            table,
            generator_ids=[index[g] for _, g in gen_items],
            element_names=[names[perm] for perm in order],
        )


def _exponent_name(base: str, k: int) -> str:
    if k == 1:
        return base
    return f"{base}^{k}"


class FreeAbelianGroup(Group):
    """Z^d with elements as integer d-tuples and componentwise addition."""

    kind = "free-abelian-rank-d"

    def __init__(self, rank: int, generator_names=None, name: str | None = None):
        rank = int(rank)
        if rank < 1:
            raise DomainError(f"free-abelian rank must be positive, got {rank}")
        if generator_names is None:
            generator_names = ["t"] if rank == 1 else [f"x{i + 1}" for i in range(rank)]
        generator_names = [str(s) for s in generator_names]
        if len(generator_names) != rank or len(set(generator_names)) != rank:
            raise DomainError(f"need {rank} distinct generator names")
        super().__init__(name or f"Z^{rank}")
        self.rank = rank
        self.axis_names = generator_names
        self.identity = (0,) * rank
        gens = []
        for i in range(rank):
            unit = tuple(1 if j == i else 0 for j in range(rank))
            gens.append(unit)
            gens.append(tuple(-v for v in unit))
        self.generators = gens
        self.generator_names = {
            generator_names[i]: gens[2 * i] for i in range(rank)
        }

    def _check(self, el):
        if not (isinstance(el, tuple) and len(el) == self.rank):
            raise DomainError(f"element {el!r} is not a {self.rank}-tuple")
        return el

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(self._check(a), self._check(b)))

    def inv(self, a):
        return tuple(-x for x in self._check(a))

    def sort_key(self, el):
        return el

    def element_name(self, el) -> str:
        parts = [
            _exponent_name(self.axis_names[i], v)
            for i, v in enumerate(self._check(el))
            if v != 0
        ]
        return " ".join(parts) if parts else "1"


class FiniteQuotientGroup(Group):
    """Z^d reduced modulo per-axis moduli; elements are reduced d-tuples."""

    kind = "finite-quotient-of"

    def __init__(self, moduli, generator_names=None, name: str | None = None):
        moduli = tuple(int(m) for m in moduli)
        if not moduli or any(m < 1 for m in moduli):
            raise DomainError(f"moduli must be positive integers, got {moduli}")
        self.moduli = moduli
        self.parent = FreeAbelianGroup(len(moduli), generator_names)
        super().__init__(name or "Z^%d mod %s" % (len(moduli), list(moduli)))
        self.axis_names = self.parent.axis_names
        self.identity = (0,) * len(moduli)
        self.order = 1
        for m in moduli:
            self.order *= m
        gens = []
        for g in self.parent.generators:
            q = self.project(g)
            if q != self.identity and q not in gens:
                gens.append(q)
        if not gens:
            raise DomainError("quotient is trivial; it has no usable generators")
        self.generators = gens
        self.generator_names = {
            name: self.project(g)
            for name, g in self.parent.generator_names.items()
            if self.project(g) != self.identity
        }

    def project(self, el):
        if not (isinstance(el, tuple) and len(el) == len(self.moduli)):
            raise DomainError(f"element {el!r} is not a {len(self.moduli)}-tuple")
        return tuple(v % m for v, m in zip(el, self.moduli))

    def mul(self, a, b):
        return tuple(
            (x + y) % m for x, y, m in zip(self.project(a), self.project(b), self.moduli)
        )

    def inv(self, a):
        return tuple((-x) % m for x, m in zip(self.project(a), self.moduli))

    def sort_key(self, el):
        return el

    def element_name(self, el) -> str:
        parts = [
            _exponent_name(self.axis_names[i], v)
            for i, v in enumerate(self.project(el))
            if v != 0
        ]
        return " ".join(parts) if parts else "1"

    def is_finite(self) -> bool:
        return True

    def elements(self):
        for combo in itertools.product(*(range(m) for m in self.moduli)):
            yield combo

    def element_index(self, el) -> int:
        """Mixed-radix index; matches the order of elements()."""
        el = self.project(el)
        idx = 0
        for v, m in zip(el, self.moduli):
            idx = idx * m + v
        return idx


@dataclass(frozen=True, eq=False)
class QuotientHom:
    """A homomorphism onto a finite group, given as a callable on elements."""

    source: Group
    target: Group
    fn: object

    def __call__(self, el):
        return self.fn(el)


def identity_hom(group: Group) -> QuotientHom:
    """The identity map of a finite group, as a quotient homomorphism."""
    if not group.is_finite():
        raise DomainError(f"group {group.name!r} is not finite")
    return QuotientHom(group, group, lambda x: x)


def projection_hom(group: FreeAbelianGroup, moduli) -> QuotientHom:
    """Reduction of Z^d modulo per-axis moduli."""
    if not isinstance(group, FreeAbelianGroup):
        raise DomainError("projection_hom needs a free-abelian source")
    target = FiniteQuotientGroup(moduli, generator_names=group.axis_names)
    if target.parent.rank != group.rank:
        raise DomainError(
            f"moduli count {len(target.moduli)} does not match rank {group.rank}"
        )
    return QuotientHom(group, target, target.project)


# ---------------------------------------------------------------------------
# word-metric balls


@dataclass(frozen=True, eq=False)
class Ball:
    """The radius-r ball of a group in the word metric of a generating set.

    elements are listed shell by shell (word length 0, 1, ..., r), each
    shell sorted by the group's canonical key.
    """

    group: Group
    radius: int
    generators: tuple
    elements: tuple
    word_length: dict
    _position: dict = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, el) -> bool:
        return el in self.word_length

    def __iter__(self):
        return iter(self.elements)

    def index(self, el) -> int:
        if el not in self._position:
            raise DomainError(f"element {el!r} is outside this radius-{self.radius} ball")
        return self._position[el]


def ball(
    group: Group,
    radius: int,
    generators=None,
    max_elements: int = DEFAULT_BALL_CAP,
) -> Ball:
    """Breadth-first ball enumeration: every element of word length k > 0
    arises as g * x with g a generator and x of word length k - 1."""
    radius = int(radius)
    if radius < 0:
        raise DomainError(f"ball radius must be nonnegative, got {radius}")
    gens = list(generators) if generators is not None else list(group.generators)
    if generators is not None:
        gen_set = set(gens)
        for g in gens:
            if group.inv(g) not in gen_set:
                raise DomainError("ball generating set is not closed under inverses")
    lengths = {group.identity: 0}
    ordered = [group.identity]
    shell = [group.identity]
    for k in range(1, radius + 1):
        found = set()
        for x in shell:
            for g in gens:
                y = group.mul(g, x)
                if y not in lengths and y not in found:
                    found.add(y)
        shell = sorted(found, key=group.sort_key)
        for y in shell:
            lengths[y] = k
        ordered.extend(shell)
        if len(ordered) > max_elements:
            raise ResourceLimitError(
                f"ball of radius {radius} exceeds {max_elements} elements"
            )
        if not shell:
            break
    return Ball(
        group=group,
        radius=radius,
        generators=tuple(gens),
        elements=tuple(ordered),
        word_length=lengths,
        _position={el: i for i, el in enumerate(ordered)},
    )


def min_radius_covering(group: Group, elements, max_radius: int = 64) -> int:
    """Smallest ball radius containing all the given elements."""
    targets = set(elements)
    prev_size = -1
    for r in range(max_radius + 1):
        b = ball(group, r)
        if targets <= set(b.elements):
            return r
        if len(b) == prev_size:
            raise DomainError(
                "elements are not reachable from the generating set at any radius"
            )
        prev_size = len(b)
    raise ResourceLimitError(
        f"elements not covered by any ball of radius <= {max_radius}"
    )


# ---------------------------------------------------------------------------
# words


def parse_word(group: Group, text: str):
    """Parse a word like 't^2', 'x1 x2^-1', or '1' into a group element.

    Tokens are generator names with optional integer exponents, separated by
    whitespace or '*'; '1' (or 'e') denotes the identity.
    """
    out = group.identity
    tokens = text.replace("*", " ").split()
    if not tokens:
        raise DomainError(f"empty word in {text!r}")
    for tok in tokens:
        if tok in ("1", "e"):
            continue
        base, caret, exp_text = tok.partition("^")
        if base not in group.generator_names:
            raise DomainError(f"unknown generator {base!r} in word {text!r}")
        if caret and not exp_text:
            raise DomainError(f"bad exponent in token {tok!r}")
        try:
            exp = int(exp_text) if exp_text else 1
        except ValueError as exc:
            raise DomainError(f"bad exponent in token {tok!r}") from exc
        out = group.mul(out, group.power(group.generator_names[base], exp))
    return out


# ---------------------------------------------------------------------------
# group rings over GF(p)


@dataclass(frozen=True, eq=False)
class GroupRingElement:
    """A finitely supported GF(p)-combination of group elements.

    coeffs maps elements to nonzero residues in [1, p).  Instances are
    created through ring_element and treated as immutable.
    """

    group: Group
    p: int
    coeffs: dict

    @property
    def support(self) -> tuple:
        return tuple(sorted(self.coeffs, key=self.group.sort_key))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, el) -> int:
        return self.coeffs.get(el, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return (
            self.group is other.group and self.p == other.p and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"GroupRingElement(p={self.p}, {ring_text(self)!r})"


def ring_element(group: Group, p: int, pairs) -> GroupRingElement:
    """Build a ring element from (element, coefficient) pairs.

    Duplicate elements are combined and zero coefficients dropped.
    """
    p = _require_prime(p)
    coeffs: dict = {}
    for el, c in pairs:
        c = (coeffs.get(el, 0) + int(c)) % p
        if c:
            coeffs[el] = c
        else:
            coeffs.pop(el, None)
    return GroupRingElement(group, p, coeffs)


def ring_zero(group: Group, p: int) -> GroupRingElement:
    return ring_element(group, p, [])


def ring_one(group: Group, p: int) -> GroupRingElement:
    return ring_element(group, p, [(group.identity, 1)])


def _check_ring_compat(a: GroupRingElement, b: GroupRingElement) -> None:
    if a.group is not b.group:
        raise DomainError("ring elements live over different groups")
    if a.p != b.p:
        raise DomainError(f"mixed coefficient fields: GF({a.p}) vs GF({b.p})")


def ring_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    _check_ring_compat(a, b)
    return ring_element(a.group, a.p, list(a.coeffs.items()) + list(b.coeffs.items()))


def ring_neg(a: GroupRingElement) -> GroupRingElement:
    return ring_element(a.group, a.p, [(el, -c) for el, c in a.coeffs.items()])


def ring_sub(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return ring_add(a, ring_neg(b))


def ring_scale(c: int, a: GroupRingElement) -> GroupRingElement:
    return ring_element(a.group, a.p, [(el, v * int(c)) for el, v in a.coeffs.items()])


def ring_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Convolution product: group multiplication on supports, GF(p) on
    coefficients."""
    _check_ring_compat(a, b)
    g = a.group
    pairs = [
        (g.mul(x, y), cx * cy)
        for x, cx in a.coeffs.items()
        for y, cy in b.coeffs.items()
    ]
    return ring_element(g, a.p, pairs)


def ring_is_one(a: GroupRingElement) -> bool:
    """True exactly when a is the multiplicative unit 1*identity."""
    return a.coeffs == {a.group.identity: 1}


def ring_text(a: GroupRingElement) -> str:
    """Canonical text form, terms ordered by the group's sort key."""
    if a.is_zero:
        return "0"
    parts = []
    for el in a.support:
        c = a.coeffs[el]
        word = a.group.element_name(el)
        parts.append(word if c == 1 and word != "1" else f"{c}*{word}")
    return " + ".join(parts)


def parse_ring_element(group: Group, p: int, text: str) -> GroupRingElement:
    """Parse 'c*word + c*word + ...'; coefficients default to 1."""
    text = text.strip()
    if not text:
        raise DomainError("empty ring-element text")
    if text == "0":
        return ring_zero(group, p)
    pairs = []
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise DomainError(f"empty term in {text!r}")
        coeff = 1
        word = term
        if "*" in term:
            head, _, rest = term.partition("*")
            try:
                coeff = int(head)
                word = rest
            except ValueError:
                word = term  # '*' was a word separator, not a coefficient
        pairs.append((parse_word(group, word), coeff))
    return ring_element(group, p, pairs)


# ---------------------------------------------------------------------------
# group description files


@dataclass(frozen=True, eq=False)
class GroupDocument:
    """A parsed group description: the group, an optional coefficient prime,
    and named ring elements defined over it."""

    group: Group
    prime: int | None
    elements: dict


def parse_group_document(data: dict) -> GroupDocument:
    if not isinstance(data, dict):
        raise DomainError("group description must be a JSON object")
    kind = data.get("kind")
    name = data.get("name")
    if kind == "free-abelian":
        if "rank" not in data:
            raise DomainError("free-abelian description needs a 'rank'")
        group: Group = FreeAbelianGroup(
            data["rank"], data.get("generator_names"), name=name
        )
    elif kind == "finite-quotient":
        if "moduli" not in data:
            raise DomainError("finite-quotient description needs 'moduli'")
        group = FiniteQuotientGroup(
            data["moduli"], data.get("generator_names"), name=name
        )
    elif kind == "finite-table":
        group = _parse_finite_table(data, name)
    else:
        raise DomainError(f"unknown group kind {kind!r}")
    prime = data.get("prime")
    if prime is not None:
        prime = _require_prime(prime)
    elements: dict = {}
    raw = data.get("elements", {})
    if raw:
        if prime is None:
            raise DomainError("named elements need a 'prime' field")
        if not isinstance(raw, dict):
            raise DomainError("'elements' must map names to definitions")
        for ename, spec in raw.items():
            elements[str(ename)] = _parse_element_spec(group, prime, ename, spec)
    return GroupDocument(group=group, prime=prime, elements=elements)


def _parse_finite_table(data: dict, name) -> Group:
    name = name or "finite group"
    if "permutations" in data:
        perms = data["permutations"]
        if not isinstance(perms, dict):
            raise DomainError("'permutations' must map names to index tuples")
        return TableGroup.from_permutations(name, perms)
    if "table" not in data:
        raise DomainError("finite-table description needs 'table' or 'permutations'")
    gens = data.get("generators")
    if gens is None:
        raise DomainError("finite-table description needs 'generators'")
    names = data.get("element_names")
    gen_ids = []
    for g in gens:
        if isinstance(g, int):
            gen_ids.append(g)
        elif isinstance(g, str) and names is not None and g in names:
            gen_ids.append(names.index(g))
        else:
            raise DomainError(f"generator {g!r} is neither an id nor a named element")
    return TableGroup(name, data["table"], gen_ids, element_names=names)


def _parse_element_spec(group: Group, p: int, name, spec) -> GroupRingElement:
    if isinstance(spec, str):
        return parse_ring_element(group, p, spec)
    if isinstance(spec, list):
        pairs = []
        for item in spec:
            if not (isinstance(item, (list, tuple)) and len(item) == 2):
                raise DomainError(f"element {name!r}: terms must be [word, coeff] pairs")
            word, coeff = item
            pairs.append((parse_word(group, str(word)), int(coeff)))
        return ring_element(group, p, pairs)
    raise DomainError(f"element {name!r} must be a string or a list of pairs")


def load_group_document(path) -> GroupDocument:
    """Load a JSON group description file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read group file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"group file {path} is not valid JSON: {exc}") from exc
    return parse_group_document(data)


__all__ = [
    "Ball",
    "DEFAULT_BALL_CAP",
    "FiniteQuotientGroup",
    "FreeAbelianGroup",
    "Group",
    "GroupDocument",
    "GroupRingElement",
    "QuotientHom",
    "TableGroup",
    "ball",
    "identity_hom",
    "load_group_document",
    "min_radius_covering",
    "parse_group_document",
    "parse_ring_element",
    "parse_word",
    "projection_hom",
    "ring_add",
    "ring_element",
    "ring_is_one",
    "ring_mul",
    "ring_neg",
    "ring_one",
    "ring_scale",
    "ring_sub",
    "ring_text",
    "ring_zero",
]
