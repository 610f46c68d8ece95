"""Built-in finite groups of small order, as multiplication-table fixtures.

These cover every isomorphism class needed for the direct-finiteness spot
checks up to order 16: cyclic groups, elementary products, dihedral groups,
the quaternion group, and the small permutation groups S3 and A4.
"""

from __future__ import annotations

from .errors import DomainError
from .groups import TableGroup


def cyclic(n: int) -> TableGroup:
    """Z/n as a table with generator g (names 1, g, g^2, ...)."""
    if n < 2:
        raise DomainError(f"cyclic group needs order >= 2, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["1", "g"] + [f"g^{i}" for i in range(2, n)]
    gens = [1] if n == 2 else [1, n - 1]
    return TableGroup(f"C{n}", table, gens, element_names=names)


def direct_product(a: TableGroup, b: TableGroup, name: str | None = None) -> TableGroup:
    """Componentwise product; generators are (g, 1) and (1, h)."""
    na, nb = a.order, b.order

    def idx(i: int, j: int) -> int:
        return i * nb + j

    table = []
    for i in range(na):
        for j in range(nb):
            row = [idx(a.table[i][k], b.table[j][l]) for k in range(na) for l in range(nb)]
            table.append(row)
    names = [
        _pair_name(a.element_names[i], b.element_names[j])
        for i in range(na)
        for j in range(nb)
    ]
    gens = sorted(
        {idx(g, b.identity) for g in a.generators}
        | {idx(a.identity, h) for h in b.generators}
    )
    return TableGroup(name or f"{a.name}x{b.name}", table, gens, element_names=names)


def _pair_name(left: str, right: str) -> str:
    if left == "1" and right == "1":
        return "1"
    if left == "1":
        return f"(1,{right})"
    if right == "1":
        return f"({left},1)"
    return f"({left},{right})"


def dihedral(n: int) -> TableGroup:
    """The dihedral group of order 2n, presented by a rotation r and a
    reflection s with s r s = r^-1.  Element (i, a) is r^i s^a, indexed
    a * n + i."""
    if n < 3:
        raise DomainError(f"dihedral fixture needs n >= 3, got {n}")
    order = 2 * n

    def idx(i: int, a: int) -> int:
        return a * n + i

    table = [[0] * order for _ in range(order)]
    for i in range(n):
        for a in range(2):
            for j in range(n):
                for b in range(2):
                    k = (i + (j if a == 0 else -j)) % n
                    table[idx(i, a)][idx(j, b)] = idx(k, a ^ b)
    names = []
    for a in range(2):
        for i in range(n):
            if a == 0:
                names.append("1" if i == 0 else ("r" if i == 1 else f"r^{i}"))
            else:
                names.append("s" if i == 0 else ("r s" if i == 1 else f"r^{i} s"))
    gens = [idx(1, 0), idx(n - 1, 0), idx(0, 1)]
    return TableGroup(f"D{n}", table, gens, element_names=names)


def quaternion() -> TableGroup:
    """The quaternion group Q8 on {1, -1, i, -i, j, -j, k, -k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    pos = {s: n for n, s in enumerate(names)}

    def unit_mul(x: str, y: str) -> str:
        sign = 1
        if x.startswith("-"):
            sign, x = -sign, x[1:]
        if y.startswith("-"):
            sign, y = -sign, y[1:]
        products = {
            ("1", "1"): "1",
            ("i", "i"): "-1",
            ("j", "j"): "-1",
            ("k", "k"): "-1",
            ("i", "j"): "k",
            ("j", "i"): "-k",
            ("j", "k"): "i",
            ("k", "j"): "-i",
            ("k", "i"): "j",
            ("i", "k"): "-j",
        }
        out = products.get((x, y)) or (y if x == "1" else x)
        if out.startswith("-"):
            sign, out = -sign, out[1:]
        return out if sign > 0 else f"-{out}"

    table = [[pos[unit_mul(x, y)] for y in names] for x in names]
    return TableGroup("Q8", table, [pos["i"], pos["-i"], pos["j"], pos["-j"]], names)


def symmetric3() -> TableGroup:
    """S3 built from a transposition and a 3-cycle."""
    return TableGroup.from_permutations("S3", {"s": (1, 0, 2), "r": (1, 2, 0)})


def alternating4() -> TableGroup:
    """A4 built from a double transposition and a 3-cycle."""
    return TableGroup.from_permutations("A4", {"a": (1, 0, 3, 2), "b": (1, 2, 0, 3)})


def small_group_fixtures(max_order: int = 16) -> dict[str, TableGroup]:
    """A catalog of finite groups, keyed by name, with order <= max_order.

    Includes all cyclic groups from order 2, the abelian products V4,
    C2xC4, C2xC2xC2, C3xC3, C2xC6, the dihedral groups up to D8, Q8, S3,
    and A4.
    """
    groups: list[TableGroup] = [cyclic(n) for n in range(2, max_order + 1)]
    c2 = cyclic(2)
    groups.append(direct_product(c2, c2, "V4"))
    groups.append(direct_product(c2, cyclic(4), "C2xC4"))
    groups.append(direct_product(c2, direct_product(c2, c2, "V4"), "C2xC2xC2"))
    groups.append(direct_product(cyclic(3), cyclic(3), "C3xC3"))
    groups.append(direct_product(c2, cyclic(6), "C2xC6"))
    groups.append(direct_product(c2, cyclic(8), "C2xC8"))
    groups.append(direct_product(cyclic(4), cyclic(4), "C4xC4"))
    for n in range(3, max_order // 2 + 1):
        groups.append(dihedral(n))
    groups.append(quaternion())
    groups.append(symmetric3())
    groups.append(alternating4())
    return {g.name: g for g in groups if g.order <= max_order}


__all__ = [
    "alternating4",
    "cyclic",
    "dihedral",
    "direct_product",
    "quaternion",
    "small_group_fixtures",
    "symmetric3",
]
