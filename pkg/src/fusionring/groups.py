"""Finite group tables: a built-in catalog of all groups of order <= 8,
subgroup/normal-subgroup enumeration, quotients, and small utilities.

Tables are plain position-indexed Cayley tables; ``elements`` carries the
external ids (ring label indices for invertible groups, component ids for
grading groups, 0..n-1 for abstract catalog groups).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from fusionring.errors import InvalidDescriptorError


@dataclass(frozen=True, eq=False)
class GroupTable:
    elements: tuple[int, ...]  # external ids; elements[0] is the identity
    table: np.ndarray  # table[a, b] = position of the product
    inverse: tuple[int, ...] = field(default=())
    name: str = ""

    def __post_init__(self):
        if not self.inverse:
            inv = []
            for a in range(self.order):
                col = np.nonzero(self.table[a] == 0)[0]
                inv.append(int(col[0]))
            object.__setattr__(self, "inverse", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def element_order(self, a: int) -> int:
        x, n = a, 1
        while x != 0:
            x = self.mul(x, a)
            n += 1
        return n

    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.element_order(a) for a in range(self.order))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    # -- subgroup machinery ---------------------------------------------------

    def closure(self, seed) -> frozenset[int]:
        s = set(seed) | {0}
        while True:
            nxt = set(s)
            for a in s:
                for b in s:
                    nxt.add(self.mul(a, b))
            if nxt == s:
                return frozenset(s)
            s = nxt

    def subgroups(self) -> list[frozenset[int]]:
        seen = set()
        n = self.order
        for mask in range(1 << n):
            seed = [i for i in range(n) if mask >> i & 1]
            seen.add(self.closure(seed))
        return sorted(seen, key=lambda h: (len(h), sorted(h)))

    def is_normal(self, subset) -> bool:
        h = frozenset(subset)
        return all(
            self.mul(self.mul(g, x), self.inv(g)) in h for g in range(self.order) for x in h
        )

    def normal_subgroups(self) -> list[frozenset[int]]:
        return [h for h in self.subgroups() if self.is_normal(h)]

    def cosets(self, subgroup) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
        """(coset index per position, cosets). Identity coset first; the rest
        ordered by smallest member."""
        h = sorted(subgroup)
        seen: dict[frozenset[int], int] = {}
        per_pos = [0] * self.order
        cosets: list[tuple[int, ...]] = []
        for g in range(self.order):
            c = frozenset(self.mul(g, x) for x in h)
            if c not in seen:
                seen[c] = len(cosets)
                cosets.append(tuple(sorted(c)))
            per_pos[g] = seen[c]
        order = sorted(range(len(cosets)), key=lambda i: (0 not in cosets[i], cosets[i]))
        remap = {old: new for new, old in enumerate(order)}
        cosets = [cosets[i] for i in order]
        per_pos = [remap[c] for c in per_pos]
        return tuple(per_pos), cosets

    def quotient(self, normal_subgroup) -> tuple["GroupTable", tuple[int, ...]]:
        """(quotient table over coset ids, coset index per position)."""
        per_pos, cosets = self.cosets(normal_subgroup)
        n = len(cosets)
        table = np.zeros((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                table[a, b] = per_pos[self.mul(cosets[a][0], cosets[b][0])]
        q = GroupTable(elements=tuple(range(n)), table=table, name=f"{self.name}-quotient")
        return q, per_pos


def tables_isomorphic(a: GroupTable, b: GroupTable) -> bool:
    """Backtracking isomorphism test for small tables (order <= 8 in practice)."""
    if a.order != b.order:
        return False
    oa, ob = a.element_orders(), b.element_orders()
    if sorted(oa) != sorted(ob):
        return False
    n = a.order
    cand = [[y for y in range(n) if ob[y] == oa[x]] for x in range(n)]

    def extend(mapping: list[int], used: set[int]) -> bool:
        x = len(mapping)
        if x == n:
            return True
        for y in cand[x]:
            if y in used:
                continue
            mapping.append(y)
            # partial consistency: every product landing inside the assigned
            # prefix must already agree
            ok = True
            for u in range(x + 1):
                for v in range(x + 1):
                    p = a.mul(u, v)
                    if p <= x and b.mul(mapping[u], mapping[v]) != mapping[p]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                used.add(y)
                if extend(mapping, used):
                    return True
                used.remove(y)
            mapping.pop()
        return False

    return extend([0], {0})


# -- catalog -------------------------------------------------------------------


def cyclic_table(n: int, name: str = "") -> GroupTable:
    t = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return GroupTable(tuple(range(n)), t.astype(np.int64), name=name or f"Z{n}")


def product_table(a: GroupTable, b: GroupTable, name: str) -> GroupTable:
    na, nb = a.order, b.order
    n = na * nb
    t = np.zeros((n, n), dtype=np.int64)
    for x1 in range(na):
        for y1 in range(nb):
            for x2 in range(na):
                for y2 in range(nb):
                    t[x1 * nb + y1, x2 * nb + y2] = a.mul(x1, x2) * nb + b.mul(y1, y2)
    return GroupTable(tuple(range(n)), t, name=name)


def dihedral_table(m: int, name: str = "") -> GroupTable:
    """Order 2m: elements r^i (positions 0..m-1) and r^i s (positions m..2m-1)."""
    n = 2 * m
    t = np.zeros((n, n), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            t[i, j] = (i + j) % m  # r^i r^j
            t[i, m + j] = m + (i + j) % m  # r^i (r^j s)
            t[m + i, j] = m + (i - j) % m  # (r^i s) r^j = r^{i-j} s
            t[m + i, m + j] = (i - j) % m  # (r^i s)(r^j s) = r^{i-j}
    return GroupTable(tuple(range(n)), t, name=name or f"D{m}")


def quaternion_table() -> GroupTable:
    """Q8 as {1,-1,i,-i,j,-j,k,-k}."""
    # positions: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
    # encode as pairs (axis, sign): axis 0 = scalar, 1=i, 2=j, 3=k
    enc = [(0, 1), (0, -1), (1, 1), (1, -1), (2, 1), (2, -1), (3, 1), (3, -1)]
    dec = {v: i for i, v in enumerate(enc)}
    qmul = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }
    t = np.zeros((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            (xa, sa), (xb, sb) = enc[a], enc[b]
            xc, sc = qmul[(xa, xb)]
            t[a, b] = dec[(xc, sa * sb * sc)]
    return GroupTable(tuple(range(8)), t, name="Q8")


@lru_cache(maxsize=1)
def catalog() -> tuple[GroupTable, ...]:
    """All isomorphism classes of groups of order <= 8, identity at position 0."""
    z1 = cyclic_table(1, "Z1")
    z2 = cyclic_table(2, "Z2")
    z3 = cyclic_table(3, "Z3")
    z4 = cyclic_table(4, "Z4")
    v4 = product_table(z2, z2, "Z2xZ2")
    z5 = cyclic_table(5, "Z5")
    z6 = cyclic_table(6, "Z6")
    s3 = dihedral_table(3, "S3")
    z7 = cyclic_table(7, "Z7")
    z8 = cyclic_table(8, "Z8")
    z4xz2 = product_table(z4, z2, "Z4xZ2")
    e8 = product_table(product_table(z2, z2, ""), z2, "Z2xZ2xZ2")
    d4 = dihedral_table(4, "D4")
    q8 = quaternion_table()
    return (z1, z2, z3, z4, v4, z5, z6, s3, z7, z8, z4xz2, e8, d4, q8)


def groups_of_order(n: int) -> list[GroupTable]:
    return [g for g in catalog() if g.order == n]


def group_by_name(name: str) -> GroupTable:
    aliases = {"V4": "Z2xZ2", "E8": "Z2xZ2xZ2", "Z2XZ2": "Z2xZ2", "Z4XZ2": "Z4xZ2",
               "Z2XZ2XZ2": "Z2xZ2xZ2"}
    want = aliases.get(name, aliases.get(name.upper(), name))
    for g in catalog():
        if g.name.lower() == want.lower():
            return g
    known = ", ".join(g.name for g in catalog())
    raise InvalidDescriptorError(f"unknown group {name!r}; known: {known}")


def identify(table: GroupTable) -> str:
    """Catalog name for tables of order <= 8, else 'order-n group'."""
    for g in groups_of_order(table.order):
        if tables_isomorphic(table, g):
            return g.name
    return f"order-{table.order} group"


def element_names(g: GroupTable) -> list[str]:
    return ["e"] + [f"g{i}" for i in range(1, g.order)]


def involutions(n: int) -> list[tuple[int, ...]]:
    """All involutive permutations of range(n), identity included, sorted."""
    out: list[tuple[int, ...]] = []

    def build(perm: dict[int, int]):
        free = [i for i in range(n) if i not in perm]
        if not free:
            out.append(tuple(perm[i] for i in range(n)))
            return
        a = free[0]
        perm[a] = a
        build(perm)
        del perm[a]
        for b in free[1:]:
            perm[a], perm[b] = b, a
            build(perm)
            del perm[a], perm[b]

    build({})
    return sorted(out)
