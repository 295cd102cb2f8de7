"""Finite groups given by Cayley tables, plus the semidihedral family.

Elements are dense indices ``0..order-1``.  For SD_{8n} the element
a^r b^s has index ``r + 4n*s``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from pathlib import Path

FULL_ASSOCIATIVITY_LIMIT = 200
SAMPLED_TRIPLES = 100_000


class GroupTableError(ValueError):
    """Invalid Cayley table document."""


class SchemaError(GroupTableError):
    pass


class LatinSquareError(GroupTableError):
    def __init__(self, kind: str, index: int, value: int):
        super().__init__(f"Latin square violation: {kind} {index} repeats element {value}")
        self.kind, self.index, self.value = kind, index, value


class IdentityError(GroupTableError):
    pass


class AssociativityError(GroupTableError):
    def __init__(self, triple: tuple[int, int, int]):
        x, y, z = triple
        super().__init__(f"associativity violation: (g{x} g{y}) g{z} != g{x} (g{y} g{z})")
        self.triple = triple


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    names: tuple[str, ...] | None = None
    name: str = ""
    associativity: str = "constructed"  # constructed | full | sampled
    metadata: dict = field(default_factory=dict)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def name_of(self, x: int) -> str:
        return self.names[x] if self.names else f"g{x}"

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(row.index(e) for row in self.table)

    def commute(self, x: int, y: int) -> bool:
        return self.table[x][y] == self.table[y][x]

    @cached_property
    def centralizers(self) -> tuple[frozenset[int], ...]:
        t = self.table
        m = self.order
        return tuple(
            frozenset(y for y in range(m) if t[x][y] == t[y][x]) for x in range(m)
        )

    @cached_property
    def center(self) -> frozenset[int]:
        return frozenset(x for x in range(self.order) if len(self.centralizers[x]) == self.order)

    @cached_property
    def is_abelian(self) -> bool:
        return len(self.center) == self.order

    @cached_property
    def conjugacy_classes(self) -> tuple[frozenset[int], ...]:
        t, inv = self.table, self.inverses
        seen: set[int] = set()
        classes = []
        for x in range(self.order):
            if x in seen:
                continue
            cl = frozenset(t[t[g][x]][inv[g]] for g in range(self.order))
            seen |= cl
            classes.append(cl)
        return tuple(classes)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    def to_document(self) -> dict:
        doc = {"order": self.order, "identity": self.identity, "table": [list(r) for r in self.table]}
        if self.names:
            doc["names"] = list(self.names)
        return doc


@dataclass(frozen=True, order=True)
class SD8nElement:
    """Normal form a^rotation b^reflection of SD_{8n}."""

    n: int
    rotation: int
    reflection: bool

    def __mul__(self, other: "SD8nElement") -> "SD8nElement":
        m = 4 * self.n
        # b a^i b^-1 = a^{i(2n-1)}
        r2 = other.rotation * (2 * self.n - 1) if self.reflection else other.rotation
        return SD8nElement(self.n, (self.rotation + r2) % m, self.reflection != other.reflection)

    @property
    def index(self) -> int:
        return self.rotation + 4 * self.n * int(self.reflection)

    @classmethod
    def from_index(cls, n: int, index: int) -> "SD8nElement":
        return cls(n, index % (4 * n), index >= 4 * n)

    def __str__(self) -> str:
        if self.rotation == 0:
            return "b" if self.reflection else "e"
        a = "a" if self.rotation == 1 else f"a^{self.rotation}"
        return a + ("b" if self.reflection else "")


def sd8n_construct(n: int) -> FiniteGroup:
    """Cayley table of SD_{8n} = <a, b | a^{4n} = b^2 = e, ba = a^{2n-1} b>."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"SD_8n needs n >= 1, got {n!r}")
    m = 8 * n
    elems = [SD8nElement.from_index(n, i) for i in range(m)]
    table = tuple(tuple((x * y).index for y in elems) for x in elems)
    return FiniteGroup(
        order=m,
        table=table,
        identity=0,
        names=tuple(str(x) for x in elems),
        name=f"SD_{m}",
        metadata={"family": "semidihedral", "n": n, "non_abelian": n >= 2},
    )


def sd_element(n: int, rotation: int, reflection: bool = False) -> int:
    """Index of a^rotation b^reflection in ``sd8n_construct(n)``."""
    return SD8nElement(n, rotation % (4 * n), bool(reflection)).index


def _validate(order: int, table: list[list[int]], rng_seed: int = 0) -> tuple[int, str]:
    full = set(range(order))
    for i, row in enumerate(table):
        seen: set[int] = set()
        for v in row:
            if v in seen:
                raise LatinSquareError("row", i, v)
            seen.add(v)
        if seen != full:
            raise SchemaError(f"row {i} is not a permutation of 0..{order - 1}")
    for j in range(order):
        seen = set()
        for i in range(order):
            v = table[i][j]
            if v in seen:
                raise LatinSquareError("column", j, v)
            seen.add(v)

    ident = next(
        (e for e in range(order)
         if all(table[e][i] == i and table[i][e] == i for i in range(order))),
        None,
    )
    if ident is None:
        raise IdentityError("no identity element in table")

    if order <= FULL_ASSOCIATIVITY_LIMIT:
        for x in range(order):
            tx = table[x]
            for y in range(order):
                txy = table[tx[y]]
                ty = table[y]
                for z in range(order):
                    if txy[z] != tx[ty[z]]:
                        raise AssociativityError((x, y, z))
        mode = "full"
    else:
        rng = random.Random(rng_seed)
        for _ in range(SAMPLED_TRIPLES):
            x, y, z = rng.randrange(order), rng.randrange(order), rng.randrange(order)
            if table[table[x][y]][z] != table[x][table[y][z]]:
                raise AssociativityError((x, y, z))
        mode = "sampled"
    return ident, mode


def ingest_cayley_table(document: dict | str | Path) -> FiniteGroup:
    """Validate a Cayley-table JSON document (dict, JSON text or path)."""
    if isinstance(document, Path) or (isinstance(document, str) and not document.lstrip().startswith("{")):
        document = json.loads(Path(document).read_text())
    elif isinstance(document, str):
        document = json.loads(document)
    if not isinstance(document, dict):
        raise SchemaError("document must be a JSON object")
    try:
        order = document["order"]
        table = document["table"]
    except KeyError as exc:
        raise SchemaError(f"missing key {exc.args[0]!r}") from None
    if not isinstance(order, int) or order < 1:
        raise SchemaError("order must be a positive integer")
    if (not isinstance(table, list) or len(table) != order
            or any(not isinstance(r, list) or len(r) != order for r in table)):
        raise SchemaError(f"table must be {order}x{order}")
    if any(not isinstance(v, int) or not 0 <= v < order for r in table for v in r):
        raise SchemaError("table entries must be element indices")
    names = document.get("names")
    if names is not None and (len(names) != order or not all(isinstance(s, str) for s in names)):
        raise SchemaError("names must list one string per element")

    ident, mode = _validate(order, table)
    declared = document.get("identity")
    if declared is not None and declared != ident:
        raise IdentityError(f"declared identity {declared} is not the identity (found {ident})")
    return FiniteGroup(
        order=order,
        table=tuple(tuple(r) for r in table),
        identity=ident,
        names=tuple(names) if names else None,
        name=document.get("name", ""),
        associativity=mode,
    )


# small groups for the generic checks

def from_permutations(generators: list[tuple[int, ...]], name: str = "") -> FiniteGroup:
    """Close a set of permutations (tuples of images) under composition."""
    degree = len(generators[0])
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = tuple(g[p[i]] for i in range(degree))  # apply p then g
                if q not in index:
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    # (p*q)(i) = q(p(i)): left-to-right composition
    table = tuple(tuple(index[tuple(q[p[i]] for i in range(degree))] for q in elems) for p in elems)
    return FiniteGroup(order=len(elems), table=table, identity=0, name=name)


def cyclic_group(m: int) -> FiniteGroup:
    table = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
    return FiniteGroup(order=m, table=table, identity=0, names=tuple(f"{i}" for i in range(m)), name=f"Z_{m}")


def symmetric_group(k: int) -> FiniteGroup:
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[tuple(q[p[i]] for i in range(k))] for q in perms) for p in perms)
    return FiniteGroup(order=len(perms), table=table, identity=0, name=f"S_{k}")


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group with ``order`` elements (D_8 is the square's symmetries)."""
    k = order // 2
    rot = tuple((i + 1) % k for i in range(k))
    ref = tuple((-i) % k for i in range(k))
    return from_permutations([rot, ref], name=f"D_{order}")


def quaternion_group() -> FiniteGroup:
    # units of the quaternions as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k
    mult = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    elems = [(s, a) for s in (1, -1) for a in range(4)]
    index = {x: i for i, x in enumerate(elems)}

    def prod(x, y):
        s, a = mult[x[1], y[1]]
        return (x[0] * y[0] * s, a)

    names = tuple(("" if s > 0 else "-") + "1ijk"[a] for s, a in elems)
    table = tuple(tuple(index[prod(x, y)] for y in elems) for x in elems)
    return FiniteGroup(order=8, table=table, identity=0, names=names, name="Q_8")


def frobenius_21() -> FiniteGroup:
    """Nonabelian group Z_7 x| Z_3 of order 21 (3 acts as multiplication by 2)."""
    elems = [(x, y) for y in range(3) for x in range(7)]
    index = {e: i for i, e in enumerate(elems)}
    table = tuple(
        tuple(index[((x1 + pow(2, y1, 7) * x2) % 7, (y1 + y2) % 3)] for (x2, y2) in elems)
        for (x1, y1) in elems
    )
    return FiniteGroup(order=21, table=table, identity=0, name="F_21")


def standard_corpus() -> dict[str, FiniteGroup]:
    return {
        "S_3": symmetric_group(3),
        "D_8": dihedral_group(8),
        "Q_8": quaternion_group(),
        "F_21": frobenius_21(),
        "Z_6": cyclic_group(6),
        "SD_16": sd8n_construct(2),
    }


# profile

@dataclass(frozen=True)
class GroupProfile:
    center: frozenset[int]
    centralizers: tuple[frozenset[int], ...]
    conjugacy_classes: tuple[frozenset[int], ...]
    involution_count_noncentral: int
    max_class_size: int
    is_abelian: bool
    is_ac_group: bool

    @property
    def min_centralizer_size(self) -> int:
        return min(len(c) for c in self.centralizers)


def is_commutative_subset(g: FiniteGroup, subset) -> bool:
    cents = g.centralizers
    s = frozenset(subset)
    return all(s <= cents[x] for x in s)


def is_ac_group(g: FiniteGroup) -> bool:
    """Every non-central element has a commutative centralizer."""
    z = g.center
    return all(is_commutative_subset(g, g.centralizers[x]) for x in range(g.order) if x not in z)


def profile(g: FiniteGroup) -> GroupProfile:
    z = g.center
    involutions = sum(
        1 for x in range(g.order) if x not in z and x != g.identity and g.mul(x, x) == g.identity
    )
    return GroupProfile(
        center=z,
        centralizers=g.centralizers,
        conjugacy_classes=g.conjugacy_classes,
        involution_count_noncentral=involutions,
        max_class_size=max(len(c) for c in g.conjugacy_classes),
        is_abelian=g.is_abelian,
        is_ac_group=is_ac_group(g),
    )


def max_abelian_subgroup_size(g: FiniteGroup) -> int:
    """Size of the largest commutative subgroup, via a maximum clique of the commuting graph."""
    from .graphs import commuting_graph
    from .invariants.cliques import clique_number

    return clique_number(commuting_graph(g))
