"""Finite groups: U(6n) built from its presentation, plus Cayley tables.

U(6n) is the group <a, b | a^(2n) = b^3 = 1, b*a = a*b^2> of order 6n.
Elements carry the normal form a^i b^k with 0 <= i < 2n and 0 <= k < 3,
and the product obeys

    (a^i b^k)(a^j b^l) = a^((i+j) mod 2n) b^(((-1)^j k + l) mod 3).

Everything here is computed from the multiplication table by definition
(linear scans); no closed-form shortcuts, so these routines stay honest
inputs for the verification pipeline.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

# Tables at most this large are checked for associativity exhaustively;
# larger ones get a fixed-seed random sample of triples.
_EXHAUSTIVE_ASSOC_LIMIT = 200
_ASSOC_SAMPLES = 100_000


@dataclass(frozen=True)
class U6nElement:
    """Normal form a^i b^k; the index 3*i + k orders all elements."""

    a_exp: int
    b_exp: int

    def __post_init__(self):
        if self.a_exp < 0:
            raise ValueError(f"a exponent must be non-negative, got {self.a_exp}")
        if self.b_exp not in (0, 1, 2):
            raise ValueError(f"b exponent must be 0, 1 or 2, got {self.b_exp}")

    @property
    def index(self) -> int:
        return 3 * self.a_exp + self.b_exp

    @classmethod
    def from_index(cls, index: int, n: int) -> "U6nElement":
        if not 0 <= index < 6 * n:
            raise IndexError(f"element index {index} out of range for order {6 * n}")
        return cls(index // 3, index % 3)

    def label(self) -> str:
        parts = []
        if self.a_exp:
            parts.append("a" if self.a_exp == 1 else f"a^{self.a_exp}")
        if self.b_exp:
            parts.append("b" if self.b_exp == 1 else "b^2")
        return "".join(parts) or "1"


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as labels plus a multiplication table on indices.

    Immutable; all methods are pure lookups or scans over the table.
    parameter_n is set only for groups built by u6n_group.
    """

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    parameter_n: int | None = None

    @property
    def order(self) -> int:
        return len(self.labels)

    def _check_index(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise IndexError(f"element index {x} out of range for order {self.order}")

    def mul(self, x: int, y: int) -> int:
        self._check_index(x)
        self._check_index(y)
        return self.table[x][y]

    def inv(self, x: int) -> int:
        self._check_index(x)
        row = self.table[x]
        for y in range(self.order):
            if row[y] == self.identity and self.table[y][x] == self.identity:
                return y
        raise ValueError(f"element {self.labels[x]!r} has no inverse")

    def is_abelian(self) -> bool:
        t = self.table
        return all(
            t[x][y] == t[y][x] for x in range(self.order) for y in range(x + 1, self.order)
        )

    def centralizer(self, x: int) -> frozenset[int]:
        """All y with x*y == y*x, by direct commutation test."""
        self._check_index(x)
        t = self.table
        return frozenset(y for y in range(self.order) if t[x][y] == t[y][x])

    def center(self) -> frozenset[int]:
        """Elements commuting with everything, by direct scan."""
        t = self.table
        out = []
        for x in range(self.order):
            row = t[x]
            if all(row[y] == t[y][x] for y in range(self.order)):
                out.append(x)
        return frozenset(out)

    def non_central(self) -> tuple[int, ...]:
        central = self.center()
        return tuple(x for x in range(self.order) if x not in central)

    def __repr__(self) -> str:
        tag = f", n={self.parameter_n}" if self.parameter_n is not None else ""
        return f"FiniteGroup(order={self.order}{tag})"


def _find_identity(table: Sequence[Sequence[int]]) -> int | None:
    order = len(table)
    for e in range(order):
        if all(table[e][x] == x and table[x][e] == x for x in range(order)):
            return e
    return None


def _validate_table(labels: Sequence[str], table: Sequence[Sequence[int]]) -> int:
    """Check all group axioms, returning the identity index.

    Raises ValueError naming the offending row/entry/triple. Associativity
    is exhaustive up to order 200 and sampled (fixed seed, reproducible)
    beyond that.
    """
    order = len(labels)
    if order == 0:
        raise ValueError("a group needs at least one element")
    if len(set(labels)) != order:
        raise ValueError("element labels must be unique")
    if len(table) != order:
        raise ValueError(f"table has {len(table)} rows for {order} labels")
    for i, row in enumerate(table):
        if len(row) != order:
            raise ValueError(f"row {i} ({labels[i]!r}) has {len(row)} entries, expected {order}")
        for j, entry in enumerate(row):
            if not isinstance(entry, int) or isinstance(entry, bool) or not 0 <= entry < order:
                raise ValueError(
                    f"closure fails at ({labels[i]!r}, {labels[j]!r}): entry {entry!r}"
                )

    identity = _find_identity(table)
    if identity is None:
        raise ValueError("no two-sided identity element found")

    if order <= _EXHAUSTIVE_ASSOC_LIMIT:
        triples: Iterable[tuple[int, int, int]] = (
            (x, y, z) for x in range(order) for y in range(order) for z in range(order)
        )
    else:
        rng = random.Random(0xA55)
        triples = (
            (rng.randrange(order), rng.randrange(order), rng.randrange(order))
            for _ in range(_ASSOC_SAMPLES)
        )
    for x, y, z in triples:
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise ValueError(
                "associativity fails at "
                f"({labels[x]!r}, {labels[y]!r}, {labels[z]!r}): "
                f"({labels[x]}*{labels[y]})*{labels[z]} = {labels[table[table[x][y]][z]]} "
                f"but {labels[x]}*({labels[y]}*{labels[z]}) = {labels[table[x][table[y][z]]]}"
            )

    for x in range(order):
        if not any(
            table[x][y] == identity and table[y][x] == identity for y in range(order)
        ):
            raise ValueError(f"element {labels[x]!r} has no two-sided inverse")
    return identity


def group_from_table(labels: Sequence[str], table: Sequence[Sequence[int]]) -> FiniteGroup:
    """Validate a Cayley table (closure, identity, associativity, inverses)
    and wrap it as a FiniteGroup. The identity may sit at any index."""
    labels = tuple(str(s) for s in labels)
    table_t = tuple(tuple(int(v) for v in row) for row in table)
    identity = _validate_table(labels, table_t)
    return FiniteGroup(labels=labels, table=table_t, identity=identity)


def group_from_json(text: str) -> FiniteGroup:
    """Load a group from the JSON schema {"labels": [...], "table": [[...]]}."""
    data = json.loads(text)
    if not isinstance(data, dict) or "labels" not in data or "table" not in data:
        raise ValueError('expected a JSON object with "labels" and "table" keys')
    return group_from_table(data["labels"], data["table"])


def u6n_group(n: int) -> FiniteGroup:
    """Construct U(6n) from its presentation, order 6n, identity at index 0."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    two_n = 2 * n
    order = 6 * n
    labels = tuple(U6nElement.from_index(idx, n).label() for idx in range(order))
    rows = []
    for x in range(order):
        i, k = divmod(x, 3)
        row = []
        for y in range(order):
            j, l = divmod(y, 3)
            a = (i + j) % two_n
            b = ((k if j % 2 == 0 else -k) + l) % 3
            row.append(3 * a + b)
        rows.append(tuple(row))
    return FiniteGroup(labels=labels, table=tuple(rows), identity=0, parameter_n=n)


@dataclass(frozen=True)
class OmegaPartition:
    """The four centralizer classes of the non-central elements of U(6n):
    odd powers of a, odd*b, odd*b^2, and even*b^(1 or 2)."""

    omega1: frozenset[int]
    omega2: frozenset[int]
    omega3: frozenset[int]
    omega4: frozenset[int]

    def classes(self) -> tuple[frozenset[int], ...]:
        return (self.omega1, self.omega2, self.omega3, self.omega4)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes())

    def union(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for c in self.classes():
            out |= c
        return out


def omega_partition(g: FiniteGroup) -> OmegaPartition:
    """Partition the non-central elements of a constructed U(6n)."""
    n = g.parameter_n
    if n is None:
        raise ValueError("omega_partition requires a group built by u6n_group")
    odd = range(1, 2 * n, 2)
    even = range(0, 2 * n, 2)
    return OmegaPartition(
        omega1=frozenset(3 * i for i in odd),
        omega2=frozenset(3 * i + 1 for i in odd),
        omega3=frozenset(3 * i + 2 for i in odd),
        omega4=frozenset(3 * i + k for i in even for k in (1, 2)),
    )
