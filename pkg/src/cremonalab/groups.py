"""Finite groups as explicit multiplication tables over typed element payloads.

Elements are small immutable payloads (permutations, matrices over Z/nZ, or
semidirect-product pairs defined elsewhere) that know how to compose and how to
serialize themselves to a canonical byte key.  A group is closed breadth-first
from a generator list; the element order is deterministic (identity first, then
layer by layer, each layer sorted by canonical key), so two closures of the same
generator list are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Protocol, Sequence

import numpy as np

__all__ = [
    "DEFAULT_CAP",
    "GroupError",
    "CapExceeded",
    "IncompatiblePayloads",
    "Payload",
    "Permutation",
    "ModMatrix",
    "FiniteGroup",
    "Subgroup",
    "close_generators",
    "conjugacy_classes",
    "commutator_subgroup",
    "sign_characters",
    "minimal_generators",
]

DEFAULT_CAP = 100_000


class GroupError(RuntimeError):
    pass


class CapExceeded(GroupError):
    """Closure grew past the element cap."""


class IncompatiblePayloads(GroupError):
    """Two payloads cannot be composed (different kinds or parameters)."""


class Payload(Protocol):
    kind: str

    def key(self) -> bytes: ...

    def compose(self, other: "Payload") -> "Payload": ...

    def identity(self) -> "Payload": ...


@dataclass(frozen=True)
class Permutation:
    """Permutation of {0, ..., degree-1}; images[i] is the image of point i."""

    images: tuple[int, ...]

    kind = "perm"

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError("images must be a permutation of 0..%d" % (n - 1))

    @staticmethod
    def identity_of_degree(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles in 1-based point labels."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            pts = [p - 1 for p in cycle]
            if any(p < 0 or p >= degree for p in pts):
                raise ValueError("cycle point out of range 1..%d" % degree)
            if seen.intersection(pts) or len(set(pts)) != len(pts):
                raise ValueError("cycles must be disjoint")
            seen.update(pts)
            for i, p in enumerate(pts):
                images[p] = pts[(i + 1) % len(pts)]
        return Permutation(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def key(self) -> bytes:
        return ("P|%d|" % self.degree + ",".join(map(str, self.images))).encode()

    def compose(self, other: "Payload") -> "Permutation":
        if not isinstance(other, Permutation) or other.degree != self.degree:
            raise IncompatiblePayloads("cannot compose %r with %r" % (self, other))
        # (self . other)(x) = self(other(x))
        return Permutation(tuple(self.images[j] for j in other.images))

    def identity(self) -> "Permutation":
        return Permutation.identity_of_degree(self.degree)


@dataclass(frozen=True)
class ModMatrix:
    """Square matrix over Z/modulus, entries reduced to 0..modulus-1."""

    modulus: int
    entries: tuple[tuple[int, ...], ...]

    kind = "modmatrix"

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        k = len(self.entries)
        if any(len(row) != k for row in self.entries):
            raise ValueError("matrix must be square")
        if any(not (0 <= e < self.modulus) for row in self.entries for e in row):
            object.__setattr__(
                self,
                "entries",
                tuple(tuple(e % self.modulus for e in row) for row in self.entries),
            )

    @staticmethod
    def from_rows(modulus: int, rows: Sequence[Sequence[int]]) -> "ModMatrix":
        return ModMatrix(modulus, tuple(tuple(int(e) % modulus for e in row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def key(self) -> bytes:
        flat = ",".join(str(e) for row in self.entries for e in row)
        return ("M|%d|%d|" % (self.modulus, self.dim) + flat).encode()

    def compose(self, other: "Payload") -> "ModMatrix":
        if (
            not isinstance(other, ModMatrix)
            or other.modulus != self.modulus
            or other.dim != self.dim
        ):
            raise IncompatiblePayloads("cannot compose %r with %r" % (self, other))
        n, k = self.modulus, self.dim
        a, b = self.entries, other.entries
        rows = tuple(
            tuple(sum(a[i][t] * b[t][j] for t in range(k)) % n for j in range(k))
            for i in range(k)
        )
        return ModMatrix(n, rows)

    def identity(self) -> "ModMatrix":
        k = self.dim
        return ModMatrix(self.modulus, tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)))

    def determinant(self) -> int:
        # cofactor expansion; dimensions here are tiny
        k = self.dim

        def det(rows: list[list[int]]) -> int:
            if len(rows) == 1:
                return rows[0][0]
            total = 0
            for j in range(len(rows)):
                minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
                total += (-1) ** j * rows[0][j] * det(minor)
            return total

        return det([list(r) for r in self.entries]) % self.modulus

    def is_invertible(self) -> bool:
        return gcd(self.determinant(), self.modulus) == 1


@dataclass
class FiniteGroup:
    """Explicit finite group: payload list plus an index multiplication table.

    Element 0 is the identity.  ``mul[i, j]`` is the index of elements[i]
    composed with elements[j]; ``inverse[i]`` the index of the inverse.
    """

    elements: tuple
    keys: tuple[bytes, ...]
    mul: np.ndarray
    inverse: np.ndarray
    generators: tuple[int, ...]
    _parent: np.ndarray = field(repr=False)
    _via: np.ndarray = field(repr=False)
    _index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self._index:
            self._index = {k: i for i, k in enumerate(self.keys)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def find(self, payload) -> int:
        """Index of a payload in this group (KeyError if absent)."""
        return self._index[payload.key()]

    def product(self, i: int, j: int) -> int:
        return int(self.mul[i, j])

    def conjugate(self, g: int, x: int) -> int:
        """Index of g x g^-1."""
        return int(self.mul[self.mul[g, x], self.inverse[g]])

    def commutator(self, a: int, b: int) -> int:
        """Index of a b a^-1 b^-1."""
        ab = self.mul[a, b]
        return int(self.mul[ab, self.mul[self.inverse[a], self.inverse[b]]])

    def element_order(self, i: int) -> int:
        n, x = 1, i
        while x != 0:
            x = int(self.mul[x, i])
            n += 1
        return n

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def subgroup_closure(self, seeds: Iterable[int]) -> tuple[int, ...]:
        """Sorted member indices of the subgroup generated by ``seeds``."""
        member = np.zeros(self.order, dtype=bool)
        member[0] = True
        gens = np.asarray(sorted({int(s) for s in seeds} - {0}), dtype=np.int64)
        if gens.size == 0:
            return (0,)
        member[gens] = True
        frontier = gens
        while frontier.size:
            prods = np.unique(self.mul[np.ix_(frontier, gens)])
            fresh = prods[~member[prods]]
            member[fresh] = True
            frontier = fresh
        return tuple(int(i) for i in np.flatnonzero(member))

    def conjugation_closure(self, seeds: Iterable[int]) -> tuple[int, ...]:
        """Closure of a set under conjugation by the group generators."""
        closed = set(int(s) for s in seeds)
        frontier = list(closed)
        gens = [g for g in self.generators] + [int(self.inverse[g]) for g in self.generators]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.conjugate(g, x)
                if y not in closed:
                    closed.add(y)
                    frontier.append(y)
        return tuple(sorted(closed))

    def normal_closure(self, seeds: Iterable[int]) -> tuple[int, ...]:
        """Members of the smallest normal subgroup containing ``seeds``.

        The subgroup generated by a conjugation-invariant set is normal, so
        conjugation closure followed by subgroup closure is enough.
        """
        return self.subgroup_closure(self.conjugation_closure(seeds))

    def subgroup(self, members: Iterable[int], gens: tuple[int, ...] | None = None) -> "Subgroup":
        return Subgroup(self, tuple(sorted(int(m) for m in set(members))), gens)

    def serialize(self) -> bytes:
        doc = {
            "kind": getattr(self.elements[0], "kind", "?"),
            "order": self.order,
            "element_keys": [k.decode() for k in self.keys],
            "generators": [int(g) for g in self.generators],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of a FiniteGroup given by its sorted member indices."""

    parent: FiniteGroup
    members: tuple[int, ...]
    gens: tuple[int, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def key(self) -> bytes:
        return b"|".join(self.parent.keys[m] for m in self.members)

    def contains(self, i: int) -> bool:
        return i in set(self.members)

    def generating_set(self) -> tuple[int, ...]:
        if self.gens is not None:
            return self.gens
        return minimal_generators(self.parent, self.members)

    def is_abelian(self) -> bool:
        m = np.asarray(self.members, dtype=np.int64)
        block = self.parent.mul[np.ix_(m, m)]
        return bool(np.array_equal(block, block.T))

    def is_normal(self) -> bool:
        mem = set(self.members)
        for g in self.parent.generators:
            for x in self.members:
                if self.parent.conjugate(g, x) not in mem:
                    return False
        return True

    def to_group(self, cap: int = DEFAULT_CAP) -> FiniteGroup:
        """Re-close this subgroup as a standalone FiniteGroup."""
        gens = self.generating_set()
        payloads = [self.parent.elements[g] for g in gens]
        if not payloads:
            payloads = [self.parent.elements[0]]
        group = close_generators(payloads, cap=cap)
        if group.order != self.order:
            raise GroupError("subgroup closure mismatch: %d vs %d" % (group.order, self.order))
        return group


def close_generators(gens: Sequence, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Close a generator list into a FiniteGroup, breadth-first.

    Deterministic: the identity is element 0 and every subsequent layer is
    sorted by canonical payload key, so the element order depends only on the
    generator *set*.  Raises CapExceeded when the closure grows past ``cap``
    and IncompatiblePayloads when generators cannot be composed.
    """
    if not gens:
        raise ValueError("need at least one generator")
    kinds = {getattr(g, "kind", None) for g in gens}
    if len(kinds) != 1:
        raise IncompatiblePayloads("mixed payload kinds: %r" % kinds)

    ident = gens[0].identity()
    elements: list = [ident]
    keys: list[bytes] = [ident.key()]
    index: dict[bytes, int] = {keys[0]: 0}
    parent: list[int] = [-1]
    via: list[int] = [-1]

    gen_payloads = list(gens)
    layer = []
    for pos, g in enumerate(gen_payloads):
        k = g.key()
        if k not in index and all(k != kk for kk, _ in layer):
            layer.append((k, pos))
    layer.sort()
    for k, pos in layer:
        index[k] = len(elements)
        elements.append(gen_payloads[pos])
        keys.append(k)
        parent.append(0)
        via.append(pos)

    frontier = list(range(1, len(elements)))
    while frontier:
        discovered: dict[bytes, tuple[int, int]] = {}
        for fi in frontier:
            fp = elements[fi]
            for pos, g in enumerate(gen_payloads):
                prod = fp.compose(g)
                k = prod.key()
                if k not in index and k not in discovered:
                    discovered[k] = (fi, pos)
        if len(elements) + len(discovered) > cap:
            raise CapExceeded("closure exceeds cap=%d" % cap)
        frontier = []
        for k in sorted(discovered):
            fi, pos = discovered[k]
            index[k] = len(elements)
            elements.append(elements[fi].compose(gen_payloads[pos]))
            keys.append(k)
            parent.append(fi)
            via.append(pos)
            frontier.append(index[k])

    order = len(elements)
    gen_indices = tuple(index[g.key()] for g in gen_payloads)

    # Cayley table column by column: element j = element parent[j] . gen via[j],
    # so column j is column via-gen evaluated after column parent[j].
    mul = np.zeros((order, order), dtype=np.int32)
    mul[:, 0] = np.arange(order, dtype=np.int32)
    gen_cols: dict[int, np.ndarray] = {}
    for pos, g in enumerate(gen_payloads):
        gi = index[g.key()]
        if gi in gen_cols:
            continue
        col = np.fromiter(
            (index[elements[i].compose(g).key()] for i in range(order)),
            dtype=np.int32,
            count=order,
        )
        gen_cols[gi] = col
    for gi, col in gen_cols.items():
        mul[:, gi] = col
    for j in range(1, order):
        if j in gen_cols:
            continue
        p, v = parent[j], via[j]
        gcol = mul[:, gen_indices[v]]
        mul[:, j] = gcol[mul[:, p]]

    inverse = np.argmax(mul == 0, axis=1).astype(np.int32)
    mul.flags.writeable = False
    inverse.flags.writeable = False

    return FiniteGroup(
        elements=tuple(elements),
        keys=tuple(keys),
        mul=mul,
        inverse=inverse,
        generators=gen_indices,
        _parent=np.asarray(parent, dtype=np.int32),
        _via=np.asarray(via, dtype=np.int32),
    )


def conjugacy_classes(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Conjugacy classes as sorted index tuples.

    The identity class comes first; the rest are sorted by (size, smallest
    member key).
    """
    seen = np.zeros(group.order, dtype=bool)
    classes: list[tuple[int, ...]] = []
    for start in range(group.order):
        if seen[start]:
            continue
        orbit = {start}
        frontier = [start]
        seen[start] = True
        while frontier:
            x = frontier.pop()
            for g in group.generators:
                y = group.conjugate(g, x)
                if not seen[y]:
                    seen[y] = True
                    orbit.add(y)
                    frontier.append(y)
                z = group.conjugate(int(group.inverse[g]), x)
                if not seen[z]:
                    seen[z] = True
                    orbit.add(z)
                    frontier.append(z)
        classes.append(tuple(sorted(orbit)))
    identity_class = next(c for c in classes if 0 in c)
    rest = [c for c in classes if c is not identity_class]
    rest.sort(key=lambda c: (len(c), min(group.keys[m] for m in c)))
    return tuple([identity_class] + rest)


def commutator_subgroup(group: FiniteGroup) -> Subgroup:
    """Derived subgroup: normal closure of the generator-pair commutators."""
    seeds = {group.commutator(a, b) for a in group.generators for b in group.generators}
    members = group.normal_closure(seeds)
    return group.subgroup(members)


def minimal_generators(group: FiniteGroup, members: Sequence[int]) -> tuple[int, ...]:
    """Greedy small generating set for a subgroup, scanning members in order."""
    target = set(members)
    chosen: list[int] = []
    closure = {0}
    for m in members:
        if m in closure:
            continue
        chosen.append(int(m))
        closure = set(group.subgroup_closure(chosen))
        if closure == target:
            break
    if closure != target:
        raise GroupError("member list is not closed")
    if not chosen:
        chosen = [0]
    return tuple(chosen)


def sign_characters(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """All homomorphisms to {+1, -1}, each as a value tuple over elements.

    Candidate generator assignments are propagated along the closure tree and
    kept when multiplicativity holds against every generator column.  The
    trivial character is first.
    """
    gen_positions = list(range(len(group.generators)))
    k = group.order
    found: set[tuple[int, ...]] = set()
    for bits in range(1 << len(gen_positions)):
        eps = [1 if not (bits >> p) & 1 else -1 for p in gen_positions]
        chi = np.ones(k, dtype=np.int64)
        ok = True
        for j in range(1, k):
            chi[j] = chi[group._parent[j]] * eps[group._via[j]]
        for pos, gi in enumerate(group.generators):
            if chi[gi] != eps[pos]:
                ok = False  # duplicate generators with clashing signs
                break
            if not np.array_equal(chi[group.mul[:, gi]], chi * chi[gi]):
                ok = False
                break
        if ok:
            found.add(tuple(int(v) for v in chi))
    return tuple(sorted(found, reverse=True))
