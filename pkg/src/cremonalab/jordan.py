"""Normal-subgroup lattices and the Jordan index of a finite group.

The Jordan index is the minimal index of an abelian normal subgroup.  A group
is a union of conjugacy classes and every normal subgroup is generated by the
classes it contains, so the full lattice of normal subgroups is the closure of
the class normal-closures under pairwise join.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import DEFAULT_CAP, CapExceeded, FiniteGroup, Subgroup, conjugacy_classes

__all__ = [
    "NormalSubgroupLattice",
    "JordanCertificate",
    "normal_subgroups",
    "jordan_index",
    "report_fragment",
]


@dataclass(frozen=True)
class NormalSubgroupLattice:
    """All normal subgroups of a group, canonically sorted, with join data."""

    group: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    abelian: tuple[bool, ...]
    joins: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)


@dataclass(frozen=True)
class JordanCertificate:
    group_order: int
    index: int
    witness: Subgroup
    witness_is_abelian: bool
    witness_is_normal: bool


def normal_subgroups(group: FiniteGroup, cap: int = DEFAULT_CAP) -> NormalSubgroupLattice:
    """Enumerate every normal subgroup of ``group``.

    Seeds are the normal closures of the conjugacy classes (each class is
    already conjugation-invariant, so its subgroup closure is normal); the
    seed set is then closed under pairwise join.  Sorted by (order, member
    tuple): trivial subgroup first, whole group last.
    """
    if group.order > cap:
        raise CapExceeded("group order %d exceeds cap=%d" % (group.order, cap))
    classes = conjugacy_classes(group)
    seen: dict[tuple[int, ...], None] = {}
    for cls in classes:
        members = group.subgroup_closure(cls)
        seen.setdefault(members, None)

    worklist = list(seen)
    while worklist:
        current = list(seen)
        new: list[tuple[int, ...]] = []
        for a in worklist:
            for b in current:
                joined = group.subgroup_closure(set(a) | set(b))
                if joined not in seen:
                    seen[joined] = None
                    new.append(joined)
        worklist = new

    ordered = sorted(seen, key=lambda m: (len(m), m))
    position = {m: i for i, m in enumerate(ordered)}
    subgroups = tuple(group.subgroup(m) for m in ordered)
    abelian = tuple(s.is_abelian() for s in subgroups)

    joins: list[tuple[int, ...]] = []
    for i, a in enumerate(ordered):
        row = []
        for j, b in enumerate(ordered):
            if j < i:
                row.append(joins[j][i])
                continue
            joined = group.subgroup_closure(set(a) | set(b))
            row.append(position[joined])
        joins.append(tuple(row))

    return NormalSubgroupLattice(group, subgroups, abelian, tuple(joins))


def jordan_index(
    group: FiniteGroup, cap: int = DEFAULT_CAP, lattice: NormalSubgroupLattice | None = None
) -> JordanCertificate:
    """Minimal index of an abelian normal subgroup, with its witness.

    Ties are broken by largest subgroup first (same thing as minimal index)
    and then by smallest serialized member key.
    """
    if lattice is None:
        lattice = normal_subgroups(group, cap=cap)
    best: Subgroup | None = None
    for sub, ab in zip(lattice.subgroups, lattice.abelian):
        if not ab:
            continue
        if best is None or sub.order > best.order or (
            sub.order == best.order and sub.key() < best.key()
        ):
            best = sub
    assert best is not None  # the trivial subgroup is always abelian normal
    index = group.order // best.order
    return JordanCertificate(
        group_order=group.order,
        index=index,
        witness=best,
        witness_is_abelian=best.is_abelian(),
        witness_is_normal=best.is_normal(),
    )


def report_fragment(group: FiniteGroup, cap: int = DEFAULT_CAP) -> dict:
    """JSON-able summary: order, jordan index, witness order, lattice size."""
    lattice = normal_subgroups(group, cap=cap)
    cert = jordan_index(group, cap=cap, lattice=lattice)
    return {
        "order": group.order,
        "jordan_index": cert.index,
        "witness_order": cert.witness.order,
        "normal_subgroup_count": len(lattice),
    }
