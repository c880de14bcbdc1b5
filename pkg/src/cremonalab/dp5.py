"""Rational invariant lines for subgroups acting on a rank-6 lattice.

The symmetric group on five letters acts on a rank-6 lattice spanned by six
labeled classes; the action of a transposition is a permutation of the labels
while a 5-cycle mixes them with signs.  For each subgroup of interest the
question is whether the action fixes a rational line, i.e. whether some
one-dimensional eigenspace with eigenvalues +-1 is defined over the rationals.

Eigenlines for non-real characters exist over an extension field only; the
``complex_note`` field records the degrees of the cyclotomic factors of the
relevant restricted action so those invisible lines are still accounted for.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import (
    FiniteGroup,
    Permutation,
    Subgroup,
    close_generators,
    commutator_subgroup,
    sign_characters,
)
from .rational import (
    charpoly,
    cyclotomic_factor_indices,
    cyclotomic_polynomial,
    exact_det,
    kernel_basis,
)

__all__ = [
    "LABELS",
    "SUBGROUP_NAMES",
    "HomomorphismFailure",
    "ProjectorMismatch",
    "Representation",
    "InvariantLineReport",
    "s5_representation",
    "verify_homomorphism",
    "dual_representation",
    "standard_subgroups",
    "fixed_space",
    "rational_invariant_lines",
    "dp5_suite",
]

LABELS = ("s12", "s13", "s21", "s23", "s31", "s32")

SUBGROUP_NAMES = ("s5", "a5", "g5_4", "g5_2", "c5")

# Images of the basis vectors under the two generators, as matrix columns in
# the LABELS order.  The transposition permutes labels; the 5-cycle sends a
# label to a signed combination because two of the six classes trade places
# with differences of the others.
_SWAP_COLUMNS = (
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 1, 0),
)
_CYCLE_COLUMNS = (
    (0, 0, 0, 0, 1, 0),
    (0, 1, 0, -1, -1, 0),
    (0, 0, 1, 0, 0, 0),
    (1, 0, -1, 0, 0, -1),
    (0, 1, 1, 0, -1, 0),
    (1, 0, -1, 0, 1, 0),
)


class HomomorphismFailure(RuntimeError):
    pass


class ProjectorMismatch(RuntimeError):
    pass


@dataclass(frozen=True)
class Representation:
    group: FiniteGroup
    mats: np.ndarray
    labels: tuple[str, ...]

    @property
    def dim(self) -> int:
        return self.mats.shape[1]

    def matrix(self, index: int) -> np.ndarray:
        return self.mats[index]


@dataclass(frozen=True)
class InvariantLineReport:
    name: str
    subgroup_order: int
    has_rational_line: bool
    line_character_dims: tuple[int, ...]
    witness: tuple[int, ...] | None
    fix_space_dim: int
    complex_note: tuple[int, ...]
    caveat: str = ""


def _matrix_from_columns(columns) -> np.ndarray:
    return np.array(columns, dtype=np.int64).T


def s5_representation(verify: bool = True) -> Representation:
    """Integral 6-dimensional representation of the degree-5 symmetric group.

    Built by breadth-first closure from a transposition and a 5-cycle; every
    element's matrix is the parent's matrix times the generator's, matching
    the composition order used by the closure.  With ``verify`` the whole
    multiplication table is checked against matrix products.
    """
    swap = Permutation.from_cycles(5, [[1, 2]])
    cycle = Permutation.from_cycles(5, [[1, 2, 3, 4, 5]])
    group = close_generators([swap, cycle])
    genmats = (
        _matrix_from_columns(_SWAP_COLUMNS),
        _matrix_from_columns(_CYCLE_COLUMNS),
    )
    mats = np.zeros((group.order, 6, 6), dtype=np.int64)
    mats[0] = np.eye(6, dtype=np.int64)
    for j in range(1, group.order):
        parent = int(group._parent[j])
        via = int(group._via[j])
        mats[j] = mats[parent] @ genmats[via]
    mats.flags.writeable = False
    rep = Representation(group=group, mats=mats, labels=LABELS)
    if verify:
        verify_homomorphism(rep)
    return rep


def verify_homomorphism(rep: Representation) -> int:
    """Check rho(ab) == rho(a) rho(b) for every pair and unimodularity.

    Returns the number of pairs checked; raises HomomorphismFailure on any
    discrepancy or non-unit determinant.
    """
    mats = rep.mats
    mul = rep.group.mul
    order = rep.group.order
    for a in range(order):
        if not np.array_equal(mats[a] @ mats, mats[mul[a]]):
            raise HomomorphismFailure("matrix product disagrees at row %d" % a)
    for j in range(order):
        det = exact_det(mats[j].tolist())
        if det not in (1, -1):
            raise HomomorphismFailure("non-unimodular matrix at %d (det %d)" % (j, det))
    return order * order


def dual_representation(rep: Representation) -> Representation:
    """Inverse-transpose of every matrix; a homomorphism again."""
    inv = rep.group.inverse
    mats = rep.mats[inv].transpose(0, 2, 1).copy()
    mats.flags.writeable = False
    return Representation(group=rep.group, mats=mats, labels=rep.labels)


def standard_subgroups(group: FiniteGroup) -> list[tuple[str, Subgroup]]:
    """The five subgroups the verdict table is about, largest first.

    Order 120 (everything), 60 (commutator), 20 (normalizer of a 5-cycle),
    10 (5-cycle with an inverting involution), 5 (the cycle alone).
    """
    full = group.subgroup(range(group.order), gens=group.generators)
    alt = commutator_subgroup(group)

    five = group.find(Permutation.from_cycles(5, [[1, 3, 4, 5, 2]]))
    c5_members = group.subgroup_closure([five])
    c5 = group.subgroup(c5_members, gens=(five,))
    c5_set = set(c5_members)

    normalizer = tuple(
        m
        for m in range(group.order)
        if group.product(group.product(m, five), group.inverse[m]) in c5_set
    )
    g5_4 = group.subgroup(normalizer)

    invol = group.find(Permutation.from_cycles(5, [[2, 3], [4, 5]]))
    g5_2_members = group.subgroup_closure([five, invol])
    g5_2 = group.subgroup(g5_2_members, gens=(five, invol))

    named = [("s5", full), ("a5", alt), ("g5_4", g5_4), ("g5_2", g5_2), ("c5", c5)]
    expected_orders = {"s5": 120, "a5": 60, "g5_4": 20, "g5_2": 10, "c5": 5}
    for name, sub in named:
        if sub.order != expected_orders[name]:
            raise RuntimeError(
                "subgroup %s has order %d, expected %d" % (name, sub.order, expected_orders[name])
            )
    return named


def _kernel_of_elements(rep: Representation, indices, shift: int = 1) -> list[tuple[int, ...]]:
    # kernel of stacked (rho(g) - shift*I); shift is +-1
    width = rep.dim
    eye = np.eye(width, dtype=np.int64)
    rows: list[list[int]] = []
    for g in indices:
        rows.extend((rep.mats[g] - shift * eye).tolist())
    return kernel_basis(rows, width=width)


def fixed_space(rep: Representation, subgroup: Subgroup) -> list[tuple[int, ...]]:
    """Basis of the subspace fixed pointwise by the subgroup.

    Cross-checked against the averaging projector: the trace sum over the
    subgroup must equal the kernel dimension times the subgroup order.
    """
    basis = _kernel_of_elements(rep, subgroup.generating_set())
    trace_sum = int(sum(int(np.trace(rep.mats[m])) for m in subgroup.members))
    if trace_sum != len(basis) * subgroup.order:
        raise ProjectorMismatch(
            "projector trace %d != dim %d x order %d"
            % (trace_sum, len(basis), subgroup.order)
        )
    return basis


def _solve_in_span(basis: list[tuple[int, ...]], targets: list[list]) -> list[list]:
    """Coordinates of target vectors in the span of the basis, exact.

    basis has d independent integer vectors of length n; targets are vectors
    guaranteed to lie in the span.  Returns the d x len(targets) coordinate
    matrix as Fractions; raises ArithmeticError if a target escapes the span.
    """
    from fractions import Fraction

    d = len(basis)
    n = len(basis[0])
    t = len(targets)
    aug = [
        [Fraction(basis[j][i]) for j in range(d)]
        + [Fraction(targets[k][i]) for k in range(t)]
        for i in range(n)
    ]
    pivots: list[int] = []
    rank = 0
    for col in range(d):
        pivot_row = next((r for r in range(rank, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise ArithmeticError("basis vectors are dependent")
        aug[rank], aug[pivot_row] = aug[pivot_row], aug[rank]
        inv = 1 / aug[rank][col]
        aug[rank] = [x * inv for x in aug[rank]]
        for r in range(n):
            if r != rank and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[rank])]
        pivots.append(rank)
        rank += 1
    for r in range(rank, n):
        if any(aug[r][d + k] != 0 for k in range(t)):
            raise ArithmeticError("target vector escapes the span")
    return [[aug[pivots[j]][d + k] for k in range(t)] for j in range(d)]


def _coset_order(group: FiniteGroup, element: int, members: set[int]) -> int:
    power = element
    order = 1
    while power not in members:
        power = group.product(power, element)
        order += 1
    return order


def _complex_note(rep: Representation, subgroup: Subgroup) -> tuple[int, ...]:
    """Degrees of the cyclotomic factors acting on the commutator-fixed space.

    The abelianization acts on the subspace fixed by the derived subgroup;
    when that quotient is cyclic, the characteristic polynomial of a coset
    generator factors into cyclotomics whose non-linear factors explain lines
    that exist over an extension field but not over the rationals.  Returns
    the empty tuple when the fixed space is zero or the quotient not cyclic.
    """
    group = rep.group
    sub = subgroup.to_group()
    derived_in_sub = commutator_subgroup(sub)
    derived_parent = [group.find(sub.elements[m]) for m in derived_in_sub.members]
    derived_gens = [group.find(sub.elements[m]) for m in derived_in_sub.generating_set()]

    basis = _kernel_of_elements(rep, derived_gens)
    if not basis:
        return ()

    derived_set = set(derived_parent)
    quotient_order = subgroup.order // len(derived_set)
    if quotient_order == 1:
        generator = subgroup.members[0]
    else:
        generator = next(
            (
                m
                for m in subgroup.members
                if m not in derived_set and _coset_order(group, m, derived_set) == quotient_order
            ),
            None,
        )
        if generator is None:
            return ()

    mat = rep.mats[generator]
    targets = [(mat @ np.array(v, dtype=np.int64)).tolist() for v in basis]
    coords = _solve_in_span(basis, targets)
    # coords columns are images; charpoly wants the matrix acting on coordinates
    restriction = [[coords[i][j] for j in range(len(basis))] for i in range(len(basis))]
    poly = charpoly(restriction)
    indices = cyclotomic_factor_indices(poly, group.element_order(generator))
    return tuple(sorted(len(cyclotomic_polynomial(d)) - 1 for d in indices))


def rational_invariant_lines(
    rep: Representation, subgroup: Subgroup, name: str
) -> InvariantLineReport:
    """Decide whether the subgroup fixes a rational line.

    A rational invariant line carries a subgroup character with values +-1,
    so it suffices to intersect the +-1 eigenspaces prescribed by each sign
    character.  The verdict is conjugation-invariant: conjugating the
    subgroup transports invariant lines by the conjugating matrix.
    """
    group = rep.group
    sub = subgroup.to_group()
    sub_gens = sub.generators
    parent_gens = [group.find(sub.elements[g]) for g in sub_gens]

    dims: list[int] = []
    witness: tuple[int, ...] | None = None
    for chi in sign_characters(sub):
        width = rep.dim
        eye = np.eye(width, dtype=np.int64)
        rows: list[list[int]] = []
        for gi, pg in zip(sub_gens, parent_gens):
            rows.extend((rep.mats[pg] - chi[gi] * eye).tolist())
        basis = kernel_basis(rows, width=width)
        dims.append(len(basis))
        if witness is None and basis:
            witness = basis[0]

    fix_dim = len(_kernel_of_elements(rep, [group.find(sub.elements[m]) for m in commutator_subgroup(sub).generating_set()]))
    # a positive verdict certifies the linear-algebra condition only; whether
    # the corresponding hyperplane section is nodal is outside this model
    caveat = "" if witness is None else "line existence shown representation-theoretically; nodality of the section not checked"
    return InvariantLineReport(
        name=name,
        subgroup_order=subgroup.order,
        has_rational_line=witness is not None,
        line_character_dims=tuple(dims),
        witness=witness,
        fix_space_dim=fix_dim,
        complex_note=_complex_note(rep, subgroup),
        caveat=caveat,
    )


def dp5_suite(rep: Representation | None = None) -> list[InvariantLineReport]:
    """Reports for the five standard subgroups, in SUBGROUP_NAMES order."""
    if rep is None:
        rep = s5_representation()
    return [
        rational_invariant_lines(rep, sub, name)
        for name, sub in standard_subgroups(rep.group)
    ]
