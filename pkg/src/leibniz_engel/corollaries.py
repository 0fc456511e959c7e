"""Mechanical checkers for the nilpotency consequences.

Four checkers: abstract nilpotency from a generating Lie set with nilpotent
left multiplications, fixed-point-free automorphisms of finite order,
non-singular derivations in characteristic zero, and sums of nilpotent
ideals (with a family-relative nilradical fold on top). Each returns a
premise/conclusion report; a conclusion failing under passing premises is an
implementation bug surfaced as a THEOREM_VIOLATION verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (LeibnizAlgebra, LieSet, is_ideal, is_nilpotent_algebra,
                      lower_central_series, mult_coords, product_span)
from .bimodule import regular_bimodule
from .engel import check_engel_premises
from .errors import (NotAnIdealError, NotNilpotentIdealError, ShapeMismatch,
                     TheoremViolation)
from .fields import RationalField, is_prime
from .linalg import Matrix, Subspace, kernel_basis, matrix_rank
from .reports import PASS, Check, Report


@dataclass(frozen=True)
class LinearSelfMap:
    """A candidate derivation or automorphism, held as a matrix."""

    algebra: LeibnizAlgebra
    matrix: Matrix
    claimed_kind: str = "none"  # derivation | automorphism | none

    def __post_init__(self):
        n = self.algebra.dim
        if self.matrix.rows != n or self.matrix.cols != n:
            raise ShapeMismatch(f"self map must be {n}x{n}")
        if self.matrix.field != self.algebra.field:
            raise ShapeMismatch("self map over a different field")


@dataclass
class MapCheck:
    ok: bool
    witness: dict | None


def is_derivation(algebra: LeibnizAlgebra, d: Matrix) -> MapCheck:
    """D(xy) = D(x)y + x D(y) on all basis pairs; witness is the first pair."""
    _check_map_shape(algebra, d)
    f = algebra.field
    n = algebra.dim
    cols = [d.column(j) for j in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = d.apply(algebra.structure[i][j])
            ei = tuple(f.one() if t == i else f.zero() for t in range(n))
            ej = tuple(f.one() if t == j else f.zero() for t in range(n))
            rhs1 = mult_coords(algebra, cols[i], ej)
            rhs2 = mult_coords(algebra, ei, cols[j])
            rhs = tuple(f.add(a, b) for a, b in zip(rhs1, rhs2))
            if lhs != rhs:
                return MapCheck(False, {
                    "pair": (i + 1, j + 1),
                    "lhs": [f.to_str(x) for x in lhs],
                    "rhs": [f.to_str(x) for x in rhs]})
    return MapCheck(True, None)


def is_automorphism(algebra: LeibnizAlgebra, t: Matrix) -> MapCheck:
    """T invertible with T(xy) = T(x)T(y) on all basis pairs."""
    _check_map_shape(algebra, t)
    f = algebra.field
    n = algebra.dim
    if matrix_rank(t) != n:
        return MapCheck(False, {"singular": True})
    cols = [t.column(j) for j in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = t.apply(algebra.structure[i][j])
            rhs = mult_coords(algebra, cols[i], cols[j])
            if lhs != rhs:
                return MapCheck(False, {
                    "pair": (i + 1, j + 1),
                    "lhs": [f.to_str(x) for x in lhs],
                    "rhs": [f.to_str(x) for x in rhs]})
    return MapCheck(True, None)


def _check_map_shape(algebra: LeibnizAlgebra, m: Matrix) -> None:
    if m.rows != algebra.dim or m.cols != algebra.dim:
        raise ShapeMismatch(f"self map must be {algebra.dim}x{algebra.dim}")
    if m.field != algebra.field:
        raise ShapeMismatch("self map over a different field")


def _nilpotency_conclusion(algebra: LeibnizAlgebra) -> tuple:
    verdict, cls = is_nilpotent_algebra(algebra)
    series = lower_central_series(algebra)
    check = Check("algebra_nilpotent", verdict,
                  data={"class": cls, "series_dims": [s.dim for s in series]})
    return check, cls, [s.dim for s in series]


def corollary3_check(algebra: LeibnizAlgebra, lie_set: LieSet) -> Report:
    """Generating Lie set with nilpotent left multiplications forces the
    whole algebra nilpotent; premises are checked on the regular bimodule,
    where the left action of an element is its left multiplication."""
    premises = check_engel_premises(regular_bimodule(algebra), lie_set).premises
    if not all(c.passed for c in premises):
        return Report(premises=premises, conclusions=[])
    conclusion, cls, dims = _nilpotency_conclusion(algebra)
    return Report(premises=premises, conclusions=[conclusion],
                  data={"class": cls, "series_dims": dims})


def corollary4_check(algebra: LeibnizAlgebra, t: Matrix, p: int) -> Report:
    """Fixed-point-free automorphism of exact order p forces nilpotency.

    The order check verifies T^p = 1 and T^q != 1 for 1 <= q < p. A
    composite p is recorded as a non-fatal note (the classical statement
    uses a prime period; the hypothesis checked here is the stated one).
    """
    if p < 2:
        raise ValueError(f"order must be at least 2, got {p}")
    auto = is_automorphism(algebra, t)
    n = algebra.dim
    identity = Matrix.identity(algebra.field, n)
    power = t
    exact_order, order_witness = True, None
    for q in range(1, p):
        if power == identity:
            exact_order, order_witness = False, {"lower_power_is_identity": q}
            break
        power = power @ t
    if exact_order and power != identity:
        exact_order, order_witness = False, {"power_p_not_identity": p}
    fixed = kernel_basis(t - identity)
    fixed_free = fixed.is_zero()
    premises = [
        Check("is_automorphism", auto.ok, witness=auto.witness),
        Check("exact_order", exact_order, witness=order_witness,
              data={"order": p}),
        Check("no_nonzero_fixed_points", fixed_free,
              witness=None if fixed_free else
              [algebra.field.to_str(x) for x in fixed.basis[0]]),
    ]
    notes = [] if is_prime(p) else [f"order {p} is composite (NotPrime)"]
    if not all(c.passed for c in premises):
        return Report(premises=premises, conclusions=[], notes=notes)
    conclusion, cls, dims = _nilpotency_conclusion(algebra)
    return Report(premises=premises, conclusions=[conclusion],
                  data={"class": cls, "series_dims": dims}, notes=notes)


def corollary5_check(algebra: LeibnizAlgebra, d: Matrix) -> Report:
    """Non-singular derivation in characteristic zero forces nilpotency."""
    char_zero = isinstance(algebra.field, RationalField)
    deriv = is_derivation(algebra, d)
    nonsingular = matrix_rank(d) == algebra.dim
    premises = [
        Check("characteristic_zero", char_zero,
              witness=None if char_zero else
              {"characteristic": algebra.field.characteristic}),
        Check("is_derivation", deriv.ok, witness=deriv.witness),
        Check("nonsingular", nonsingular,
              witness=None if nonsingular else {"rank": matrix_rank(d)}),
    ]
    if not all(c.passed for c in premises):
        return Report(premises=premises, conclusions=[])
    conclusion, cls, dims = _nilpotency_conclusion(algebra)
    return Report(premises=premises, conclusions=[conclusion],
                  data={"class": cls, "series_dims": dims})


def carrier_series(algebra: LeibnizAlgebra, carrier: Subspace) -> list:
    """Lower central series of a subspace with products taken in the algebra.

    For an ideal the terms decrease monotonically and the series ends at its
    first stable term. A carrier that is not even a subalgebra can make the
    step map cycle through subspaces without stabilizing, so the series cuts
    off at the first repeated term; either way it reaches zero exactly when
    the induced structure is nilpotent.
    """
    series = [carrier]
    seen = {carrier.basis}
    while True:
        last = series[-1]
        nxt = product_span(algebra, carrier, last) + \
            product_span(algebra, last, carrier)
        if nxt == last or nxt.basis in seen:
            break
        series.append(nxt)
        seen.add(nxt.basis)
    return series


def carrier_nilpotency(algebra: LeibnizAlgebra, carrier: Subspace) -> tuple:
    """(verdict, class) of the induced structure on a carrier subspace."""
    series = carrier_series(algebra, carrier)
    if series[-1].is_zero():
        return True, len(series) - 1
    return False, None


def sum_of_nilpotent_ideals(algebra: LeibnizAlgebra, first: Subspace,
                            second: Subspace) -> Report:
    """Check both carriers are nilpotent ideals; then so must be their sum."""
    for carrier in (first, second):
        if carrier.ambient_dim != algebra.dim or carrier.field != algebra.field:
            raise ShapeMismatch("ideal carrier does not sit inside the algebra")
    checks = []
    for label, carrier in (("first", first), ("second", second)):
        ideal_ok = is_ideal(algebra, carrier)
        nil_ok, cls = carrier_nilpotency(algebra, carrier)
        checks.append(Check(f"{label}_is_ideal", ideal_ok,
                            witness=None if ideal_ok else {"which": label}))
        checks.append(Check(f"{label}_is_nilpotent", nil_ok,
                            witness=None if nil_ok else {"which": label},
                            data={"class": cls}))
    if not all(c.passed for c in checks):
        return Report(premises=checks, conclusions=[])
    total = first + second
    sum_ideal = is_ideal(algebra, total)
    sum_nil, sum_cls = carrier_nilpotency(algebra, total)
    conclusions = [
        Check("sum_is_ideal", sum_ideal),
        Check("sum_is_nilpotent", sum_nil, data={"class": sum_cls}),
    ]
    return Report(premises=checks, conclusions=conclusions,
                  data={"sum_dim": total.dim, "sum_class": sum_cls,
                        "sum_basis": [[algebra.field.to_str(x) for x in row]
                                      for row in total.basis]},
                  notes=["sum carrier returned in data.sum_basis"])


def nilradical_from_family(algebra: LeibnizAlgebra,
                           ideals: Sequence[Subspace]) -> Report:
    """Fold the pairwise sum over a family of nilpotent ideals.

    Every input must pass the nilpotent-ideal premises (NotAnIdealError /
    NotNilpotentIdealError name the offender's index otherwise). The result
    is a nilpotent ideal containing every input, maximal only relative to
    the supplied family.
    """
    for idx, carrier in enumerate(ideals):
        if not is_ideal(algebra, carrier):
            raise NotAnIdealError(idx)
        if not carrier_nilpotency(algebra, carrier)[0]:
            raise NotNilpotentIdealError(idx)
    total = Subspace.zero(algebra.field, algebra.dim)
    for idx, carrier in enumerate(ideals):
        step = sum_of_nilpotent_ideals(algebra, total, carrier)
        if step.verdict != PASS:
            raise TheoremViolation(
                f"sum with family member {idx} failed", witness=step)
        total = total + carrier
    nil, cls = carrier_nilpotency(algebra, total)
    contains_all = all(total.contains_subspace(c) for c in ideals)
    premises = [Check("family_members_are_nilpotent_ideals", True,
                      data={"count": len(ideals)})]
    conclusions = [
        Check("radical_is_ideal", is_ideal(algebra, total)),
        Check("radical_is_nilpotent", nil, data={"class": cls}),
        Check("radical_contains_family", contains_all),
    ]
    return Report(premises=premises, conclusions=conclusions,
                  data={"radical_dim": total.dim, "radical_class": cls,
                        "radical_basis": [[algebra.field.to_str(x) for x in row]
                                          for row in total.basis]},
                  notes=["maximal only relative to the supplied family"])
