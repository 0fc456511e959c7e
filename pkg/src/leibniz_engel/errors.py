"""Exception hierarchy shared across the package.

Checker functions (theorem and corollary verifiers) report failures through
report objects, not exceptions; the classes here cover precondition
violations and process failures that make a result impossible to produce.
"""

from __future__ import annotations


class LeibnizError(Exception):
    """Base class for all package errors."""


class FieldMismatch(LeibnizError):
    """Operands live over different fields."""


class DimensionMismatch(LeibnizError):
    """Vector/matrix/subspace dimensions are incompatible."""


class NonSquareError(LeibnizError):
    """A square matrix was required."""


class ShapeMismatch(LeibnizError):
    """A tensor or action family has the wrong shape."""


class AlgebraMismatch(LeibnizError):
    """Elements or modules belong to different algebras."""


class InvalidAlgebra(LeibnizError):
    """Structure constants violate the defining identity.

    Carries the validation report in ``.report``.
    """

    def __init__(self, report):
        self.report = report
        super().__init__(f"structure constants violate the defining identity "
                         f"({len(report.violations)} violating triples)")


class InvalidExponent(LeibnizError):
    """Element powers start at exponent 1."""


class InvalidSpec(LeibnizError):
    """Malformed family specification."""


class CapExceeded(LeibnizError):
    """Lie-set closure exceeded its member cap (possibly infinite set)."""

    def __init__(self, cap: int, members_so_far: int):
        self.cap = cap
        self.members_so_far = members_so_far
        super().__init__(f"closure exceeded cap of {cap} members")


class NotNilpotentError(LeibnizError):
    """An operator required to be nilpotent is not.

    ``.witness`` holds the offending element's coordinates when available.
    """

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class FlagStalled(LeibnizError):
    """The annihilator flag stopped growing before filling the module."""

    def __init__(self, level: int, stalled_dim: int, module_dim: int):
        self.level = level
        self.stalled_dim = stalled_dim
        self.module_dim = module_dim
        super().__init__(
            f"flag stalled at level {level} (dim {stalled_dim} of {module_dim})")


class NoAnnihilator(LeibnizError):
    """The module has no nonzero vector killed by all actions."""


class NotAnIdealError(LeibnizError):
    """A subspace required to be an ideal is not."""

    def __init__(self, which):
        self.which = which
        super().__init__(f"subspace {which} is not an ideal")


class NotNilpotentIdealError(LeibnizError):
    """An ideal required to be nilpotent is not."""

    def __init__(self, which):
        self.which = which
        super().__init__(f"ideal {which} is not nilpotent")


class TheoremViolation(LeibnizError):
    """Premises hold but a proved conclusion failed: an implementation bug."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class FormatError(LeibnizError):
    """A JSON input file does not match its schema."""
