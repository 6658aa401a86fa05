# File: toric/exceptions.py
"""
Errors raised by the toric library.

Bad user input (an invalid fan) is reported with Django's ``ValidationError``
and never appears here. This module holds two other families:

 - ``ValueError`` subclasses for violated preconditions of the pure
   functions (a zero vector, an unbounded polyhedron, ...).
 - ``InvariantViolation`` subclasses for results that contradict a proven
   identity. These always signal a bug upstream and map to exit status 2.

"""


class ZeroVector(ValueError):
    pass


class NotInjective(ValueError):
    pass


class Unbounded(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


class NotARoot(ValueError):
    pass


class CaseNotApplicable(ValueError):
    pass


class SearchTooLarge(ValueError):
    pass


class InvariantViolation(RuntimeError):
    code = "invariant_violation"

    def __init__(self, message, **details):
        super(InvariantViolation, self).__init__(message)
        self.message = message
        self.details = details


class InternalInconsistency(InvariantViolation):
    code = "internal_inconsistency"


class OrderViolation(InvariantViolation):
    code = "order_violation"


class DecompositionMismatch(InvariantViolation):
    code = "decomposition_mismatch"


class AccountingMismatch(InvariantViolation):
    code = "accounting_mismatch"


class LawViolation(InvariantViolation):
    code = "law_violation"


class NotInAutDelta(InvariantViolation):
    code = "not_in_aut_delta"
