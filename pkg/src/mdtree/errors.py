"""Exception hierarchy shared by every module.

The CLI maps each family onto a process exit code, so new errors should
subclass one of the three roots below rather than ``Exception`` directly.
"""

from __future__ import annotations


class MdTreeError(Exception):
    """Base class for all library errors."""


class InvalidInput(MdTreeError, ValueError):
    """A value violates a documented invariant or precondition."""


class LimitExceeded(MdTreeError):
    """An exhaustive enumeration was requested above its configured cap."""


# -- trees ------------------------------------------------------------------

class InvalidTree(InvalidInput):
    pass


class CycleDetected(InvalidTree):
    pass


class MultipleRoots(InvalidTree):
    pass


class BadLabelRange(InvalidTree):
    pass


# -- counting / maps ----------------------------------------------------------

class DomainError(InvalidInput):
    pass


class NotMember(InvalidInput):
    """A function is not in the set a bijection is defined on."""


# -- linalg / series ---------------------------------------------------------

class SizeMismatch(InvalidInput):
    pass


class OrderMismatch(InvalidInput):
    pass


class NonzeroConstantTerm(InvalidInput):
    pass


class BadConstantTerm(InvalidInput):
    pass
