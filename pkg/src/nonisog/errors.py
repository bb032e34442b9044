"""Exception types shared by every module.

The distinction matters to callers: invalid input is the caller's fault,
a capability error is a documented limit of this implementation (never a
wrong answer), and an internal inconsistency signals an arithmetic bug.
"""


class InvalidInputError(ValueError):
    """A precondition on the inputs is violated."""


class CapabilityError(RuntimeError):
    """The exact answer exists but lies beyond this implementation's
    documented limits (degree caps, 64-bit factorization, ...)."""


class InternalInconsistencyError(RuntimeError):
    """Two exact computations disagree; indicates a bug, not bad input."""
