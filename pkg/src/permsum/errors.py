"""Exception hierarchy.

Every domain failure raises a subclass of :class:`PermsumError`; the CLI
reports the class name verbatim, so the names are part of the public
interface and must stay stable.
"""


class PermsumError(Exception):
    """Base class for all errors raised by this package."""


class SizeMismatch(PermsumError):
    """Operands have different sizes (permutation, weights, inputs)."""


class NotAPermutation(PermsumError):
    """A value sequence is not a rearrangement of 1..n."""


class MalformedInput(PermsumError):
    """Text could not be parsed at all."""


class NoSuccessor(PermsumError):
    """The identity permutation has no successor."""


class NoPredecessor(PermsumError):
    """The descending permutation has no predecessor."""


class TooLarge(PermsumError):
    """n exceeds the configured enumeration or search limit."""


class Overflow(PermsumError):
    """A value or intermediate result does not fit a signed 64-bit integer."""


class NonInjectiveInputs(PermsumError):
    """Verification requires pairwise-distinct input entries."""


class InvalidWeights(PermsumError):
    """Weight sequence violates its invariants (not strictly increasing,
    or first weight below the permitted minimum)."""


class InvalidInputs(PermsumError):
    """Input vector entries are not integers or are out of range."""


class BaseTooSmall(PermsumError):
    """Power-sequence base is smaller than the sequence length."""


class BadIndex(PermsumError):
    """A level index is outside its valid range."""


class PrefixMismatch(PermsumError):
    """Weight prefix has the wrong length for the requested level."""


class InfeasibleBudget(PermsumError):
    """No weight sequence satisfies distinctness within the given budget."""


class UnsupportedInputs(PermsumError):
    """The operation does not support these input values (e.g. the exact
    search requires nonnegative entries)."""


class PoolTooSmall(PermsumError):
    """Pool smaller than the largest possible permutation sum."""


class CollidingWeights(PermsumError):
    """A trick plan was requested for weights whose sums collide."""


class UnknownSum(PermsumError):
    """No permutation attains the decoded sum (miscount during the trick)."""
