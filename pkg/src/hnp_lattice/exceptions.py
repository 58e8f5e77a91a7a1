"""
HNP Lattice Exception Classes

Custom exception classes for group, lattice and cohomology computations.
Provides specific error types for the different ways an input or an
intermediate construction can be rejected.
"""


class HNPLatticeError(Exception):
    """Base exception class for all hnp-lattice errors."""
    pass


class InvalidInputError(HNPLatticeError, ValueError):
    """
    Raised when user supplied data cannot be parsed.

    Covers:
    - Malformed JSON group, subgroup or family descriptions
    - Unparseable catalog expressions
    - Out-of-range element indices
    """
    pass


class NotAGroupError(HNPLatticeError):
    """
    Raised when a Cayley table does not define a group.

    Attributes:
        reason: One of 'shape', 'range', 'identity', 'associativity', 'inverses'
        detail: Offending entry or triple, when known
    """
    def __init__(self, reason, detail=None):
        message = f"Not a group: {reason} check failed"
        if detail is not None:
            message += f" at {detail}"
        super().__init__(message)
        self.reason = reason
        self.detail = detail


class OrderCapExceededError(HNPLatticeError):
    """
    Raised when a group (or a closure in progress) grows beyond a configured cap.

    Attributes:
        order: Order reached (a lower bound when raised during closure)
        cap: The cap that was exceeded
    """
    def __init__(self, order, cap, what="group"):
        super().__init__(f"{what} order {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap
        self.what = what


class UnsupportedFamilyError(HNPLatticeError):
    """Raised when a catalog family name or its parameters are not supported."""

    def __init__(self, family, reason=None):
        message = f"Unsupported group family: {family}"
        if reason:
            message += f" ({reason})"
        super().__init__(message)
        self.family = family


class NotNormalError(HNPLatticeError):
    """
    Raised when an operation requires a normal subgroup and got a non-normal one.

    Attributes:
        subgroup: The offending subgroup (members tuple)
    """
    def __init__(self, subgroup, message=None):
        super().__init__(message or f"Subgroup {subgroup} is not normal")
        self.subgroup = subgroup


class NotNormalOperandError(NotNormalError):
    """Raised by product_set when neither operand is normal."""
    pass


class GroupMismatchError(HNPLatticeError):
    """Raised when objects built over different groups are combined."""
    pass


class QuotientNotFreeError(HNPLatticeError):
    """
    Raised when a lattice quotient has torsion.

    Attributes:
        invariant_factors: Invariant factors greater than one found in the sublattice basis
    """
    def __init__(self, invariant_factors):
        super().__init__(f"Quotient lattice is not free: torsion factors {list(invariant_factors)}")
        self.invariant_factors = list(invariant_factors)


class NotStableError(HNPLatticeError):
    """Raised when a sublattice is not mapped into itself by the group action."""
    pass


class NotCyclicError(HNPLatticeError):
    """Raised when the cyclic cohomology shortcut is asked for a non-cyclic group."""
    pass


class IndivisibleCountsError(HNPLatticeError):
    """
    Raised when |Ker e| does not divide |H^2(Z)'|.

    Ker e is always contained in H^2(Z)', so this signals an internal bug.
    """
    def __init__(self, numerator, denominator):
        super().__init__(f"{denominator} does not divide {numerator}")
        self.numerator = numerator
        self.denominator = denominator


class ExactnessError(HNPLatticeError):
    """Raised when a constructed short exact sequence fails its exactness check."""
    pass
