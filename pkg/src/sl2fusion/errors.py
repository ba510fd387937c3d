class ConsistencyError(Exception):
    """A mathematical invariant that should hold by theorem failed.

    Raised when an internal cross-check detects an impossible state, e.g. a
    nonzero remainder in a division that is exact by antisymmetry, or a
    polynomial whose degree exceeds a bound forced by an identity.  This is
    never a caller mistake; it means a computation cannot be trusted.
    """
