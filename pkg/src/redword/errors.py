"""Errors shared by the enumeration kernels and the sweep drivers."""


class EnumerationCapExceeded(RuntimeError):
    """Raised when a reduced-word enumeration would produce more words than allowed.

    The cap is an explicit guard against runaway enumerations; exceeding it is
    an error, never a silent truncation.  ``partial_count`` records how many
    words were produced before the enumeration was abandoned.
    """

    def __init__(self, cap: int, partial_count: int):
        super().__init__(
            f"reduced-word enumeration exceeded the cap of {cap} words"
        )
        self.cap = cap
        self.partial_count = partial_count


class SweepBoundExceeded(RuntimeError):
    """Raised when an exhaustive sweep is requested beyond its configured bound."""

    def __init__(self, degree: int, bound: int):
        super().__init__(
            f"sweep over degree {degree} exceeds the configured bound of {bound}"
        )
        self.degree = degree
        self.bound = bound
