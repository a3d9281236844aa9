"""Exception types shared across the package."""


class HeckeTwistError(Exception):
    pass


class OddExponent(HeckeTwistError, ValueError):
    """A Laurent polynomial in v = q^(1/2) was evaluated at q with an odd power of v."""


class SystemMismatch(HeckeTwistError, ValueError):
    pass


class SizeBound(HeckeTwistError, ValueError):
    """An enumeration would exceed its configured budget."""


class Singular(HeckeTwistError, ValueError):
    pass


class NotInBigCell(HeckeTwistError, ValueError):
    """The matrix is not of the form x_+ x_- (unit upper times unit lower)."""


class NotUpperTriangular(HeckeTwistError, ValueError):
    pass


class NotInHg(HeckeTwistError, ValueError):
    pass


class DimensionMismatch(HeckeTwistError, ValueError):
    pass


class DegenerateSample(HeckeTwistError, ValueError):
    pass
