"""Exception types raised across the package."""


class HullvolError(Exception):
    pass


class DegenerateInput(HullvolError, ValueError):
    pass


class ZeroDirection(HullvolError, ValueError):
    pass


class ZeroVector(ZeroDirection):
    pass


class SingularMap(HullvolError, ValueError):
    pass


class OriginNotInterior(HullvolError, ValueError):
    pass


class NotConvexPolygon(HullvolError, ValueError):
    pass


class NotATriangle(HullvolError, ValueError):
    pass


class InvalidTolerance(HullvolError, ValueError):
    pass


class NotOnBoundary(HullvolError, ValueError):
    pass


class NotSymmetric(HullvolError, ValueError):
    pass


class DegenerateBody(HullvolError, ValueError):
    pass


class UnsupportedBody(HullvolError, TypeError):
    pass


class LPFailure(HullvolError, RuntimeError):
    pass


class GenerationFailure(HullvolError, RuntimeError):
    pass


class ParseError(HullvolError, ValueError):
    pass


class DimensionMismatch(HullvolError, ValueError):
    pass
