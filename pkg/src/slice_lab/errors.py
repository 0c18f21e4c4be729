class SliceLabError(Exception):
    """Base class for every error raised by slice_lab."""


class ZeroNormal(SliceLabError, ValueError):
    pass


class DimensionTooSmall(SliceLabError, ValueError):
    pass


class DimensionUnsupported(SliceLabError, ValueError):
    pass


class AxisOutOfRange(SliceLabError, IndexError):
    pass


class NotThreeDimensional(SliceLabError, ValueError):
    pass


class NotCentrallySymmetric(SliceLabError, ValueError):
    pass


class ZeroGenerator(SliceLabError, ValueError):
    pass


class ZeroDirection(SliceLabError, ValueError):
    pass


class ToleranceUnreachable(SliceLabError, ArithmeticError):
    pass


class AllZeroNormal(ZeroNormal):
    pass
