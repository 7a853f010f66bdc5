"""Exception types raised across the package."""


class GCCError(Exception):
    """Base class for all errors raised by gcluster."""


class ParseError(GCCError, ValueError):
    pass


class NotGeneralizedCartan(GCCError, ValueError):
    pass


class NotSymmetrizable(GCCError, ValueError):
    pass


class NotFiniteType(GCCError, ValueError):
    pass


class OrientedCycle(GCCError, ValueError):
    pass


class NotAlternating(GCCError, ValueError):
    pass


class NotSimplyLaced(GCCError, ValueError):
    pass


class NotASink(GCCError, ValueError):
    pass


class NoNegativeInOrbit(GCCError, RuntimeError):
    """An orbit iteration exceeded its cap without reaching a negative root."""


class ReductionCapExceeded(GCCError, RuntimeError):
    """A compatibility reduction exceeded its iteration cap."""


class NegativeExt(GCCError, RuntimeError):
    """hom - <x, y> came out negative: the Hom computation is inconsistent."""


class SupportViolation(GCCError, RuntimeError):
    """A term outside the expected orbit-category window was nonzero."""


class NonIntegralProduct(GCCError, RuntimeError):
    pass


class NotAFacet(GCCError, ValueError):
    pass


class NotAMember(GCCError, ValueError):
    pass


class NotABijection(GCCError, ValueError):
    pass


class AsymmetricRelation(GCCError, RuntimeError):
    """A compatibility predicate disagreed with itself under argument swap."""


class VertexCapExceeded(GCCError, RuntimeError):
    pass
