"""Exception types raised by the toolkit.

Every error derives from :class:`ActaError` so callers (and the CLI) can map
bad input to a single exit path.
"""


class ActaError(ValueError):
    pass


class IndexOutOfRange(ActaError):
    pass


class NotAssociative(ActaError):
    def __init__(self, i, j, k):
        super().__init__(f"not associative at ({i}, {j}, {k})")
        self.witness = (i, j, k)


class NoIdentityAtZero(ActaError):
    def __init__(self, i):
        super().__init__(f"index 0 is not an identity (fails at {i})")
        self.witness = i


class UnknownFamily(ActaError):
    pass


class ParamOutOfRange(ActaError):
    pass


class EmptySeeds(ActaError):
    pass


class OrderTooLarge(ActaError):
    pass


class NotCompatible(ActaError):
    def __init__(self, x, s, t):
        super().__init__(f"action not compatible: x={x}, s={s}, t={t}")
        self.witness = (x, s, t)


class NotUnital(ActaError):
    def __init__(self, x):
        super().__init__(f"identity does not fix element {x}")
        self.witness = x


class SizeCapExceeded(ActaError):
    pass


class MixedMonoids(ActaError):
    pass


class NotARightIdeal(ActaError):
    def __init__(self, x, s):
        super().__init__(f"not a right ideal: {x}*{s} escapes")
        self.witness = (x, s)


class NotInjective(ActaError):
    pass


class NotParallel(ActaError):
    pass


class NotASubact(ActaError):
    pass


class NotAMorphism(ActaError):
    pass


class IdealsIntersect(ActaError):
    pass


class LeftReversible(ActaError):
    pass


class UnknownTheorem(ActaError):
    pass


class BoundsTooLarge(ActaError):
    pass
