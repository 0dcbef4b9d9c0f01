"""Exception hierarchy.  Every error raised by the package derives from HomHomError."""


class HomHomError(Exception):
    pass


class CycleError(HomHomError):
    """Cover relation closes into a cycle (antisymmetry fails)."""


class NoBoundError(HomHomError):
    """Poset lacks a unique least or greatest element."""


class BadColorError(HomHomError):
    pass


class LoopError(HomHomError):
    pass


class AsymmetryError(HomHomError):
    pass


class EmptySetError(HomHomError):
    pass


class EmptySliceError(HomHomError):
    pass


class FlagError(HomHomError):
    """Operation needs an undirected loopless structure."""


class PosetMismatchError(HomHomError):
    pass


class ShapeError(HomHomError):
    """Poset (or structure) outside the scope of a classification theorem."""


class NotVertexUniformError(ShapeError):
    pass


class PreconditionError(HomHomError):
    pass


class BadSpecError(HomHomError):
    pass


class CapExceeded(HomHomError):
    pass
