"""Exception types shared across the package."""


class IrrlabError(Exception):
    """Base class for all package-specific errors."""


class SelfLoopError(IrrlabError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.vertex = u


class VertexOutOfRangeError(IrrlabError):
    def __init__(self, u, n):
        super().__init__(f"vertex {u} out of range [0, {n})")
        self.vertex = u
        self.n = n


class NotAPermutationError(IrrlabError):
    pass


class MalformedHeaderError(IrrlabError):
    pass


class TruncatedBitfieldError(IrrlabError):
    pass


class NonPrintableByteError(IrrlabError):
    pass


class RegularGraphError(IrrlabError):
    pass


class DisconnectedError(IrrlabError):
    pass


class NotATreeError(IrrlabError):
    pass


class OrderTooSmallError(IrrlabError):
    pass


class NotRealizableError(IrrlabError):
    pass


class MaxDegreeExceeds3Error(IrrlabError):
    pass


class BadClassIndexError(IrrlabError):
    pass


class ParamsOutOfRangeError(IrrlabError):
    pass


class InternalOverlapError(IrrlabError):
    pass


class CapExceededError(IrrlabError):
    pass
