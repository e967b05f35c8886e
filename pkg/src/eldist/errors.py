"""Exception hierarchy for eldist."""


class EldError(Exception):
    """Base class for every error raised by this package."""


# graph construction

class GraphError(EldError, ValueError):
    """Invalid graph input. ``line`` is set when the edge came from a file."""

    line = None


class SelfLoop(GraphError):
    def __init__(self, i, line=None):
        self.i = i
        self.line = line
        super().__init__(_at(line) + f"self-loop on vertex {i}")


class DuplicateEdge(GraphError):
    def __init__(self, i, j, line=None):
        self.i, self.j = i, j
        self.line = line
        super().__init__(_at(line) + f"duplicate edge ({i}, {j})")


class NegativeWeight(GraphError):
    def __init__(self, i, j, w, line=None):
        self.i, self.j, self.w = i, j, w
        self.line = line
        super().__init__(_at(line) + f"negative weight {w!r} on edge ({i}, {j})")


class VertexOutOfRange(GraphError):
    def __init__(self, vertex, n, line=None):
        self.vertex, self.n = vertex, n
        self.line = line
        super().__init__(_at(line) + f"vertex {vertex} outside 0..{n - 1}")


def _at(line):
    return "" if line is None else f"line {line}: "


# spectral / numerical

class KTooLarge(EldError, ValueError):
    def __init__(self, k, n, label=None):
        self.k, self.n, self.label = k, n, label
        who = f" (graph {label!r})" if label is not None else ""
        super().__init__(f"k={k} exceeds the vertex count n={n}{who}")


class ConvergenceFailure(EldError, ArithmeticError):
    pass


class AllZeroVector(EldError, ValueError):
    pass


class DimensionMismatch(EldError, ValueError):
    pass


class AxisOutOfRange(EldError, IndexError):
    pass


class InvalidOrder(EldError, ValueError):
    pass


# generators

class GeneratorError(EldError, ValueError):
    pass


class TooSmall(GeneratorError):
    pass


class BadProbability(GeneratorError):
    pass


class BadScale(GeneratorError):
    pass


class BadParams(GeneratorError):
    pass


# files

class ParseError(EldError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(_at(line) + message)


class CacheFormatError(EldError, ValueError):
    pass


class BadMagic(CacheFormatError):
    pass


class VersionMismatch(CacheFormatError):
    pass


class TruncatedFile(CacheFormatError):
    pass
