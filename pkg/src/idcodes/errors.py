"""Exception types shared across the package."""

from __future__ import annotations


class PreconditionError(ValueError):
    """An operation was called on input outside its documented domain."""


class GuardExceeded(PreconditionError):
    """An enumeration or sweep was requested beyond its hard size limit."""


class TwinsExist(PreconditionError):
    """The digraph has two vertices with equal in-balls, so no separating code exists."""

    def __init__(self, u: int, v: int):
        super().__init__(f"vertices {u} and {v} are twins")
        self.u = u
        self.v = v


class NotIdentifiable(PreconditionError):
    """A bipartite graph is not S-identifiable.

    Exactly one of ``pair`` (two S-vertices with equal neighbourhoods) or
    ``undominated`` (an S-vertex with empty neighbourhood) is set.
    """

    def __init__(self, pair: tuple[int, int] | None = None, undominated: int | None = None):
        if pair is not None:
            msg = f"S-vertices {pair[0]} and {pair[1]} have equal neighbourhoods"
        else:
            msg = f"S-vertex {undominated} has an empty neighbourhood"
        super().__init__(msg)
        self.pair = pair
        self.undominated = undominated


class NotInFamily(PreconditionError):
    """The digraph is not a transitive closure of a rooted oriented forest."""


class NoElement(RuntimeError):
    """No single element keeps all traces distinct.

    Only legitimate when the caller's preconditions were violated; with
    as many distinct sets as elements this signals a bug.
    """


class ConstructionFailed(RuntimeError):
    """An extremal set system could not be realised as a family digraph."""


class FormatError(ValueError):
    """Malformed input file."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)
        self.line = line
