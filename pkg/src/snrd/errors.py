"""Exception hierarchy shared by every module of the package."""


class SnrdError(Exception):
    """Base class for all errors raised by snrd."""


class GraphError(SnrdError, ValueError):
    """Invalid fuzzy graph construction or lookup."""


class DuplicateVertex(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class SelfLoop(GraphError):
    pass


class MembershipOutOfRange(GraphError):
    pass


class EdgeExceedsVertexMembership(GraphError):
    pass


class ParseError(SnrdError, ValueError):
    """A graph, labeling or family document could not be read."""


class SameVertex(SnrdError, ValueError):
    pass


class NotAPath(SnrdError, ValueError):
    pass


class NotACycle(SnrdError, ValueError):
    pass


class TooLarge(SnrdError):
    """The requested exhaustive computation exceeds the configured vertex limit."""


class NotDominating(SnrdError, ValueError):
    pass


class FamilyError(SnrdError, ValueError):
    """A graph does not belong to the family a closed form was requested for."""


class NotComplete(FamilyError):
    pass


class NotCompleteBipartite(FamilyError):
    pass


class EmptySide(FamilyError):
    pass


class NotStrongCycle(FamilyError):
    pass


class WrongResidue(FamilyError):
    pass


class BadIndex(FamilyError, IndexError):
    pass


class OutOfHypothesis(FamilyError):
    pass


class BadSpec(SnrdError, ValueError):
    pass


class TheoremViolation(AssertionError):
    """A machine-checked claim about an instance turned out to be false.

    Carries the offending quantities so sweeps can dump a reproducible case.
    """

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class InvalidLabeling(SnrdError, ValueError):
    """A labeling is not a total map from the vertex set to {0, 1, 2}."""
