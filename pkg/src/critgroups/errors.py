"""Exception types shared across the package."""


class CritGroupsError(ValueError):
    """Base class for all errors raised by this package."""


# graph construction and classification

class NotConnected(CritGroupsError):
    pass


class NotTwoEdgeConnected(CritGroupsError):
    pass


class NotSpanningTree(CritGroupsError):
    pass


class NotSpanningForest(CritGroupsError):
    pass


class UnknownFamily(CritGroupsError):
    pass


class BadParams(CritGroupsError):
    pass


class TooLarge(CritGroupsError):
    pass


class NoEdges(CritGroupsError):
    pass


# exact linear algebra

class DimensionMismatch(CritGroupsError):
    pass


class NotSquare(CritGroupsError):
    pass


class InfiniteCokernel(CritGroupsError):
    pass


class NotSublattice(CritGroupsError):
    pass


class RankMismatch(CritGroupsError):
    pass


class BadOmitSet(CritGroupsError):
    pass


class NotPrime(CritGroupsError):
    pass


class TooManyFactors(CritGroupsError):
    pass


# morphisms and theorem checks

class NotRegular(CritGroupsError):
    pass


class DegreeTooSmall(CritGroupsError):
    pass


class NotSemiregularBipartite(CritGroupsError):
    pass


class MorphismInvalid(CritGroupsError):
    pass


class HypothesisFailed(CritGroupsError):
    """A theorem verifier was called on a graph that fails its hypotheses."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason
