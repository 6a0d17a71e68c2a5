"""Exception hierarchy.

Every error raised for bad mathematical input derives from :class:`GRSetsError`;
the CLI maps those to exit status 1 and :class:`ParseError` to exit status 2.
"""


class GRSetsError(Exception):
    pass


class ParseError(GRSetsError):
    """Input could not be decoded into the expected structure."""


class NotAGroup(GRSetsError):
    pass


class NotASubgroup(GRSetsError):
    pass


class NotACharacter(GRSetsError):
    pass


class UnsupportedKind(GRSetsError):
    pass


class DomainMismatch(GRSetsError):
    pass


class BadTransversal(GRSetsError):
    pass


class NegativeWeight(GRSetsError):
    pass


class NonFiniteWeight(GRSetsError):
    pass


class CharacterDomainMismatch(GRSetsError):
    pass


class GroupMismatch(GRSetsError):
    pass


class ContextMismatch(GRSetsError):
    pass


class NonPositiveWeights(GRSetsError):
    pass


class ZeroWeightWithPositiveEuler(GRSetsError):
    pass


class SpecError(GRSetsError):
    pass


class NonAbelianAction(GRSetsError):
    pass
