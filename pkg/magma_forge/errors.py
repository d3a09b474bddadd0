class MagmaForgeError(Exception):
    """도메인 오류의 공통 부모"""

    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    @property
    def name(self):
        return type(self).__name__

    def __str__(self):
        if self.witness is not None:
            return f"{self.message} (witness: {self.witness})"
        return self.message


# 입력 / 포맷
class ParseError(MagmaForgeError):
    pass


class CapExceeded(MagmaForgeError):
    pass


# core-algebra
class LengthMismatch(MagmaForgeError):
    pass


class EntryOutOfRange(MagmaForgeError):
    pass


class NotEssentiallyPolyadic(MagmaForgeError):
    pass


class ArityMismatch(MagmaForgeError):
    pass


class NotClosed(MagmaForgeError):
    pass


class NotPermutation(MagmaForgeError):
    pass


# arithmetic
class DomainError(MagmaForgeError):
    pass


class FormulaMismatch(MagmaForgeError):
    pass


class NotDivisible(MagmaForgeError):
    pass


class NotPrime(MagmaForgeError):
    pass


# groups
class GroupAxiomError(MagmaForgeError):
    pass


class BadMultiplier(MagmaForgeError):
    pass


class NotASubgroup(MagmaForgeError):
    pass


class NotNormal(MagmaForgeError):
    pass


# construct
class NotAdmissible(MagmaForgeError):
    pass


class ContainsIdentity(MagmaForgeError):
    pass


class TooLarge(MagmaForgeError):
    pass


class InvalidSignFunction(MagmaForgeError):
    pass


class InvalidChirality(MagmaForgeError):
    pass


class ArityTooLarge(MagmaForgeError):
    pass


# hypertournaments
class NotHypertournamentMagma(MagmaForgeError):
    pass


class BadArity(MagmaForgeError):
    pass


class ArityNot2(MagmaForgeError):
    pass


class BadModulus(MagmaForgeError):
    pass


class ConflictingConstraints(MagmaForgeError):
    pass


# analysis
class NotAChain(MagmaForgeError):
    pass


class NotALattice(MagmaForgeError):
    pass
