"""Exception types raised across the package."""


class CDLatError(Exception):
    """Base class for every error this package raises on purpose."""


class GroupTooLarge(CDLatError):
    pass


class OrderMismatch(CDLatError):
    pass


class InvalidFamilyParameters(CDLatError):
    pass


class InvalidGroup(CDLatError):
    """A multiplication table failed one of the group axioms."""


class LatticeTooLarge(CDLatError):
    pass


class CDClosureViolation(CDLatError):
    pass


class NotNested(CDLatError):
    pass


class NotACDMember(CDLatError):
    pass


class NotAPGroup(CDLatError):
    pass


class ParseError(CDLatError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class MissingCatalog(CDLatError):
    pass


class IncompleteCatalog(CDLatError):
    pass
