"""
Error taxonomy. Every error carries a stable machine-readable code of the form
``<module>.<Name>`` and the process exit code the CLI should use.
"""

from orbitwist.src.constants.cli_constants import EXIT_BUDGET, EXIT_DOMAIN, EXIT_PARSE


class OrbitwistError(ValueError):
    module = "orbitwist"
    exit_code = EXIT_DOMAIN

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    @property
    def code(self) -> str:
        return f"{self.module}.{type(self).__name__}"

    def to_document(self) -> dict:
        return {"error": {"code": self.code, "message": self.message}}


class InvariantViolation(OrbitwistError):
    """Two exact evaluations that must agree did not. Always an arithmetic bug."""


# group_core


class NotAGroup(OrbitwistError):
    module = "group_core"


class OrderCapExceeded(OrbitwistError):
    module = "group_core"
    exit_code = EXIT_BUDGET


class DimensionMismatch(OrbitwistError):
    module = "group_core"


# orbicurve


class InvalidMultiplicity(OrbitwistError):
    module = "orbicurve"


class Disconnected(OrbitwistError):
    module = "orbicurve"


class SlotConflict(OrbitwistError):
    module = "orbicurve"


class InvalidSlot(OrbitwistError):
    module = "orbicurve"


class NodeMultiplicityMismatch(OrbitwistError):
    module = "orbicurve"


# orbibundle


class PointMismatch(OrbitwistError):
    module = "orbibundle"


class MissingRepData(OrbitwistError):
    module = "orbibundle"


class InvalidRepData(OrbitwistError):
    module = "orbibundle"


# homcount


class BudgetExceeded(OrbitwistError):
    module = "homcount"
    exit_code = EXIT_BUDGET


class CapExceeded(OrbitwistError):
    module = "homcount"
    exit_code = EXIT_BUDGET


class NonIntegralResult(OrbitwistError):
    module = "homcount"


class MissingCharacterTable(OrbitwistError):
    module = "homcount"


class NotSurjective(OrbitwistError):
    module = "homcount"


# gw_calculus


class ArityMismatch(OrbitwistError):
    module = "gw_calculus"


# cli_io


class ParseError(OrbitwistError):
    module = "cli_io"
    exit_code = EXIT_PARSE

    def __init__(self, path: str, location: str, reason: str):
        super().__init__(f"{path}: {location}: {reason}")
        self.path = path
        self.location = location
        self.reason = reason


class SchemaError(OrbitwistError):
    module = "cli_io"
    exit_code = EXIT_PARSE

    def __init__(self, field: str, reason: str = ""):
        super().__init__(f"{field}: {reason}" if reason else field)
        self.field = field
