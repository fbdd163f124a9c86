"""Exception hierarchy with stable machine-readable error codes.

Every error carries a ``code`` string that is frozen in the report schema;
the CLI surfaces it unchanged so scripted callers can branch on it.
"""

from __future__ import annotations


class CentexError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_report(self) -> dict:
        report = {"code": self.code, "message": self.message}
        if self.details:
            report["details"] = {k: repr(v) if not isinstance(v, (str, int, float, bool, list, dict, type(None))) else v
                                 for k, v in sorted(self.details.items())}
        return report


class InvalidGroupSpec(CentexError):
    code = "invalid_group_spec"


class UnknownGenerator(CentexError):
    code = "unknown_generator"


class UnknownSymbol(CentexError):
    code = "unknown_symbol"


class IdentityHasNoRoot(CentexError):
    code = "identity_has_no_root"


class IdentityUnclassifiable(CentexError):
    code = "identity_unclassifiable"


class TrivialCenter(CentexError):
    code = "trivial_center"


class NameClash(CentexError):
    code = "name_clash"


class InvalidEquation(CentexError):
    code = "invalid_equation"


class MissingAssignment(CentexError):
    code = "missing_assignment"


class NotASolution(CentexError):
    code = "not_a_solution"


class RankTooSmall(CentexError):
    code = "rank_too_small"


class InvalidWitness(CentexError):
    code = "invalid_witness"


class ExcludedEquation(CentexError):
    code = "excluded_equation"


class SeedInvalid(CentexError):
    code = "seed_invalid"


class RhsTrivial(CentexError):
    code = "rhs_trivial"


class NotRegular(CentexError):
    code = "not_regular"


class ConstructionFailed(CentexError):
    code = "construction_failed"


class CapExceeded(CentexError):
    code = "cap_exceeded"


class BudgetExceeded(CentexError):
    code = "budget_exceeded"


class MissingWitness(CentexError):
    code = "missing_witness"


class RelatorNotKilled(CentexError):
    code = "relator_not_killed"


class ConjugatorInCentralizerOfLowerLevel(CentexError):
    code = "conjugator_in_centralizer_of_lower_level"


class MalformedDecomposition(CentexError):
    code = "malformed_decomposition"


class WordSyntaxError(CentexError):
    code = "syntax_error"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(message, line=line, column=column)
        self.line = line
        self.column = column


class DocumentError(CentexError):
    code = "document_error"
