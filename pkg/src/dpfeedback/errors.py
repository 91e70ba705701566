"""Exception types shared across the package."""

from __future__ import annotations


class MiniCError(Exception):
    """Base for all diagnostics raised on a submission."""

    def __init__(self, message: str, line: int = None, col: int = None):
        self.message = message
        self.line = line
        self.col = col
        where = f" at line {line}" if line is not None else ""
        where += f", col {col}" if col is not None else ""
        super().__init__(message + where)


class ParseError(MiniCError):
    pass


class TypeCheckError(MiniCError):
    pass


class UnsupportedConstruct(MiniCError):
    pass


class AnalysisError(MiniCError):
    pass


class RecursionUnsupported(AnalysisError):
    pass


class NoDpArray(AnalysisError):
    pass


class LabelConflict(AnalysisError):
    pass


class LabelIncomplete(AnalysisError):
    pass


class FeatureExtractionFailed(AnalysisError):
    pass


class CanonicalizationFailed(AnalysisError):
    pass


class NoCorrespondence(AnalysisError):
    def __init__(self, index: int, reason: str):
        self.index = index
        self.reason = reason
        super().__init__(f"no control correspondence at index {index}: {reason}")


class EncodingFailed(AnalysisError):
    pass


class SolverCrashed(Exception):
    pass


class UnlabeledSubmission(Exception):
    """Raised when verification cannot label a submission; routed to manual
    evaluation rather than producing feedback."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class NoMatchingGuard(Exception):
    pass


class ReferenceClusterMismatch(Exception):
    def __init__(self, expected_cluster: str, actual_cluster: str):
        self.expected_cluster = expected_cluster
        self.actual_cluster = actual_cluster
        super().__init__(
            f"added solution lands in cluster {actual_cluster}, not {expected_cluster}")
