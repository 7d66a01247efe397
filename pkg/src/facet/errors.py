"""Shared exception types."""


class FacetError(Exception):
    """Base class for errors raised by this package."""


class JavaParseError(FacetError):
    """Source text does not parse in the supported Java subset."""

    def __init__(self, message, line=None, col=None, path=None):
        self.line = line
        self.col = col
        self.path = path
        where = ""
        if path:
            where += str(path)
        if line is not None:
            where += f":{line}"
            if col is not None:
                where += f":{col}"
        super().__init__(f"{where}: {message}" if where else message)


class QueryError(FacetError):
    """A query violates the syntax or the structural invariants."""


class EvaluationError(FacetError):
    """A query cannot be evaluated against the given fact base."""


class SizeGuardError(EvaluationError):
    """The brute-force evaluator refused an oversized enumeration."""


class FactFileError(FacetError):
    """A fact file or its metadata sidecar is malformed or inconsistent."""


class SessionError(FacetError):
    """Invalid session operation (bad labels, stale ids, wrong fact base)."""


class InconsistencyError(SessionError):
    """Labels contradict each other; carries the report, state unchanged."""

    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(report.lines()) or "inconsistent labels")
