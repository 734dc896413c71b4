"""Exception hierarchy.

Every error carries a stable ``code`` (used as the JSON error code by the
command line tool) and an ``exit_code``: 1 for domain failures, 2 for bad
input.
"""

from __future__ import annotations


class SimplexError(Exception):
    code = "SimplexError"
    exit_code = 1

    def __init__(self, message: str = "", **detail):
        super().__init__(message or self.code)
        self.detail = detail

    def to_json(self) -> dict:
        out = {"error": self.code, "detail": str(self)}
        out.update(self.detail)
        return out


class InputError(SimplexError):
    code = "InputError"
    exit_code = 2


class ShapeMismatch(InputError):
    code = "ShapeMismatch"


class ZeroRow(InputError):
    code = "ZeroRow"

    def __init__(self, row: int):
        super().__init__(f"row {row + 1} has (numerically) zero norm", row=row + 1)
        self.row = row


class SingularHead(SimplexError):
    code = "SingularHead"


class NotInterior(SimplexError):
    code = "NotInterior"


class StartNotInterior(NotInterior):
    code = "StartNotInterior"


class NotUnit(InputError):
    code = "NotUnit"


class ZeroBeta(InputError):
    code = "ZeroBeta"


class Unbounded(SimplexError):
    code = "Unbounded"


class NonpositiveConstant(SimplexError):
    code = "NonpositiveConstant"


class EmptyInterior(SimplexError):
    code = "EmptyInterior"


class DegenerateSum(SimplexError):
    code = "DegenerateSum"


class ParallelToLastFacet(SimplexError):
    code = "ParallelToLastFacet"


class NoIntersection(SimplexError):
    code = "NoIntersection"


class DegenerateFacetSystem(SimplexError):
    code = "DegenerateFacetSystem"

    def __init__(self, row: int):
        super().__init__(f"the rows other than {row + 1} do not meet in a single point", row=row + 1)
        self.row = row


class GenerationFailed(SimplexError):
    code = "GenerationFailed"


class MaxIterations(SimplexError):
    """Newton iteration cap hit. ``best`` holds the best iterate found."""

    code = "MaxIterations"

    def __init__(self, message: str, best=None, eq24_residual: float = float("nan")):
        super().__init__(message, eq24_residual=eq24_residual)
        self.best = best
        self.eq24_residual = eq24_residual


class CrossCheckFailed(SimplexError):
    code = "CrossCheckFailed"

    def __init__(self, message: str, closed=None, newton=None, discrepancy: float = float("nan")):
        super().__init__(message, discrepancy=discrepancy)
        self.closed = closed
        self.newton = newton
        self.discrepancy = discrepancy
