"""Exception hierarchy for the geometry engine."""


class GeometryError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPointError(GeometryError):
    """A homogeneous triple was identically zero."""


class DegenerateJoinError(GeometryError):
    """Join of two coincident projective points."""

    def __init__(self, p, q):
        super().__init__(f"cannot join coincident points {p} and {q}")
        self.points = (p, q)


class DegenerateMeetError(GeometryError):
    """Meet of two coincident projective lines."""

    def __init__(self, l, m):
        super().__init__(f"cannot meet coincident lines {l} and {m}")
        self.lines = (l, m)


class GeneralPositionError(GeometryError):
    """A quadruple contained a collinear triple."""

    def __init__(self, triple, message=None):
        super().__init__(message or f"collinear triple {triple}")
        self.triple = triple


class CrossRatioError(GeometryError):
    """Cross ratio undefined: bad auxiliary point or coincidences."""


class ConicFitError(GeometryError):
    """Five points do not determine a unique conic."""

    def __init__(self, message, collinear_four=None):
        super().__init__(message)
        self.collinear_four = collinear_four


class ComponentError(GeometryError):
    """A line is a component of the curve being intersected."""


class ConstructionDegenerateError(GeometryError):
    """A straightedge step hit a coincidence and is undefined.

    ``step`` names the failing operation so retry logic can log it.
    """

    def __init__(self, step, detail=""):
        msg = f"degenerate at {step}" + (f": {detail}" if detail else "")
        super().__init__(msg)
        self.step = step
        self.detail = detail


class TowerDepthError(GeometryError):
    """A square root would need a third nested quadratic extension."""


class NonCircleError(GeometryError):
    """Operation requires a genuine circle form."""


class InputError(GeometryError):
    """Malformed user input (point files, CLI arguments)."""
