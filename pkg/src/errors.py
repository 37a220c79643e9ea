"""
Exception hierarchy for the independence-polynomial toolkit.

Every error carries a machine-readable ``code`` (used in JSON error output)
and the process ``exit_code`` the command-line front end returns for it.
"""

from typing import Any, Dict, Optional


class IndPolyError(Exception):
    """Base class for all toolkit errors."""

    code = "error"
    exit_code = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        payload = {'error': self.code, 'message': self.message}
        payload.update(self.details)
        return payload


class ParseError(IndPolyError):
    """Syntax error in a graph expression, with its position."""

    code = "parse"
    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message, line=line, column=column)
        self.line = line
        self.column = column


class RangeError(IndPolyError, ValueError):
    """A parameter lies outside its documented range."""

    code = "range"
    exit_code = 2


class GraphError(IndPolyError, ValueError):
    """Malformed graph input: bad vertex index, self-loop, asymmetric adjacency."""

    code = "graph"
    exit_code = 2


class CapacityError(IndPolyError):
    """A computation needs more vertices than the representation allows."""

    code = "capacity"
    exit_code = 3


class ClosedFormOnlyError(CapacityError):
    """The family is only available as a closed-form polynomial."""

    code = "closed_form_only"


class ResourceError(CapacityError):
    """The engine memo table grew past its configured cap."""

    code = "resource"


class PolynomialError(IndPolyError, ValueError):
    """Polynomial operation outside its domain (zero polynomial, negative coefficient, ...)."""

    code = "polynomial"


class ProfileError(IndPolyError, ValueError):
    """Malformed stable-set profile, including a breach of the alpha * s_alpha bound."""

    code = "profile"
