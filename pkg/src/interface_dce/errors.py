"""Exception types raised across the package."""


class DceError(Exception):
    """Base class for all errors raised by interface_dce."""


class DomainError(DceError, ValueError):
    """An argument lies outside the domain of the function (e.g. y <= 0)."""


class SingularInterfaceError(DceError, ZeroDivisionError):
    """n1 + n2 == 0, Fresnel coefficients are undefined."""


class ConfigurationError(DceError, ValueError):
    """Invalid combination of parameters (quadrature order, method, profile...)."""


class UnsupportedRegimeError(DceError):
    """The requested method is not valid for these media (lossy, dispersive, mirror)."""


class StencilError(DceError, ValueError):
    """A finite-difference stencil crosses the source point or the interface."""


class ScenarioFileError(DceError, ValueError):
    """Malformed scenario file. ``line`` and ``field`` locate the problem when known."""

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)
