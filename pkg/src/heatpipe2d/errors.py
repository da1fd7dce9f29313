"""Exception hierarchy.

Every error raised by the model carries the name of the module it came from,
which the command line front end uses for its one-line diagnostics.
"""


class HeatPipeError(Exception):
    module = "heatpipe2d"


class OutOfRange(HeatPipeError, ValueError):
    module = "fluids"


class NonPositive(HeatPipeError, ValueError):
    module = "wick"


class PorosityRange(HeatPipeError, ValueError):
    module = "wick"


class AngleRange(HeatPipeError, ValueError):
    module = "wick"


class GridTooSmall(HeatPipeError, ValueError):
    module = "domain"


class InvalidGeometry(HeatPipeError, ValueError):
    module = "domain"


class OverlappingFootprints(HeatPipeError, ValueError):
    module = "domain"


class NegativePower(HeatPipeError, ValueError):
    module = "domain"


class IncompatibleSource(HeatPipeError, ValueError):
    module = "elliptic"


class NoConvergence(HeatPipeError, RuntimeError):
    module = "elliptic"


class ZeroDrop(HeatPipeError, ArithmeticError):
    module = "limits"


class BracketFailure(HeatPipeError, ValueError):
    module = "limits"


class NotStripLayout(HeatPipeError, ValueError):
    module = "limits"


class EmptyList(HeatPipeError, ValueError):
    module = "limits"


class ConfigError(HeatPipeError, ValueError):
    """Base for configuration-file problems; ``lineno`` is 1-based or None."""

    module = "cli"

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class UnknownKey(ConfigError):
    pass


class MalformedLine(ConfigError):
    pass


class InvalidValue(ConfigError):
    pass
