"""Exception types raised by the library."""


class NumericalError(ArithmeticError):
    """A numerical routine failed to reach its accuracy target."""


class QuadratureError(NumericalError):
    pass


class EigenSolverError(NumericalError):
    pass


class ConfigError(ValueError):
    """Invalid scenario configuration.

    ``path`` is the dotted location of the offending field (``"sweep.points"``).
    """

    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)
