"""Exception types shared across the package."""


class ConfigError(ValueError):
    """A scenario configuration failed validation.

    Carries the dotted key path of the offending entry so the CLI can point
    at it (`scenario.g_MHz`, `output.csv_path`, ...).
    """

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")


class ConvergenceError(RuntimeError):
    """A truncation/cutoff self-check failed to converge."""


class IntegrationError(RuntimeError):
    """The ODE integrator failed; carries the time of failure in ns."""

    def __init__(self, message: str, t_ns: float):
        self.t_ns = t_ns
        super().__init__(f"{message} (at t = {t_ns:g} ns)")


class UnreachableAngleError(ValueError):
    """A requested pulse rotation angle exceeds what the envelope can reach."""
