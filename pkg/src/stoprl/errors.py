"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid configuration (bad grid, K*dt > 1, non-positive parameters, ...)."""


class SolverError(RuntimeError):
    """A PDE solve failed to converge; carries diagnostics in args."""


class TrainingError(RuntimeError):
    """Training produced non-finite losses or gradients."""
