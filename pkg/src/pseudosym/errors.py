"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Input parameters violate a stated precondition."""


class UnsupportedParametersError(ValueError):
    """Parameters are structurally valid but outside the closed-form regime."""


class InconsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a construction bug, not bad input."""
