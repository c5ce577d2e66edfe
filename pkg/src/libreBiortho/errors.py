"""Exception hierarchy for libreBiortho."""

class BiorthoError(Exception):
    """Base class for all library errors."""

class GridMismatch(BiorthoError, ValueError):
    """Two sampled functions live on different grids."""

class InvalidConfig(BiorthoError, ValueError):
    """A tolerance or generator parameter is out of range."""

class InvalidInput(BiorthoError, ValueError):
    """Malformed input values (lengths, non-finite samples, empty lists)."""

class EmptyFamily(BiorthoError, ValueError):
    """An operation needs at least one atom."""

class IllConditioned(BiorthoError, ArithmeticError):
    """Gram matrix is singular or not positive semi-definite to working precision."""

    def __init__(self, lambda_min: float, lambda_max: float, message: str = ""):
        self.lambda_min = lambda_min
        self.lambda_max = lambda_max
        super().__init__(
            message or f"Gram spectrum ill-conditioned: lambda_min={lambda_min:.3e}, lambda_max={lambda_max:.3e}"
        )
