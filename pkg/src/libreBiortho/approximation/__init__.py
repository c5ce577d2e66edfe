"""Best-approximation services."""

from .projection import (
    ProjectionResult,
    approximation_error_curve,
    project,
    project_adjoint,
    recursive_coefficients,
    truncated_expansion,
    update_coefficients,
)
from .estimator import DualFamilyProjector

__all__ = [
    'ProjectionResult', 'project', 'project_adjoint', 'truncated_expansion',
    'update_coefficients', 'recursive_coefficients', 'approximation_error_curve',
    'DualFamilyProjector',
]
