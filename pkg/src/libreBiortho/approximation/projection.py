"""Best approximation of target functions by a dual family."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from libreBiortho.core import SampledFunction, check_same_grid, inner, norm, norm_sq
from libreBiortho.engine import DualFamily, insert_atom, new_family
from libreBiortho.errors import EmptyFamily, InvalidInput

logger = logging.getLogger(__name__)

@dataclass(frozen=True, eq=False)
class ProjectionResult:
    """Coefficients c_n, the projection sum c_n alpha_n and ||f - projection||."""
    coefficients: Tuple[float, ...]
    projection: SampledFunction
    residual_norm: float
    family_version: int

def _require_atoms(family: DualFamily, f: SampledFunction) -> None:
    check_same_grid(family, f)
    if family.k == 0:
        raise EmptyFamily("Cannot project onto an empty family")

def _expand(family: DualFamily, f: SampledFunction, coefficients: np.ndarray,
            terms: int) -> ProjectionResult:
    projection = SampledFunction(f.grid, coefficients @ family.atom_matrix()[:terms])
    residual = SampledFunction(f.grid, f.values - projection.values)
    return ProjectionResult(
        coefficients=tuple(float(c) for c in coefficients),
        projection=projection,
        residual_norm=norm(residual),
        family_version=family.version,
    )

def project(family: DualFamily, f: SampledFunction) -> ProjectionResult:
    """Orthogonal projection of f onto span(family.atoms), c_n = <dual_n, f>."""
    _require_atoms(family, f)
    coefficients = f.grid.step * (family.dual_matrix() @ f.values)
    return _expand(family, f, coefficients, family.k)

def project_adjoint(family: DualFamily, f: SampledFunction) -> SampledFunction:
    """The projector in its other form, sum_n dual_n <alpha_n, f>."""
    _require_atoms(family, f)
    weights = f.grid.step * (family.atom_matrix() @ f.values)
    return SampledFunction(f.grid, weights @ family.dual_matrix())

def truncated_expansion(family: DualFamily, f: SampledFunction, terms: int) -> ProjectionResult:
    """Keep only the first `terms` terms of the full family's expansion.

    The duals stay biorthogonal to the kept atoms but the truncated sum is
    not the orthogonal projector onto their span.
    """
    _require_atoms(family, f)
    if not 1 <= terms <= family.k:
        raise InvalidInput(f"terms must lie in [1, {family.k}], got {terms}")
    coefficients = f.grid.step * (family.dual_matrix()[:terms] @ f.values)
    return _expand(family, f, coefficients, terms)

def update_coefficients(prev: Sequence[float], family_after_insert: DualFamily,
                        f: SampledFunction, psi: SampledFunction) -> List[float]:
    """Extend least-squares coefficients after one accepted insertion.

        c_n^{k+1}     = c_n^k - <dual_n^k, alpha_{k+1}> <psi, f> / ||psi||^2
        c_{k+1}^{k+1} = <psi, f> / ||psi||^2

    <dual_n^k, alpha_{k+1}> equals -<psi, dual_n^{k+1}> because the old duals
    lie in the old span, which psi is orthogonal to.
    """
    k = len(prev)
    if family_after_insert.k != k + 1:
        raise InvalidInput(
            f"Expected a family of {k + 1} atoms after insertion, got {family_after_insert.k}"
        )
    check_same_grid(psi, f)
    check_same_grid(family_after_insert, psi)

    psi_norm_sq = norm_sq(psi)
    if psi_norm_sq == 0.0:
        raise InvalidInput("Residual of an accepted insertion cannot be zero")
    gain = inner(psi, f) / psi_norm_sq

    updated = []
    for c, dual in zip(prev, family_after_insert.duals[:k]):
        overlap = -inner(psi, dual)
        updated.append(float(c) - overlap * gain)
    updated.append(gain)
    return updated

def recursive_coefficients(atoms: Sequence[SampledFunction], f: SampledFunction,
                           dependence_tol: float = None) -> List[float]:
    """Chain insert_atom and update_coefficients from the empty family.

    Dependent atoms are skipped, so the result has one entry per accepted atom.
    """
    family = new_family(f.grid, dependence_tol)
    coefficients: List[float] = []
    for atom in atoms:
        outcome = insert_atom(family, atom)
        if not outcome.accepted:
            continue
        coefficients = update_coefficients(coefficients, outcome.family, f, outcome.residual)
        family = outcome.family
    return coefficients

def approximation_error_curve(family_states: Sequence[DualFamily],
                              f: SampledFunction) -> List[Tuple[int, float]]:
    """Residual norm of f against each family version, as (k, residual_norm)."""
    curve = []
    for family in family_states:
        check_same_grid(family, f)
        if family.k == 0:
            curve.append((0, norm(f)))
            continue
        curve.append((family.k, project(family, f).residual_norm))
    return curve
