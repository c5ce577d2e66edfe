"""Recursive update of biorthogonal duals under atom insertion.

Each insertion removes from the candidate its component in the current
span, giving the residual psi, and then

    dual_{k+1} = psi / ||psi||^2
    dual_n    <- dual_n - dual_{k+1} * <candidate, dual_n>,   n = 1..k

so that sum_n |alpha_n><dual_n| stays the orthogonal projector onto the
enlarged span. No matrix is ever inverted.
"""

import logging
from typing import Iterable, List, Optional

import numpy as np

from libreBiortho.config import Settings, get_settings
from libreBiortho.core import Grid, SampledFunction, check_same_grid, norm_sq
from libreBiortho.errors import InvalidConfig
from .family import DualFamily, InsertionOutcome, InsertionStatus

logger = logging.getLogger(__name__)

def new_family(grid: Grid, dependence_tol: Optional[float] = None,
               settings: Settings = None) -> DualFamily:
    """Create the empty (k = 0) family on a grid."""
    if dependence_tol is None:
        settings = settings or get_settings()
        dependence_tol = settings.numerics.DEPENDENCE_TOL
    if not (0.0 < dependence_tol < 1.0):
        raise InvalidConfig(f"dependence_tol must lie in (0, 1), got {dependence_tol}")
    return DualFamily(grid=grid, dependence_tol=float(dependence_tol))

def _remove_span_component(family: DualFamily, values: np.ndarray) -> np.ndarray:
    """values - sum_n atoms[n] * <duals[n], values>, on raw samples."""
    if family.k == 0:
        return values
    coefficients = family.grid.step * (family.dual_matrix() @ values)
    return values - coefficients @ family.atom_matrix()

def compute_residual(family: DualFamily, candidate: SampledFunction) -> SampledFunction:
    """Component of candidate orthogonal to span(family.atoms)."""
    check_same_grid(family, candidate)
    if family.k == 0:
        return candidate
    return SampledFunction(family.grid, _remove_span_component(family, candidate.values))

def _extend(family: DualFamily, candidate: SampledFunction, psi: SampledFunction,
            psi_norm_sq: float) -> DualFamily:
    new_dual = psi.values / psi_norm_sq
    step = family.grid.step
    duals = []
    for dual in family.duals:
        overlap = step * float(np.dot(candidate.values, dual.values))
        duals.append(SampledFunction(family.grid, dual.values - overlap * new_dual))
    duals.append(SampledFunction(family.grid, new_dual))
    return DualFamily(
        grid=family.grid,
        dependence_tol=family.dependence_tol,
        atoms=family.atoms + (candidate,),
        duals=tuple(duals),
        residual_norms_sq=family.residual_norms_sq + (psi_norm_sq,),
    )

def insert_atom(family: DualFamily, candidate: SampledFunction) -> InsertionOutcome:
    """Offer a candidate atom; accept it unless it is numerically dependent.

    The candidate is rejected when ||psi||^2 <= dependence_tol * ||candidate||^2.
    Rejection is a status, the returned family is then the input family.
    """
    psi = compute_residual(family, candidate)
    psi_norm_sq = norm_sq(psi)
    threshold = family.dependence_tol * norm_sq(candidate)

    if psi_norm_sq <= threshold:
        logger.info(
            f"Rejected dependent atom at k={family.k}: "
            f"||psi||^2={psi_norm_sq:.3e} <= {threshold:.3e}"
        )
        return InsertionOutcome(
            status=InsertionStatus.REJECTED_DEPENDENT,
            residual_norm_sq=psi_norm_sq,
            family=family,
            residual=psi,
        )

    extended = _extend(family, candidate, psi, psi_norm_sq)
    logger.debug(f"Inserted atom {extended.k} with ||psi||^2={psi_norm_sq:.6e}")
    return InsertionOutcome(
        status=InsertionStatus.ACCEPTED,
        residual_norm_sq=psi_norm_sq,
        family=extended,
        residual=psi,
    )

def grow_family(family: DualFamily, candidates: Iterable[SampledFunction]) -> List[InsertionOutcome]:
    """Insert candidates in order, skipping dependent ones.

    Outcome i belongs to candidate i; the last outcome's family is the final state.
    """
    outcomes = []
    for candidate in candidates:
        outcome = insert_atom(family, candidate)
        family = outcome.family
        outcomes.append(outcome)
    rejected = sum(1 for o in outcomes if not o.accepted)
    if rejected:
        logger.info(f"Kept {family.k} of {len(outcomes)} candidates ({rejected} dependent)")
    return outcomes

def biorthogonality_defect(family: DualFamily) -> float:
    """max |<alpha_m, dual_n> - delta_mn| over the family."""
    if family.k == 0:
        return 0.0
    pairing = family.grid.step * (family.atom_matrix() @ family.dual_matrix().T)
    return float(np.max(np.abs(pairing - np.eye(family.k))))

def _replay_reorthogonalized(family: DualFamily) -> Optional[DualFamily]:
    rebuilt = DualFamily(grid=family.grid, dependence_tol=family.dependence_tol)
    for atom in family.atoms:
        values = _remove_span_component(rebuilt, atom.values)
        # second pass removes what rounding left in the span
        values = _remove_span_component(rebuilt, values)
        psi = SampledFunction(family.grid, values)
        psi_norm_sq = norm_sq(psi)
        if psi_norm_sq <= family.dependence_tol * norm_sq(atom):
            return None
        rebuilt = _extend(rebuilt, atom, psi, psi_norm_sq)
    return rebuilt

def refresh_duals(family: DualFamily) -> DualFamily:
    """Rebuild the duals to repair floating-point drift.

    Replays every insertion with a re-orthogonalized residual and keeps the
    rebuilt family only if its biorthogonality defect is not larger.
    """
    if family.k <= 1:
        return family

    before = biorthogonality_defect(family)
    rebuilt = _replay_reorthogonalized(family)
    if rebuilt is None:
        logger.warning("Replay rejected an atom; keeping existing duals")
        return family

    after = biorthogonality_defect(rebuilt)
    logger.debug(f"refresh_duals defect {before:.3e} -> {after:.3e}")
    return rebuilt if after <= before else family
