"""Invariant checks run by the verify subcommand."""

import logging
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np

from libreBiortho.approximation import project, recursive_coefficients, truncated_expansion
from libreBiortho.core import Grid, SampledFunction, combine, inner, norm, norm_sq
from libreBiortho.dictionaries import DictionaryKind, DictionarySpec, MEXICAN_HAT_PEAK, build_dictionary
from libreBiortho.engine import DualFamily, biorthogonality_defect, grow_family, insert_atom, new_family
from libreBiortho.errors import IllConditioned
from libreBiortho.oracle import direct_coefficients, direct_duals, gram, spectrum
from .figures import hat_dictionary, trace_dual
from .models import RunConfig

logger = logging.getLogger(__name__)

PROPERTY_TOL = 1e-8
HAND_CASE_TOL = 1e-14
FIRST_DUAL_TOL = 1e-10
PEAK_TOL = 1e-4
TRUNCATION_MARGIN = 1e-6
MAX_CONDITION = 1e6
RANDOM_DICTIONARIES = 20
RANDOM_TARGETS = 100

@dataclass
class CheckResult:
    """One verification check: measured value against its tolerance."""
    name: str
    measured: float
    tolerance: float
    passed: bool
    detail: str = ""

def _at_most(name: str, measured: float, tolerance: float, detail: str = "") -> CheckResult:
    return CheckResult(name, float(measured), tolerance, bool(measured <= tolerance), detail)

def _family(atoms: Sequence[SampledFunction], tol: float) -> DualFamily:
    return grow_family(new_family(atoms[0].grid, tol), atoms)[-1].family

def _random_targets(grid: Grid, seed: int) -> List[SampledFunction]:
    spec = DictionarySpec(kind=DictionaryKind.RANDOM_SMOOTH, count=RANDOM_TARGETS, grid=grid, seed=seed + 1000)
    return build_dictionary(spec)

def conditioned_random_dictionaries(grid: Grid, seed: int, count: int = RANDOM_DICTIONARIES,
                                    atoms: int = 6, max_tries: int = 200) -> List[List[SampledFunction]]:
    """Seeded RandomSmooth dictionaries whose Gram condition number is <= MAX_CONDITION."""
    found = []
    for offset in range(max_tries):
        spec = DictionarySpec(kind=DictionaryKind.RANDOM_SMOOTH, count=atoms, grid=grid, seed=seed + offset)
        candidate = build_dictionary(spec)
        try:
            if spectrum(gram(candidate)).condition_number <= MAX_CONDITION:
                found.append(candidate)
        except IllConditioned:
            continue
        if len(found) == count:
            break
    return found

def dual_mismatch(family: DualFamily, atoms: Sequence[SampledFunction]) -> float:
    """max_n ||dual_n - oracle_n|| / max(1, ||oracle_n||)."""
    worst = 0.0
    for recursive, oracle in zip(family.duals, direct_duals(atoms)):
        diff = SampledFunction(oracle.grid, recursive.values - oracle.values)
        worst = max(worst, norm(diff) / max(1.0, norm(oracle)))
    return worst

def check_two_point_case() -> CheckResult:
    grid = Grid(start=0.0, end=1.0, points=2)
    atoms = [SampledFunction.from_values(grid, [1.0, 0.0]), SampledFunction.from_values(grid, [1.0, 1.0])]
    target = SampledFunction.from_values(grid, [3.0, 5.0])
    expected_duals = np.array([[1.0, -1.0], [0.0, 1.0]])
    expected_coefficients = np.array([-2.0, 5.0])

    family = _family(atoms, 1e-12)
    errors = [
        np.abs(family.dual_matrix() - expected_duals).max(),
        np.abs(np.vstack([d.values for d in direct_duals(atoms)]) - expected_duals).max(),
        np.abs(np.array(project(family, target).coefficients) - expected_coefficients).max(),
        np.abs(np.array(direct_coefficients(atoms, target)) - expected_coefficients).max(),
        np.abs(np.array(recursive_coefficients(atoms, target, 1e-12)) - expected_coefficients).max(),
    ]
    return _at_most("two_point_case", max(errors), HAND_CASE_TOL)

def check_biorthogonality(family: DualFamily) -> CheckResult:
    return _at_most("biorthogonality", biorthogonality_defect(family), PROPERTY_TOL, f"k={family.k}")

def check_projector(family: DualFamily, targets: Sequence[SampledFunction]) -> List[CheckResult]:
    idempotence = 0.0
    symmetry = 0.0
    projections = [project(family, f).projection for f in targets]
    for f, pf in zip(targets, projections):
        ppf = project(family, pf).projection
        idempotence = max(idempotence, norm(SampledFunction(f.grid, ppf.values - pf.values)) / norm(f))
    for (f, pf), (g, pg) in zip(zip(targets, projections), zip(targets[1:], projections[1:])):
        symmetry = max(symmetry, abs(inner(pf, g) - inner(f, pg)) / (norm(f) * norm(g)))
    return [
        _at_most("projector_idempotence", idempotence, PROPERTY_TOL, f"{len(targets)} targets"),
        _at_most("projector_symmetry", symmetry, PROPERTY_TOL, f"{len(targets) - 1} pairs"),
    ]

def check_oracle_equivalence(dictionaries: Sequence[Sequence[SampledFunction]], tol: float) -> CheckResult:
    worst = max(dual_mismatch(_family(atoms, tol), atoms) for atoms in dictionaries)
    return _at_most("oracle_equivalence", worst, PROPERTY_TOL, f"{len(dictionaries)} dictionaries")

def check_coefficient_recursion(dictionaries: Sequence[Sequence[SampledFunction]],
                                targets: Sequence[SampledFunction], tol: float) -> CheckResult:
    worst = 0.0
    for atoms in dictionaries:
        for f in targets:
            chained = np.array(recursive_coefficients(atoms, f, tol))
            direct = np.array(direct_coefficients(atoms, f))
            worst = max(worst, np.abs(chained - direct).max() / max(1.0, np.abs(direct).max()))
    return _at_most("coefficient_recursion", worst, PROPERTY_TOL,
                    f"{len(dictionaries)} dictionaries x {len(targets)} targets")

def check_truncation(hats: Sequence[SampledFunction], tol: float) -> CheckResult:
    """Truncated 5-atom expansion loses to the properly built 3-atom projector."""
    full, small = _family(hats[:5], tol), _family(hats[:3], tol)
    f = hats[3]
    truncated = truncated_expansion(full, f, 3).residual_norm
    proper = project(small, f).residual_norm
    margin = (truncated - proper) / norm(f)
    return CheckResult(
        "truncation_not_orthogonal", margin, TRUNCATION_MARGIN, bool(margin > TRUNCATION_MARGIN),
        f"truncated residual {truncated:.6e} vs projector residual {proper:.6e}",
    )

def check_dependence_pruning(hats: Sequence[SampledFunction], tol: float) -> CheckResult:
    family = _family(hats[:2], tol)
    dependent = combine(hats[:2], [2.0, 1.0])
    outcome = insert_atom(family, dependent)
    ratio = outcome.residual_norm_sq / norm_sq(dependent)
    passed = (not outcome.accepted) and ratio <= tol and outcome.family is family
    detail = f"rejection event: status={outcome.status.value}, ||psi||^2/||alpha||^2={ratio:.3e}"
    logger.info(f"Injected 2*alpha_1 + alpha_2: {detail}")
    return CheckResult("dependence_pruning", ratio, tol, bool(passed), detail)

def _zero_crossings(f: SampledFunction) -> np.ndarray:
    t, v = f.grid.abscissae(), f.values
    idx = np.where(v[:-1] * v[1:] <= 0.0)[0]
    return (t[idx] + t[idx + 1]) / 2.0

def check_figure(config: RunConfig, hats: Sequence[SampledFunction]) -> List[CheckResult]:
    alpha = hats[0]
    step = alpha.grid.step
    t = alpha.grid.abscissae()
    peak_at = int(np.argmax(alpha.values))
    peak_error = abs(alpha.values[peak_at] - MEXICAN_HAT_PEAK)
    peak = CheckResult(
        "figure_peak", peak_error, PEAK_TOL,
        bool(peak_error <= PEAK_TOL and abs(t[peak_at]) <= step),
        f"peak {alpha.values[peak_at]:.6f} at t={t[peak_at]:.4f}",
    )

    crossings = _zero_crossings(alpha)
    offsets = [np.abs(crossings - c).min() if len(crossings) else np.inf for c in (-1.0, 1.0)]
    zeros = _at_most("figure_zero_crossings", max(offsets), step, f"{len(crossings)} crossings")

    first = trace_dual(hats, 1, [1], config.dependence_tol)[1]
    expected = alpha.values / norm_sq(alpha)
    dual = _at_most("figure_first_dual", np.abs(first.values - expected).max(), FIRST_DUAL_TOL)
    return [peak, zeros, dual]

def run_checks(config: RunConfig) -> List[CheckResult]:
    """Run every check at its documented tolerance."""
    tol = config.dependence_tol
    hats = hat_dictionary(config, count=max(config.atom_count, 5))
    family = _family(hats, tol)
    targets = _random_targets(config.grid, config.seed)
    randoms = conditioned_random_dictionaries(config.grid, config.seed)
    dictionaries = [hats] + randoms

    steps: List[Tuple[str, Callable[[], object]]] = [
        ("two_point_case", check_two_point_case),
        ("biorthogonality", lambda: check_biorthogonality(family)),
        ("projector", lambda: check_projector(family, targets)),
        ("oracle_equivalence", lambda: check_oracle_equivalence(dictionaries, tol)),
        ("coefficient_recursion", lambda: check_coefficient_recursion(dictionaries, targets[:20], tol)),
        ("truncation", lambda: check_truncation(hats, tol)),
        ("dependence_pruning", lambda: check_dependence_pruning(hats, tol)),
        ("figure", lambda: check_figure(config, hats)),
    ]

    results: List[CheckResult] = []
    for name, step in steps:
        try:
            outcome = step()
        except Exception as e:
            logger.error(f"Check {name} raised: {e}")
            outcome = CheckResult(name, float("nan"), float("nan"), False, f"error: {e}")
        results.extend(outcome if isinstance(outcome, list) else [outcome])

    if len(randoms) < RANDOM_DICTIONARIES:
        results.append(CheckResult(
            "random_dictionary_supply", len(randoms), RANDOM_DICTIONARIES, False,
            f"only {len(randoms)} dictionaries with condition <= {MAX_CONDITION:g}",
        ))
    return results
