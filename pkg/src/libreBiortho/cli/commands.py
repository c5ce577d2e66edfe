"""Subcommand implementations; each returns the files it wrote."""

import logging
from dataclasses import dataclass
from typing import List

import pandas as pd

from libreBiortho.approximation import approximation_error_curve, project
from libreBiortho.engine import grow_family, new_family
from libreBiortho.errors import InvalidConfig
from .csvio import read_function, write_functions, write_table
from .figures import hat_dictionary, trace_dual
from .models import RunConfig
from .verify import CheckResult, run_checks

logger = logging.getLogger(__name__)

@dataclass
class VerificationReport:
    checks: List[CheckResult]
    path: str

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

def cmd_dict(config: RunConfig) -> List[str]:
    """Write the Mexican-hat dictionary as t,v1..vN."""
    atoms = hat_dictionary(config)
    names = [f"v{i}" for i in range(1, len(atoms) + 1)]
    return [write_functions(config.output_file("dictionary.csv"), atoms, names)]

def cmd_duals(config: RunConfig) -> List[str]:
    """Grow the dual family over the dictionary and write its duals."""
    atoms = hat_dictionary(config)
    outcomes = grow_family(new_family(config.grid, config.dependence_tol), atoms)
    for i, outcome in enumerate(outcomes, start=1):
        if not outcome.accepted:
            logger.info(f"Atom {i} rejected as dependent (||psi||^2={outcome.residual_norm_sq:.3e})")
    family = outcomes[-1].family
    names = [f"v{i}" for i in range(1, family.k + 1)]
    return [write_functions(config.output_file("duals.csv"), list(family.duals), names)]

def cmd_project(config: RunConfig) -> List[str]:
    """Project a target CSV onto the dictionary; write coefficients, residual curve, projection."""
    if not config.target:
        raise InvalidConfig("project needs --target")
    target = read_function(config.target, config.grid)
    atoms = hat_dictionary(config)

    outcomes = grow_family(new_family(config.grid, config.dependence_tol), atoms)
    versions = [o.family for o in outcomes if o.accepted]
    family = outcomes[-1].family
    result = project(family, target)
    curve = approximation_error_curve(versions, target)
    logger.info(f"Projected target onto {family.k} atoms, residual {result.residual_norm:.6e}")

    coefficients = pd.DataFrame({
        "index": range(1, family.k + 1),
        "coefficient": list(result.coefficients),
    })
    residuals = pd.DataFrame(curve, columns=["k", "residual_norm"])
    return [
        write_table(config.output_file("coefficients.csv"), coefficients),
        write_table(config.output_file("residuals.csv"), residuals),
        write_functions(config.output_file("projection.csv"), [result.projection]),
    ]

def cmd_figures(config: RunConfig) -> List[str]:
    """fig1.csv: alpha_1; fig2.csv: the traced dual after each requested version."""
    atoms = hat_dictionary(config)
    traced = trace_dual(atoms, config.dual_index, config.versions, config.dependence_tol)
    return [
        write_functions(config.output_file("fig1.csv"), [atoms[0]]),
        write_functions(config.output_file("fig2.csv"), list(traced.values())),
    ]

def cmd_verify(config: RunConfig) -> VerificationReport:
    """Run all invariant checks, print the report and write verify.csv."""
    checks = run_checks(config)
    frame = pd.DataFrame(
        [(c.name, c.measured, c.tolerance, c.passed) for c in checks],
        columns=["check", "measured", "tolerance", "passed"],
    )
    path = write_table(config.output_file("verify.csv"), frame)

    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status:4}  {c.name:<28} measured={c.measured:.3e}  tolerance={c.tolerance:.1e}  {c.detail}")
    report = VerificationReport(checks=checks, path=path)
    print(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return report
