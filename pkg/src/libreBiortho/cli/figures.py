"""Mexican-hat dictionary and traced duals behind the figure files."""

import logging
from typing import Dict, List, Sequence

from libreBiortho.core import SampledFunction
from libreBiortho.dictionaries import DictionaryKind, DictionarySpec, build_dictionary
from libreBiortho.engine import insert_atom, new_family
from libreBiortho.errors import InvalidConfig
from .models import RunConfig

logger = logging.getLogger(__name__)

def hat_dictionary(config: RunConfig, count: int = None) -> List[SampledFunction]:
    """Shifted Mexican hats alpha_1..alpha_count on the configured grid."""
    spec = DictionarySpec(
        kind=DictionaryKind.MEXICAN_HAT,
        count=count or config.atom_count,
        grid=config.grid,
    )
    return build_dictionary(spec)

def trace_dual(atoms: Sequence[SampledFunction], dual_index: int, versions: Sequence[int],
               dependence_tol: float) -> Dict[int, SampledFunction]:
    """Dual number `dual_index` as it stands after each requested family version."""
    if dual_index > min(versions):
        raise InvalidConfig(
            f"Dual {dual_index} does not exist in version {min(versions)}"
        )
    wanted = set(versions)
    traced: Dict[int, SampledFunction] = {}
    family = new_family(atoms[0].grid, dependence_tol)
    for atom in atoms:
        outcome = insert_atom(family, atom)
        family = outcome.family
        if outcome.accepted and family.k in wanted:
            traced[family.k] = family.duals[dual_index - 1]
        if len(traced) == len(wanted):
            break

    missing = sorted(wanted - set(traced))
    if missing:
        raise InvalidConfig(f"Family never reached versions {missing} (only {family.k} atoms accepted)")
    return {k: traced[k] for k in versions}
