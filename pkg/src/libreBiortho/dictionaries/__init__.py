"""Atom family generators."""

from .models import DictionaryKind, DictionarySpec
from .generators import MEXICAN_HAT_PEAK, build_dictionary, mexican_hat, mexican_hat_atom

__all__ = [
    'DictionaryKind', 'DictionarySpec',
    'MEXICAN_HAT_PEAK', 'mexican_hat', 'mexican_hat_atom', 'build_dictionary',
]
