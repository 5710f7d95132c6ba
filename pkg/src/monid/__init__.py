"""Words, identities and finite monoids for studying the monoid variety
defined by ``x s x t = x s x t x`` and its subvarieties."""

from .words import Word, parse_word, render
from .identities import Identity, parse_identity, derive, Budget
from .finite_monoids import FiniteMonoid, builtin, check, satisfies

__all__ = ["Word", "parse_word", "render", "Identity", "parse_identity", "derive", "Budget",
           "FiniteMonoid", "builtin", "check", "satisfies"]
__version__ = "0.1.0"
