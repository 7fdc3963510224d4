"""Independent check of the two-part criterion: Hecke algebra of S_n over F_r, Specht modules, Meataxe."""

from .hecke import HeckeElement, hecke_right_multiply_gen, tau, x_element, y_element
from .meataxe import meataxe_irreducible
from .perms import Perm, longest_element
from .specht import SpechtModuleRep, specht_module

__all__ = [
    "HeckeElement",
    "hecke_right_multiply_gen",
    "tau",
    "x_element",
    "y_element",
    "meataxe_irreducible",
    "Perm",
    "longest_element",
    "SpechtModuleRep",
    "specht_module",
]
