"""LS paths, standard monomial theory and the A2 dual canonical basis."""

from .rootsys import RootSystem, WeylElement
from .bruhat import Coset, bruhat_leq, coset_of, max_lift_below
from .lspath import LSPath, enumerate_B, make_path, path_weight, root_op_e, root_op_f, straight_path
from .smt import count_standard, exists_compatible_word, find_defining_chain, is_standard
from .a2cb import A2Poly, dual_basis_element, path_vector

__version__ = "0.1.0"

__all__ = [
    "RootSystem", "WeylElement", "Coset", "bruhat_leq", "coset_of", "max_lift_below",
    "LSPath", "enumerate_B", "make_path", "path_weight", "root_op_e", "root_op_f",
    "straight_path", "count_standard", "exists_compatible_word", "find_defining_chain",
    "is_standard", "A2Poly", "dual_basis_element", "path_vector",
]
