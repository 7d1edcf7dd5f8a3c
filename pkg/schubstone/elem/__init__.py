from .index import ElemIndex, elem_poly, elementary
from .pieri import pieri, pieri_operator
from .expand import elem_to_schubert, ElemStability, elem_stability, PieriStability, pieri_stability, moves_to_pass
from .kostka import KostkaMatrix, kostka_matrix, staircase_exponents
from .to_elem import ElemExpansion, schubert_to_elem
from .basis import BasisReport, basis_report, standard_indices
