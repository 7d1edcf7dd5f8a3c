from .index import ExponentVector, IndexSequence, index_sequence, exponent_from_indices, monomial_key, good_pair_check
from .polynomial import Polynomial, multiply, restrict, leading_exponent, divide_by_difference
