from .bjs import schubert_bjs, compatible_sequences
from .divdiff import schubert_dd, top_polynomial
from .generate import schubert_poly, clear_cache
from .transition_product import multiply_by_variable, multiply_expansion, product_terms
from .expansion import SchubertExpansion, expand_in_schubert, schubert_product, product_expand, format_terms, ENGINES
from .monk import monk, monk_terms
