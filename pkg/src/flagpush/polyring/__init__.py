from .linprod import LinearProduct
from .ops import (antisymmetrize, char_to_linear, demazure_compose, divided_difference,
                  embed_uy, exact_div, relabel, root_product, root_product_factored,
                  substitute_zero_u, symmetrize_sum, weyl_act_poly, weyl_images)
from .parser import parse_poly
from .polynomial import Polynomial
from .ratfunc import RationalFunction

__all__ = [
    "LinearProduct", "Polynomial", "RationalFunction", "antisymmetrize", "char_to_linear",
    "demazure_compose", "divided_difference", "embed_uy", "exact_div", "parse_poly",
    "relabel", "root_product", "root_product_factored", "substitute_zero_u",
    "symmetrize_sum", "weyl_act_poly", "weyl_images",
]
