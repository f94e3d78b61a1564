"""Exact Gysin pushforwards f_*: H*(G/T) -> H*(G/H) for compact flag manifolds.

Three independent routes (signed symmetrization, relative fixed-point
localization, divided differences) are computed over the rationals and can be
cross-checked against each other.
"""
from .errors import FlagpushError
from .localize import (ROUTES, abbv_integrate, euler_characteristic_GH,
                       euler_characteristic_GT, gysin, gysin_closed_form,
                       gysin_demazure_oracle, gysin_via_localization, integrate_GH,
                       integrate_GT, relative_pushforward, restrict_GT)
from .polyring import LinearProduct, Polynomial, RationalFunction, parse_poly
from .rootsys import CartanType, RootSystem, build_root_system, parabolic_subsystem
from .weylgrp import WeylGroup, coset_reps, longest_element, weyl_group

__version__ = "0.1.0"

__all__ = [
    "ROUTES", "CartanType", "FlagpushError", "LinearProduct", "Polynomial",
    "RationalFunction", "RootSystem", "WeylGroup", "abbv_integrate", "build_root_system",
    "coset_reps", "euler_characteristic_GH", "euler_characteristic_GT", "gysin",
    "gysin_closed_form", "gysin_demazure_oracle", "gysin_via_localization",
    "integrate_GH", "integrate_GT", "longest_element", "parabolic_subsystem",
    "parse_poly", "relative_pushforward", "restrict_GT", "weyl_group",
]
