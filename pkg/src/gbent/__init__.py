"""Exact analysis of generalized bent functions Z_{p^l}^n -> Z_{p^k} for odd primes p."""
from .cyclotomic import CycInt, CycloParams, gauss_sum, unit_match
from .func import GBFunc, component_function, digit_decompose, digits, gray_image
from .transform import Spectrum, inverse_check, wht, wht_fast, wht_naive
from .analysis import (Regularity, Verdict, characterization_check, classify_and_dual, dual,
                       is_bent, is_gbent, is_vectorial_bent, is_zpk_bent, plateaued_order,
                       verify_dual_formula, verify_gray_plateaued)
from .rds import GroupSpec, SubsetR, graph_of, rds_bruteforce, rds_characters
from .constructions import (default_balanced_map, gf_make, lift_bent, quadratic_gbent_lk,
                            regular_spread, spread_gbent)

__version__ = "0.1.0"
