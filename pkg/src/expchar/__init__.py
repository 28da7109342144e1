"""Characters of level-zero affine sl2 modules from exponential-polynomial functions."""
from expchar.characters import (
    CharacterArray,
    character_array,
    character_array_via_semiinvariants,
    f_series,
    truncated_current_char,
    weight_of_cell,
)
from expchar.exppoly import (
    CanonicalExpPoly,
    FreeExpPoly,
    Symbol,
    char_poly,
    evaluate,
    make_canonical,
    phi_at_zero,
    recurrence_solve,
    recurrence_unroll,
    shift_apply,
)
from expchar.numbers import divisors, moebius, ramanujan_sum, totient
from expchar.polynomial import PolynomialQ
from expchar.series import TruncatedSeries

__all__ = [
    "CanonicalExpPoly",
    "CharacterArray",
    "FreeExpPoly",
    "PolynomialQ",
    "Symbol",
    "TruncatedSeries",
    "char_poly",
    "character_array",
    "character_array_via_semiinvariants",
    "divisors",
    "evaluate",
    "f_series",
    "make_canonical",
    "moebius",
    "phi_at_zero",
    "ramanujan_sum",
    "recurrence_solve",
    "recurrence_unroll",
    "shift_apply",
    "totient",
    "truncated_current_char",
    "weight_of_cell",
]
