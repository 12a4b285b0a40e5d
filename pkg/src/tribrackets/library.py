"""Named built-in tribrackets and brackets used by the CLI and the test corpus.

``X3`` is the linear (Alexander-type) 3-element tribracket with x = 1, y = 2
over Z_3; ``X2`` is the 2-element tribracket whose operation is the affine map
a+b+c+1 over Z_2.  The brackets ``beta1`` and ``beta2`` live over Z_5 on X2,
and ``z7`` is the Z_7 bracket on X2 with delta = 6, w = 4.
"""

from __future__ import annotations

from functools import lru_cache

from .bracket import TribracketBracket
from .rings import ModulusRing
from .tribracket import Tribracket, make_alexander

X2_TENSOR = [
    [[2, 1], [1, 2]],
    [[1, 2], [2, 1]],
]

_BETA1_A = [[[1, 4], [2, 1]], [[1, 1], [3, 1]]]
_BETA1_B = [[[4, 1], [3, 4]], [[4, 4], [2, 4]]]
# beta2's published A tensor reads 1 at (2,1,2), which breaks delta-constancy
# (delta = 2 forces B = -A over Z_5, and B_{2,1,2} = 2 = -3).  The unique
# one-entry repair consistent with all bracket axioms is A_{2,1,2} = 3.
_BETA2_A = [[[1, 2], [2, 1]], [[1, 3], [3, 1]]]
_BETA2_B = [[[4, 3], [3, 4]], [[4, 2], [2, 4]]]
_Z7_A = [[[1, 3], [2, 1]], [[1, 2], [3, 1]]]
_Z7_B = [[[5, 1], [3, 5]], [[5, 3], [1, 5]]]


@lru_cache(maxsize=None)
def tribracket_x2() -> Tribracket:
    """The 2-element tribracket [a,b,c] = a+b+c+1 (mod 2, 1-based labels)."""
    return Tribracket.from_rows(X2_TENSOR)


@lru_cache(maxsize=None)
def tribracket_x3() -> Tribracket:
    """The 3-element tribracket [a,b,c] = b + 2c - 2a over Z_3."""
    return make_alexander(3, 1, 2)


@lru_cache(maxsize=None)
def bracket_beta1() -> TribracketBracket:
    return TribracketBracket.create(tribracket_x2(), ModulusRing(5), _BETA1_A, _BETA1_B)


@lru_cache(maxsize=None)
def bracket_beta2() -> TribracketBracket:
    return TribracketBracket.create(tribracket_x2(), ModulusRing(5), _BETA2_A, _BETA2_B)


@lru_cache(maxsize=None)
def bracket_z7() -> TribracketBracket:
    return TribracketBracket.create(tribracket_x2(), ModulusRing(7), _Z7_A, _Z7_B)


TRIBRACKETS = {
    "X2": tribracket_x2,
    "X3": tribracket_x3,
}

BRACKETS = {
    "beta1": bracket_beta1,
    "beta2": bracket_beta2,
    "z7": bracket_z7,
}


def get_tribracket(name: str) -> Tribracket:
    try:
        return TRIBRACKETS[name]()
    except KeyError:
        raise KeyError(f"unknown tribracket {name!r}; built-ins: {sorted(TRIBRACKETS)}")


def get_bracket(name: str) -> TribracketBracket:
    try:
        return BRACKETS[name]()
    except KeyError:
        raise KeyError(f"unknown bracket {name!r}; built-ins: {sorted(BRACKETS)}")
