"""Triangle invariant and double ratios of generic flag tuples.

All invariants are ratios of determinant pairings and are invariant under
rescaling any representative and under a common projective transformation of
all flags.  Signs are kept exactly as they come out of the determinants: the
invariants are positive for configurations arising from convex structures in
the expected order, and positivity is checked at log time, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonGenericFlags, NonPositiveRatio
from .rp2 import (
    DEFAULT_GENERICITY_TOL,
    Flag,
    _normalized_pairing,
    _normalized_triple,
    pairing13,
    triple_det,
)


@dataclass(frozen=True)
class TripleRatio:
    """Multiplicative triangle invariant of a generic flag triple."""

    value: float


@dataclass(frozen=True)
class DoubleRatios:
    """The two multiplicative edge invariants of a generic flag quadruple."""

    d1: float
    d2: float


def _require_pairing(p, line, tol, what):
    if abs(_normalized_pairing(p, line)) <= tol:
        raise NonGenericFlags(f"vanishing pairing {what}")


def _require_triple(a, b, c, tol, what):
    if abs(_normalized_triple(a, b, c)) <= tol:
        raise NonGenericFlags(f"vanishing determinant {what}")


def triple_ratio(e: Flag, f: Flag, g: Flag, tol: float = DEFAULT_GENERICITY_TOL) -> TripleRatio:
    """Triangle invariant T of a generic triple of flags.

    The product of six pairings
    (e2^f1)/(f1^g2) * (e1^g2)/(e1^f2) * (f2^g1)/(e2^g1),
    where ``x1`` is the point and ``x2`` the line of the flag ``X`` and each
    pairing is a determinant of representatives.  Factors are multiplied and
    divided alternately so extreme inputs do not overflow intermediates.

    Raises :class:`NonGenericFlags` if a denominator pairing vanishes within
    ``tol`` on unit-normalized representatives.
    """
    _require_pairing(f.point, g.line, tol, "f1^g2")
    _require_pairing(e.point, f.line, tol, "e1^f2")
    _require_pairing(g.point, e.line, tol, "e2^g1")
    value = (
        pairing13(f.point, e.line)
        / pairing13(f.point, g.line)
        * pairing13(e.point, g.line)
        / pairing13(e.point, f.line)
        * pairing13(g.point, f.line)
        / pairing13(g.point, e.line)
    )
    return TripleRatio(value)


def tau111(e: Flag, f: Flag, g: Flag, tol: float = DEFAULT_GENERICITY_TOL) -> float:
    """log of the triangle invariant.

    Raises :class:`NonPositiveRatio` when T <= 0, which signals flags that do
    not come from a convex structure in the given vertex order.
    """
    t = triple_ratio(e, f, g, tol=tol).value
    if not t > 0.0:
        raise NonPositiveRatio(f"triangle invariant is not positive: {t:g}")
    return math.log(t)


def double_ratios(
    e: Flag, f: Flag, g: Flag, l: Flag, tol: float = DEFAULT_GENERICITY_TOL
) -> DoubleRatios:
    """The two double ratios D1, D2 of a generic flag quadruple.

    D1 = -[ (e1^f1^g1)/(e1^f1^l1) ] * [ (f2^l1)/(f2^g1) ]
    D2 = -[ (e2^g1)/(e2^l1) ] * [ (e1^f1^l1)/(e1^f1^g1) ]

    with the leading minus signs kept verbatim.
    """
    _require_triple(e.point, f.point, l.point, tol, "e1^f1^l1")
    _require_triple(e.point, f.point, g.point, tol, "e1^f1^g1")
    _require_pairing(g.point, f.line, tol, "f2^g1")
    _require_pairing(l.point, e.line, tol, "e2^l1")
    efg = triple_det(e.point, f.point, g.point)
    efl = triple_det(e.point, f.point, l.point)
    d1 = -(efg / efl) * (pairing13(l.point, f.line) / pairing13(g.point, f.line))
    d2 = -(pairing13(g.point, e.line) / pairing13(l.point, e.line)) * (efl / efg)
    return DoubleRatios(d1, d2)


def shear(
    e: Flag, f: Flag, g: Flag, l: Flag, i: int, tol: float = DEFAULT_GENERICITY_TOL
) -> float:
    """i-th shear invariant log D_i along the oriented leaf (i is 1 or 2)."""
    if i not in (1, 2):
        raise ValueError("shear index must be 1 or 2")
    d = double_ratios(e, f, g, l, tol=tol)
    value = d.d1 if i == 1 else d.d2
    if not value > 0.0:
        raise NonPositiveRatio(f"double ratio D{i} is not positive: {value:g}")
    return math.log(value)
