"""Goldman -> Bonahon-Dreyer coordinate conversions and degenerate strata.

Conventions for the pair of pants: boundary curves A1, A2, A3 carry Goldman
data (lambda_i, tau_i) where lambda_i is the smallest eigenvalue of the
monodromy and tau_i the sum of the other two; mu_i denotes the middle
eigenvalue.  The pants is cut into two ideal triangles T+ and T- by edges
B1, B2, B3, with B_i opposite A_i and indices modulo 3.  The shear
coordinates along B_i come out as

    sigma1(B_i) = log( s  * mu_{i-1} * sqrt(lambda_{i-1} lambda_{i+1} / lambda_i) )
    sigma2(B_i) = log( (mu_{i+1}/s) * sqrt(lambda_{i-1} lambda_{i+1} / lambda_i) )

and the two triangle invariants as

    tau111(T+) = log[ (e^{-sigma2(B2)}+1)(e^{-sigma2(B3)}+1) / (t (e^{sigma1(B3)}+1)) ]
    tau111(T-) = log[ t mu1 mu2 mu3 (e^{sigma1(B3)}+1) / ((e^{-sigma2(B2)}+1)(e^{-sigma2(B3)}+1)) ]

so tau111(T+) + tau111(T-) = log(mu1 mu2 mu3) identically.  A punctured torus
is one pair of pants with A2 = A3 = C glued along the meridian C, plus two
gluing parameters (u, v) entering only through sigma1(C) = u - 3v and
sigma2(C) = u + 3v (normalized so the base point is (u, v) = (0, 0)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    ComplexEigenvalues,
    InconsistentStratum,
    NonPositiveParameter,
)

HYPERBOLIC = "hyperbolic"
QUASI_HYPERBOLIC = "quasi_hyperbolic"
PARABOLIC = "parabolic"

_CODIMENSION = {HYPERBOLIC: 0, QUASI_HYPERBOLIC: 1, PARABOLIC: 2}

# Relative slack used when validating boundary data at construction time.
_DATA_TOL = 1e-9


@dataclass(frozen=True)
class BoundaryData:
    """Goldman eigenvalue data (lambda, tau) of one boundary curve.

    lambda is the smallest eigenvalue of the boundary monodromy, tau the sum
    of the two others.  The kind encodes the stratum: hyperbolic needs
    tau^2 > 4/lambda (two distinct larger eigenvalues), quasi-hyperbolic sits
    on the degenerate discriminant tau^2 = 4/lambda with lambda < 1, and
    parabolic pins (lambda, tau) = (1, 2).
    """

    lam: float
    tau: float
    kind: str

    def __post_init__(self):
        if self.kind not in _CODIMENSION:
            raise ValueError(f"unknown boundary kind {self.kind!r}")
        if not (self.lam > 0.0 and self.tau > 0.0):
            raise ValueError("boundary data needs positive lambda and tau")
        if self.kind == HYPERBOLIC:
            if not self.lam < 1.0:
                raise ValueError("hyperbolic boundary needs lambda in (0, 1)")
            if not self.tau * self.tau > 4.0 / self.lam:
                raise ComplexEigenvalues(
                    "hyperbolic boundary needs tau^2 > 4/lambda"
                )
        elif self.kind == PARABOLIC:
            if abs(self.lam - 1.0) > _DATA_TOL or abs(self.tau - 2.0) > _DATA_TOL:
                raise ValueError("parabolic boundary must have (lambda, tau) = (1, 2)")
        else:
            if not self.lam < 1.0:
                raise ValueError("quasi-hyperbolic boundary needs lambda < 1")
            if abs(self.tau * self.tau * self.lam - 4.0) > _DATA_TOL * 4.0:
                raise ValueError("quasi-hyperbolic boundary must satisfy tau^2 = 4/lambda")

    @classmethod
    def hyperbolic(cls, lam: float, tau: float) -> "BoundaryData":
        return cls(lam, tau, HYPERBOLIC)

    @classmethod
    def quasi_hyperbolic(cls, lam: float) -> "BoundaryData":
        return cls(lam, 2.0 / math.sqrt(lam), QUASI_HYPERBOLIC)

    @classmethod
    def parabolic(cls) -> "BoundaryData":
        return cls(1.0, 2.0, PARABOLIC)


@dataclass(frozen=True)
class PantsGoldman:
    """Goldman parameters of a pair of pants: three boundaries plus (s, t)."""

    boundaries: tuple
    s: float
    t: float

    def __post_init__(self):
        if len(self.boundaries) != 3:
            raise ValueError("a pair of pants has exactly 3 boundary curves")
        if not (self.s > 0.0 and self.t > 0.0):
            raise NonPositiveParameter("internal parameters s, t must be positive")


@dataclass(frozen=True)
class TorusGoldman:
    """Goldman parameters of a once-punctured torus.

    b is the boundary curve, c the gluing meridian (always hyperbolic),
    (s, t) the internal parameters of the cut-open pants and (u, v) the
    gluing parameters along c.
    """

    b: BoundaryData
    c: BoundaryData
    s: float
    t: float
    u: float
    v: float

    def __post_init__(self):
        if self.c.kind != HYPERBOLIC:
            raise ValueError("the gluing curve of the torus must be hyperbolic")
        if not (self.s > 0.0 and self.t > 0.0):
            raise NonPositiveParameter("internal parameters s, t must be positive")


@dataclass(frozen=True)
class PantsBD:
    """Bonahon-Dreyer coordinates of a pair of pants."""

    sigma1: tuple
    sigma2: tuple
    tplus: float
    tminus: float

    def __post_init__(self):
        object.__setattr__(self, "sigma1", tuple(float(x) for x in self.sigma1))
        object.__setattr__(self, "sigma2", tuple(float(x) for x in self.sigma2))
        if len(self.sigma1) != 3 or len(self.sigma2) != 3:
            raise ValueError("sigma1 and sigma2 each need 3 entries")
        for x in (*self.sigma1, *self.sigma2, self.tplus, self.tminus):
            if not math.isfinite(x):
                raise ValueError("Bonahon-Dreyer coordinates must be finite")


@dataclass(frozen=True)
class TorusBD:
    """Bonahon-Dreyer coordinates of a once-punctured torus."""

    pants: PantsBD
    sigma_c1: float
    sigma_c2: float

    def __post_init__(self):
        if not (math.isfinite(self.sigma_c1) and math.isfinite(self.sigma_c2)):
            raise ValueError("gluing shears must be finite")


def middle_eigenvalue(b: BoundaryData) -> float:
    """Middle eigenvalue mu = (tau - sqrt(tau^2 - 4/lambda)) / 2.

    Parabolic data gives 1 and quasi-hyperbolic data the double root tau/2,
    both exactly, so the degenerate strata need no discriminant arithmetic.
    """
    if b.kind == PARABOLIC:
        return 1.0
    if b.kind == QUASI_HYPERBOLIC:
        return b.tau / 2.0
    disc = b.tau * b.tau - 4.0 / b.lam
    if disc < 0.0:
        raise ComplexEigenvalues(
            f"tau^2 = {b.tau * b.tau:g} is below 4/lambda = {4.0 / b.lam:g}"
        )
    return (b.tau - math.sqrt(disc)) / 2.0


def pants_goldman_to_bd(g: PantsGoldman) -> PantsBD:
    """Convert Goldman pants parameters to Bonahon-Dreyer coordinates."""
    lam = [b.lam for b in g.boundaries]
    mu = [middle_eigenvalue(b) for b in g.boundaries]
    sigma1 = []
    sigma2 = []
    for i in range(3):
        prv, nxt = (i - 1) % 3, (i + 1) % 3
        root = math.sqrt(lam[prv] * lam[nxt] / lam[i])
        sigma1.append(math.log(g.s * mu[prv] * root))
        sigma2.append(math.log(mu[nxt] / g.s * root))
    tplus = math.log(
        (math.exp(-sigma2[1]) + 1.0)
        * (math.exp(-sigma2[2]) + 1.0)
        / (g.t * (math.exp(sigma1[2]) + 1.0))
    )
    tminus = math.log(
        g.t
        * mu[0]
        * mu[1]
        * mu[2]
        * (math.exp(sigma1[2]) + 1.0)
        / ((math.exp(-sigma2[1]) + 1.0) * (math.exp(-sigma2[2]) + 1.0))
    )
    return PantsBD(tuple(sigma1), tuple(sigma2), tplus, tminus)


def torus_goldman_to_bd(g: TorusGoldman) -> TorusBD:
    """Convert Goldman torus parameters to Bonahon-Dreyer coordinates.

    The cut-open pants has boundaries (B, C, C), forcing lambda2 = lambda3
    and mu2 = mu3; the gluing parameters only enter the two shears along C.
    """
    pants = pants_goldman_to_bd(
        PantsGoldman((g.b, g.c, g.c), g.s, g.t)
    )
    return TorusBD(pants, g.u - 3.0 * g.v, g.u + 3.0 * g.v)


def all_parabolic_coords(s: float, t: float) -> tuple:
    """Free coordinates (sigma1(B1), tau111(T+)) of the all-parabolic pants.

    With every boundary parabolic the conversion collapses to
    sigma1(B_i) = log s, sigma2(B_i) = -log s and tau111(T+) = log((s+1)/t).
    """
    if not (s > 0.0 and t > 0.0):
        raise NonPositiveParameter("s and t must be positive")
    return (math.log(s), math.log((s + 1.0) / t))


def all_parabolic_recover(sigma1_b1: float, tplus: float) -> tuple:
    """Inverse of :func:`all_parabolic_coords`: (s, t) from the two coordinates."""
    s = math.exp(sigma1_b1)
    t = (s + 1.0) * math.exp(-tplus)
    return (s, t)


def one_parabolic_residuals(bd: PantsBD, s: float) -> tuple:
    """Residuals of the A1-parabolic stratum relations.

    r1 = sigma1(B2) + sigma2(B3) equals log(mu1^2 lambda1) on conversion
    output and therefore vanishes whenever A1 is parabolic (and also when it
    is quasi-hyperbolic).  r2 = sigma1(B1) - sigma2(B1) + sigma1(B3)
    - sigma2(B2) - 4 log s; on the A1-parabolic stratum this combination
    evaluates to log(lambda2 / lambda3), so it vanishes exactly on the
    sub-locus lambda2 = lambda3 (in particular for the torus, where the two
    glued boundaries coincide) and not elsewhere.
    """
    r1 = bd.sigma1[1] + bd.sigma2[2]
    r2 = bd.sigma1[0] - bd.sigma2[0] + bd.sigma1[2] - bd.sigma2[1] - 4.0 * math.log(s)
    return (r1, r2)


def quasi_hyperbolic_residual(bd: PantsBD) -> float:
    """sigma1(B2) + sigma2(B3): zero iff mu1^2 lambda1 = 1.

    On conversion output the combination equals 2 log(mu1 sqrt(lambda1)),
    which vanishes exactly when A1 is quasi-hyperbolic (mu^2 nu = 1) or
    parabolic, and is nonzero for generic hyperbolic A1.
    """
    return bd.sigma1[1] + bd.sigma2[2]


class TorusParabolicRecovery(NamedTuple):
    """Everything determined by the 4 free pants coordinates of the parabolic torus."""

    s: float
    lam2: float
    mu2: float
    t: float
    bd: PantsBD


def torus_parabolic_recover(sigma1, tplus: float) -> TorusParabolicRecovery:
    """Recover the parabolic-boundary torus structure from its free coordinates.

    Input is (sigma1(B1), sigma1(B2), sigma1(B3)) and tau111(T+).  Using
    lambda2 = lambda3 and mu2 = mu3:

        s       = e^{sigma1(B2)}
        mu2     = e^{sigma1(B3)} / s
        lambda2 = e^{sigma1(B1) - sigma1(B3)}

    after which every remaining coordinate is determined.  Raises
    :class:`InconsistentStratum` when the recovered parameters cannot come
    from a parabolic-boundary torus (lambda2 outside (0,1) or mu2 <= lambda2).
    """
    sigma1 = tuple(float(x) for x in sigma1)
    if len(sigma1) != 3:
        raise ValueError("expected the three shears sigma1(B1..B3)")
    s = math.exp(sigma1[1])
    mu2 = math.exp(sigma1[2]) / s
    lam2 = math.exp(sigma1[0] - sigma1[2])
    if not 0.0 < lam2 < 1.0:
        raise InconsistentStratum(f"recovered lambda2 = {lam2:g} is not in (0, 1)")
    if not mu2 > lam2:
        raise InconsistentStratum(
            f"recovered mu2 = {mu2:g} is not above lambda2 = {lam2:g}"
        )
    sigma2 = (
        math.log(mu2 * lam2 / s),
        math.log(mu2 / s),
        -math.log(s),
    )
    t = (
        (math.exp(-sigma2[1]) + 1.0)
        * (math.exp(-sigma2[2]) + 1.0)
        / (math.exp(tplus) * (math.exp(sigma1[2]) + 1.0))
    )
    tminus = math.log(mu2 * mu2) - tplus
    return TorusParabolicRecovery(s, lam2, mu2, t, PantsBD(sigma1, sigma2, tplus, tminus))


def stratum_codimension(kinds) -> int:
    """Codimension of the boundary stratum selected by the boundary kinds.

    Each quasi-hyperbolic boundary contributes 1, each parabolic boundary 2.
    Accepts the three pants boundary kinds or the single torus boundary kind.
    """
    if isinstance(kinds, str):
        kinds = (kinds,)
    return sum(_CODIMENSION[k] for k in kinds)


# Free coordinates of each enumerated stratum.  Interior structures are
# parametrized by the Goldman coordinates themselves; boundary strata by the
# Bonahon-Dreyer coordinates listed here.
_PANTS_STRATA = {
    (HYPERBOLIC, HYPERBOLIC, HYPERBOLIC): (
        "lambda1", "tau1", "lambda2", "tau2", "lambda3", "tau3", "s", "t",
    ),
    (QUASI_HYPERBOLIC, HYPERBOLIC, HYPERBOLIC): (
        "sigma1_B1", "sigma2_B1", "sigma1_B2", "sigma2_B2", "sigma1_B3",
        "tplus", "tminus",
    ),
    (PARABOLIC, HYPERBOLIC, HYPERBOLIC): (
        "sigma1_B1", "sigma2_B1", "sigma1_B2", "sigma1_B3", "tplus", "tminus",
    ),
    (PARABOLIC, PARABOLIC, PARABOLIC): ("sigma1_B1", "tplus"),
}

_TORUS_STRATA = {
    (HYPERBOLIC,): (
        "lambdaB", "tauB", "lambdaC", "tauC", "s", "t", "u", "v",
    ),
    (QUASI_HYPERBOLIC,): (
        "sigma1_B1", "sigma1_B2", "sigma1_B3", "tplus", "tminus",
        "sigmaC1", "sigmaC2",
    ),
    (PARABOLIC,): (
        "sigma1_B1", "sigma1_B2", "sigma1_B3", "tplus", "sigmaC1", "sigmaC2",
    ),
}


def stratum_parameters(surface: str, kinds) -> tuple:
    """Names of the free parameters of an enumerated stratum.

    ``surface`` is "pants" (kinds: the three boundary kinds, degenerations on
    A1) or "torus" (kinds: the boundary kind of B).  Only the strata of the
    classification are enumerated; other combinations raise ValueError.
    """
    if isinstance(kinds, str):
        kinds = (kinds,)
    kinds = tuple(kinds)
    table = {"pants": _PANTS_STRATA, "torus": _TORUS_STRATA}.get(surface)
    if table is None:
        raise ValueError(f"unknown surface {surface!r}")
    if kinds not in table:
        raise ValueError(f"stratum {kinds!r} is not in the enumerated list")
    return table[kinds]
