"""Projective-linear primitives in RP^2: points, lines, flags and pairings.

Points and lines are stored through explicit representatives (a 3-vector,
resp. an ordered spanning pair of 3-vectors).  All invariants built on top
of these primitives are ratios of determinants and therefore do not depend
on the choice of representative; genericity tests normalize representatives
first so a single tolerance is meaningful for arbitrarily scaled input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Tolerance used when checking transversality determinants of unit-normalized
# representatives.  Callers may always pass their own.
DEFAULT_GENERICITY_TOL = 1e-12

# Tolerance for the incidence residual of a flag, relative to the product of
# the norms of its representatives.
DEFAULT_INCIDENCE_TOL = 1e-9


def det3(a, b, c) -> float:
    """Determinant of the 3x3 matrix with columns ``a``, ``b``, ``c``."""
    return (
        a[0] * (b[1] * c[2] - c[1] * b[2])
        - a[1] * (b[0] * c[2] - c[0] * b[2])
        + a[2] * (b[0] * c[1] - c[0] * b[1])
    )


def _as_vector(coords, what: str) -> np.ndarray:
    v = np.asarray(coords, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"{what} needs exactly 3 coordinates, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{what} has non-finite coordinates: {v}")
    return v


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """A point of RP^2, stored as a nonzero homogeneous representative."""

    v: np.ndarray

    def __init__(self, coords):
        v = _as_vector(coords, "projective point")
        if not v.any():
            raise ValueError("projective point cannot be the zero vector")
        v.setflags(write=False)
        object.__setattr__(self, "v", v)

    def unit(self) -> np.ndarray:
        return self.v / np.linalg.norm(self.v)

    def __repr__(self):
        return f"ProjPoint({self.v.tolist()})"


@dataclass(frozen=True, eq=False)
class ProjLine:
    """A line of RP^2, stored as an ordered pair of spanning 3-vectors.

    The line is the scale class of the wedge ``u ^ v``; ``normal`` caches the
    cross product, whose direction is the Euclidean normal of the plane.
    """

    u: np.ndarray
    w: np.ndarray
    normal: np.ndarray

    def __init__(self, u, w):
        u = _as_vector(u, "line spanning vector")
        w = _as_vector(w, "line spanning vector")
        normal = np.cross(u, w)
        scale = np.linalg.norm(u) * np.linalg.norm(w)
        if scale == 0.0 or np.linalg.norm(normal) <= 1e-12 * scale:
            raise ValueError("line spanning vectors must be linearly independent")
        for vec in (u, w, normal):
            vec.setflags(write=False)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "normal", normal)

    @classmethod
    def from_normal(cls, normal) -> "ProjLine":
        """Line {p : normal . p = 0}, with an arbitrary spanning pair."""
        n = _as_vector(normal, "line normal")
        if not n.any():
            raise ValueError("line normal cannot be the zero vector")
        # any vector not parallel to n gives a first spanning vector
        seed = np.zeros(3)
        seed[int(np.argmin(np.abs(n)))] = 1.0
        u = np.cross(n, seed)
        return cls(u, np.cross(n, u))

    def __repr__(self):
        return f"ProjLine({self.u.tolist()}, {self.w.tolist()})"


def pairing13(p: ProjPoint, line: ProjLine) -> float:
    """Determinant pairing of a point with a line.

    Returns det of the matrix whose columns are the point representative and
    the two spanning vectors of the line.  Scales multiplicatively under any
    rescaling of the three vectors and vanishes exactly when the point lies
    on the line.
    """
    return det3(p.v, line.u, line.w)


def triple_det(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> float:
    """Determinant of the matrix with columns the three point representatives."""
    return det3(a.v, b.v, c.v)


@dataclass(frozen=True, eq=False)
class Flag:
    """A point of RP^2 together with a projective line through it."""

    point: ProjPoint
    line: ProjLine

    def __init__(self, point, line, tol: float = DEFAULT_INCIDENCE_TOL):
        if not isinstance(point, ProjPoint):
            point = ProjPoint(point)
        if not isinstance(line, ProjLine):
            line = ProjLine(*line)
        residual = self_incidence(point, line)
        bound = tol * (
            np.linalg.norm(point.v)
            * np.linalg.norm(line.u)
            * np.linalg.norm(line.w)
        )
        if abs(residual) > bound:
            raise ValueError(
                f"flag point does not lie on its line (residual {residual:g})"
            )
        object.__setattr__(self, "point", point)
        object.__setattr__(self, "line", line)

    def transform(self, m) -> "Flag":
        """Image of the flag under an invertible 3x3 matrix."""
        m = np.asarray(m, dtype=float)
        return Flag(
            ProjPoint(m @ self.point.v),
            ProjLine(m @ self.line.u, m @ self.line.w),
            tol=np.inf,  # exact incidence is preserved up to roundoff
        )

    def rescaled(self, cp: float, cu: float, cw: float) -> "Flag":
        """Same flag with representatives rescaled by nonzero scalars."""
        return Flag(
            ProjPoint(cp * self.point.v),
            ProjLine(cu * self.line.u, cw * self.line.w),
            tol=np.inf,
        )

    def to_json(self) -> dict:
        return {
            "point": self.point.v.tolist(),
            "line": [self.line.u.tolist(), self.line.w.tolist()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Flag":
        return cls(ProjPoint(data["point"]), ProjLine(*data["line"]))

    def __repr__(self):
        return f"Flag({self.point!r}, {self.line!r})"


def self_incidence(point: ProjPoint, line: ProjLine) -> float:
    """Incidence residual of a point against a line (a plain pairing)."""
    return det3(point.v, line.u, line.w)


def _normalized_pairing(p: ProjPoint, line: ProjLine) -> float:
    """Pairing of unit representatives: |value| is 1 for orthogonal data."""
    return det3(p.v, line.u, line.w) / (
        np.linalg.norm(p.v) * np.linalg.norm(line.normal)
    )


def _normalized_triple(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> float:
    return det3(a.v, b.v, c.v) / (
        np.linalg.norm(a.v) * np.linalg.norm(b.v) * np.linalg.norm(c.v)
    )


def _all_transverse(flags, tol: float) -> bool:
    for fp in flags:
        for fl in flags:
            if fp is fl:
                continue
            if abs(_normalized_pairing(fp.point, fl.line)) <= tol:
                return False
    return True


def is_generic_triple(e: Flag, f: Flag, g: Flag, tol: float = DEFAULT_GENERICITY_TOL) -> bool:
    """Whether a flag triple is generic.

    Checks every point against every other flag's line and the determinant of
    the three points, on unit-normalized representatives (unit point vectors,
    unit line bivectors), against ``tol``.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    flags = (e, f, g)
    if not _all_transverse(flags, tol):
        return False
    return abs(_normalized_triple(e.point, f.point, g.point)) > tol


def is_generic_quadruple(
    e: Flag, f: Flag, g: Flag, l: Flag, tol: float = DEFAULT_GENERICITY_TOL
) -> bool:
    """Quadruple analogue of :func:`is_generic_triple`.

    All 12 cross pairings and all 4 point triples must clear ``tol``.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    flags = (e, f, g, l)
    if not _all_transverse(flags, tol):
        return False
    pts = [fl.point for fl in flags]
    for skip in range(4):
        tri = [pts[i] for i in range(4) if i != skip]
        if abs(_normalized_triple(*tri)) <= tol:
            return False
    return True
