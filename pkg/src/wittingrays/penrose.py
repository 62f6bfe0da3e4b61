"""The 40 Penrose rays, built from the geometry of a regular dodecahedron.

Twenty *explicit* rays are spin-3/2 states with Majorana points
``{v, v, -v}`` for each vertex direction ``v``; twenty *implicit* rays
complete each triad of neighboring explicit rays to an orthogonal tetrad.
A change to the basis ``(F, B, E, A')`` followed by rescaling and snapping
to the signed cube roots of unity yields the exact canonical system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy.linalg import expm

from .numerics import (
    OMEGA,
    OMEGA2,
    ONE,
    TAU,
    ZERO,
    ProjectiveRay,
    canonicalize,
    normalized,
)

VERTEX_LABELS = tuple("ABCDEFGHIJKLMNPQRSTU")

# Row-major order of the canonical table: the rows of (F, B, E, A'),
# then nine rows sharing a zero position per column.
CANONICAL_LABEL_ORDER = (
    "F", "B", "E", "A'",
    "N", "U", "S", "T'",
    "Q", "L", "I", "P'",
    "G", "H", "K", "Q'",
    "K'", "G'", "D'", "R'",
    "R", "D", "P", "I'",
    "F'", "U'", "E'", "A",
    "L'", "C'", "J'", "M'",
    "N'", "B'", "S'", "T",
    "J", "M", "C", "H'",
)  # fmt: skip

SNAP_TOL = 1e-6

_SQ3 = math.sqrt(3)
_SQ5 = math.sqrt(5)
_W = complex(-0.5, _SQ3 / 2)

# Acute angles fixing the dodecahedron: polar angles of the two inner
# rings and the azimuth offsets inside a ring (phi2 = 2*pi/3 - 2*phi1).
THETA0 = math.asin(2 / 3)
THETA1 = math.asin(2 * math.sqrt(2) / 3)
PHI1 = math.asin(math.sqrt(3 / 8))
PHI2 = math.asin(_SQ3 * (1 + _SQ5) / 8)


class SnapFailure(ArithmeticError):
    """A float component was not close to any signed cube root of unity."""


class SphericalDirection(NamedTuple):
    theta: float
    phi: float

    @classmethod
    def make(cls, theta: float, phi: float) -> SphericalDirection:
        if not 0 <= theta <= math.pi:
            raise ValueError(f"polar angle {theta} outside [0, pi]")
        return cls(theta, phi % (2 * math.pi))

    def cartesian(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])


class MajoranaPoint(NamedTuple):
    """Homogeneous pair ``(a : b)`` for the stereographic value ``a / b``."""

    a: complex
    b: complex

    @property
    def is_infinite(self) -> bool:
        return self.b == 0

    def value(self) -> complex:
        if self.is_infinite:
            return complex(math.inf, 0)
        return self.a / self.b


@dataclass(frozen=True)
class DodecahedronModel:
    directions: dict[str, SphericalDirection]
    theta0: float = THETA0
    theta1: float = THETA1
    phi1: float = PHI1
    phi2: float = PHI2
    _xyz: dict[str, np.ndarray] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        for k, d in self.directions.items():
            self._xyz[k] = d.cartesian()

    def cosine(self, u: str, v: str) -> float:
        return float(self._xyz[u] @ self._xyz[v])


@lru_cache(maxsize=None)
def build_dodecahedron() -> DodecahedronModel:
    """Vertex directions of the labeled dodecahedron.

    Vertex ``A`` is the north pole and ``F`` lies in the ``x >= 0`` half of
    the xz-plane. Labels are assigned so that the antipodal pairs are
    A-T, B-U, C-Q, D-R, E-S, F-N, G-P, H-K, I-L, J-M and the neighbors of
    ``A`` are F, B, E.
    """
    pi = math.pi
    t0, t1, p1, p2 = THETA0, THETA1, PHI1, PHI2
    raw = {
        "A": (0.0, 0.0),
        "F": (t0, 0.0),
        "B": (t0, 2 * pi / 3),
        "E": (t0, 4 * pi / 3),
        "L": (t1, p1),
        "G": (t1, p1 + p2),
        "C": (t1, p1 + 2 * pi / 3),
        "D": (t1, p1 + p2 + 2 * pi / 3),
        "J": (t1, p1 + 4 * pi / 3),
        "K": (t1, p1 + p2 + 4 * pi / 3),
        "I": (pi - t1, p1 + pi),
        "P": (pi - t1, p1 + p2 + pi),
        "Q": (pi - t1, p1 + 5 * pi / 3),
        "R": (pi - t1, p1 + p2 + 5 * pi / 3),
        "M": (pi - t1, p1 + pi / 3),
        "H": (pi - t1, p1 + p2 + pi / 3),
        "N": (pi - t0, pi),
        "U": (pi - t0, 5 * pi / 3),
        "S": (pi - t0, pi / 3),
        "T": (pi, 0.0),
    }
    return DodecahedronModel({k: SphericalDirection.make(*raw[k]) for k in VERTEX_LABELS})


def _check_label(model: DodecahedronModel, v: str) -> None:
    if v not in model.directions:
        raise KeyError(f"unknown vertex label {v!r}")


def neighbors(model: DodecahedronModel, v: str) -> frozenset[str]:
    """The three vertices nearest to ``v``."""
    _check_label(model, v)
    others = sorted((u for u in VERTEX_LABELS if u != v), key=lambda u: -model.cosine(v, u))
    return frozenset(others[:3])


def antipode(model: DodecahedronModel, v: str) -> str:
    _check_label(model, v)
    return min((u for u in VERTEX_LABELS if u != v), key=lambda u: model.cosine(v, u))


def stereographic(d: SphericalDirection) -> MajoranaPoint:
    """``alpha = tan(theta/2) * exp(i*phi)`` as a homogeneous pair.

    The south pole goes to ``(1 : 0)`` rather than overflowing.
    """
    if math.isclose(d.theta, math.pi, rel_tol=0, abs_tol=1e-15):
        return MajoranaPoint(1 + 0j, 0j)
    phase = complex(math.cos(d.phi), math.sin(d.phi))
    return MajoranaPoint(math.sin(d.theta / 2) * phase, complex(math.cos(d.theta / 2)))


def majorana_ray(p1: MajoranaPoint, p2: MajoranaPoint, p3: MajoranaPoint) -> ProjectiveRay:
    """Spin-3/2 ray whose Majorana points are ``p1, p2, p3``.

    Components are ordered ``m = +3/2, +1/2, -1/2, -3/2`` and proportional
    to the homogeneous elementary symmetric polynomials
    ``[e0, e1/sqrt3, e2/sqrt3, e3]``.
    """
    (a1, b1), (a2, b2), (a3, b3) = p1, p2, p3
    if not (a1 or b1) or not (a2 or b2) or not (a3 or b3):
        raise ValueError("Majorana point (0 : 0) is not a point")
    e0 = b1 * b2 * b3
    e1 = a1 * b2 * b3 + b1 * a2 * b3 + b1 * b2 * a3
    e2 = a1 * a2 * b3 + a1 * b2 * a3 + b1 * a2 * a3
    e3 = a1 * a2 * a3
    return ProjectiveRay(normalized((e0, e1 / _SQ3, e2 / _SQ3, e3)))


def explicit_ray(model: DodecahedronModel, v: str) -> ProjectiveRay:
    _check_label(model, v)
    here = stereographic(model.directions[v])
    there = stereographic(model.directions[antipode(model, v)])
    return majorana_ray(here, here, there)


def orthogonal_complement_ray(rays: list[ProjectiveRay]) -> ProjectiveRay:
    """The ray orthogonal to three rays in C^4, by conjugated cofactors."""
    m = np.array([np.conj(r.to_complex()) for r in rays])
    if m.shape != (3, 4):
        raise ValueError("need exactly three rays of dimension 4")
    w = np.array([(-1) ** i * np.linalg.det(np.delete(m, i, axis=1)) for i in range(4)])
    if np.linalg.norm(w) < 1e-12:
        raise ValueError("degenerate triad: rays are linearly dependent")
    return ProjectiveRay(normalized(w))


def implicit_ray(model: DodecahedronModel, v: str) -> ProjectiveRay:
    triad = sorted(neighbors(model, v))
    return orthogonal_complement_ray([explicit_ray(model, u) for u in triad])


def _spin32_jy() -> np.ndarray:
    ms = [1.5, 0.5, -0.5, -1.5]
    jp = np.zeros((4, 4))
    for col, m in enumerate(ms[1:], start=1):
        jp[col - 1, col] = math.sqrt(1.5 * 2.5 - m * (m + 1))
    return (jp - jp.T) / 2j


def wigner_projection_ray(d: SphericalDirection) -> ProjectiveRay:
    """``exp(-i phi Jz) exp(-i theta Jy) |3/2, +1/2>`` for spin 3/2.

    Independent of the Majorana route; used to cross-check it.
    """
    jz = np.diag([1.5, 0.5, -0.5, -1.5])
    rot = expm(-1j * d.phi * jz) @ expm(-1j * d.theta * _spin32_jy())
    return ProjectiveRay(normalized(rot[:, 1]))


def closed_form_explicit_rays() -> dict[str, ProjectiveRay]:
    """Normalized explicit rays written out in closed form.

    Transcribed from the literature for validation; P, M, Q and R are left
    out because their printed second component is ambiguous.
    """
    t, s3, s5 = TAU, _SQ3, _SQ5
    w, w2 = _W, _W * _W
    r2 = math.sqrt(2)
    r53 = math.sqrt(5 / 3)
    rows = {
        "A": [0, 1, 0, 0],
        "T": [0, 0, 1, 0],
        "F": [t / 3, -1 / s3, -1 / s3, -1 / (3 * t)],
        "B": [t / 3, -w / s3, -w2 / s3, -1 / (3 * t)],
        "E": [t / 3, -w2 / s3, -w / s3, -1 / (3 * t)],
        "L": [2 / 3, 0, -(1 / s3 + 1j * s5) / 4, (s5 / 3 - 1j * s3) / 4],
        "K": [2 / 3, 0, -(1 / s3 - 1j * s5) / 4, (s5 / 3 + 1j * s3) / 4],
        "G": [2 / 3, 0, s3 / 8 * (1 / 3 + s5) + 1j / 8 * (1 - s5), (s5 / 3 + 1j * s3) / 4],
        "J": [2 / 3, 0, s3 / 8 * (1 / 3 + s5) - 1j / 8 * (1 - s5), (s5 / 3 - 1j * s3) / 4],
        "C": [2 / 3, 0, s3 / 8 * (1 / 3 - s5) + 1j / 8 * (1 + s5), (s5 / 3 - 1j * s3) / 4],
        "D": [2 / 3, 0, s3 / 8 * (1 / 3 - s5) - 1j / 8 * (1 + s5), (s5 / 3 + 1j * s3) / 4],
        "N": [1 / (3 * t), -1 / s3, 1 / s3, t / 3],
        "U": [1 / (3 * t), -w / s3, w2 / s3, t / 3],
        "S": [1 / (3 * t), -w2 / s3, w / s3, t / 3],
        "I": [r2 / 3, (-r53 + 1j) / (2 * r2), 0, -(s5 / 3 - 1j * s3) / (2 * r2)],
        "H": [r2 / 3, (-r53 + 1j) / (2 * r2), 0, -(s5 / 3 + 1j * s3) / (2 * r2)],
    }
    return {k: ProjectiveRay.from_complex(v) for k, v in rows.items()}


def closed_form_implicit_a() -> ProjectiveRay:
    """``A'`` in closed form: ``[i/(sqrt3 tau), 0, 0, i tau/sqrt3]``."""
    return ProjectiveRay.from_complex([1j / (_SQ3 * TAU), 0, 0, 1j * TAU / _SQ3])


def omega_matrix() -> np.ndarray:
    """Unitary taking ``F, B, E, A'`` to the four coordinate rays.

    Rows are the conjugated closed-form rays ``<F|, <B|, <E|, <A'|``.
    """
    cf = closed_form_explicit_rays()
    rows = [cf["F"], cf["B"], cf["E"], closed_form_implicit_a()]
    return np.array([np.conj(r.to_complex()) for r in rows])


def omega_transform(r: ProjectiveRay) -> ProjectiveRay:
    if r.dim != 4 or r.is_exact:
        raise ValueError("omega_transform expects a float ray of dimension 4")
    return ProjectiveRay(tuple(omega_matrix() @ np.array(r.to_complex())))


def is_unitary(m: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.abs(m @ m.conj().T - np.eye(m.shape[0])).max() < tol)


@lru_cache(maxsize=None)
def _float_system() -> tuple[tuple[str, ProjectiveRay], ...]:
    model = build_dodecahedron()
    rays = {v: explicit_ray(model, v) for v in VERTEX_LABELS}
    rays.update({v + "'": implicit_ray(model, v) for v in VERTEX_LABELS})
    return tuple((k, rays[k]) for k in CANONICAL_LABEL_ORDER)


def penrose_float_system() -> dict[str, ProjectiveRay]:
    """All 40 rays in the angular-momentum basis, canonical label order."""
    return dict(_float_system())


_SNAP_TARGETS = ((ZERO, 0j), (ONE, 1 + 0j), (-ONE, -1 + 0j), (OMEGA, _W), (-OMEGA, -_W),
                 (OMEGA2, _W * _W), (-OMEGA2, -_W * _W))  # fmt: skip


def snap_component(c: complex, tol: float = SNAP_TOL):
    """Nearest of ``0, +-1, +-w, +-w^2`` to ``c``, exactly."""
    exact, dist = min(((e, abs(c - z)) for e, z in _SNAP_TARGETS), key=lambda t: t[1])
    if dist >= tol:
        raise SnapFailure(f"component {c} is {dist:.3g} from every signed cube root of unity")
    return exact


def snap_ray(r: ProjectiveRay, tol: float = SNAP_TOL) -> ProjectiveRay:
    return ProjectiveRay(tuple(snap_component(c, tol) for c in r.to_complex()))


@lru_cache(maxsize=None)
def _canonical_system() -> tuple[tuple[str, ProjectiveRay], ...]:
    out = []
    for label, r in _float_system():
        out.append((label, snap_ray(canonicalize(omega_transform(r)))))
    return tuple(out)


def canonical_penrose_system() -> dict[str, ProjectiveRay]:
    """Exact canonical rays produced by the geometric pipeline."""
    return dict(_canonical_system())
