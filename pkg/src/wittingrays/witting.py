"""Witting polytope vertices, their rays in CP^3, the Gosset (E8)
realification in R^8, and the 148-ray extension family."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numerics import (
    ONE,
    ZERO,
    Eisenstein,
    HalfInteger,
    ProjectiveRay,
    QuadraticCoord,
    WittingScalar,
    canonicalize,
    omega_power,
    ray_sort_key,
    realified_inner,
)

# Unit-pattern blocks: zero position and the sign applied to each of the
# three nonzero slots (multiplied by a global +-1).
_BLOCKS = (
    (0, (1, -1, 1)),
    (1, (-1, 1, 1)),
    (2, (1, -1, 1)),
    (3, (-1, -1, -1)),
)

# Sign classes (i, j) of F1..F4 for each of the eight 40-ray subsystems.
SUBSYSTEM_LINES = (
    ((0, 0), (0, 1), (1, 0), (0, 1)),
    ((0, 0), (1, 0), (0, 1), (1, 0)),
    ((0, 1), (0, 0), (1, 1), (0, 1)),
    ((0, 1), (1, 1), (0, 0), (1, 0)),
    ((1, 0), (0, 0), (0, 1), (1, 1)),
    ((1, 0), (1, 1), (1, 0), (0, 0)),
    ((1, 1), (0, 1), (0, 0), (1, 1)),
    ((1, 1), (1, 0), (1, 1), (0, 0)),
)


@dataclass(frozen=True, slots=True, order=True)
class WittingVertex:
    components: tuple[WittingScalar, WittingScalar, WittingScalar, WittingScalar]

    def __post_init__(self) -> None:
        if len(self.components) != 4:
            raise ValueError("a Witting vertex has 4 components")

    def to_eisenstein(self) -> tuple[Eisenstein, ...]:
        return tuple(c.to_eisenstein() for c in self.components)

    def ray(self) -> ProjectiveRay:
        return canonicalize(ProjectiveRay(self.to_eisenstein()))

    def __neg__(self) -> WittingVertex:
        return WittingVertex(tuple(-c for c in self.components))

    def norm_squared(self) -> HalfInteger:
        return realified_inner(self.to_eisenstein(), self.to_eisenstein())

    @property
    def is_unit_pattern(self) -> bool:
        """True for the one-zero, three-unit form; False for ``+-i sqrt3 w^l``."""
        return sum(1 for c in self.components if c) == 3

    def key(self) -> tuple:
        return tuple((c.x.a, c.x.b, c.y.a, c.y.b) for c in self.components)


@dataclass(frozen=True, slots=True, order=True)
class GossetVertex:
    """Real 8-vector ``(Re z1, Im z1, ..., Re z4, Im z4)``."""

    coords: tuple[QuadraticCoord, ...]

    def dot(self, other: GossetVertex) -> HalfInteger:
        # sum of (p1 + q1 r3)(p2 + q2 r3) / 4 over coordinates
        rational = surd = 0
        for a, b in zip(self.coords, other.coords):
            rational += a.p * b.p + 3 * a.q * b.q
            surd += a.p * b.q + a.q * b.p
        if surd:
            raise ArithmeticError("dot product has a sqrt3 part")
        return HalfInteger.from_value(Fraction(rational, 4))

    def squared_length(self) -> HalfInteger:
        return self.dot(self)

    def __neg__(self) -> GossetVertex:
        return GossetVertex(tuple(-c for c in self.coords))

    def __sub__(self, other: GossetVertex) -> GossetVertex:
        return GossetVertex(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scaled(self, k: int) -> GossetVertex:
        return GossetVertex(tuple(c * k for c in self.coords))

    def to_float(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coords)


@dataclass(frozen=True, slots=True, order=True)
class RealRay8:
    """A line through an E8 root; ``preimage`` is its sign-canonical vertex."""

    preimage: WittingVertex

    @classmethod
    def from_vertex(cls, v: WittingVertex) -> RealRay8:
        coords = realify_vertex(v).coords
        lead = next(c for c in coords if c)
        return cls(v if float(lead) > 0 else -v)

    def realified(self) -> GossetVertex:
        return realify_vertex(self.preimage)

    def inner(self, other: RealRay8) -> HalfInteger:
        return realified_inner(self.preimage.to_eisenstein(), other.preimage.to_eisenstein())

    def key(self) -> tuple:
        return tuple((c.p, c.q) for c in self.realified().coords)


def _unit(sign: int, k: int) -> WittingScalar:
    return WittingScalar(omega_power(k) * sign, ZERO)


@lru_cache(maxsize=None)
def _vertices() -> tuple[WittingVertex, ...]:
    out = []
    for zero_pos, signs in _BLOCKS:
        for s in (1, -1):
            for exps in itertools.product(range(3), repeat=3):
                it = iter(zip(signs, exps))
                comps = []
                for pos in range(4):
                    if pos == zero_pos:
                        comps.append(WittingScalar(ZERO, ZERO))
                    else:
                        sg, k = next(it)
                        comps.append(_unit(s * sg, k))
                out.append(WittingVertex(tuple(comps)))
    for pos in range(4):
        for s in (1, -1):
            for k in range(3):
                comps = [WittingScalar(ZERO, ZERO)] * 4
                comps[pos] = WittingScalar(ZERO, omega_power(k) * s)
                out.append(WittingVertex(tuple(comps)))
    return tuple(sorted(out, key=WittingVertex.key))


def generate_witting_vertices() -> list[WittingVertex]:
    """The 240 vertices: 4 blocks of 54 unit patterns plus 24 of the form
    ``+-i sqrt3 w^l`` on a single coordinate."""
    return list(_vertices())


def ray_fibers(vertices) -> dict[ProjectiveRay, list[WittingVertex]]:
    fibers: dict[ProjectiveRay, list[WittingVertex]] = defaultdict(list)
    for v in vertices:
        fibers[v.ray()].append(v)
    return dict(fibers)


def collapse_to_rays(vertices) -> list[ProjectiveRay]:
    """Distinct canonical rays of ``vertices``, sorted lexicographically."""
    return sorted(ray_fibers(vertices), key=ray_sort_key)


def realify_vertex(v: WittingVertex) -> GossetVertex:
    coords: list[QuadraticCoord] = []
    for c in v.components:
        coords.extend(c.realify())
    return GossetVertex(tuple(coords))


def realify(vertices) -> list[GossetVertex]:
    return [realify_vertex(v) for v in vertices]


def reflection_closure_failures(roots) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` for which ``r_i - (2 r_i.r_j / r_j.r_j) r_j`` is not a root."""
    roots = list(roots)
    members = set(roots)
    failures = []
    for i, u in enumerate(roots):
        for j, v in enumerate(roots):
            coeff = 2 * u.dot(v).as_fraction() / v.squared_length().as_fraction()
            if coeff.denominator != 1:
                failures.append((i, j))
                continue
            if u - v.scaled(int(coeff)) not in members:
                failures.append((i, j))
    return failures


@lru_cache(maxsize=None)
def _e8_rays() -> tuple[RealRay8, ...]:
    rays = {RealRay8.from_vertex(v) for v in _vertices()}
    return tuple(sorted(rays, key=RealRay8.key, reverse=True))


def e8_rays() -> list[RealRay8]:
    """The 120 lines through the 240 realified vertices, sorted by their
    sign-canonical real coordinates (descending)."""
    return list(_e8_rays())


def f148_label(family: int, i: int, j: int, k: int, l: int) -> str:
    return f"F{family}({i},{j},{k},{l})"


def f148_ray(family: int, i: int, j: int, k: int, l: int) -> ProjectiveRay:
    if family not in (1, 2, 3, 4) or i not in (0, 1) or j not in (0, 1):
        raise ValueError(f"bad index F{family}({i},{j},{k},{l})")
    first = omega_power(k) * (-1) ** i
    second = omega_power(l) * (-1) ** j
    slots = {
        1: (ZERO, ONE, first, second),
        2: (ONE, ZERO, first, second),
        3: (ONE, first, ZERO, second),
        4: (ONE, first, second, ZERO),
    }[family]
    return ProjectiveRay(slots)


def coordinate_rays() -> dict[str, ProjectiveRay]:
    out = {}
    for p in range(4):
        comps = [ZERO] * 4
        comps[p] = ONE
        out[f"e{p + 1}"] = ProjectiveRay(tuple(comps))
    return out


def _sorted_labeled(items: dict[str, ProjectiveRay]) -> dict[str, ProjectiveRay]:
    return dict(sorted(items.items(), key=lambda kv: ray_sort_key(kv[1])))


@lru_cache(maxsize=None)
def _f148() -> tuple[tuple[str, ProjectiveRay], ...]:
    items = coordinate_rays()
    for fam in range(1, 5):
        for i, j, k, l in itertools.product((0, 1), (0, 1), range(3), range(3)):
            items[f148_label(fam, i, j, k, l)] = f148_ray(fam, i, j, k, l)
    return tuple(_sorted_labeled(items).items())


def f148_system() -> dict[str, ProjectiveRay]:
    """Coordinate rays plus the 144 family rays, labeled and sorted."""
    return dict(_f148())


def f148_subsystem(line: int) -> dict[str, ProjectiveRay]:
    """The coordinate rays and the 36 family rays of subsystem ``line`` (1..8)."""
    if not 1 <= line <= 8:
        raise ValueError(f"subsystem line must be in 1..8, got {line}")
    items = coordinate_rays()
    for fam, (i, j) in enumerate(SUBSYSTEM_LINES[line - 1], start=1):
        for k, l in itertools.product(range(3), range(3)):
            items[f148_label(fam, i, j, k, l)] = f148_ray(fam, i, j, k, l)
    return _sorted_labeled(items)
