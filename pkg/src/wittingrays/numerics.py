"""Exact scalar rings and projective-ray primitives.

Every ray system in the package is built on top of three exact number
types:

* :class:`Eisenstein` -- integers ``a + b*w`` with ``w = exp(2*pi*i/3)``.
* :class:`WittingScalar` -- ``x + i*sqrt(3)*y`` with Eisenstein ``x, y``.
  Since ``i*sqrt(3) = 1 + 2w`` this is the same ring as ``Z[w]``; the split
  form is kept because the polytope coordinates are naturally written in it.
* :class:`HalfInteger` / :class:`QuadraticCoord` -- carriers for inner
  products and coordinates of the 8-dimensional realification.

Float rays (the geometric construction) are plain tuples of ``complex``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

TAU = (1 + math.sqrt(5)) / 2
OMEGA_C = cmath.exp(2j * math.pi / 3)

# Orthogonality threshold for unit-normalized float rays, and the cut-off
# below which a float component counts as zero during canonicalization.
FLOAT_ORTHO_TOL = 1e-9
FLOAT_ZERO_TOL = 1e-9


class ArithmeticDomainError(ArithmeticError):
    """An exact operation left the ring it was asked to stay in."""


class NonUnitLeading(ArithmeticDomainError):
    """Exact canonicalization could not divide by the leading component."""


class ZeroRayError(ValueError):
    """A ray with no nonzero component was supplied."""


@dataclass(frozen=True, slots=True, order=True)
class Eisenstein:
    """The Eisenstein integer ``a + b*w``."""

    a: int
    b: int

    @classmethod
    def coerce(cls, x: int | Eisenstein) -> Eisenstein:
        if isinstance(x, Eisenstein):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} to Eisenstein")

    def __add__(self, other: int | Eisenstein) -> Eisenstein:
        if isinstance(other, int):
            return Eisenstein(self.a + other, self.b)
        if isinstance(other, Eisenstein):
            return Eisenstein(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> Eisenstein:
        return Eisenstein(-self.a, -self.b)

    def __sub__(self, other: int | Eisenstein) -> Eisenstein:
        if isinstance(other, (int, Eisenstein)):
            return self + (-Eisenstein.coerce(other))
        return NotImplemented

    def __rsub__(self, other: int | Eisenstein) -> Eisenstein:
        return Eisenstein.coerce(other) - self

    def __mul__(self, other: int | Eisenstein) -> Eisenstein:
        if isinstance(other, int):
            return Eisenstein(self.a * other, self.b * other)
        if isinstance(other, Eisenstein):
            # w^2 = -1 - w
            a1, b1, a2, b2 = self.a, self.b, other.a, other.b
            return Eisenstein(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1 - b1 * b2)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Eisenstein:
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def conjugate(self) -> Eisenstein:
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> int:
        """Field norm ``|x|^2 = a^2 - ab + b^2``."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_unit(self) -> bool:
        return self.norm() == 1

    def divides(self, other: Eisenstein) -> bool:
        n = self.norm()
        if n == 0:
            return not other
        num = other * self.conjugate()
        return num.a % n == 0 and num.b % n == 0

    def exact_div(self, other: int | Eisenstein) -> Eisenstein:
        """``self / other`` if the quotient lies in ``Z[w]``."""
        other = Eisenstein.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Eisenstein integer")
        num = self * other.conjugate()
        if num.a % n or num.b % n:
            raise ArithmeticDomainError(f"{other} does not divide {self}")
        return Eisenstein(num.a // n, num.b // n)

    __truediv__ = exact_div

    def inverse(self) -> Eisenstein:
        return ONE.exact_div(self)

    def real_twice(self) -> int:
        """``2 * Re(self)``; always an integer."""
        return 2 * self.a - self.b

    def __complex__(self) -> complex:
        return complex(self.a - 0.5 * self.b, self.b * math.sqrt(3) / 2)

    def __repr__(self) -> str:
        return f"Eisenstein({self.a}, {self.b})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}w"
        return f"{self.a}{self.b:+d}w"


ZERO = Eisenstein(0, 0)
ONE = Eisenstein(1, 0)
OMEGA = Eisenstein(0, 1)
OMEGA2 = Eisenstein(-1, -1)
I_SQRT3 = Eisenstein(1, 2)  # 1 + 2w = i*sqrt(3)
UNITS: tuple[Eisenstein, ...] = (ONE, OMEGA, OMEGA2, -ONE, -OMEGA, -OMEGA2)


def omega_power(k: int) -> Eisenstein:
    return (ONE, OMEGA, OMEGA2)[k % 3]


@dataclass(frozen=True, slots=True, order=True)
class WittingScalar:
    """The number ``x + i*sqrt(3)*y`` for Eisenstein ``x`` and ``y``."""

    x: Eisenstein
    y: Eisenstein = ZERO

    @classmethod
    def coerce(cls, v: int | Eisenstein | WittingScalar) -> WittingScalar:
        if isinstance(v, WittingScalar):
            return v
        return cls(Eisenstein.coerce(v), ZERO)

    def to_eisenstein(self) -> Eisenstein:
        return self.x + I_SQRT3 * self.y

    def __add__(self, other: int | Eisenstein | WittingScalar) -> WittingScalar:
        o = WittingScalar.coerce(other)
        return WittingScalar(self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self) -> WittingScalar:
        return WittingScalar(-self.x, -self.y)

    def __sub__(self, other: int | Eisenstein | WittingScalar) -> WittingScalar:
        return self + (-WittingScalar.coerce(other))

    def __mul__(self, other: int | Eisenstein | WittingScalar) -> WittingScalar:
        o = WittingScalar.coerce(other)
        # (i*sqrt3)^2 = -3
        return WittingScalar(self.x * o.x - 3 * (self.y * o.y), self.x * o.y + self.y * o.x)

    __rmul__ = __mul__

    def conjugate(self) -> WittingScalar:
        return WittingScalar(self.x.conjugate(), -self.y.conjugate())

    def __bool__(self) -> bool:
        return bool(self.to_eisenstein())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (WittingScalar, Eisenstein, int)):
            return self.to_eisenstein() == WittingScalar.coerce(other).to_eisenstein()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_eisenstein())

    def realify(self) -> tuple[QuadraticCoord, QuadraticCoord]:
        """Exact ``(Re, Im)`` as :class:`QuadraticCoord` values."""
        x, y = self.x, self.y
        re = QuadraticCoord(2 * x.a - x.b - 3 * y.b, 0)
        im = QuadraticCoord(0, x.b + 2 * y.a - y.b)
        return re, im

    def __complex__(self) -> complex:
        return complex(self.x) + 1j * math.sqrt(3) * complex(self.y)

    def __repr__(self) -> str:
        return f"WittingScalar({self.x!r}, {self.y!r})"


@dataclass(frozen=True, slots=True, order=True)
class HalfInteger:
    """The rational ``n / 2``; stored doubled so it stays an int."""

    n: int

    @classmethod
    def from_value(cls, v: int | Fraction) -> HalfInteger:
        twice = Fraction(v) * 2
        if twice.denominator != 1:
            raise ArithmeticDomainError(f"{v} is not a half-integer")
        return cls(int(twice))

    def __add__(self, other: HalfInteger) -> HalfInteger:
        return HalfInteger(self.n + other.n)

    def __sub__(self, other: HalfInteger) -> HalfInteger:
        return HalfInteger(self.n - other.n)

    def __neg__(self) -> HalfInteger:
        return HalfInteger(-self.n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInteger):
            return self.n == other.n
        if isinstance(other, (int, Fraction)):
            return Fraction(self.n, 2) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(Fraction(self.n, 2))

    def __float__(self) -> float:
        return self.n / 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.n, 2)

    def __str__(self) -> str:
        return str(self.n // 2) if self.n % 2 == 0 else f"{self.n}/2"


@dataclass(frozen=True, slots=True, order=True)
class QuadraticCoord:
    """The real number ``(p + q*sqrt(3)) / 2``."""

    p: int
    q: int

    def __add__(self, other: QuadraticCoord) -> QuadraticCoord:
        return QuadraticCoord(self.p + other.p, self.q + other.q)

    def __sub__(self, other: QuadraticCoord) -> QuadraticCoord:
        return QuadraticCoord(self.p - other.p, self.q - other.q)

    def __neg__(self) -> QuadraticCoord:
        return QuadraticCoord(-self.p, -self.q)

    def __mul__(self, other: QuadraticCoord | int) -> QuadraticCoord:
        if isinstance(other, int):
            return QuadraticCoord(self.p * other, self.q * other)
        num_p = self.p * other.p + 3 * self.q * other.q
        num_q = self.p * other.q + self.q * other.p
        if num_p % 2 or num_q % 2:
            raise ArithmeticDomainError("product is not of the form (p + q*sqrt3)/2")
        return QuadraticCoord(num_p // 2, num_q // 2)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.p or self.q)

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(3)) / 2

    def product_parts(self, other: QuadraticCoord) -> tuple[Fraction, Fraction]:
        """Rational and sqrt(3) parts of ``self * other`` (always defined)."""
        return (
            Fraction(self.p * other.p + 3 * self.q * other.q, 4),
            Fraction(self.p * other.q + self.q * other.p, 4),
        )


Scalar = Union[Eisenstein, complex]


@dataclass(frozen=True, slots=True)
class ProjectiveRay:
    """A nonzero vector taken up to scalar multiples.

    ``components`` holds either :class:`Eisenstein` values (exact) or
    Python ``complex`` values (float). The stored representative is
    whatever was passed in; use :func:`canonicalize` for the normal form.
    """

    components: tuple

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        if not comps:
            raise ValueError("empty ray")
        kinds = {isinstance(c, Eisenstein) for c in comps}
        if len(kinds) != 1:
            raise TypeError("ray mixes exact and float components")
        if not kinds.pop():
            comps = tuple(complex(c) for c in comps)
            if not all(cmath.isfinite(c) for c in comps):
                raise ValueError("non-finite ray component")
        if not any(comps):
            raise ZeroRayError("zero vector is not a ray")
        object.__setattr__(self, "components", comps)

    @classmethod
    def exact(cls, comps: Iterable[int | Eisenstein | WittingScalar]) -> ProjectiveRay:
        out = []
        for c in comps:
            if isinstance(c, WittingScalar):
                c = c.to_eisenstein()
            out.append(Eisenstein.coerce(c))
        return cls(tuple(out))

    @classmethod
    def from_complex(cls, comps: Iterable[complex]) -> ProjectiveRay:
        return cls(tuple(complex(c) for c in comps))

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.components[0], Eisenstein)

    def to_complex(self) -> tuple[complex, ...]:
        return tuple(complex(c) for c in self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int):
        return self.components[i]

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.components) + "]"


def _as_eisenstein(v) -> tuple[Eisenstein, ...]:
    comps = v.components if isinstance(v, ProjectiveRay) else tuple(v)
    out = []
    for c in comps:
        if isinstance(c, WittingScalar):
            c = c.to_eisenstein()
        elif isinstance(c, int):
            c = Eisenstein(c, 0)
        elif not isinstance(c, Eisenstein):
            raise TypeError(f"non-Eisenstein component {c!r}")
        out.append(c)
    return tuple(out)


def eis_inner(u, v) -> Eisenstein:
    """Hermitian inner product ``sum(conj(u_i) * v_i)`` over ``Z[w]``."""
    uu, vv = _as_eisenstein(u), _as_eisenstein(v)
    if len(uu) != len(vv):
        raise ValueError(f"dimension mismatch: {len(uu)} vs {len(vv)}")
    a = b = 0
    for x, y in zip(uu, vv):
        # conj(x) = (x.a - x.b) - x.b*w
        ca, cb = x.a - x.b, -x.b
        a += ca * y.a - cb * y.b
        b += ca * y.b + cb * y.a - cb * y.b
    return Eisenstein(a, b)


def realified_inner(u, v) -> HalfInteger:
    """Real dot product of the 8-dimensional realifications of ``u`` and ``v``.

    Equals ``Re <u, v>`` of the complex vectors.
    """
    return HalfInteger(eis_inner(u, v).real_twice())


def complex_inner_float(u, v) -> complex:
    uu = u.to_complex() if isinstance(u, ProjectiveRay) else tuple(complex(c) for c in u)
    vv = v.to_complex() if isinstance(v, ProjectiveRay) else tuple(complex(c) for c in v)
    if len(uu) != len(vv):
        raise ValueError(f"dimension mismatch: {len(uu)} vs {len(vv)}")
    if not all(cmath.isfinite(c) for c in uu + vv):
        raise ValueError("non-finite component")
    return sum((x.conjugate() * y for x, y in zip(uu, vv)), 0j)


def normalized(v: Sequence[complex]) -> tuple[complex, ...]:
    vv = tuple(complex(c) for c in v)
    n = math.sqrt(sum(abs(c) ** 2 for c in vv))
    if n == 0:
        raise ZeroRayError("zero vector")
    return tuple(c / n for c in vv)


def canonicalize(v: ProjectiveRay) -> ProjectiveRay:
    """Rescale so that the leading nonzero component is exactly 1.

    Exact rays are divided inside ``Z[w]`` and raise :class:`NonUnitLeading`
    when the leading component does not divide every other component.
    Float components whose modulus is below ``FLOAT_ZERO_TOL`` times the
    largest modulus are set to zero before the leading one is picked.
    """
    if not isinstance(v, ProjectiveRay):
        v = ProjectiveRay(tuple(v))
    comps = v.components
    if v.is_exact:
        k = next(i for i, c in enumerate(comps) if c)
        lead = comps[k]
        try:
            return ProjectiveRay(tuple(c.exact_div(lead) for c in comps))
        except ArithmeticDomainError as exc:
            raise NonUnitLeading(f"cannot rescale {v} by leading component {lead}") from exc
    scale = max(abs(c) for c in comps)
    cut = FLOAT_ZERO_TOL * scale
    cleaned = [0j if abs(c) <= cut else c for c in comps]
    k = next(i for i, c in enumerate(cleaned) if c)
    lead = cleaned[k]
    out = [c / lead for c in cleaned]
    out[k] = 1 + 0j
    return ProjectiveRay(tuple(out))


def proj_equal(u: ProjectiveRay, v: ProjectiveRay, tol: float = FLOAT_ORTHO_TOL) -> bool:
    if u.dim != v.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs {v.dim}")
    if u.is_exact and v.is_exact:
        return canonicalize(u) == canonicalize(v)
    # align the phase of the unit vectors rather than dividing by a
    # possibly tiny leading component
    nu, nv = normalized(u.to_complex()), normalized(v.to_complex())
    overlap = complex_inner_float(nv, nu)
    if abs(overlap) < 0.5:
        return False
    phase = overlap / abs(overlap)
    return all(abs(x - phase * y) <= tol for x, y in zip(nu, nv))


def ray_sort_key(v: ProjectiveRay) -> tuple:
    """Lexicographic key on canonical components (rounded for floats)."""
    c = canonicalize(v)
    if c.is_exact:
        return tuple((x.a, x.b) for x in c.components)
    return tuple((round(x.real, 12) + 0.0, round(x.imag, 12) + 0.0) for x in c.components)


def is_orthogonal(u: ProjectiveRay, v: ProjectiveRay, tol: float = FLOAT_ORTHO_TOL) -> bool:
    if u.is_exact and v.is_exact:
        return not eis_inner(u, v)
    nu, nv = normalized(u.to_complex()), normalized(v.to_complex())
    return abs(complex_inner_float(nu, nv)) < tol
