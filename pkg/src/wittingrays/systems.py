"""Orthogonality graphs, basis tables, signatures and monomial equivalence."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .numerics import (
    FLOAT_ORTHO_TOL,
    OMEGA,
    ONE,
    Eisenstein,
    ProjectiveRay,
    eis_inner,
    normalized,
)
from .witting import RealRay8


class MixedRayKinds(TypeError):
    pass


@dataclass(frozen=True, eq=False)
class RaySystem:
    """Labeled rays with their orthogonality adjacency.

    ``kind`` is ``"eisenstein"`` (exact rays in C^4 over Z[w]), ``"real8"``
    (E8 lines, exact) or ``"float"``.
    """

    name: str
    labels: tuple[str, ...]
    rays: tuple
    dim: int
    kind: str
    adjacency: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.rays)

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def neighbor_masks(self) -> list[int]:
        masks = []
        for row in self.adjacency:
            m = 0
            for j in np.flatnonzero(row):
                m |= 1 << int(j)
            masks.append(m)
        return masks

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def ray_set(self) -> frozenset:
        return frozenset(self.rays)


def _ray_kind(r) -> str:
    if isinstance(r, RealRay8):
        return "real8"
    if isinstance(r, ProjectiveRay):
        return "eisenstein" if r.is_exact else "float"
    raise TypeError(f"not a ray: {r!r}")


def build_orthogonality_graph(rays, labels: Sequence[str] | None = None, name: str = "") -> RaySystem:
    """Build the system; ``rays`` may be a sequence or a label -> ray mapping."""
    if isinstance(rays, Mapping):
        labels = tuple(rays.keys()) if labels is None else tuple(labels)
        rays = tuple(rays.values())
    else:
        rays = tuple(rays)
        labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(len(rays)))
    if len(labels) != len(rays):
        raise ValueError("labels and rays differ in length")
    kinds = {_ray_kind(r) for r in rays}
    if len(kinds) != 1:
        raise MixedRayKinds(f"mixed ray kinds {sorted(kinds)}")
    kind = kinds.pop()
    n = len(rays)
    adj = np.zeros((n, n), dtype=bool)
    if kind == "float":
        dim = rays[0].dim
        m = np.array([normalized(r.to_complex()) for r in rays])
        adj = np.abs(m.conj() @ m.T) < FLOAT_ORTHO_TOL
    elif kind == "eisenstein":
        dim = rays[0].dim
        for i in range(n):
            for j in range(i + 1, n):
                if not eis_inner(rays[i], rays[j]):
                    adj[i, j] = adj[j, i] = True
    else:
        dim = 8
        pre = [r.preimage.to_eisenstein() for r in rays]
        for i in range(n):
            for j in range(i + 1, n):
                if eis_inner(pre[i], pre[j]).real_twice() == 0:
                    adj[i, j] = adj[j, i] = True
    np.fill_diagonal(adj, False)
    adj.setflags(write=False)
    return RaySystem(name, labels, rays, dim, kind, adj)


@dataclass(frozen=True)
class BasisTable:
    bases: tuple[tuple[int, ...], ...]
    size: int
    max_clique_size: int = field(default=0, compare=False)
    maximal_clique_sizes: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.bases)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.bases)

    def labeled(self, system: RaySystem) -> list[tuple[str, ...]]:
        return [tuple(system.labels[i] for i in b) for b in self.bases]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(nbrs: list[int]) -> Iterator[tuple[int, ...]]:
    """Bron-Kerbosch with Tomita pivoting over int bitsets, started from a
    degeneracy ordering."""
    n = len(nbrs)
    # degeneracy order: repeatedly remove a minimum-degree vertex
    remaining = (1 << n) - 1
    order = []
    while remaining:
        v = min(_bits(remaining), key=lambda u: (nbrs[u] & remaining).bit_count())
        order.append(v)
        remaining &= ~(1 << v)

    def expand(r: tuple[int, ...], p: int, x: int) -> Iterator[tuple[int, ...]]:
        if not p and not x:
            yield r
            return
        px = p | x
        pivot = max(_bits(px), key=lambda u: (p & nbrs[u]).bit_count())
        for v in _bits(p & ~nbrs[pivot]):
            yield from expand(r + (v,), p & nbrs[v], x & nbrs[v])
            p &= ~(1 << v)
            x |= 1 << v

    later = (1 << n) - 1
    earlier = 0
    for v in order:
        later &= ~(1 << v)
        yield from expand((v,), later & nbrs[v], earlier & nbrs[v])
        earlier |= 1 << v


def enumerate_bases(system: RaySystem) -> BasisTable:
    """All sets of ``dim`` mutually orthogonal rays.

    In dimension ``d`` no clique exceeds ``d`` rays, so every ``d``-clique is
    maximal and the maximal-clique enumeration finds them all; a larger
    clique would signal a construction error and raises.
    """
    sizes: Counter[int] = Counter()
    found = []
    for clique in maximal_cliques(system.neighbor_masks()):
        sizes[len(clique)] += 1
        if len(clique) == system.dim:
            found.append(tuple(sorted(clique)))
    biggest = max(sizes) if sizes else 0
    if biggest > system.dim:
        raise ValueError(f"{system.name}: clique of size {biggest} exceeds dimension {system.dim}")
    return BasisTable(
        tuple(sorted(found)),
        system.dim,
        max_clique_size=biggest,
        maximal_clique_sizes=tuple(sorted(sizes.items())),
    )


def brute_force_bases(system: RaySystem) -> BasisTable:
    """Independent oracle for dimension 4: test every 4-subset."""
    if system.dim != 4:
        raise ValueError("brute-force oracle is only for dimension 4")
    a = system.adjacency
    n = len(system)
    kk, ll = np.triu_indices(n, k=1)
    kl_ok = a[kk, ll]
    found = []
    for j in range(1, n - 2):
        sel = kk > j
        k, l, ok_kl = kk[sel], ll[sel], kl_ok[sel]
        a_jk, a_jl = a[j, k], a[j, l]
        for i in range(j):
            ok = a[i, j] & a[i, k] & a[i, l] & a_jk & a_jl & ok_kl
            for t in np.flatnonzero(ok):
                found.append((i, j, int(k[t]), int(l[t])))
    return BasisTable(tuple(sorted(found)), 4)


@dataclass(frozen=True)
class SystemSignature:
    """Occurrence profile ``((occurrences, ray_count), ...)`` plus basis data."""

    ray_occurrence_profile: tuple[tuple[int, int], ...]
    basis_count: int
    basis_size: int

    def __str__(self) -> str:
        left = " ".join(f"{count}_{occ}" for occ, count in self.ray_occurrence_profile)
        return f"{left}-{self.basis_count}_{self.basis_size}"

    def identity_holds(self) -> bool:
        total = sum(occ * count for occ, count in self.ray_occurrence_profile)
        return total == self.basis_count * self.basis_size


def ray_occurrences(n_rays: int, bases: Iterable[Sequence[int]]) -> list[int]:
    occ = [0] * n_rays
    for b in bases:
        for i in b:
            occ[i] += 1
    return occ


def signature(system: RaySystem, bases: BasisTable) -> SystemSignature:
    occ = Counter(ray_occurrences(len(system), bases.bases))
    profile = tuple(sorted(occ.items(), key=lambda kv: -kv[0]))
    return SystemSignature(profile, len(bases), bases.size)


# Monomial maps. Every nonzero component of the in-scope dim-4 rays is a
# signed cube root of unity, i.e. an even power of z = exp(2 pi i / 12);
# rays are handled as tuples of z-exponents (None for zero).

_UNIT_EXPONENT = {ONE: 0, OMEGA: 4, -OMEGA * OMEGA: 2, -ONE: 6, OMEGA * OMEGA: 8, -OMEGA: 10}
_EXPONENT_UNIT = {e: u for u, e in _UNIT_EXPONENT.items()}


def _to_exponents(r: ProjectiveRay) -> tuple[int | None, ...]:
    out = []
    for c in r.components:
        if not c:
            out.append(None)
        elif c in _UNIT_EXPONENT:
            out.append(_UNIT_EXPONENT[c])
        else:
            raise ValueError(f"monomial search needs unit-or-zero components, got {c}")
    return tuple(out)


def _from_exponents(e: tuple[int | None, ...]) -> ProjectiveRay:
    zero = Eisenstein(0, 0)
    return ProjectiveRay(tuple(zero if x is None else _EXPONENT_UNIT[x] for x in e))


def _canonical_exponents(e: Sequence[int | None]) -> tuple[int, ...] | None:
    lead = next(x for x in e if x is not None)
    out = []
    for x in e:
        if x is None:
            out.append(None)
            continue
        d = (x - lead) % 12
        if d % 2:
            return None  # an odd power of z is outside Z[w]
        out.append(d)
    return tuple(out)


@dataclass(frozen=True)
class MonomialMap:
    """``v -> D P v``: coordinate ``i`` moves to ``perm[i]``, then output
    coordinate ``j`` is multiplied by ``exp(2 pi i phases[j] / 12)``."""

    perm: tuple[int, ...]
    phases: tuple[int, ...]

    def _apply_exponents(self, e: tuple[int | None, ...]) -> tuple[int, ...] | None:
        out: list[int | None] = [None] * len(e)
        for i, x in enumerate(e):
            if x is not None:
                j = self.perm[i]
                out[j] = (x + self.phases[j]) % 12
        return _canonical_exponents(out)

    def apply(self, r: ProjectiveRay) -> ProjectiveRay | None:
        """Image ray in canonical form, or None if it leaves ``Z[w]``."""
        e = self._apply_exponents(_to_exponents(r))
        return None if e is None else _from_exponents(e)

    def matrix(self) -> np.ndarray:
        m = np.zeros((len(self.perm), len(self.perm)), dtype=complex)
        for i, j in enumerate(self.perm):
            m[j, i] = np.exp(2j * np.pi * self.phases[j] / 12)
        return m


def monomial_maps(
    a: RaySystem, b: RaySystem, permutations: Iterable[Sequence[int]] | None = None
) -> Iterator[MonomialMap]:
    """Every monomial map taking ``a``'s rays onto ``b``'s, in search order
    (permutations lexicographic, then phase triples lexicographic)."""
    if a.kind != "eisenstein" or b.kind != "eisenstein" or a.dim != 4 or b.dim != 4:
        raise ValueError("monomial search is for exact dim-4 systems")
    if len(a) != len(b):
        return
    src = [_to_exponents(r) for r in a.rays]
    # rays with more nonzero entries constrain the phases fastest
    src.sort(key=lambda e: -sum(x is not None for x in e))
    target = {_canonical_exponents(_to_exponents(r)) for r in b.rays}
    perms = itertools.permutations(range(4)) if permutations is None else permutations
    for perm in perms:
        perm = tuple(perm)
        for tail in itertools.product(range(12), repeat=3):
            m = MonomialMap(perm, (0, *tail))
            if all(m._apply_exponents(e) in target for e in src):
                yield m


def find_monomial_equivalence(
    a: RaySystem, b: RaySystem, permutations: Iterable[Sequence[int]] | None = None
) -> MonomialMap | None:
    return next(monomial_maps(a, b, permutations), None)


def map_bases(m: MonomialMap, a: RaySystem, bases_a: BasisTable, b: RaySystem) -> list[tuple[int, ...]]:
    """Images of ``a``'s bases as sorted index tuples of ``b``."""
    where = {r: i for i, r in enumerate(b.rays)}
    out = []
    for basis in bases_a:
        img = [where[m.apply(a.rays[i])] for i in basis]
        out.append(tuple(sorted(img)))
    return sorted(out)


@dataclass
class PenroseBasisReport:
    neighborhood: list[tuple[str, ...]]
    antipodal: list[tuple[str, ...]]
    tetrahedral: list[tuple[str, ...]]
    unclassified: list[tuple[str, ...]]
    missing: list[tuple[str, ...]]
    extra: list[tuple[str, ...]]

    @property
    def ok(self) -> bool:
        return (
            not self.missing
            and not self.extra
            and not self.unclassified
            and (len(self.neighborhood), len(self.antipodal), len(self.tetrahedral)) == (20, 10, 10)
        )


def match_penrose_labels(
    system: RaySystem, bases: BasisTable, table: Sequence[Sequence[str]]
) -> PenroseBasisReport:
    """Classify the enumerated Penrose bases by their dodecahedral meaning
    and compare them with a list of labeled bases."""
    from .penrose import antipode, build_dodecahedron, neighbors

    model = build_dodecahedron()
    found = {frozenset(b) for b in bases.labeled(system)}
    expected = {frozenset(b) for b in table}

    def fmt(s: frozenset) -> tuple[str, ...]:
        return tuple(sorted(s))

    neigh, anti, tetra, other = [], [], [], []
    for b in sorted(found, key=fmt):
        implicit = sorted(x[0] for x in b if x.endswith("'"))
        explicit = sorted(x for x in b if not x.endswith("'"))
        if len(implicit) == 1 and set(explicit) == neighbors(model, implicit[0]):
            neigh.append(fmt(b))
        elif len(implicit) == 2 and implicit == explicit and antipode(model, implicit[0]) == implicit[1]:
            anti.append(fmt(b))
        elif len(implicit) == 4 and all(
            abs(model.cosine(u, v) + 1 / 3) < 1e-9 for u, v in itertools.combinations(implicit, 2)
        ):
            tetra.append(fmt(b))
        else:
            other.append(fmt(b))
    return PenroseBasisReport(
        neighborhood=neigh,
        antipodal=anti,
        tetrahedral=tetra,
        unclassified=other,
        missing=sorted(fmt(b) for b in expected - found),
        extra=sorted(fmt(b) for b in found - expected),
    )
