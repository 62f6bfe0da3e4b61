"""Named ray systems and cached derived data."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .systems import BasisTable, RaySystem, build_orthogonality_graph, enumerate_bases, signature
from .witting import collapse_to_rays, e8_rays, f148_subsystem, f148_system, generate_witting_vertices

SYSTEM_IDS = (
    "penrose-eq3",
    "penrose-canonical",
    "witting",
    "e8",
    "f148",
    *(f"f148-sub-{i}" for i in range(1, 9)),
)


class UnknownSystem(ValueError):
    pass


@dataclass(frozen=True)
class LoadedSystem:
    id: str
    system: RaySystem
    bases: BasisTable

    @property
    def signature(self) -> str:
        return str(signature(self.system, self.bases))


def _build(system_id: str) -> RaySystem:
    from .penrose import canonical_penrose_system, penrose_float_system

    if system_id == "penrose-eq3":
        return build_orthogonality_graph(penrose_float_system(), name=system_id)
    if system_id == "penrose-canonical":
        return build_orthogonality_graph(canonical_penrose_system(), name=system_id)
    if system_id == "witting":
        # bases of the vertex set are those of its 40 collapsed rays
        rays = collapse_to_rays(generate_witting_vertices())
        return build_orthogonality_graph(rays, [f"r{i}" for i in range(len(rays))], name=system_id)
    if system_id == "e8":
        rays = e8_rays()
        return build_orthogonality_graph(rays, [f"r{i}" for i in range(len(rays))], name=system_id)
    if system_id == "f148":
        return build_orthogonality_graph(f148_system(), name=system_id)
    if system_id.startswith("f148-sub-"):
        line = int(system_id.rsplit("-", 1)[1])
        return build_orthogonality_graph(f148_subsystem(line), name=system_id)
    raise UnknownSystem(system_id)


@lru_cache(maxsize=None)
def load(system_id: str) -> LoadedSystem:
    if system_id not in SYSTEM_IDS:
        raise UnknownSystem(f"unknown system {system_id!r}; choose from {', '.join(SYSTEM_IDS)}")
    system = _build(system_id)
    return LoadedSystem(system_id, system, enumerate_bases(system))
