"""Named end-to-end verifications shared by the command line and the report."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path

from .golden import load_table1, load_table3
from .numerics import proj_equal
from .registry import load
from .systems import (
    brute_force_bases,
    find_monomial_equivalence,
    map_bases,
    match_penrose_labels,
    signature,
)
from .witting import (
    collapse_to_rays,
    e8_rays,
    generate_witting_vertices,
    ray_fibers,
    realify,
    reflection_closure_failures,
)

CHECK_NAMES = ("equivalence", "tables", "monomial", "gosset")

# perm[i] is where coordinate i goes: e1 -> e2, e2 -> e4, e3 -> e1, e4 -> e3
FOOTNOTE_PERMUTATION = (1, 3, 0, 2)


@dataclass
class CheckResult:
    name: str
    ok: bool = True
    lines: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def expect(self, cond: bool, message: str) -> bool:
        self.lines.append(("ok    " if cond else "FAIL  ") + message)
        self.ok = self.ok and bool(cond)
        return bool(cond)


def check_equivalence(table1: str | Path | None = None) -> CheckResult:
    """Witting rays, the golden canonical table and the geometric pipeline agree."""
    res = CheckResult("equivalence")
    golden = load_table1(table1)
    vertices = generate_witting_vertices()
    fibers = ray_fibers(vertices)
    res.expect(len(vertices) == 240, f"{len(vertices)} Witting vertices")
    res.expect(len(fibers) == 40, f"vertices collapse to {len(fibers)} rays")
    res.expect({len(f) for f in fibers.values()} == {6}, "every ray has 6 vertices")
    collapsed = set(collapse_to_rays(vertices))
    missing = sorted(label for label, r in golden.items() if r not in collapsed)
    res.expect(not missing, "collapsed rays equal the golden table" + (f"; golden rays not produced: {', '.join(missing)}" if missing else ""))
    pipeline = load("penrose-canonical").system
    built = dict(zip(pipeline.labels, pipeline.rays))
    wrong = []
    for label, r in golden.items():
        got = built.get(label)
        if got != r:
            wrong.append(label)
            res.lines.append(f"      ray {label}: golden {r} pipeline {got}")
    res.expect(not wrong, "pipeline rays equal the golden table label by label" + (f"; mismatched: {', '.join(wrong)}" if wrong else ""))
    res.data = {"vertices": len(vertices), "rays": len(fibers), "mismatched": wrong + [m for m in missing if m not in wrong]}
    return res


def check_geometry() -> CheckResult:
    """Float construction against the rotation oracle and the closed forms."""
    from .penrose import (
        build_dodecahedron,
        closed_form_explicit_rays,
        closed_form_implicit_a,
        explicit_ray,
        implicit_ray,
        is_unitary,
        omega_matrix,
        wigner_projection_ray,
    )

    res = CheckResult("geometry")
    model = build_dodecahedron()
    off_oracle = [v for v, d in model.directions.items() if not proj_equal(explicit_ray(model, v), wigner_projection_ray(d))]
    res.expect(not off_oracle, f"{20 - len(off_oracle)}/20 explicit rays match the rotation oracle")
    closed = closed_form_explicit_rays()
    off_closed = [v for v, r in closed.items() if not proj_equal(explicit_ray(model, v), r)]
    res.expect(not off_closed, f"{len(closed) - len(off_closed)}/{len(closed)} closed-form rays match" + (f"; differing: {', '.join(off_closed)}" if off_closed else ""))
    res.expect(proj_equal(implicit_ray(model, "A"), closed_form_implicit_a()), "implicit A' matches its closed form")
    res.expect(is_unitary(omega_matrix()), "change-of-basis matrix is unitary")
    res.data = {"oracle_mismatches": off_oracle, "closed_form_mismatches": off_closed}
    return res


def check_tables(table3: str | Path | None = None) -> CheckResult:
    res = CheckResult("tables")
    loaded = load("penrose-canonical")
    system, bases = loaded.system, loaded.bases
    report = match_penrose_labels(system, bases, load_table3(table3))
    res.expect(len(bases) == 40, f"{len(bases)} bases")
    res.expect(not report.missing, "every listed basis found" + (f"; missing {report.missing}" if report.missing else ""))
    res.expect(not report.extra, "no unlisted basis" + (f"; extra {report.extra}" if report.extra else ""))
    res.expect(len(report.neighborhood) == 20, f"{len(report.neighborhood)} vertex-neighborhood bases")
    res.expect(len(report.antipodal) == 10, f"{len(report.antipodal)} antipodal-pair bases")
    res.expect(len(report.tetrahedral) == 10, f"{len(report.tetrahedral)} all-implicit tetrahedral bases")
    res.expect(set(system.degrees().tolist()) == {12}, "each ray orthogonal to 12 others")
    res.expect(loaded.signature == "40_4-40_4", f"signature {loaded.signature}")
    res.expect(brute_force_bases(system) == bases, "brute-force 4-subset scan agrees")
    res.data = {"bases": len(bases), "signature": loaded.signature}
    return res


def check_monomial() -> CheckResult:
    res = CheckResult("monomial")
    golden = set(load_table1().values())
    subs = [load(f"f148-sub-{i}") for i in range(1, 9)]
    for i, s in enumerate(subs, start=1):
        res.expect(s.signature == "40_4-40_4", f"subsystem {i} signature {s.signature}")
        res.expect(brute_force_bases(s.system) == s.bases, f"subsystem {i} brute-force scan agrees")
    res.expect(set(subs[5].system.rays) == golden, "subsystem 6 equals the canonical Penrose rays")
    maps = {}
    for a, b in itertools.combinations(range(8), 2):
        m = find_monomial_equivalence(subs[a].system, subs[b].system)
        ok = m is not None and map_bases(m, subs[a].system, subs[a].bases, subs[b].system) == list(subs[b].bases.bases)
        res.expect(ok, f"subsystems {a + 1} -> {b + 1}: {m.perm if m else None} {m.phases if m else ''}")
        if m is not None:
            maps[f"{a + 1}-{b + 1}"] = {"perm": list(m.perm), "phases": list(m.phases)}
    fm = find_monomial_equivalence(subs[0].system, subs[5].system, [FOOTNOTE_PERMUTATION])
    res.expect(fm is not None, f"basis permutation {FOOTNOTE_PERMUTATION} takes subsystem 1 to 6 with phases {fm.phases if fm else None}")
    res.data = {"maps": maps, "footnote_phases": list(fm.phases) if fm else None}
    return res


def check_gosset() -> CheckResult:
    res = CheckResult("gosset")
    roots = realify(generate_witting_vertices())
    lengths = {r.squared_length().as_fraction() for r in roots}
    res.expect(len(set(roots)) == 240, f"{len(set(roots))} distinct realified vertices")
    res.expect(lengths == {3}, f"squared lengths {sorted(lengths)}")
    failures = reflection_closure_failures(roots)
    res.expect(not failures, f"closed under reflections ({len(failures)} failures)")
    loaded = load("e8")
    res.expect(len(e8_rays()) == 120, f"{len(loaded.system)} rays")
    res.expect(len(loaded.bases) == 2025, f"{len(loaded.bases)} bases of size {loaded.bases.size}")
    sig = signature(loaded.system, loaded.bases)
    res.expect(str(sig) == "120_135-2025_8", f"signature {sig}")
    degrees = sorted(set(loaded.system.degrees().tolist()))
    res.lines.append(f"      orthogonality degree {degrees}")
    res.data = {"rays": len(loaded.system), "bases": len(loaded.bases), "signature": str(sig), "degree": degrees}
    return res


def run_check(name: str, table1=None, table3=None) -> CheckResult:
    if name == "equivalence":
        return check_equivalence(table1)
    if name == "tables":
        return check_tables(table3)
    if name == "monomial":
        return check_monomial()
    if name == "gosset":
        return check_gosset()
    raise ValueError(f"unknown check {name!r}")
