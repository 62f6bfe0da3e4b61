from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from wittingrays.golden import load_table1
from wittingrays.numerics import OMEGA, OMEGA2, ONE, TAU, ZERO, Eisenstein, ProjectiveRay, complex_inner_float, proj_equal
from wittingrays.penrose import (
    CANONICAL_LABEL_ORDER,
    PHI1,
    PHI2,
    THETA0,
    THETA1,
    VERTEX_LABELS,
    MajoranaPoint,
    SnapFailure,
    SphericalDirection,
    antipode,
    build_dodecahedron,
    canonical_penrose_system,
    closed_form_explicit_rays,
    closed_form_implicit_a,
    explicit_ray,
    implicit_ray,
    is_unitary,
    majorana_ray,
    neighbors,
    omega_matrix,
    omega_transform,
    penrose_float_system,
    snap_component,
    stereographic,
    wigner_projection_ray,
)

model = build_dodecahedron()


def test_angle_constants():
    assert math.sin(THETA0) == pytest.approx(2 / 3, abs=1e-12)
    assert math.sin(THETA1) == pytest.approx(2 * math.sqrt(2) / 3, abs=1e-12)
    assert math.sin(PHI1) == pytest.approx(math.sqrt(3 / 8), abs=1e-12)
    assert math.sin(PHI2) == pytest.approx(math.sqrt(3) * (1 + math.sqrt(5)) / 8, abs=1e-12)
    assert PHI2 == pytest.approx(2 * math.pi / 3 - 2 * PHI1, abs=1e-12)


def test_directions():
    d = model.directions
    assert len(d) == 20 and set(d) == set(VERTEX_LABELS)
    assert d["A"] == (0.0, 0.0)
    assert d["T"] == (math.pi, 0.0)
    assert d["F"] == (THETA0, 0.0)
    assert d["E"] == pytest.approx((THETA0, 4 * math.pi / 3))
    assert d["B"] == pytest.approx((THETA0, 2 * math.pi / 3))
    for t in d.values():
        assert 0 <= t.theta <= math.pi and 0 <= t.phi < 2 * math.pi


@pytest.mark.parametrize("v", VERTEX_LABELS)
def test_three_equidistant_neighbors(v):
    nb = neighbors(model, v)
    assert len(nb) == 3
    for n in nb:
        assert math.acos(model.cosine(v, n)) == pytest.approx(math.acos(math.sqrt(5) / 3), abs=1e-9)


def test_neighbor_examples():
    assert neighbors(model, "A") == {"F", "E", "B"}
    assert neighbors(model, "T") == {"S", "N", "U"}


def test_antipodes():
    pairs = {"A": "T", "B": "U", "C": "Q", "D": "R", "E": "S", "F": "N", "G": "P", "H": "K", "I": "L", "J": "M"}
    for a, b in pairs.items():
        assert antipode(model, a) == b and antipode(model, b) == a
    for v in VERTEX_LABELS:
        w = antipode(model, v)
        assert antipode(model, w) == v
        dv, dw = model.directions[v], model.directions[w]
        assert dw.theta == pytest.approx(math.pi - dv.theta, abs=1e-9)
        if 1e-9 < dv.theta < math.pi - 1e-9:
            gap = (dw.phi - dv.phi - math.pi) % (2 * math.pi)
            assert min(gap, 2 * math.pi - gap) < 1e-9


def test_unknown_label():
    with pytest.raises(KeyError):
        neighbors(model, "O")


def test_stereographic():
    north = stereographic(SphericalDirection(0.0, 1.3))
    assert north.b != 0 and abs(north.a) < 1e-15
    south = stereographic(SphericalDirection(math.pi, 0.0))
    assert south.b == 0 and south.a != 0
    p = stereographic(SphericalDirection(THETA0, 0.0))
    assert p.a / p.b == pytest.approx(TAU**-2, abs=1e-12)
    assert TAU**-2 == pytest.approx((3 - math.sqrt(5)) / 2)


zero_pt, inf_pt = MajoranaPoint(0, 1), MajoranaPoint(1, 0)


def test_majorana_special_points():
    assert proj_equal(majorana_ray(zero_pt, zero_pt, inf_pt), ProjectiveRay.from_complex([0, 1, 0, 0]))
    assert proj_equal(majorana_ray(inf_pt, inf_pt, zero_pt), ProjectiveRay.from_complex([0, 0, 1, 0]))
    a, b = MajoranaPoint(TAU**-2, 1), MajoranaPoint(-(TAU**2), 1)
    assert proj_equal(majorana_ray(a, a, b), closed_form_explicit_rays()["F"])


def test_majorana_is_symmetric():
    rng = np.random.default_rng(3)
    for _ in range(50):
        pts = [MajoranaPoint(complex(*rng.normal(size=2)), complex(*rng.normal(size=2))) for _ in range(3)]
        ref = majorana_ray(*pts)
        for perm in itertools.permutations(pts):
            assert proj_equal(majorana_ray(*perm), ref, tol=1e-12)


@pytest.mark.parametrize("v", VERTEX_LABELS)
def test_explicit_matches_rotation_oracle(v):
    assert proj_equal(explicit_ray(model, v), wigner_projection_ray(model.directions[v]))


def test_rotation_oracle_examples():
    assert proj_equal(wigner_projection_ray(SphericalDirection(0, 0)), ProjectiveRay.from_complex([0, 1, 0, 0]))
    assert proj_equal(wigner_projection_ray(SphericalDirection(math.pi, 0)), ProjectiveRay.from_complex([0, 0, 1, 0]))
    assert proj_equal(wigner_projection_ray(SphericalDirection(THETA0, 0)), closed_form_explicit_rays()["F"])


@pytest.mark.parametrize("v", sorted(set(closed_form_explicit_rays()) - {"I"}))
def test_closed_forms(v):
    assert proj_equal(explicit_ray(model, v), closed_form_explicit_rays()[v])


def test_printed_closed_form_i_is_inconsistent():
    # as written it is not orthogonal to U and H, which share bases with I
    i = closed_form_explicit_rays()["I"]
    for other in ("U", "H"):
        assert abs(complex_inner_float(i.to_complex(), explicit_ray(model, other).to_complex())) > 0.1


@pytest.mark.parametrize("v", VERTEX_LABELS)
def test_implicit_orthogonal_to_neighbors(v):
    imp = implicit_ray(model, v)
    for n in neighbors(model, v):
        assert abs(complex_inner_float(imp.to_complex(), explicit_ray(model, n).to_complex())) < 1e-9


def test_implicit_examples():
    assert proj_equal(implicit_ray(model, "A"), ProjectiveRay.from_complex([1, 0, 0, TAU**2]))
    assert proj_equal(implicit_ray(model, "A"), closed_form_implicit_a())


def test_omega():
    m = omega_matrix()
    assert is_unitary(m)
    assert np.abs(m @ m.conj().T - np.eye(4)).max() < 1e-12
    cf = closed_form_explicit_rays()
    targets = {"F": 0, "B": 1, "E": 2}
    for label, k in targets.items():
        e = [0] * 4
        e[k] = 1
        assert proj_equal(omega_transform(cf[label]), ProjectiveRay.from_complex(e))
    assert proj_equal(omega_transform(closed_form_implicit_a()), ProjectiveRay.from_complex([0, 0, 0, 1]))
    with pytest.raises(ValueError):
        omega_transform(ProjectiveRay.exact([1, 0, 0, 0]))


def test_float_system_order():
    assert tuple(penrose_float_system()) == CANONICAL_LABEL_ORDER


def test_snap():
    assert snap_component(complex(-0.5, math.sqrt(3) / 2) + 1e-9) == OMEGA
    with pytest.raises(SnapFailure):
        snap_component(0.5)


def test_canonical_system_equals_golden_table():
    built = canonical_penrose_system()
    assert built == load_table1()
    assert list(built) == list(load_table1())


def test_canonical_examples():
    built = canonical_penrose_system()
    m1 = -ONE
    assert built["N"].components == (ZERO, ONE, m1, ONE)
    assert built["A"].components == (ONE, OMEGA2, OMEGA, ZERO)
    assert built["H'"].components == (ONE, OMEGA2, OMEGA2, ZERO)


def test_canonical_structure():
    rays = list(canonical_penrose_system().values())
    coords = [r for r in rays if sum(1 for c in r.components if c) == 1]
    assert len(coords) == 4
    for r in rays:
        assert all(c.is_unit() for c in r.components if c)
    # below the first row, each column shares one zero position
    order = list(CANONICAL_LABEL_ORDER)
    built = canonical_penrose_system()
    for col in range(4):
        labels = order[4 + col :: 4]
        zeros = {tuple(i for i, c in enumerate(built[x].components) if not c) for x in labels}
        assert len(zeros) == 1 and len(next(iter(zeros))) == 1


def test_eisenstein_labels_are_read_back():
    assert load_table1()["F"].components == (ONE, ZERO, ZERO, ZERO)
    assert load_table1()["T"].components == (ONE, OMEGA, Eisenstein(-1, -1), ZERO)
