import random

import numpy as np
import pytest

from hermlab import gf, gfmat, hermitian as hm, projgeo


def test_hermitian_form_basic():
    _, f4 = gf.quadratic_tower(2)
    e1 = (1, 0, 0, 0)
    assert hm.hermitian_form(f4, e1, e1) == 1
    # (1:1:1:1) lies on the surface in characteristic 2
    ones = (1, 1, 1, 1)
    assert hm.hermitian_form(f4, ones, ones) == 0


def test_hermitian_form_sesquilinear():
    _, f9 = gf.quadratic_tower(3)
    rng = random.Random(4)
    for _ in range(100):
        u = [rng.randrange(9) for _ in range(4)]
        v = [rng.randrange(9) for _ in range(4)]
        c = rng.randrange(1, 9)
        cu = [f9.mul(c, x) for x in u]
        cv = [f9.mul(c, x) for x in v]
        b = hm.hermitian_form(f9, u, v)
        assert hm.hermitian_form(f9, cu, v) == f9.mul(c, b)
        assert hm.hermitian_form(f9, u, cv) == f9.mul(f9.frobenius_q(c), b)
        assert hm.hermitian_form(f9, v, u) == f9.frobenius_q(b)


@pytest.mark.parametrize("q,expected", [(2, 45), (3, 280), (4, 1105)])
def test_surface_point_counts(q, expected):
    assert len(hm.HermitianSurface(q).points()) == expected


@pytest.mark.parametrize("q,expected", [(2, 27), (3, 112), (4, 325)])
def test_surface_line_counts(q, expected):
    assert len(hm.HermitianSurface(q).lines()) == expected


def test_lines_lie_on_surface(surface2):
    spec = surface2.field
    for line in surface2.lines():
        for p in projgeo.line_points(line):
            assert hm.hermitian_form(spec, p.coords, p.coords) == 0


@pytest.mark.parametrize("q", [2, 3, 4])
def test_construct_FJ_gram_and_det(q):
    F = hm.construct_FJ(q)
    spec = F.spec
    assert (hm.frame_gram(spec, F.mat) == hm.gram_target(spec)).all()
    assert len(gfmat.rref(spec, F.mat)[1]) == 4  # invertible


def test_parameterize_frame_columns():
    F = hm.construct_FJ(3)
    spec = F.spec
    assert hm.parameterize(F, (1, 0)) == projgeo.normalize(spec, F.mat[:, 0])
    assert hm.parameterize(F, (0, 1)) == projgeo.normalize(spec, F.mat[:, 3])
    with pytest.raises(ValueError):
        hm.parameterize(F, (0, 0))


@pytest.mark.parametrize("q,expected", [(2, 5), (3, 10)])
def test_curve_rational_points(q, expected):
    surf = hm.HermitianSurface(q)
    F = surf.standard_curve()
    pts = hm.curve_rational_points(F)
    assert len(pts) == expected
    surface_set = set(surf.points())
    for p in pts:
        assert p in surface_set


def test_standard_line_on_surface():
    for q in (2, 3):
        line = hm.standard_line(q)
        surf = hm.HermitianSurface(q)
        spec = surf.field
        for p in projgeo.line_points(line):
            assert hm.hermitian_form(spec, p.coords, p.coords) == 0


def test_group_elem_canonical_and_unitary():
    _, f9 = gf.quadratic_tower(3)
    scaled = np.eye(4, dtype=int) * 3  # g^2 times the identity
    g = hm.GroupElem(f9, scaled)
    assert g == hm.GroupElem(f9, np.eye(4, dtype=int))
    with pytest.raises(ValueError):
        hm.GroupElem(f9, np.diag([2, 1, 1, 1]))  # not a similitude


def test_unitary_generators_are_similitudes():
    for q in (2, 3):
        _, spec = gf.quadratic_tower(q)
        for g in hm.unitary_generators(q):
            lam = g.similitude_factor()
            assert lam is not None
            assert spec.frobenius_q(lam) == lam  # lambda in F_q


def test_point_orbit_counts(surface2):
    gens = surface2.generators()
    seed = hm.parameterize(surface2.standard_curve(), (1, 0))
    orbit = hm.enumerate_orbit(seed, gens, lambda p: p.coords, hm.act_on_point)
    assert len(orbit) == 45


def test_line_orbit_counts(surface2):
    gens = surface2.generators()
    orbit = hm.enumerate_orbit(hm.standard_line(2), gens, lambda l: l.key,
                               hm.act_on_line)
    assert len(orbit) == 27


def test_curve_orbit_q2(orbit2):
    assert len(orbit2) == 432
    assert len(set(orbit2.keys)) == 432


def test_act_on_curve_identity_and_gram(surface2):
    spec = surface2.field
    F = surface2.standard_curve()
    ident = hm.GroupElem(spec, np.eye(4, dtype=int))
    F2 = hm.act_on_curve(ident, F)
    assert hm.curve_key(spec, F2.mat) == hm.curve_key(spec, F.mat)
    rng = random.Random(0)
    for _ in range(10):
        g = hm.random_unitary(spec, rng)
        img = hm.act_on_curve(g, F)
        assert (hm.frame_gram(spec, img.mat) == hm.gram_target(spec)).all()


def test_gen_perms_consistent(surface2, orbit2):
    spec = surface2.field
    gens = surface2.generators()
    rng = random.Random(1)
    for _ in range(20):
        gi = rng.randrange(len(gens))
        i = rng.randrange(len(orbit2))
        img = hm.act_on_curve(gens[gi], orbit2.items[i])
        k = hm.curve_key(spec, img.mat)
        assert orbit2.index[k] == int(orbit2.gen_perms[gi][i])


def test_group_order_values():
    assert hm.group_order(2) == 25920
    assert hm.group_order(3) == 13063680
    # orbit-stabilizer cross-checks
    assert hm.group_order(2) // (2**2 * (2**4 - 1)) == 432
    assert hm.group_order(2) // (2**6 * (2**2 - 1) ** 2) == 45
    assert hm.group_order(3) // (3**2 * (3**4 - 1)) == 18144


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_orbit_stabilizer_formula_consistency(q):
    # |orbit| * |stabilizer| = |group| for points, curves (formula level)
    g = hm.group_order(q)
    assert g % hm.point_count(q) == 0
    assert g // hm.point_count(q) == q**6 * (q**2 - 1) ** 2
    assert g % hm.curve_count(q) == 0
    assert g // hm.curve_count(q) == q**2 * (q**4 - 1)
    assert g % hm.line_count(q) == 0


@pytest.mark.slow
def test_group_closure_q2(surface2):
    els = hm.group_closure(surface2.generators(), cap=30000)
    assert len(els) == 25920


@pytest.mark.slow
def test_stabilizer_orders_q2(surface2, orbit2):
    # curve stabilizer: q^2 (q^4 - 1) = 60
    schreier = hm.schreier_stabilizer_gens(orbit2, surface2.generators())
    stab = hm.group_closure(schreier, cap=200)
    assert len(stab) == 60
    # point stabilizer: q^6 (q^2 - 1)^2 = 576
    gens = surface2.generators()
    seed = hm.parameterize(surface2.standard_curve(), (1, 0))
    orbit = hm.enumerate_orbit(seed, gens, lambda p: p.coords, hm.act_on_point)
    schreier_pt = hm.schreier_stabilizer_gens(orbit, gens)
    stab_pt = hm.group_closure(schreier_pt, cap=2000)
    assert len(stab_pt) == 576


def test_incidence_every_point_on_curve_and_line(surface2, curve_points2, line_points2):
    covered_by_curves = set().union(*map(set, curve_points2))
    covered_by_lines = set().union(*map(set, line_points2))
    pts = set(surface2.points())
    assert covered_by_curves == pts
    assert covered_by_lines == pts


def test_tangency_bound_exhaustive_q2(curve_points2, line_points2):
    curve_sets = [set(c) for c in curve_points2]
    line_sets = [set(l) for l in line_points2]
    worst = 0
    for cs in curve_sets:
        for ls in line_sets:
            worst = max(worst, len(cs & ls))
    assert worst <= 1


def test_orbit_cap_guard(surface2):
    gens = surface2.generators()
    seed = hm.parameterize(surface2.standard_curve(), (1, 0))
    with pytest.raises(hm.OrbitCapExceeded):
        hm.enumerate_orbit(seed, gens, lambda p: p.coords, hm.act_on_point, cap=10)


def test_curve_prekey_matches_ideal_key_partition(surface2, orbit2):
    spec = surface2.field
    pre = {hm.curve_prekey(spec, c.mat) for c in orbit2.items}
    assert len(pre) == 432  # extension-field point sets separate the orbit
