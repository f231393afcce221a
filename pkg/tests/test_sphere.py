import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from entsphere import linalg
from entsphere.errors import DomainError, InvalidDensity
from entsphere.sphere import (
    Direction,
    RayState,
    SphericalPoint,
    born_probabilities,
    density_from_point,
    fibonacci_grid,
    little_sphere_locus,
    luder_single,
    parse_grid,
    point_from_density,
    project_onto_direction,
    projector,
    random_direction,
    ray_from_angles,
)

from conftest import random_density, random_point

PI = math.pi


# -- coordinates -----------------------------------------------------------------

def test_direction_phi_reduced():
    assert Direction(0.3, -0.5).phi == pytest.approx(2 * PI - 0.5)
    assert Direction(0.3, 2 * PI).phi == 0.0
    with pytest.raises(DomainError):
        Direction(4.0)


def test_spherical_point_canonical_forms():
    assert SphericalPoint(0.0, 1.0, 2.0) == SphericalPoint(0.0, 0.0, 0.0)
    assert SphericalPoint(0.5, 0.0, 2.0).phi == 0.0
    assert SphericalPoint(0.5, PI, 2.0).phi == 0.0
    assert SphericalPoint(1 + 1e-10).r == 1.0
    with pytest.raises(DomainError):
        SphericalPoint(1.1)


def test_ray_from_angles_examples():
    assert np.allclose(ray_from_angles(Direction(0, 0)).amplitudes, [1, 0])
    assert ray_from_angles(Direction(PI, 0)) == RayState(np.array([0, 1]))
    np.testing.assert_allclose(ray_from_angles(Direction(PI / 2, 0)).amplitudes, [1 / math.sqrt(2)] * 2, atol=1e-16)


def test_ray_equality_modulo_phase(rng):
    ray = ray_from_angles(random_direction(rng))
    assert ray == RayState(np.exp(0.7j) * ray.amplitudes)
    assert ray != ray_from_angles(Direction(PI - 0.1, 0))
    with pytest.raises(DomainError):
        RayState(np.array([1.0, 1.0]))


def test_ray_point_is_surface_point(rng):
    for _ in range(50):
        d = random_direction(rng)
        p = ray_from_angles(d).point()
        np.testing.assert_allclose(p.to_cartesian(), d.unit_vector(), atol=1e-14)


# -- density <-> point --------------------------------------------------------------

def test_density_special_points():
    np.testing.assert_allclose(density_from_point(SphericalPoint(0, 1.2, 0.4)), 0.5 * np.eye(2))
    np.testing.assert_allclose(density_from_point(SphericalPoint(1, 0, 1.3)), np.diag([1, 0]), atol=1e-16)
    np.testing.assert_allclose(density_from_point(SphericalPoint(1, PI, 0.4)), np.diag([0, 1]), atol=1e-16)


def test_density_from_point_is_density(rng):
    for _ in range(200):
        d = density_from_point(random_point(rng))
        assert linalg.is_density(d)


def test_projector_is_ray_density(rng):
    for _ in range(50):
        n = random_direction(rng)
        np.testing.assert_allclose(projector(n), ray_from_angles(n).density(), atol=1e-15)


def test_point_from_density_examples():
    assert point_from_density(0.5 * np.eye(2)) == SphericalPoint(0, 0, 0)
    assert point_from_density(np.diag([0.8, 0.2])).is_close(SphericalPoint(0.6, 0, 0), 1e-15)
    p = point_from_density(0.5 * np.array([[1, -1j], [1j, 1]]))
    assert p.is_close(SphericalPoint(1, PI / 2, PI / 2), 1e-15)


def test_point_from_density_rejects_invalid():
    with pytest.raises(InvalidDensity):
        point_from_density(np.diag([1.2, -0.2]))
    with pytest.raises(InvalidDensity):
        point_from_density(np.eye(2))
    with pytest.raises(InvalidDensity):
        point_from_density(np.array([[0.5, 0.5], [0.0, 0.5]]))


def test_round_trip(rng):
    for _ in range(1000):
        p = random_point(rng)
        q = point_from_density(density_from_point(p))
        assert q.is_close(p, 1e-9), (p, q)


def test_density_round_trip(rng):
    for _ in range(1000):
        d = random_density(rng)
        np.testing.assert_allclose(density_from_point(point_from_density(d)), d, atol=1e-12)


def test_radius_matches_determinant_formula(rng):
    for _ in range(200):
        d = random_density(rng)
        r = point_from_density(d).r
        assert r == pytest.approx(math.sqrt(max(0.0, 1 - 4 * np.linalg.det(d).real)), abs=1e-7)


@given(st.floats(0, 1), st.floats(0, PI), st.floats(0, 2 * PI, exclude_max=True))
def test_density_entries_match_formula(r, theta, phi):
    d = density_from_point(SphericalPoint(r, theta, phi))
    p = SphericalPoint(r, theta, phi)
    expect = 0.5 * np.array([[1 + p.r * math.cos(p.theta), p.r * math.sin(p.theta) * np.exp(-1j * p.phi)],
                             [p.r * math.sin(p.theta) * np.exp(1j * p.phi), 1 - p.r * math.cos(p.theta)]])
    np.testing.assert_allclose(d, expect, atol=1e-15)


# -- measurement as projection ---------------------------------------------------------

def test_project_examples(rng):
    n = random_direction(rng)
    p = 0.7 * n.unit_vector()
    np.testing.assert_allclose(project_onto_direction(p, n), p, atol=1e-15)
    perp = np.cross(n.unit_vector(), rng.standard_normal(3))
    np.testing.assert_allclose(project_onto_direction(perp, n), 0, atol=1e-15)
    out = project_onto_direction([0, 0, 0.8], Direction(PI / 3, 0))
    assert np.linalg.norm(out) == pytest.approx(0.4, abs=1e-15)
    np.testing.assert_allclose(out, 0.4 * Direction(PI / 3, 0).unit_vector(), atol=1e-15)


def test_luder_single_closed_form(rng):
    # D(r,0,0) measured along (theta, phi)
    for _ in range(100):
        r = rng.random()
        n = random_direction(rng)
        c, s = math.cos(n.theta), math.sin(n.theta)
        expect = 0.5 * np.array([[1 + r * c * c, r * s * c * np.exp(-1j * n.phi)],
                                 [r * s * c * np.exp(1j * n.phi), 1 - r * c * c]])
        np.testing.assert_allclose(luder_single(density_from_point(SphericalPoint(r)), n), expect, atol=1e-15)


def test_luder_single_fixed_points(rng):
    n = random_direction(rng)
    np.testing.assert_allclose(luder_single(0.5 * np.eye(2), n), 0.5 * np.eye(2), atol=1e-16)
    p = projector(n)
    np.testing.assert_allclose(luder_single(p, n), p, atol=1e-15)


def test_luder_single_cross_checked_against_projection():
    d = luder_single(density_from_point(SphericalPoint(0.8)), Direction(PI / 3, 0))
    np.testing.assert_allclose(point_from_density(d).to_cartesian(),
                               project_onto_direction([0, 0, 0.8], Direction(PI / 3, 0)), atol=1e-15)


def test_luder_equals_projection_geometry(rng):
    for _ in range(1000):
        p = random_point(rng)
        n = random_direction(rng)
        after = luder_single(density_from_point(p), n)
        assert linalg.is_density(after)
        got = point_from_density(after)
        want_xyz = project_onto_direction(p.to_cartesian(), n)
        np.testing.assert_allclose(got.to_cartesian(), want_xyz, atol=1e-9)
        want = SphericalPoint.from_cartesian(want_xyz)
        # angles are ill-conditioned near the center and the polar axis
        assert got.r == pytest.approx(want.r, abs=1e-9)
        if want.r > 1e-6:
            assert got.theta == pytest.approx(want.theta, abs=1e-9)
            if want.r * math.sin(want.theta) > 1e-6:
                dphi = abs(got.phi - want.phi)
                assert min(dphi, 2 * PI - dphi) <= 1e-9


def _piecewise_oracle(s, alpha, theta, phi):
    """Coplanar case (state azimuth equal to the measurement azimuth): the
    contraction factor is the cosine of the angle between state and axis."""
    gap = abs(alpha - theta)
    if gap <= PI / 2:
        return SphericalPoint(s * math.cos(gap), theta, phi)
    return SphericalPoint(s * math.cos(PI - gap), PI - theta, phi + PI)


@pytest.mark.parametrize("theta", np.linspace(0, PI, 25))
@pytest.mark.parametrize("alpha", np.linspace(0, PI, 13))
def test_piecewise_branches_agree_with_projection(theta, alpha):
    s, phi = 0.9, 0.7
    state = SphericalPoint(s, alpha, phi)
    got = project_onto_direction(state.to_cartesian(), Direction(theta, phi))
    np.testing.assert_allclose(got, _piecewise_oracle(s, alpha, theta, phi).to_cartesian(), atol=1e-12)


@pytest.mark.parametrize("theta", np.linspace(0, PI, 25))
def test_piecewise_literal_form_on_polar_axis(theta):
    # state on the north axis: u(s cos t, t, phi) or u(s cos(pi - t), pi - t, phi + pi)
    s, phi = 0.6, 1.1
    got = project_onto_direction([0, 0, s], Direction(theta, phi))
    if theta <= PI / 2:
        want = SphericalPoint(s * math.cos(theta), theta, phi)
    else:
        want = SphericalPoint(s * math.cos(PI - theta), PI - theta, phi + PI)
    np.testing.assert_allclose(got, want.to_cartesian(), atol=1e-12)


# -- probabilities -------------------------------------------------------------------

def test_born_examples(rng):
    assert born_probabilities(0.5 * np.eye(2), random_direction(rng)) == pytest.approx((0.5, 0.5), abs=1e-15)
    n = random_direction(rng)
    assert born_probabilities(projector(n), n) == pytest.approx((1, 0), abs=1e-15)
    p_plus, _ = born_probabilities(density_from_point(SphericalPoint(0.6)), Direction(PI / 3, 0))
    assert p_plus == pytest.approx(0.65, abs=1e-15)


def test_born_matches_dot_product_law(rng):
    for _ in range(200):
        p, n = random_point(rng), random_direction(rng)
        d = density_from_point(p)
        plus, minus = born_probabilities(d, n)
        assert plus + minus == 1.0
        assert plus == pytest.approx(np.trace(projector(n) @ d).real, abs=1e-12)
        assert plus == pytest.approx((1 + p.to_cartesian() @ n.unit_vector()) / 2, abs=1e-12)


# -- little sphere ---------------------------------------------------------------------

def test_little_sphere_poles(rng):
    p = np.array([0.0, 0.0, 1.0])
    np.testing.assert_allclose(little_sphere_locus(p, [Direction(0)])[0], p)
    n = random_direction(rng)
    perp = np.cross(n.unit_vector(), [1.0, 2.0, 3.0])
    perp /= 2 * np.linalg.norm(perp)
    np.testing.assert_allclose(little_sphere_locus(perp, [n])[0], 0, atol=1e-16)


def test_little_sphere_law(rng):
    p = np.array([0.0, 0.0, 0.8])
    outs = little_sphere_locus(p, [random_direction(rng) for _ in range(64)])
    for out in outs:
        assert abs(np.linalg.norm(out - p / 2) - 0.4) <= 1e-12


# -- grids ---------------------------------------------------------------------------

def test_grids():
    assert len(parse_grid("equator")) == 64
    assert all(d.theta == PI / 2 for d in parse_grid("equator:8"))
    m = parse_grid("meridian:5")
    assert [d.theta for d in m] == pytest.approx([0, PI / 4, PI / 2, 3 * PI / 4, PI])
    f = fibonacci_grid(200)
    zs = np.array([d.unit_vector()[2] for d in f])
    assert abs(zs.mean()) < 1e-12 and len(f) == 200
    for bad in ("fibonacci", "square", "equator:x", "equator:0"):
        with pytest.raises(ValueError):
            parse_grid(bad)
