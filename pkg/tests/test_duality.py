import math

import numpy as np
import pytest

from acutesphere.duality import (
    AbsenceCertificate, SigmaCurve, foot_parameter, sigma, solve_dual_22p,
    solve_dual_general, solve_on_curve)
from acutesphere.errors import GeometryError, ValidationError
from acutesphere.spherical import (CornerMap, from_angles, from_sides, polar_dual,
                                   triangle_pqr)

from conftest import random_acute_triangle, random_triangle

EQUILATERAL = from_angles(2 * math.pi / 5, 2 * math.pi / 5, 2 * math.pi / 5)


def closed_form_p2(R):
    """Analytic reflection-cube parameters for an acute triangle (oracle)."""
    ca, cb, cc = (math.cos(s) for s in R.sides())
    return (math.sqrt(cb * cc / ca), math.sqrt(cc * ca / cb), math.sqrt(ca * cb / cc))


def test_sigma_vanishes_at_curve_corner(rng):
    for _ in range(100):
        c = rng.uniform(0.1, math.pi - 0.2)
        gamma = rng.uniform(0.05, min(math.pi / 2, math.pi - c - 0.05))
        assert abs(sigma(c, gamma, math.cos(c), 1.0)) < 1e-15


def test_sigma_right_angle_reduces_to_product():
    # sigma_{b, pi/2}(z, x) = 0 iff z x = cos b
    b = math.pi / 3
    z = 0.8
    x = math.cos(b) / z
    assert abs(sigma(b, math.pi / 2, z, x)) < 1e-15
    assert x == pytest.approx(0.625)


def test_sigma_identity_on_triangles(rng):
    # sigma_{a, pi/p}(cos c, cos b) = (cos(pi/p) + cos A) sin b sin c
    for _ in range(100):
        R = random_triangle(rng)
        p = int(rng.integers(2, 9))
        lhs = sigma(R.a, math.pi / p, math.cos(R.c), math.cos(R.b))
        rhs = (math.cos(math.pi / p) + math.cos(R.A)) * math.sin(R.b) * math.sin(R.c)
        assert lhs == pytest.approx(rhs, abs=1e-13)


def test_foot_parameter_values():
    oh = foot_parameter(math.pi / 3)
    assert oh == pytest.approx(2 - math.sqrt(3), abs=1e-15)
    assert 2 / (oh + 1 / oh) == pytest.approx(0.5, abs=1e-15)
    assert foot_parameter(math.pi / 4) == pytest.approx(math.sqrt(2) - 1, abs=1e-15)
    # limit consistency toward a -> 0: OH -> 1 and the identity gives cos 0 = 1
    oh_small = foot_parameter(1e-8)
    assert oh_small == pytest.approx(1.0, abs=1e-7)
    with pytest.raises(GeometryError):
        foot_parameter(math.pi / 2)


def test_curve_closed_form_right_angle():
    curve = SigmaCurve(0.9, math.pi / 2)
    for x in np.linspace(math.cos(0.9) + 1e-6, 1.0, 20):
        assert solve_on_curve(curve, x) == pytest.approx(math.cos(0.9) / x, abs=1e-12)


def test_curve_endpoints():
    for c in (0.4, 1.0, math.pi / 2):
        gamma = min(math.pi / 2, math.pi - c - 0.1)
        curve = SigmaCurve(c, gamma)
        lo, hi = curve.x_domain()
        assert lo == pytest.approx(math.cos(c))
        assert hi == 1.0
        assert curve.solve_y(lo) == pytest.approx(1.0, abs=1e-9)
        assert curve.solve_y(hi) == pytest.approx(math.cos(c), abs=1e-9)


def test_curve_residuals_random(rng):
    for _ in range(200):
        c = rng.uniform(0.1, math.pi - 0.2)
        gamma = rng.uniform(0.05, min(math.pi / 2, math.pi - c - 0.05))
        curve = SigmaCurve(c, gamma)
        lo, hi = curve.x_domain()
        x = rng.uniform(lo + 1e-9, hi - 1e-9)
        y = solve_on_curve(curve, x)
        assert abs(curve(x, y)) < 1e-12


def test_curve_monotone_decreasing(rng):
    for _ in range(50):
        c = rng.uniform(0.1, math.pi - 0.2)
        gamma = rng.uniform(0.05, min(math.pi / 2, math.pi - c - 0.05))
        curve = SigmaCurve(c, gamma)
        lo, hi = curve.x_domain()
        xs = np.linspace(lo + 1e-6, hi - 1e-6, 500)
        ys = curve.solve_y_grid(xs)
        assert np.all(np.diff(ys) < 0)
        for x, y in zip(xs[::100], ys[::100]):
            assert curve.derivative_dy_dx(float(x), float(y)) < 0


def test_curve_domain_obtuse_c():
    c = 2.2
    gamma = 0.5
    assert gamma < math.pi - c
    curve = SigmaCurve(c, gamma)
    lo, hi = curve.x_domain()
    assert lo == 0.0 and 0 < hi < 1
    x = hi / 2
    y = curve.solve_y(x)
    assert abs(curve(x, y)) < 1e-12


def test_curve_rejects_bad_gamma():
    with pytest.raises(ValidationError):
        SigmaCurve(2.8, 0.5)    # gamma >= pi - c
    with pytest.raises(ValidationError):
        SigmaCurve(1.0, 2.0)    # gamma > pi/2


def test_right_angle_grace_band():
    # right angles entered as rounded decimals are snapped to pi/2
    curve = SigmaCurve(1.0, 1.5707963268)
    assert curve.gamma == math.pi / 2
    rounded_right = from_angles(1.5707963268, 1.5707963268, 1.5707963268)
    res = solve_dual_general(EQUILATERAL, rounded_right)
    assert res.found
    exact = solve_dual_22p(EQUILATERAL, 2)
    assert res.witness.x == pytest.approx(exact.x, abs=1e-9)


def test_solve_22p_matches_closed_form(rng):
    for _ in range(1000):
        R = random_acute_triangle(rng)
        w = solve_dual_22p(R, 2)
        assert w is not None
        x, y, z = closed_form_p2(R)
        assert abs(w.x - x) < 1e-10
        assert abs(w.y - y) < 1e-10
        assert abs(w.z - z) < 1e-10


def test_solve_22p_icosahedral():
    w = solve_dual_22p(EQUILATERAL, 2)
    assert w.x == pytest.approx(5 ** -0.25, abs=1e-12)
    assert w.y == pytest.approx(5 ** -0.25, abs=1e-12)
    assert w.z == pytest.approx(5 ** -0.25, abs=1e-12)


def test_solve_22p_rejects_nonacute_sides():
    # a side of pi/2 or more forces cos c <= 0, so no cube exists for p = 2
    R = from_sides(math.pi / 2, math.pi / 2, math.pi / 2)
    assert solve_dual_22p(R, 2) is None
    R2 = from_sides(1.8, 1.2, 1.0)
    assert solve_dual_22p(R2, 2) is None


def test_solve_22p_higher_p(rng):
    for p in (3, 4, 5, 7):
        for _ in range(50):
            R = random_acute_triangle(rng)
            w = solve_dual_22p(R, p)
            assert w is not None
            assert max(abs(r) for r in w.residuals) < 1e-10


def test_solve_general_matches_22p(rng):
    for _ in range(50):
        R = random_acute_triangle(rng)
        res = solve_dual_general(R, triangle_pqr(2, 2, 2))
        assert res.found
        w2 = solve_dual_22p(R, 2)
        assert res.witness.x == pytest.approx(w2.x, abs=1e-10)
        assert res.witness.y == pytest.approx(w2.y, abs=1e-10)
        assert res.witness.z == pytest.approx(w2.z, abs=1e-10)


def test_solve_general_published_absence():
    R = from_sides(1.0, 0.5, 0.6)
    target = triangle_pqr(2, 3, 5)
    assert from_angles(math.pi / 2, math.pi / 3, math.pi / 5).sides() == target.sides()
    # the pair is slimmer than the polar dual yet not dual
    assert not slimmer_fails(R, target)
    res = solve_dual_general(R, target, grid_step=1e-4)
    assert not res.found
    cert = res.certificate
    assert isinstance(cert, AbsenceCertificate)
    assert cert.reason == "sign-constant"
    assert cert.residual_sign == -1
    assert cert.grid_step <= 1e-4
    assert cert.min_slope > 0


def slimmer_fails(R, target):
    from acutesphere.spherical import slimmer
    return not slimmer(R, polar_dual(target))


def test_solve_general_necessary_condition_absence():
    # equilateral with angle 2.2 is fatter than the polar dual of (2,2,2)
    big = from_angles(2.2, 2.2, 2.2)
    res = solve_dual_general(big, triangle_pqr(2, 2, 2))
    assert not res.found
    assert res.certificate.reason == "necessary-condition"


def test_solve_general_rejects_obtuse_target():
    with pytest.raises(GeometryError):
        solve_dual_general(EQUILATERAL, from_angles(2.0, 1.0, 1.0))


def test_necessary_condition_along_successes(rng):
    # every successful general solve implies slimmer than the target's dual
    from acutesphere.spherical import slimmer
    for p in (2, 3, 5):
        target = triangle_pqr(2, 2, p)
        swap = CornerMap.from_dict({"A": "C", "B": "B", "C": "A"})
        target_p_at_A = target.relabeled(swap)
        for _ in range(30):
            R = random_acute_triangle(rng)
            res = solve_dual_general(R, target_p_at_A)
            if res.found:
                assert slimmer(R, polar_dual(target_p_at_A))


def test_question_614_exploration_logged(rng):
    # sources slimmer than and close to the polar dual of an acute target:
    # outcomes are recorded, nothing is asserted about them (open question)
    from acutesphere.spherical import slimmer
    outcomes = []
    for eps in (1e-2, 1e-3, 1e-4):
        for _ in range(5):
            T = random_acute_triangle(rng)
            P = polar_dual(T)
            try:
                source = from_angles(*(a - eps for a in P.angles()))
            except GeometryError:
                continue
            if not slimmer(source, P):
                continue
            res = solve_dual_general(source, T)
            outcomes.append((eps, res.found))
    found = sum(1 for _, ok in outcomes if ok)
    print(f"question-6.14 exploration: {found}/{len(outcomes)} "
          "slimmer-and-close perturbations admitted a dual cube")
