"""Face and degeneracy layer: table values, relations, compatibility."""

import random

import pytest

from looplab.algebra import (
    Form,
    GradingSpec,
    bigrading,
    derham_d,
    gen_dx,
    gen_dy,
    gen_x,
    gen_y,
    internal_degree,
    parse_form,
)
from looplab.simplicial import (
    alpha,
    beta,
    check_simplicial_identities,
    degeneracy,
    face,
    is_degenerate,
    omega,
    omega_without,
    omega_without2,
)
from support import random_form


def test_face_values_on_polynomial_generators():
    n = 2
    assert face(n, 0, gen_y(1, 1)) == gen_x(0) ** 3
    assert face(n, 1, gen_y(1, 1)) == Form.zero(0)
    assert face(n, 0, gen_y(3, 2)) == gen_y(2, 1)
    assert face(n, 1, gen_y(3, 2)) == gen_y(2, 1)
    assert face(n, 2, gen_y(3, 2)) == gen_y(2, 2)
    assert face(n, 3, gen_y(3, 2)) == gen_y(2, 2)
    assert face(n, 3, gen_y(3, 3)) == Form.zero(2)
    assert face(n, 0, gen_x(2)) == gen_x(1)
    assert face(n, 2, gen_dx(2)) == gen_dx(1)


def test_face_values_on_exterior_generators():
    assert face(2, 0, gen_dy(1, 1)) == gen_x(0) ** 2 * gen_dx(0)
    assert face(4, 0, gen_dy(1, 1)) == gen_x(0) ** 4 * gen_dx(0)
    assert face(1, 0, gen_dy(1, 1)) == Form.zero(0)
    assert face(3, 0, gen_dy(1, 1)) == Form.zero(0)
    assert face(2, 1, gen_dy(2, 2)) == gen_dy(1, 1)
    assert face(2, 2, gen_dy(2, 2)) == Form.zero(1)


def test_face_collision_squares_to_zero():
    # d_1 pushes dy_1 and dy_2 onto the same target
    assert face(2, 1, gen_dy(2, 1) * gen_dy(2, 2)) == Form.zero(1)


def test_degeneracy_values():
    assert degeneracy(0, gen_y(1, 1)) == gen_y(2, 2)
    assert degeneracy(1, gen_y(1, 1)) == gen_y(2, 1)
    assert degeneracy(0, gen_x(0)) == gen_x(1)
    assert degeneracy(1, gen_dy(2, 2)) == gen_dy(3, 3)
    assert degeneracy(2, gen_dy(2, 2)) == gen_dy(3, 2)


def test_index_validation():
    with pytest.raises(ValueError):
        face(1, 3, gen_x(2))
    with pytest.raises(ValueError):
        face(1, 0, gen_x(0))
    with pytest.raises(ValueError):
        degeneracy(3, gen_x(2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_simplicial_identities_hold(n):
    assert check_simplicial_identities(n, max_level=4) == []


def test_identity_check_catches_a_corrupted_table():
    def swapped(n, i, form):
        q = form.level
        if i == 0:
            i = q
        elif i == q:
            i = 0
        return face(n, i, form)

    assert check_simplicial_identities(2, max_level=3, face_fn=swapped)


def test_maps_commute_with_the_differential():
    rng = random.Random(81)
    for n in (1, 2):
        for _ in range(25):
            q = rng.randint(1, 3)
            f = random_form(rng, q, n_terms=3)
            for i in range(q + 1):
                assert face(n, i, derham_d(f)) == derham_d(face(n, i, f))
                assert degeneracy(i, derham_d(f)) == derham_d(degeneracy(i, f))


def test_maps_are_algebra_maps():
    rng = random.Random(82)
    for _ in range(20):
        q = rng.randint(1, 3)
        a, b = random_form(rng, q, n_terms=2), random_form(rng, q, n_terms=2)
        for i in range(q + 1):
            assert face(2, i, a * b) == face(2, i, a) * face(2, i, b)
            assert degeneracy(i, a * b) == degeneracy(i, a) * degeneracy(i, b)


def test_maps_preserve_both_gradings():
    rng = random.Random(83)
    for spec in (GradingSpec(1, 2), GradingSpec(2, 3)):
        for _ in range(20):
            q = rng.randint(1, 3)
            f = random_form(rng, q, n_terms=1)
            for i in range(q + 1):
                for image in (face(spec.n, i, f), degeneracy(i, f)):
                    if f and image:
                        assert internal_degree(spec, image) == internal_degree(spec, f)
                        assert bigrading(spec.n, image) == bigrading(spec.n, f)


def test_distinguished_elements_render_as_expected():
    assert str(omega(0)) == "1"
    assert str(omega(2)) == "dy1*dy2"
    assert str(alpha(0)) == "dx"
    assert str(beta(0)) == "x"
    assert beta(2) == parse_form("x*dy1*dy2 + dx*y1*dy2 + dx*y2*dy1", 2)
    assert omega_without(3, 2) == parse_form("dy1*dy3", 3)
    assert omega_without2(3, 1, 3) == parse_form("dy2", 3)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_omega_is_normalized_for_every_n_and_closed_for_odd_n(q):
    for n in (1, 2, 3, 4):
        for i in range(1, q + 1):
            assert face(n, i, omega(q)) == Form.zero(q - 1)
        bottom = face(n, 0, omega(q))
        if n % 2:
            assert bottom == Form.zero(q - 1)
        else:
            assert bottom == gen_x(q - 1) ** n * alpha(q - 1)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_alpha_is_a_cycle_and_beta_closes_only_for_even_n(q):
    for n in (1, 2, 3, 4):
        for i in range(1, q + 1):
            assert face(n, i, alpha(q)) == Form.zero(q - 1)
            assert face(n, i, beta(q)) == Form.zero(q - 1)
        assert face(n, 0, alpha(q)) == Form.zero(q - 1)
        if n % 2 == 0:
            assert face(n, 0, beta(q)) == Form.zero(q - 1)
        else:
            assert face(n, 0, beta(q)) == gen_x(q - 1) ** (n + 1) * alpha(q - 1)


def test_degeneracy_images_are_degenerate():
    spec = GradingSpec(2, 2)
    rng = random.Random(84)
    for _ in range(15):
        q = rng.randint(1, 3)
        f = random_form(rng, q - 1, n_terms=2)
        i = rng.randrange(q)
        assert is_degenerate(spec, degeneracy(i, f))


def test_degenerate_membership_separates_the_hats_from_omega():
    spec = GradingSpec(1, 2)
    assert not is_degenerate(spec, omega(2))
    assert not is_degenerate(spec, omega(3))
    assert is_degenerate(spec, omega_without(3, 2))
    assert is_degenerate(spec, omega_without2(3, 1, 2))
    assert is_degenerate(spec, gen_y(3, 2) * omega_without2(3, 1, 3))
    assert not is_degenerate(spec, gen_x(0))
    assert is_degenerate(spec, Form.zero(0))
