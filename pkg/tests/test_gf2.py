"""Linear algebra layer, checked against brute-force span enumeration."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from looplab.gf2 import (
    apply_row,
    intersect,
    kernel_basis,
    left_kernel,
    quotient_dim,
    quotient_reps,
    rank,
    rref,
    solve_in_span,
    transpose,
)


def span_elements(rows):
    """Every XOR combination of the rows (exponential, tests only)."""
    out = {0}
    for r in rows:
        out |= {x ^ r for x in out}
    return out


def random_rows(rng, nrows, ncols):
    return [rng.getrandbits(ncols) for _ in range(nrows)]


def test_rank_identity():
    assert rank([0b01, 0b10]) == 2


def test_rank_repeated_row():
    assert rank([0b11, 0b11]) == 1


def test_rank_matches_span_enumeration():
    rng = random.Random(601)
    for _ in range(40):
        rows = random_rows(rng, 6, 6)
        assert 2 ** rank(rows) == len(span_elements(rows))


def test_rref_is_canonical_for_the_span():
    rng = random.Random(602)
    for _ in range(25):
        rows = random_rows(rng, 5, 7)
        red, piv = rref(rows)
        shuffled = rows[:]
        rng.shuffle(shuffled)
        shuffled = [shuffled[0] ^ shuffled[-1]] + shuffled
        assert rref(shuffled)[0] == red
        for c, r in zip(piv, red):
            assert sum(row >> c & 1 for row in red) == 1
            assert r & (1 << c)


def test_kernel_of_single_equation():
    ker = kernel_basis([0b011], 3)
    assert len(ker) == 2
    for v in ker:
        assert bin(v & 0b011).count("1") % 2 == 0


def test_kernel_multiplies_back_to_zero():
    rng = random.Random(603)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 8)
        rows = random_rows(rng, nrows, ncols)
        ker = kernel_basis(rows, ncols)
        assert len(ker) == ncols - rank(rows)
        for v in ker:
            for row in rows:
                assert bin(row & v).count("1") % 2 == 0


def test_left_kernel_kills_rows():
    rng = random.Random(604)
    rows = random_rows(rng, 5, 4)
    for c in left_kernel(rows, 4):
        assert apply_row(c, rows) == 0


def test_intersect_matches_set_intersection():
    rng = random.Random(605)
    for _ in range(30):
        a = random_rows(rng, rng.randint(1, 4), 8)
        b = random_rows(rng, rng.randint(1, 4), 8)
        got = intersect(a, b, 8)
        expected = span_elements(a) & span_elements(b)
        assert 2 ** len(got) == len(expected)
        assert span_elements(got) == expected


def test_solve_in_span_round_trip():
    rng = random.Random(606)
    for _ in range(40):
        basis = random_rows(rng, 5, 9)
        pick = rng.getrandbits(5)
        target = apply_row(pick, basis)
        coeffs = solve_in_span(basis, target, 9)
        assert coeffs is not None
        acc = 0
        for c, row in zip(coeffs, basis):
            if c:
                acc ^= row
        assert acc == target


def test_solve_in_span_rejects_outside_vector():
    basis = [0b0011, 0b0110]
    assert solve_in_span(basis, 0b1000, 4) is None


def test_quotient_dims_and_joint_independence():
    rng = random.Random(607)
    for _ in range(30):
        z = random_rows(rng, 6, 9)
        picks = [apply_row(rng.getrandbits(6), z) for _ in range(3)]
        reps = quotient_reps(z, picks, 9)
        assert len(reps) == rank(z) - rank(picks)
        assert rank(reps + rref(picks)[0]) == rank(z)
        for r in reps:
            assert solve_in_span(picks, r, 9) is None


def test_quotient_rejects_subspace_outside_span():
    with pytest.raises(ValueError):
        quotient_dim([0b001], [0b010], 3)


def test_quotient_reps_depend_only_on_spans():
    z = [0b0111, 0b1010, 0b0101]
    b = [0b0111]
    one = quotient_reps(z, b, 4)
    two = quotient_reps([z[1], z[0] ^ z[2], z[2]], [b[0] ^ 0], 4)
    assert one == two


bit_matrix = st.integers(1, 7).flatmap(
    lambda ncols: st.tuples(
        st.just(ncols),
        st.lists(st.integers(0, 2**ncols - 1), min_size=1, max_size=7),
    )
)


@settings(max_examples=150, deadline=None)
@given(bit_matrix)
def test_rank_of_transpose(case):
    ncols, rows = case
    assert rank(rows) == rank(transpose(rows, ncols))


@settings(max_examples=150, deadline=None)
@given(bit_matrix)
def test_rank_nullity(case):
    ncols, rows = case
    assert rank(rows) + len(kernel_basis(rows, ncols)) == ncols


@settings(max_examples=100, deadline=None)
@given(bit_matrix, st.lists(st.integers(0, 2**7 - 1), min_size=1, max_size=5))
def test_intersection_lies_in_both_spans(case, b_rows):
    ncols, a_rows = case
    b_rows = [r & (2**ncols - 1) for r in b_rows]
    for v in intersect(a_rows, b_rows, ncols):
        assert solve_in_span(a_rows, v, ncols) is not None
        assert solve_in_span(b_rows, v, ncols) is not None
