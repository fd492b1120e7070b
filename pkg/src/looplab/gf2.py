"""Exact linear algebra over GF(2).

A matrix is a list of Python ints, one int per row, bit j of a row being
the entry in column j.  Everything reduces to integer XOR, so results
are exact and there is no tolerance knob anywhere in the package.
"""

from __future__ import annotations

from typing import Optional, Sequence

__all__ = [
    "low_bit",
    "rref",
    "rank",
    "transpose",
    "apply_row",
    "kernel_basis",
    "left_kernel",
    "intersect",
    "solve_in_span",
    "quotient_reps",
    "quotient_dim",
]


def low_bit(x: int) -> int:
    """Index of the lowest set bit of a nonzero int."""
    return (x & -x).bit_length() - 1


def rref(rows: Sequence[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of a bit-row matrix.

    Returns (reduced_rows, pivot_columns) with rows sorted by pivot
    column and fully reduced, so every pivot column meets exactly one
    row.  The pivot of a row is its lowest set bit.  The output depends
    only on the row span, which makes it usable as a canonical form.
    """
    piv: list[tuple[int, int]] = []
    for row in rows:
        for c, r in piv:
            if row >> c & 1:
                row ^= r
        if row:
            c = low_bit(row)
            for i, (pc, pr) in enumerate(piv):
                if pr >> c & 1:
                    piv[i] = (pc, pr ^ row)
            piv.append((c, row))
    piv.sort()
    return [r for _, r in piv], [c for c, _ in piv]


def rank(rows: Sequence[int]) -> int:
    """Rank over GF(2).

    >>> rank([0b10, 0b01])
    2
    >>> rank([0b11, 0b11])
    1
    """
    return len(rref(rows)[0])


def transpose(rows: Sequence[int], ncols: int) -> list[int]:
    """Transpose; ncols must be passed since ints carry no width."""
    out = []
    for c in range(ncols):
        x = 0
        for i, r in enumerate(rows):
            x |= (r >> c & 1) << i
        out.append(x)
    return out


def apply_row(v: int, rows: Sequence[int]) -> int:
    """XOR of rows[i] over the set bits i of v (row-vector times matrix)."""
    acc = 0
    while v:
        acc ^= rows[low_bit(v)]
        v &= v - 1
    return acc


def kernel_basis(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of the solution space of M v = 0.

    Rows are read as equations in ncols unknowns.  The basis returned is
    the standard one with identity on the free columns, listed in free
    column order; its length is ncols - rank(M).

    >>> kernel_basis([0b011], 3)
    [3, 4]
    """
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for c, r in zip(pivots, red):
            if r >> f & 1:
                v |= 1 << c
        basis.append(v)
    return basis


def left_kernel(rows: Sequence[int], ncols: int) -> list[int]:
    """Vectors c with c M = 0, i.e. the dependencies among the rows."""
    return kernel_basis(transpose(rows, ncols), len(rows))


def intersect(a_basis: Sequence[int], b_basis: Sequence[int], ncols: int) -> list[int]:
    """Canonical basis of the intersection of two row spans.

    A dependency c among the stacked rows [A; B] splits as c = (u, w)
    with u A = w B, and u A is then an intersection element; over GF(2)
    there are no signs to track.  Inputs are canonicalized first so
    dependent spanning sets are accepted.
    """
    a_red, _ = rref(a_basis)
    b_red, _ = rref(b_basis)
    out = []
    for c in left_kernel(a_red + b_red, ncols):
        elem = apply_row(c & ((1 << len(a_red)) - 1), a_red)
        if elem:
            out.append(elem)
    return rref(out)[0]


def solve_in_span(basis: Sequence[int], target: int, ncols: int) -> Optional[list[int]]:
    """Coefficients expressing target in the given spanning set, or None.

    The result is a 0/1 list aligned with basis order; XORing the chosen
    rows reproduces target exactly.  Dependent spanning sets are fine,
    one valid certificate is returned.
    """
    piv: list[tuple[int, int, int]] = []
    for i, row in enumerate(basis):
        tag = 1 << i
        for c, r, t in piv:
            if row >> c & 1:
                row ^= r
                tag ^= t
        if row:
            piv.append((low_bit(row), row, tag))
    piv.sort()
    t_acc = 0
    for c, r, t in piv:
        if target >> c & 1:
            target ^= r
            t_acc ^= t
    if target:
        return None
    return [t_acc >> i & 1 for i in range(len(basis))]


def quotient_reps(z_basis: Sequence[int], b_basis: Sequence[int], ncols: int) -> list[int]:
    """Canonical representatives for span(z) modulo span(b).

    Requires span(b) to lie inside span(z) and checks that up front: a
    violation means the caller's chain structure is broken, and it should
    surface here as an error rather than as a silently wrong dimension.
    Representatives are reduced modulo span(b), so none of them has a
    bit in a pivot column of b, and they stay independent from b jointly.
    """
    z_red, _ = rref(z_basis)
    b_red, b_piv = rref(b_basis)
    for b in b_red:
        if solve_in_span(z_red, b, ncols) is None:
            raise ValueError("quotient by a subspace not contained in the ambient span")
    reduced = []
    for z in z_red:
        for c, r in zip(b_piv, b_red):
            if z >> c & 1:
                z ^= r
        if z:
            reduced.append(z)
    return rref(reduced)[0]


def quotient_dim(z_basis: Sequence[int], b_basis: Sequence[int], ncols: int) -> int:
    """Dimension of span(z)/span(b); see quotient_reps for the contract."""
    return len(quotient_reps(z_basis, b_basis, ncols))
