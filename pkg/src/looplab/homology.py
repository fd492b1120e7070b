"""Homology of the resolution, computed by brute force slice by slice.

A slice is the span of all level q monomials of one internal degree t,
optionally refined by the finer (w, p) grading.  Within a slice the
normalized subspace is cut out by the faces 1 .. q, the bottom face is
the differential, and homology is an exact quotient with canonical
representatives.  Nothing here knows any closed-form answer; the
closed forms live elsewhere and the two only ever meet in tests and in
the command line cross checks.

The module also carries a deliberately independent oracle: a four-track
complex small enough to differentiate by hand, whose homology must
agree with the brute force answer degree by degree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .algebra import (
    Form,
    GradingSpec,
    Mono,
    internal_degree,
    mono_bigrading,
    monomial_basis,
)
from .gf2 import (
    apply_row,
    intersect,
    left_kernel,
    quotient_reps,
    rank,
    rref,
    solve_in_span,
)
from .simplicial import face, mono_face

__all__ = [
    "SliceHomology",
    "normalized_basis",
    "homology_at",
    "homology_dim",
    "is_normalized",
    "is_cycle",
    "is_boundary",
    "class_of",
    "koszul_dim",
    "check_pi0",
    "homology_table",
    "table_tsv",
    "table_json",
]


@dataclass(frozen=True)
class SliceHomology:
    """Homology of one slice: dimension plus canonical representatives."""

    q: int
    t: int
    dim: int
    reps: tuple[Form, ...]


def _slice_basis(
    spec: GradingSpec,
    q: int,
    t: int,
    wp: Optional[tuple[int, int]],
    poly_only: bool,
) -> tuple[Mono, ...]:
    basis = monomial_basis(q, spec, t)
    if wp is not None:
        basis = [m for m in basis if mono_bigrading(spec.n, m) == wp]
    if poly_only:
        basis = [m for m in basis if not m.dx and not any(m.dy)]
    return tuple(basis)


def _face_rows(n: int, i: int, src: Sequence[Mono], tgt_index: dict[Mono, int]) -> list[int]:
    rows = []
    for mono in src:
        img = mono_face(n, i, mono)
        rows.append(0 if img is None else 1 << tgt_index[img])
    return rows


def _n_vectors(
    spec: GradingSpec,
    q: int,
    t: int,
    wp: Optional[tuple[int, int]],
    poly_only: bool,
) -> tuple[tuple[Mono, ...], list[int]]:
    """Slice basis plus vectors spanning the kernels of faces 1 .. q.

    Every face preserves degree, the (w, p) pair and polynomiality, so
    the filtered slice one level down really does hold all the images.
    """
    basis = _slice_basis(spec, q, t, wp, poly_only)
    vecs = [1 << k for k in range(len(basis))]
    if q:
        down = _slice_basis(spec, q - 1, t, wp, poly_only)
        down_index = {m: k for k, m in enumerate(down)}
        for i in range(1, q + 1):
            rows = _face_rows(spec.n, i, basis, down_index)
            vecs = intersect(vecs, left_kernel(rows, len(down)), len(basis))
    return basis, vecs


@lru_cache(maxsize=None)
def _pipeline(
    spec: GradingSpec,
    q: int,
    t: int,
    wp: Optional[tuple[int, int]],
    poly_only: bool,
):
    """Slice basis, normalized subspace, cycles, boundaries, representatives.

    All subspaces are bit-row bases over the slice basis.  The boundary
    space comes from the normalized level above, and quotient_reps
    raises if it ever escapes the cycle space, which would mean the
    face tables are inconsistent.
    """
    basis, n_basis = _n_vectors(spec, q, t, wp, poly_only)
    index = {m: k for k, m in enumerate(basis)}
    dim = len(basis)

    if q == 0:
        z_basis = list(n_basis)
    else:
        down = _slice_basis(spec, q - 1, t, wp, poly_only)
        down_index = {m: k for k, m in enumerate(down)}
        d0 = [_vec_image(spec.n, v, basis, down_index) for v in n_basis]
        z_basis = rref([apply_row(c, n_basis) for c in left_kernel(d0, len(down))])[0]

    up, up_n = _n_vectors(spec, q + 1, t, wp, poly_only)
    b_basis = rref([_vec_image(spec.n, v, up, index) for v in up_n])[0]

    reps = quotient_reps(z_basis, b_basis, dim)
    return basis, tuple(n_basis), tuple(z_basis), tuple(b_basis), tuple(reps)


def _vec_image(n: int, vec: int, basis: tuple[Mono, ...], tgt_index: dict[Mono, int]) -> int:
    out = 0
    v = vec
    while v:
        k = (v & -v).bit_length() - 1
        img = mono_face(n, 0, basis[k])
        if img is not None:
            out ^= 1 << tgt_index[img]
        v &= v - 1
    return out


def _to_vec(form: Form, index: dict[Mono, int]) -> int:
    vec = 0
    for mono in form.terms:
        if mono not in index:
            raise ValueError("form has a term outside the slice")
        vec |= 1 << index[mono]
    return vec


def _to_form(level: int, vec: int, basis: tuple[Mono, ...]) -> Form:
    monos = []
    while vec:
        k = (vec & -vec).bit_length() - 1
        monos.append(basis[k])
        vec &= vec - 1
    return Form.from_monos(level, monos)


def normalized_basis(spec: GradingSpec, q: int, t: int) -> list[Form]:
    """Basis of the normalized subspace of the (q, t) slice."""
    basis, n_basis, _, _, _ = _pipeline(spec, q, t, None, False)
    return [_to_form(q, v, basis) for v in n_basis]


def homology_at(
    spec: GradingSpec,
    q: int,
    t: int,
    wp: Optional[tuple[int, int]] = None,
) -> SliceHomology:
    """Homology of the (q, t) slice, optionally refined to one (w, p)."""
    basis, _, _, _, reps = _pipeline(spec, q, t, wp, False)
    forms = tuple(_to_form(q, v, basis) for v in reps)
    return SliceHomology(q, t, len(forms), forms)


def homology_dim(spec: GradingSpec, q: int, t: int) -> int:
    return homology_at(spec, q, t).dim


def is_normalized(n: int, form: Form) -> bool:
    """Whether every face above the bottom one kills the form."""
    return all(not face(n, i, form) for i in range(1, form.level + 1))


def is_cycle(spec: GradingSpec, form: Form) -> bool:
    """Whether the bottom face kills a normalized form.

    Raises on a form that is not normalized: asking whether such a form
    is a cycle is a sign the caller is off the normalized complex, and
    a plain False would bury that.
    """
    if not is_normalized(spec.n, form):
        raise ValueError("form is not normalized")
    if form.level == 0:
        return True
    return not face(spec.n, 0, form)


def _require_cycle(spec: GradingSpec, form: Form) -> tuple[int, int]:
    if not form:
        raise ValueError("the zero form has no slice; its class is zero everywhere")
    if not is_cycle(spec, form):
        raise ValueError("form is not a cycle")
    return form.level, internal_degree(spec, form)


def is_boundary(spec: GradingSpec, form: Form) -> bool:
    """Whether a normalized cycle bounds; the zero form trivially does."""
    if not form:
        return True
    q, t = _require_cycle(spec, form)
    basis, _, _, b_basis, _ = _pipeline(spec, q, t, None, False)
    index = {m: k for k, m in enumerate(basis)}
    return solve_in_span(b_basis, _to_vec(form, index), len(basis)) is not None


def class_of(spec: GradingSpec, form: Form) -> tuple[int, ...]:
    """Coordinates of a cycle against the canonical representatives.

    The order matches homology_at(spec, q, t).reps.  Requires a nonzero
    homogeneous normalized cycle.
    """
    q, t = _require_cycle(spec, form)
    basis, _, _, b_basis, reps = _pipeline(spec, q, t, None, False)
    index = {m: k for k, m in enumerate(basis)}
    coords = solve_in_span(
        list(b_basis) + list(reps), _to_vec(form, index), len(basis)
    )
    if coords is None:
        raise ValueError("cycle does not reduce against the slice homology")
    return tuple(coords[len(b_basis) :])


def _koszul_basis(spec: GradingSpec, h: int, t: int) -> list[tuple[int, int, int, int]]:
    """Oracle chain basis at homological degree h and internal degree t.

    A chain (e, i, a, d) stands for v^e g_i x^a dx^d where v kills the
    truncating power, g_i is the i-th divided power companion, and e + i
    is the homological degree.  At most four chains share an (h, t).
    """
    n, m = spec.n, spec.m
    out = []
    for e in (0, 1):
        i = h - e
        if i < 0:
            continue
        for d in (0, 1):
            rest = t - e * (n + 1) * m - i * ((n + 1) * m - 1) - d * (m - 1)
            if rest >= 0 and rest % m == 0:
                out.append((e, i, rest // m, d))
    return out


def koszul_boundary(spec: GradingSpec, chain: tuple[int, int, int, int]):
    """Oracle differential: v goes to the truncating power of x, and the
    divided power companion differentiates it, which dies for odd n."""
    n = spec.n
    e, i, a, d = chain
    out = []
    if e:
        out.append((0, i, a + n + 1, d))
    if n % 2 == 0 and i >= 1 and d == 0:
        out.append((e, i - 1, a + n, 1))
    return out


def _koszul_rows(spec: GradingSpec, src, tgt) -> list[int]:
    tgt_index = {c: k for k, c in enumerate(tgt)}
    rows = []
    for chain in src:
        vec = 0
        for img in koszul_boundary(spec, chain):
            vec ^= 1 << tgt_index[img]
        rows.append(vec)
    return rows


def koszul_dim(spec: GradingSpec, q: int, t: int) -> int:
    """Oracle homology dimension at homological degree q, degree t."""
    basis_q = _koszul_basis(spec, q, t)
    if not basis_q:
        return 0
    down = _koszul_basis(spec, q - 1, t) if q else []
    cycles = len(basis_q) - rank(_koszul_rows(spec, basis_q, down))
    up = _koszul_basis(spec, q + 1, t)
    return cycles - rank(_koszul_rows(spec, up, basis_q))


def check_pi0(spec: GradingSpec, max_level: int, max_degree: int) -> list[str]:
    """Connectivity check on the polynomial part of the resolution.

    The bottom homology must be one dimensional exactly at the degrees
    of the surviving powers of x and every homology between level 1 and
    max_level - 1 must vanish.  Returns failure lines, empty on pass.
    """
    n, m = spec.n, spec.m
    bad = []
    survivors = {a * m for a in range(n + 1)}
    for t in range(max_degree + 1):
        basis, _, z, b, reps = _pipeline(spec, 0, t, None, True)
        want = 1 if t in survivors else 0
        if len(reps) != want:
            bad.append(f"level 0 degree {t}: dim {len(reps)}, expected {want}")
        for q in range(1, max_level):
            _, _, _, _, reps_q = _pipeline(spec, q, t, None, True)
            if reps_q:
                bad.append(f"level {q} degree {t}: dim {len(reps_q)}, expected 0")
    return bad


def homology_table(spec: GradingSpec, max_q: int, max_t: int):
    """Rows (q, t, dim, representative strings) with dim > 0."""
    rows = []
    for q in range(max_q + 1):
        for t in range(max_t + 1):
            h = homology_at(spec, q, t)
            if h.dim:
                rows.append((q, t, h.dim, tuple(str(r) for r in h.reps)))
    return rows


def table_tsv(rows) -> str:
    lines = ["q\tt\tdim\trepresentatives"]
    for q, t, dim, reps in rows:
        lines.append(f"{q}\t{t}\t{dim}\t{'; '.join(reps)}")
    return "\n".join(lines) + "\n"


def table_json(rows) -> str:
    return json.dumps(
        [
            {"q": q, "t": t, "dim": dim, "representatives": list(reps)}
            for q, t, dim, reps in rows
        ],
        indent=2,
    )
