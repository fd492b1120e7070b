"""Shuffle maps: the chain level product and the operation riding on it.

The product of a level p form and a level q form is a sum over all
(p, q) shuffles, each factor receiving the degeneracies named by the
other half of the shuffle.  Over GF(2) the shuffle signs disappear, so
everything below is literal summation.  The halved diagonal variant,
restricted to shuffles whose first half starts at 0, is the one
operation that does not vanish identically mod 2.

Alongside the product sit face-compatibility checks and two families
of membership arguments whose explicit certificates (a chain whose
faces are computed outright) are verified rather than trusted.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional

from .algebra import Form, GradingSpec, Mono
from .homology import is_cycle, is_normalized, normalized_basis
from .rng import SplitMix
from .simplicial import degeneracy, face

__all__ = [
    "shuffles",
    "degeneracy_chain",
    "shuffle_product",
    "delta_top",
    "m_form",
    "q_form",
    "ez_bottom_check",
    "ez_face_checks",
    "lemma_products_check",
    "lemma_squares_check",
    "run_trials",
]


def shuffles(p: int, q: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (p, q) shuffle pairs (mu, nu), in lex order on mu.

    mu takes p of the positions 0 .. p+q-1 and nu the rest, both
    strictly increasing.

    >>> list(shuffles(1, 1))
    [((0,), (1,)), ((1,), (0,))]
    >>> sum(1 for _ in shuffles(2, 2))
    6
    """
    positions = range(p + q)
    for mu in combinations(positions, p):
        chosen = set(mu)
        nu = tuple(k for k in positions if k not in chosen)
        yield mu, nu


def degeneracy_chain(indices: tuple[int, ...], form: Form) -> Form:
    """Compose degeneracies, lowest index applied first."""
    for i in indices:
        form = degeneracy(i, form)
    return form


def shuffle_product(a: Form, b: Form) -> Form:
    """Shuffle product of a level p and a level q form, landing at p+q.

    The level p factor receives the q complementary indices and the
    level q factor the p chosen ones; mod 2 the shuffle sign is gone.
    """
    p, q = a.level, b.level
    out = Form.zero(p + q)
    for mu, nu in shuffles(p, q):
        out = out + degeneracy_chain(nu, a) * degeneracy_chain(mu, b)
    return out


def delta_top(spec: GradingSpec, z: Form) -> Form:
    """The halved diagonal of a normalized cycle at level q, at level 2q.

    Summing s_nu(z) s_mu(z) over all (q, q) shuffles counts unordered
    pairs twice and dies mod 2; the surviving operation keeps only the
    shuffles with 0 in mu, of which there are an odd binomial number
    exactly when q is a power of two.  Defined for q at least 2 and
    only on normalized cycles, both checked.
    """
    q = z.level
    if q < 2:
        raise ValueError("the diagonal operation needs level at least 2")
    if not is_cycle(spec, z):
        raise ValueError("the diagonal operation is only defined on cycles")
    out = Form.zero(2 * q)
    for mu, nu in shuffles(q, q):
        if mu[0] == 0:
            out = out + degeneracy_chain(nu, z) * degeneracy_chain(mu, z)
    return out


def m_form(a: Form, b: Form) -> Form:
    """Symmetrized two-step degeneracy product, one level up."""
    if a.level != b.level or a.level < 1:
        raise ValueError("both factors must share a level of at least 1")
    return degeneracy(0, a) * degeneracy(1, b) + degeneracy(0, b) * degeneracy(1, a)


def q_form(a: Form) -> Form:
    """The quadratic companion of m_form; q(a+b) differs from q(a)+q(b) by m(a, b)."""
    if a.level < 1:
        raise ValueError("needs level at least 1")
    return degeneracy(0, a) * degeneracy(1, a)


def ez_bottom_check(spec: GradingSpec, a: Form, b: Form) -> bool:
    """Bottom face against the shuffle product of bottom faces.

    Factors at level 0 contribute no bottom term; over GF(2) the sign
    on the second summand is invisible.
    """
    p, q = a.level, b.level
    if p + q < 1:
        raise ValueError("needs a positive total level")
    lhs = face(spec.n, 0, shuffle_product(a, b))
    rhs = Form.zero(p + q - 1)
    if p:
        rhs = rhs + shuffle_product(face(spec.n, 0, a), b)
    if q:
        rhs = rhs + shuffle_product(a, face(spec.n, 0, b))
    return lhs == rhs


def ez_face_checks(
    spec: GradingSpec, a: Form, b: Form, i_max: Optional[int] = None
) -> list[tuple[int, str]]:
    """Higher faces of a shuffle product of sufficiently normalized factors.

    When both factors are killed by their faces 1 .. i (cut off at
    their own levels), face i of the product must vanish.  Returns one
    (i, verdict) per face, verdict "vacuous" when the hypothesis fails,
    so a caller feeding random forms can see how many checks bit.
    """
    p, q = a.level, b.level
    top = p + q if i_max is None else min(i_max, p + q)
    rho = shuffle_product(a, b)
    out = []
    for i in range(1, top + 1):
        hyp = all(not face(spec.n, t, a) for t in range(1, min(i, p) + 1)) and all(
            not face(spec.n, t, b) for t in range(1, min(i, q) + 1)
        )
        if not hyp:
            out.append((i, "vacuous"))
        else:
            out.append((i, "pass" if not face(spec.n, i, rho) else "fail"))
    return out


def _verdict(hypothesis: bool, holds: bool) -> str:
    if not hypothesis:
        return "vacuous"
    return "pass" if holds else "fail"


def lemma_products_check(
    spec: GradingSpec,
    a: Form,
    b: Form,
    c: Form,
    x: Optional[Form] = None,
) -> dict[str, str]:
    """Membership, cycle and boundary facts for s1 s0(c) m(a, b).

    a and b must be normalized at some level, c lives one level below,
    and the optional x one level above is a proposed chain with bottom
    face b.  The boundary branch verifies an explicit certificate: a
    level + 2 chain all of whose faces are computed and compared.
    """
    n_level = a.level
    if n_level < 1 or b.level != n_level or c.level != n_level - 1:
        raise ValueError("levels must be (k, k, k - 1) with k at least 1")
    if not is_normalized(spec.n, a) or not is_normalized(spec.n, b):
        raise ValueError("both main factors must be normalized")
    if x is not None:
        if x.level != n_level + 1 or not is_normalized(spec.n, x):
            raise ValueError("the chain certificate must be normalized one level up")

    elem = degeneracy_chain((0, 1), c) * m_form(a, b)
    membership = _verdict(
        True, all(not face(spec.n, i, elem) for i in range(1, n_level + 2))
    )

    d0a_c = face(spec.n, 0, a) * c
    d0b_c = face(spec.n, 0, b) * c
    cycle = _verdict(not d0a_c and not d0b_c, not face(spec.n, 0, elem))

    boundary = "vacuous"
    if x is not None and not d0a_c and b == face(spec.n, 0, x):
        chain = degeneracy_chain((0, 1, 2), c) * (
            degeneracy(2, degeneracy(1, a)) * degeneracy(0, x)
            + degeneracy(2, degeneracy(0, a)) * degeneracy(1, x)
            + degeneracy(1, degeneracy(0, a)) * degeneracy(2, x)
        )
        holds = face(spec.n, 0, chain) == elem and all(
            not face(spec.n, i, chain) for i in range(1, n_level + 3)
        )
        boundary = _verdict(True, holds)

    return {"membership": membership, "cycle": cycle, "boundary": boundary}


def lemma_squares_check(spec: GradingSpec, a: Form, b: Form, c: Form) -> dict[str, str]:
    """Face values of s0(c) q(a) and a boundary certificate for q of a face.

    a normalized at level k, b normalized at level k + 1, c unrestricted
    at level k.  The two bottom face values of s0(c) q(a) are identities
    and checked outright; the membership and cycle branches then follow
    when their products vanish, and the boundary branch verifies the
    explicit level k + 2 chain for s0(c) q(bottom face of b).
    """
    k = a.level
    if k < 1 or b.level != k + 1 or c.level != k:
        raise ValueError("levels must be (k, k + 1, k) with k at least 1")
    if not is_normalized(spec.n, a):
        raise ValueError("the squared factor must be normalized")
    if not is_normalized(spec.n, b):
        raise ValueError("the bounding factor must be normalized")

    elem = degeneracy(0, c) * q_form(a)
    caa = c * a * a
    d0_value = c * a * degeneracy(0, face(spec.n, 0, a))
    identities = (
        face(spec.n, 1, elem) == caa
        and face(spec.n, 0, elem) == d0_value
        and all(not face(spec.n, i, elem) for i in range(2, k + 2))
    )

    membership = _verdict(not caa, all(not face(spec.n, i, elem) for i in range(1, k + 2)))
    cycle = _verdict(not caa and not d0_value, not face(spec.n, 0, elem))

    s0c_bb = degeneracy(0, c) * b * b
    boundary = "vacuous"
    if not s0c_bb:
        target = degeneracy(0, c) * q_form(face(spec.n, 0, b))
        chain = degeneracy_chain((0, 1), c) * degeneracy(1, b) * degeneracy(2, b)
        holds = face(spec.n, 0, chain) == target and all(
            not face(spec.n, i, chain) for i in range(1, k + 3)
        )
        boundary = _verdict(True, holds)

    return {
        "identities": "pass" if identities else "fail",
        "membership": membership,
        "cycle": cycle,
        "boundary": boundary,
    }


def _random_form(rng: SplitMix, level: int) -> Form:
    monos = []
    for _ in range(1 + rng.below(3)):
        monos.append(
            Mono(
                rng.below(4),
                rng.bits(1),
                tuple(rng.below(2) for _ in range(level)),
                tuple(rng.bits(1) for _ in range(level)),
            )
        )
    return Form.from_monos(level, monos)


def _random_normalized(spec: GradingSpec, rng: SplitMix, level: int, t_hi: int) -> Form:
    t = rng.below(t_hi + 1)
    basis = normalized_basis(spec, level, t)
    out = Form.zero(level)
    if basis:
        mask = rng.bits(len(basis))
        for k, f in enumerate(basis):
            if mask >> k & 1:
                out = out + f
    return out


def _tally(report: dict, name: str, verdict: str) -> None:
    if verdict == "pass":
        report["passed"] += 1
    elif verdict == "vacuous":
        report["vacuous"] += 1
    else:
        report["failures"].append(name)


def run_trials(spec: GradingSpec, max_level: int, trials: int, seed: int) -> dict:
    """Randomized sweep over the product identities and the face lemmas.

    Fully determined by (spec, max_level, trials, seed); a failure entry
    names the trial and branch so the run can be replayed.  Conditional
    branches whose hypotheses never fired show up in the vacuous count,
    which callers should eyeball: a suite that is all vacuous checks
    nothing.
    """
    if max_level < 1:
        raise ValueError("needs at least level 1")
    rng = SplitMix(seed)
    t_hi = 2 * (spec.n + 1) * spec.m
    report = {"trials": trials, "passed": 0, "vacuous": 0, "failures": []}
    for trial in range(trials):
        tag = f"trial {trial}"

        p = rng.below(max_level + 1)
        q = 1 + rng.below(max_level)
        bottom_ok = ez_bottom_check(spec, _random_form(rng, p), _random_form(rng, q))
        _tally(report, f"{tag}: bottom face", "pass" if bottom_ok else "fail")

        a = _random_normalized(spec, rng, 1 + rng.below(max_level), t_hi)
        b = _random_normalized(spec, rng, 1 + rng.below(max_level), t_hi)
        for i, verdict in ez_face_checks(spec, a, b):
            _tally(report, f"{tag}: face {i} of product", verdict)

        k = 1 + rng.below(max_level)
        a = _random_normalized(spec, rng, k, t_hi)
        c = _random_form(rng, k - 1)
        x = _random_normalized(spec, rng, k + 1, t_hi)
        b = face(spec.n, 0, x) if rng.bits(1) else _random_normalized(spec, rng, k, t_hi)
        for branch, verdict in lemma_products_check(spec, a, b, c, x).items():
            _tally(report, f"{tag}: products {branch}", verdict)

        if max_level >= 2:
            k = 1 + rng.below(max_level - 1)
            a = _random_normalized(spec, rng, k, t_hi)
            b = _random_normalized(spec, rng, k + 1, t_hi)
            c = _random_form(rng, k)
            for branch, verdict in lemma_squares_check(spec, a, b, c).items():
                _tally(report, f"{tag}: squares {branch}", verdict)
    return report
