"""The free graded-commutative algebra underlying one simplicial level.

Level q holds polynomial generators x, y_1 .. y_q together with their
exterior partners dx, dy_1 .. dy_q.  Everything is over GF(2): a form is
a finite set of monomials combined with XOR, graded commutativity needs
no signs, and every exterior generator squares to zero.  Degrees are
weighted by a grading spec (n, m); the polynomial ring itself is free,
truncation only ever appears in homology.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

__all__ = [
    "GradingSpec",
    "Mono",
    "Form",
    "mono_mul",
    "mono_degree",
    "mono_bigrading",
    "mono_str",
    "parse_mono",
    "parse_form",
    "derham_d",
    "internal_degree",
    "bigrading",
    "monomial_basis",
    "gen_x",
    "gen_dx",
    "gen_y",
    "gen_dy",
]


@dataclass(frozen=True)
class GradingSpec:
    """Degree weights: |x| = m and |y_j| = (n+1)m, with n >= 1, m >= 2."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 2:
            raise ValueError(f"grading spec needs n >= 1 and m >= 2, got {self}")


class Mono(NamedTuple):
    """One monomial: x exponent, dx flag, y exponents, dy flags.

    The level is implicit as len(y) == len(dy).  Flags are 0 or 1; a
    monomial never records a squared exterior generator, products that
    would need one vanish instead.
    """

    x: int
    dx: int
    y: tuple[int, ...]
    dy: tuple[int, ...]

    @property
    def level(self) -> int:
        return len(self.y)


def mono_mul(a: Mono, b: Mono) -> Optional[Mono]:
    """Product of two monomials, or None when an exterior square kills it."""
    if a.dx and b.dx:
        return None
    for s, t in zip(a.dy, b.dy):
        if s and t:
            return None
    return Mono(
        a.x + b.x,
        a.dx | b.dx,
        tuple(u + v for u, v in zip(a.y, b.y)),
        tuple(s | t for s, t in zip(a.dy, b.dy)),
    )


def mono_degree(spec: GradingSpec, mono: Mono) -> int:
    """Weighted internal degree of a monomial."""
    n, m = spec.n, spec.m
    return (
        m * mono.x
        + (m - 1) * mono.dx
        + (n + 1) * m * sum(mono.y)
        + ((n + 1) * m - 1) * sum(mono.dy)
    )


def mono_bigrading(n: int, mono: Mono) -> tuple[int, int]:
    """(word length, unweighted degree) pair; independent of m."""
    w = mono.dx + sum(mono.dy)
    p = 2 * mono.x + mono.dx + (2 * n + 2) * sum(mono.y) + (2 * n + 1) * sum(mono.dy)
    return w, p


def mono_str(mono: Mono) -> str:
    """Render as x^a*dx*y1^b*dy2 style text; the empty monomial is "1"."""
    parts = []
    if mono.x == 1:
        parts.append("x")
    elif mono.x:
        parts.append(f"x^{mono.x}")
    if mono.dx:
        parts.append("dx")
    for j, b in enumerate(mono.y, 1):
        if b == 1:
            parts.append(f"y{j}")
        elif b:
            parts.append(f"y{j}^{b}")
    for j, flag in enumerate(mono.dy, 1):
        if flag:
            parts.append(f"dy{j}")
    return "*".join(parts) or "1"


_FACTOR = re.compile(r"^(?:(1)|(x|y(\d+))(?:\^(\d+))?|(dx)|dy(\d+))$")


def parse_mono(text: str, level: int) -> Mono:
    """Parse mono_str output back; the level cannot be inferred, pass it.

    >>> parse_mono("x^2*dx*dy1*dy3", 3)
    Mono(x=2, dx=1, y=(0, 0, 0), dy=(1, 0, 1))
    """
    x, dx = 0, 0
    y = [0] * level
    dy = [0] * level
    for factor in text.split("*"):
        got = _FACTOR.match(factor.strip())
        if got is None:
            raise ValueError(f"cannot parse factor {factor!r}")
        one, base, y_idx, exp, dx_flag, dy_idx = got.groups()
        if one:
            continue
        if dx_flag:
            if dx:
                raise ValueError("repeated dx factor")
            dx = 1
        elif dy_idx is not None:
            j = int(dy_idx)
            if not 1 <= j <= level:
                raise ValueError(f"dy{j} does not exist at level {level}")
            if dy[j - 1]:
                raise ValueError(f"repeated dy{j} factor")
            dy[j - 1] = 1
        elif base == "x":
            x += int(exp) if exp else 1
        else:
            j = int(y_idx)
            if not 1 <= j <= level:
                raise ValueError(f"y{j} does not exist at level {level}")
            y[j - 1] += int(exp) if exp else 1
    return Mono(x, dx, tuple(y), tuple(dy))


@dataclass(frozen=True)
class Form:
    """A GF(2) sum of monomials at a fixed level.

    The term set is duplicate free by construction; an empty set is the
    zero form, which still remembers its level so that sums and products
    of forms can insist on matching levels.
    """

    level: int
    terms: frozenset[Mono]

    @staticmethod
    def zero(level: int) -> "Form":
        return Form(level, frozenset())

    @staticmethod
    def one(level: int) -> "Form":
        return Form(level, frozenset({Mono(0, 0, (0,) * level, (0,) * level)}))

    @staticmethod
    def from_monos(level: int, monos: Iterable[Mono]) -> "Form":
        """Build a form, cancelling duplicated monomials in pairs."""
        acc: set[Mono] = set()
        for mono in monos:
            if mono.level != level:
                raise ValueError("monomial level does not match form level")
            acc ^= {mono}
        return Form(level, frozenset(acc))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Form") -> "Form":
        if self.level != other.level:
            raise ValueError("cannot add forms at different levels")
        return Form(self.level, self.terms ^ other.terms)

    def __mul__(self, other: "Form") -> "Form":
        if self.level != other.level:
            raise ValueError("cannot multiply forms at different levels")
        acc: set[Mono] = set()
        for a in self.terms:
            for b in other.terms:
                p = mono_mul(a, b)
                if p is not None:
                    acc ^= {p}
        return Form(self.level, frozenset(acc))

    def __pow__(self, k: int) -> "Form":
        out = Form.one(self.level)
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self) -> list[Mono]:
        """Terms in the canonical order, lexicographic on (x, dx, y, dy)."""
        return sorted(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(mono_str(t) for t in self.sorted_terms())


def parse_form(text: str, level: int) -> Form:
    """Inverse of str(form); "0" gives the zero form at the level."""
    text = text.strip()
    if text == "0":
        return Form.zero(level)
    return Form.from_monos(level, (parse_mono(part, level) for part in text.split("+")))


def gen_x(level: int) -> Form:
    return Form(level, frozenset({Mono(1, 0, (0,) * level, (0,) * level)}))


def gen_dx(level: int) -> Form:
    return Form(level, frozenset({Mono(0, 1, (0,) * level, (0,) * level)}))


def gen_y(level: int, j: int) -> Form:
    if not 1 <= j <= level:
        raise ValueError(f"y{j} does not exist at level {level}")
    y = [0] * level
    y[j - 1] = 1
    return Form(level, frozenset({Mono(0, 0, tuple(y), (0,) * level)}))


def gen_dy(level: int, j: int) -> Form:
    if not 1 <= j <= level:
        raise ValueError(f"dy{j} does not exist at level {level}")
    dy = [0] * level
    dy[j - 1] = 1
    return Form(level, frozenset({Mono(0, 0, (0,) * level, tuple(dy))}))


def derham_d(form: Form) -> Form:
    """Differential sending x to dx and y_j to dy_j, extended by Leibniz.

    Over GF(2) only odd exponents contribute, and a factor that already
    carries its exterior partner contributes nothing.
    """
    acc: set[Mono] = set()
    for mono in form.terms:
        if mono.x % 2 and not mono.dx:
            acc ^= {Mono(mono.x - 1, 1, mono.y, mono.dy)}
        for j in range(mono.level):
            if mono.y[j] % 2 and not mono.dy[j]:
                y = list(mono.y)
                y[j] -= 1
                dy = list(mono.dy)
                dy[j] = 1
                acc ^= {Mono(mono.x, mono.dx, tuple(y), tuple(dy))}
    return Form(form.level, frozenset(acc))


def internal_degree(spec: GradingSpec, form: Form) -> Optional[int]:
    """Common internal degree of the terms; None for zero, error if mixed."""
    degrees = {mono_degree(spec, t) for t in form.terms}
    if not degrees:
        return None
    if len(degrees) > 1:
        raise ValueError(f"form is not homogeneous, degrees {sorted(degrees)}")
    return degrees.pop()


def bigrading(n: int, form: Form) -> Optional[tuple[int, int]]:
    """Common (w, p) of the terms; None for zero, error if mixed."""
    pairs = {mono_bigrading(n, t) for t in form.terms}
    if not pairs:
        return None
    if len(pairs) > 1:
        raise ValueError(f"form is not bihomogeneous, bidegrees {sorted(pairs)}")
    return pairs.pop()


def monomial_basis(q: int, spec: GradingSpec, t: int) -> list[Mono]:
    """All level q monomials of internal degree t, canonically ordered.

    Finite because every generator has positive degree.  This is the
    basis every chain-level computation slices against, so the order
    must never depend on anything but (q, spec, t).
    """
    n, m = spec.n, spec.m
    y_deg = (n + 1) * m
    out = []
    for dx in (0, 1):
        for dy_mask in range(1 << q):
            dy = tuple(dy_mask >> j & 1 for j in range(q))
            rest = t - (m - 1) * dx - (y_deg - 1) * sum(dy)
            if rest < 0:
                continue
            for y in _exponents(q, rest // y_deg):
                left = rest - y_deg * sum(y)
                if left % m:
                    continue
                out.append(Mono(left // m, dx, y, dy))
    out.sort()
    return out


def _exponents(q: int, total: int) -> Iterable[tuple[int, ...]]:
    """All q-tuples of nonnegative ints with sum at most total."""
    if q == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _exponents(q - 1, total - first):
            yield (first,) + rest
