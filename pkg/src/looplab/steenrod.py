"""Finite windows of modules over the mod 2 squaring operations.

A module here is a labelled basis in every degree up to a cutoff plus
one bit matrix per (operation, degree) pair.  Truncation is tracked
honestly: a value that would land beyond the cutoff is not stored, the
drop is counted, and every checker reports how many of its instances
were skipped for that reason instead of quietly passing them.  The
checkers themselves are generic; they know nothing about where a
module came from, which is what lets one of them compare two modules
built from entirely different descriptions.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .gf2 import low_bit

__all__ = [
    "FiniteAModule",
    "check_instability",
    "check_cartan",
    "check_adem",
    "module_iso",
]

SqRule = Callable[[int, str], Iterable[tuple[str, int]]]
ProductRule = Callable[[str, str], Iterable[str]]


def _binom_odd(top: int, bottom: int) -> bool:
    """Whether a binomial coefficient is odd, by digit containment."""
    if bottom < 0 or bottom > top:
        return False
    return bottom & top == bottom


class FiniteAModule:
    """Labelled basis per degree with stored squaring matrices.

    elements gives (label, degree) pairs with globally unique labels;
    sq_rule(k, label) yields the (label, degree) summands of the k-th
    operation, which the constructor turns into matrices for every k up
    to k_store.  Summands beyond deg_max are dropped and counted in
    self.skipped.  An optional product maps two labels to the labels of
    their product, enabling the checks that need ring structure.
    """

    def __init__(
        self,
        deg_max: int,
        elements: Iterable[tuple[str, int]],
        sq_rule: SqRule,
        k_store: int,
        product: Optional[ProductRule] = None,
    ) -> None:
        self.deg_max = deg_max
        self.k_store = k_store
        self.product = product
        self.degree: dict[str, int] = {}
        self.basis: dict[int, list[str]] = {}
        for label, d in elements:
            if label in self.degree:
                raise ValueError(f"duplicate label {label!r}")
            if d > deg_max:
                raise ValueError(f"{label!r} enumerated beyond the cutoff")
            self.degree[label] = d
            self.basis.setdefault(d, []).append(label)
        self._pos = {label: k for d in self.basis for k, label in enumerate(self.basis[d])}
        self._value_cache: dict[tuple[int, str], frozenset[str]] = {}
        self.sq: dict[tuple[int, int], tuple[int, ...]] = {}
        self.skipped = 0
        for d in sorted(self.basis):
            for k in range(1, k_store + 1):
                rows = []
                for label in self.basis[d]:
                    vec = 0
                    dropped = False
                    for tgt, td in sq_rule(k, label):
                        if td != d + k:
                            raise ValueError(f"Sq^{k} {label} emitted degree {td}")
                        if td > deg_max:
                            dropped = True
                            continue
                        if self.degree.get(tgt) != td:
                            raise ValueError(f"Sq^{k} {label} hit unknown label {tgt!r}")
                        vec ^= 1 << self._pos[tgt]
                    if dropped:
                        self.skipped += 1
                    rows.append(vec)
                if any(rows) and d + k <= deg_max:
                    self.sq[(k, d)] = tuple(rows)

    def labels(self) -> list[tuple[str, int]]:
        return [(label, d) for d in sorted(self.basis) for label in self.basis[d]]

    def dims(self) -> dict[int, int]:
        return {d: len(self.basis[d]) for d in sorted(self.basis)}

    def sq_label(self, k: int, label: str) -> Optional[frozenset[str]]:
        """Value of the k-th operation on a basis label as a label set.

        Returns None when the value lives beyond the cutoff and is
        therefore unknowable from this window; k = 0 is the identity.
        """
        if k == 0:
            return frozenset({label})
        if k > self.k_store:
            raise ValueError(f"operations were only stored up to {self.k_store}")
        d = self.degree[label]
        if d + k > self.deg_max:
            return None
        cached = self._value_cache.get((k, label))
        if cached is not None:
            return cached
        rows = self.sq.get((k, d))
        out = []
        if rows is not None:
            vec = rows[self._pos[label]]
            tgt = self.basis.get(d + k, [])
            while vec:
                out.append(tgt[low_bit(vec)])
                vec &= vec - 1
        value = frozenset(out)
        self._value_cache[(k, label)] = value
        return value

    def sq_set(self, k: int, labels: Iterable[str]) -> Optional[frozenset[str]]:
        """Linear extension of sq_label; None if any summand is unknowable."""
        acc: set[str] = set()
        for label in labels:
            value = self.sq_label(k, label)
            if value is None:
                return None
            acc ^= value
        return frozenset(acc)

    def product_set(self, a: Iterable[str], b: Iterable[str]) -> frozenset[str]:
        if self.product is None:
            raise ValueError("module has no product")
        acc: set[str] = set()
        for la in a:
            for lb in b:
                for out in self.product(la, lb):
                    acc ^= {out}
        return frozenset(acc)


def _report(name: str, checked: int, skipped: int, failures: list[str]) -> dict:
    return {
        "check": name,
        "pass": not failures,
        "checked": checked,
        "skipped": skipped,
        "failures": failures,
    }


def check_instability(module: FiniteAModule, k_max: int) -> dict:
    """Operations above the degree vanish; the top one squares.

    The squaring half only runs when the module carries a product.
    """
    if k_max > module.k_store:
        raise ValueError(f"operations were only stored up to {module.k_store}")
    checked = skipped = 0
    failures = []
    for label, d in module.labels():
        for k in range(d + 1, k_max + 1):
            value = module.sq_label(k, label)
            if value is None:
                skipped += 1
            else:
                checked += 1
                if value:
                    failures.append(f"Sq^{k} {label} is nonzero above the degree")
        if module.product is not None and 1 <= d <= k_max:
            value = module.sq_label(d, label)
            if value is None:
                skipped += 1
            else:
                checked += 1
                if value != module.product_set([label], [label]):
                    failures.append(f"Sq^{d} {label} is not the square")
    return _report("instability", checked, skipped, failures)


def check_cartan(module: FiniteAModule, k_max: int) -> dict:
    """The operations are multiplicative in the convolution sense."""
    if module.product is None:
        raise ValueError("the multiplicativity check needs a product")
    if k_max > module.k_store:
        raise ValueError(f"operations were only stored up to {module.k_store}")
    labels = module.labels()
    checked = skipped = 0
    failures = []
    for ia, (la, da) in enumerate(labels):
        for lb, db in labels[ia:]:
            ab = module.product_set([la], [lb])
            for k in range(1, k_max + 1):
                if da + db + k > module.deg_max:
                    skipped += 1
                    continue
                checked += 1
                lhs = module.sq_set(k, ab)
                rhs: set[str] = set()
                for i in range(k + 1):
                    left = module.sq_label(i, la)
                    right = module.sq_label(k - i, lb)
                    rhs ^= module.product_set(left, right)
                if lhs != frozenset(rhs):
                    failures.append(f"Sq^{k} of {la}*{lb} breaks multiplicativity")
    return _report("cartan", checked, skipped, failures)


def check_adem(module: FiniteAModule, k_max: int) -> dict:
    """Inadmissible composites rewrite as their standard sums.

    Runs over a < 2b with both indices at most k_max, which needs the
    module to have stored operations up to 2 * k_max.
    """
    if 2 * k_max > module.k_store:
        raise ValueError("composites need operations stored up to twice the bound")
    checked = skipped = 0
    failures = []
    for a in range(1, k_max + 1):
        for b in range(1, k_max + 1):
            if a >= 2 * b:
                continue
            js = [j for j in range(a // 2 + 1) if _binom_odd(b - 1 - j, a - 2 * j)]
            for label, d in module.labels():
                if d + a + b > module.deg_max:
                    skipped += 1
                    continue
                checked += 1
                lhs = module.sq_set(a, module.sq_label(b, label))
                rhs: set[str] = set()
                for j in js:
                    rhs ^= module.sq_set(a + b - j, module.sq_label(j, label))
                if lhs != frozenset(rhs):
                    failures.append(f"Sq^{a} Sq^{b} on {label} breaks the rewrite rule")
    return _report("adem", checked, skipped, failures)


def module_iso(
    mod_a: FiniteAModule,
    mod_b: FiniteAModule,
    dictionary: dict[str, str],
    k_max: int,
) -> dict:
    """Degree preserving bijection commuting with the operations.

    The dictionary must cover the first module exactly and hit the
    second exactly once each; the operation squares are then compared
    through it, counting windows that fall off either cutoff.
    """
    checked = skipped = 0
    failures = []
    a_labels = {label for label, _ in mod_a.labels()}
    b_labels = {label for label, _ in mod_b.labels()}
    if set(dictionary) != a_labels:
        failures.append("dictionary does not cover the source basis exactly")
    values = [v for k, v in dictionary.items() if k in a_labels]
    if len(set(values)) != len(values) or set(values) != b_labels:
        failures.append("dictionary is not a bijection onto the target basis")
    for label in sorted(a_labels & set(dictionary)):
        da = mod_a.degree[label]
        image = dictionary[label]
        if image in mod_b.degree and mod_b.degree[image] != da:
            failures.append(f"{label} -> {image} changes degree")
    if failures:
        return _report("module_iso", checked, skipped, failures)
    if k_max > min(mod_a.k_store, mod_b.k_store):
        raise ValueError("operations were not stored far enough on both sides")
    horizon = min(mod_a.deg_max, mod_b.deg_max)
    for label, d in mod_a.labels():
        for k in range(1, k_max + 1):
            if d + k > horizon:
                skipped += 1
                continue
            checked += 1
            through = frozenset(dictionary[t] for t in mod_a.sq_label(k, label))
            direct = mod_b.sq_label(k, dictionary[label])
            if through != direct:
                failures.append(f"Sq^{k} does not commute with the dictionary on {label}")
    return _report("module_iso", checked, skipped, failures)
