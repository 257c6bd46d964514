"""The multigraded monomial algebra spanned by (labeled) admissible paths.

Basis elements of degree v are the labeled admissible paths of the word with
multidegree v.  The product of two basis elements is their pointwise minimum
when the supports are disjoint and the minimum is admissible for the summed
multidegree, and zero otherwise.  Zero is represented by ``None``.

Labels: the minimum agrees at n-1 with whichever factor has n-1 in its
support (at most one does), so the product takes that factor's label.  When
neither does, the product has f(n-1) = n-1 and the only label is 1 because
h_n = 1.  The source construction leaves this rule implicit.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian

from .cd import cd_words, coefficient, mdeg, unit_vector, word_from_mdeg
from .paths import (LabeledPath, descents, enumerate_weighted, is_admissible,
                    path_mdeg, support)

MAX_N = 8


class AlgebraError(ValueError):
    pass


def _add(v, w):
    return tuple(a + b for a, b in zip(v, w))


class MultiGradedAlgebra:
    def __init__(self, n: int, h=None, max_n: int = MAX_N):
        if n < 0:
            raise AlgebraError("n must be nonnegative")
        if n > max_n:
            raise AlgebraError(f"n={n} exceeds the limit {max_n}")
        h = tuple(int(x) for x in h) if h is not None else (1,) * (n + 1)
        if len(h) != n + 1:
            raise AlgebraError(f"h-vector of length {len(h)} for n={n}")
        if any(x < 0 for x in h):
            raise AlgebraError("h-vector entries must be nonnegative")
        if h[0] != 1 or h[n] != 1:
            raise AlgebraError("h-vector must have h_0 = h_n = 1")
        self.n = n
        self.h = h
        self.basis: dict[tuple[int, ...], list[LabeledPath]] = {
            mdeg(w): enumerate_weighted(w, h) for w in cd_words(n)}
        self._members = {b for elems in self.basis.values() for b in elems}

    def __repr__(self):
        return f"MultiGradedAlgebra(n={self.n}, h={self.h})"

    def __contains__(self, b) -> bool:
        return b in self._members

    def elements(self) -> list[LabeledPath]:
        return [b for v in sorted(self.basis) for b in self.basis[v]]

    def unit(self) -> LabeledPath:
        return LabeledPath(tuple(range(self.n + 1)), 1)

    def graded_dimension(self, v) -> int:
        v = tuple(v)
        if len(v) != self.n:
            raise AlgebraError(f"multidegree of length {len(v)} for n={self.n}")
        return len(self.basis.get(v, ()))

    def generators(self, i: int) -> list[LabeledPath]:
        """Basis of degree e_i."""
        return self.basis.get(unit_vector(self.n, i), [])

    def multiply(self, b1: LabeledPath, b2: LabeledPath) -> LabeledPath | None:
        if b1 not in self or b2 not in self:
            raise AlgebraError("operands must be basis elements of this algebra")
        return self._mul(b1, b2)

    def _mul(self, b1: LabeledPath, b2: LabeledPath) -> LabeledPath | None:
        f1, f2 = b1.path, b2.path
        v = _add(path_mdeg(f1), path_mdeg(f2))
        word = word_from_mdeg(v)
        if word is None:
            return None
        s1, s2 = support(f1), support(f2)
        if s1 & s2:
            return None
        g = tuple(min(a, b) for a, b in zip(f1, f2))
        if not is_admissible(g, word):
            return None
        last = self.n - 1
        if last in s1:
            label = b1.label
        elif last in s2:
            label = b2.label
        else:
            label = 1
        return LabeledPath(g, label)

    def factorize(self, b: LabeledPath) -> list[LabeledPath]:
        """Split ``b`` into degree-e_i generators, one per descent position."""
        if b not in self:
            raise AlgebraError("not a basis element of this algebra")
        f = b.path
        ls = descents(f)
        out = []
        for j, lj in enumerate(ls):
            stop = ls[j + 1] - 1 if j + 1 < len(ls) else self.n
            g = tuple(f[i] if lj <= i <= stop else i for i in range(self.n + 1))
            out.append(LabeledPath(g, b.label if j == len(ls) - 1 else 1))
        return out

    def product(self, factors) -> LabeledPath | None:
        acc = self.unit()
        for b in factors:
            acc = self.multiply(acc, b)
            if acc is None:
                return None
        return acc

    @cached_property
    def _by_support(self) -> dict[int, list[tuple[tuple[int, ...], list[LabeledPath]]]]:
        """Nonempty graded pieces grouped by descent bitmask."""
        out = {}
        for v, elems in self.basis.items():
            if elems:
                bits = sum(1 << i for i, x in enumerate(v) if x)
                out.setdefault(bits, []).append((v, elems))
        return out


@dataclass
class Report:
    title: str
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str, limit: int = 20):
        if len(self.failures) < limit:
            self.failures.append(msg)
        else:
            self.checks["suppressed failures"] = self.checks.get("suppressed failures", 0) + 1

    def format(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        lines += [f"  {k}: {v}" for k, v in self.checks.items()]
        lines += [f"  failure: {m}" for m in self.failures]
        return "\n".join(lines)


def _compatible_pairs(A: MultiGradedAlgebra):
    """Pairs of nonempty graded pieces whose descent sets are disjoint."""
    groups = A._by_support
    keys = sorted(groups)
    for k1 in keys:
        for k2 in keys:
            if k1 & k2 == 0:
                for v1, e1 in groups[k1]:
                    for v2, e2 in groups[k2]:
                        yield v1, e1, v2, e2


def verify_axioms(A: MultiGradedAlgebra) -> Report:
    """Exhaustive check of commutativity, associativity, unit law and closure.

    Pairs whose multidegrees overlap are zero by grading and are skipped; all
    other pairs and all triples with a 0-1 total degree are checked.
    """
    rep = Report(f"algebra axioms n={A.n} h={A.h}")
    table: dict[tuple[LabeledPath, LabeledPath], LabeledPath | None] = {}
    pairs = nonzero = 0
    for v1, e1, v2, e2 in _compatible_pairs(A):
        v = _add(v1, v2)
        target = set(A.basis.get(v, ()))
        for b1 in e1:
            for b2 in e2:
                p = A._mul(b1, b2)
                table[b1, b2] = p
                pairs += 1
                if p is not None:
                    nonzero += 1
                    if p not in target:
                        rep.fail(f"closure: {b1} * {b2} = {p} is not a basis element of degree {v}")
    for (b1, b2), p in table.items():
        if table.get((b2, b1), "missing") != p:
            rep.fail(f"commutativity: {b1} * {b2}")
    one = A.unit()
    if one not in A:
        rep.fail("unit is not a basis element")
    else:
        for b in A.elements():
            if table.get((one, b)) != b or table.get((b, one)) != b:
                rep.fail(f"unit law fails for {b}")
    triples = 0
    groups = A._by_support
    keys = sorted(groups)
    for k1 in keys:
        for k2 in keys:
            if k1 & k2:
                continue
            for k3 in keys:
                if (k1 | k2) & k3:
                    continue
                for _, e1 in groups[k1]:
                    for _, e2 in groups[k2]:
                        for _, e3 in groups[k3]:
                            for b1, b2, b3 in cartesian(e1, e2, e3):
                                triples += 1
                                left = table[b1, b2]
                                left = None if left is None else table.get((left, b3))
                                right = table[b2, b3]
                                right = None if right is None else table.get((b1, right))
                                if left != right:
                                    rep.fail(f"associativity: ({b1}, {b2}, {b3}) gives {left} vs {right}")
    rep.checks.update({
        "basis size": len(A._members),
        "nonzero graded pieces": sum(1 for e in A.basis.values() if e),
        "pairs checked": pairs,
        "nonzero products": nonzero,
        "triples checked": triples,
    })
    return rep


def verify_factorization(A: MultiGradedAlgebra) -> Report:
    """Every basis element is the product of exactly one tuple of generators.

    For each multidegree with descent positions l_1 < ... < l_m all products
    g_1 * ... * g_m with g_j of degree e_{l_j} are tallied; each basis element
    of that degree must be hit exactly once, and the hit must agree with
    :meth:`MultiGradedAlgebra.factorize`.
    """
    rep = Report(f"unique factorization n={A.n} h={A.h}")
    tuples_checked = 0
    for v, elems in sorted(A.basis.items()):
        ls = [i + 1 for i, x in enumerate(v) if x]
        partial: Counter = Counter({A.unit(): 1})
        witness = {A.unit(): ()}
        for l in ls:
            nxt: Counter = Counter()
            for p, cnt in partial.items():
                for g in A.generators(l):
                    tuples_checked += cnt
                    q = A._mul(p, g)
                    if q is not None:
                        nxt[q] += cnt
                        witness.setdefault(q, witness[p] + (g,))
            partial = nxt
        for b in elems:
            hits = partial.get(b, 0)
            if hits != 1:
                rep.fail(f"{b} is a product of {hits} generator tuples")
                continue
            fs = A.factorize(b)
            if sorted(fs) != sorted(witness[b]) or A.product(fs) != b:
                rep.fail(f"factorize({b}) = {[str(x) for x in fs]} does not match")
        stray = set(partial) - set(elems)
        if stray:
            rep.fail(f"products of degree {v} outside the basis: {sorted(map(str, stray))[:3]}")
    rep.checks.update({"generator tuples checked": tuples_checked})
    return rep


def dimension_table(A: MultiGradedAlgebra) -> list[tuple[str, int]]:
    return [(word_from_mdeg(v), len(e)) for v, e in sorted(
        A.basis.items(), key=lambda kv: word_from_mdeg(kv[0]))]


def compare_dimensions(A: MultiGradedAlgebra, psi) -> Report:
    """Graded dimensions against a cd-polynomial, over every 0-1 vector of length n."""
    rep = Report(f"graded dimensions vs cd-index n={A.n}")
    count = 0
    for bits in range(1 << A.n):
        v = tuple(bits >> i & 1 for i in range(A.n))
        count += 1
        dim, c = A.graded_dimension(v), coefficient(psi, v)
        if dim != c:
            rep.fail(f"degree {v}: dim {dim} != coefficient {c}")
    rep.checks["multidegrees compared"] = count
    return rep

