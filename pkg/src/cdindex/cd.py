"""The flag h-table, cd-words and extraction of the cd-index.

Words are plain strings over ``"c"`` and ``"d"`` with degree ``#c + 2 #d``.
Multidegrees are 0-1 tuples; positions are 1-based in the docs and 0-based in
the tuples.  A t-polynomial stores ``h_S`` under the bitmask of S, bit ``i-1``
standing for ``t_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .linalg import InconsistentSystem, solve_exact
from .poset import FlagVector

MAX_N = 14


class NotCdExpressible(ValueError):
    """The h-table is not in the span of the cd-word expansions."""


@dataclass(frozen=True)
class TPolynomial:
    n: int
    coeffs: dict[int, int]

    def __getitem__(self, mask: int) -> int:
        return self.coeffs.get(mask, 0)

    def __eq__(self, other):
        if not isinstance(other, TPolynomial):
            return NotImplemented
        return self.n == other.n and _nonzero(self.coeffs) == _nonzero(other.coeffs)

    def __add__(self, other: TPolynomial) -> TPolynomial:
        if self.n != other.n:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return TPolynomial(self.n, _nonzero(out))

    def scale(self, k: int) -> TPolynomial:
        return TPolynomial(self.n, _nonzero({m: k * c for m, c in self.coeffs.items()}))


def _nonzero(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


@dataclass(frozen=True)
class CdPolynomial:
    n: int
    coeffs: dict[str, int]

    def __post_init__(self):
        for w in self.coeffs:
            if degree(w) != self.n:
                raise ValueError(f"word {w!r} does not have degree {self.n}")

    def __getitem__(self, word: str) -> int:
        return self.coeffs.get(word, 0)

    def __eq__(self, other):
        if not isinstance(other, CdPolynomial):
            return NotImplemented
        return self.n == other.n and _nonzero(self.coeffs) == _nonzero(other.coeffs)

    def items(self):
        """(word, coefficient) pairs over all degree-n words in lexicographic order."""
        return [(w, self[w]) for w in cd_words(self.n)]

    def __str__(self):
        terms = []
        for w, c in self.items():
            if not c:
                continue
            mono = _pretty(w)
            terms.append(mono if c == 1 else f"{c}{mono}" if mono != "1" else str(c))
        return " + ".join(terms) if terms else "0"


def _pretty(w: str) -> str:
    if not w:
        return "1"
    out, i = [], 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return "".join(out)


def degree(word: str) -> int:
    if set(word) - {"c", "d"}:
        raise ValueError(f"not a cd-word: {word!r}")
    return len(word) + word.count("d")


@lru_cache(maxsize=None)
def cd_words(n: int) -> tuple[str, ...]:
    """All words of degree n, lexicographic with c < d."""
    if n < 0:
        return ()
    if n == 0:
        return ("",)
    return tuple(sorted(["c" + w for w in cd_words(n - 1)] + ["d" + w for w in cd_words(n - 2)]))


def mdeg(word: str) -> tuple[int, ...]:
    degree(word)
    out = []
    for ch in word:
        out += [0] if ch == "c" else [1, 0]
    return tuple(out)


def is_multidegree(v) -> bool:
    v = tuple(v)
    if any(x not in (0, 1) for x in v):
        return False
    if v and v[-1] == 1:
        return False
    return not any(a == b == 1 for a, b in zip(v, v[1:]))


def word_from_mdeg(v) -> str | None:
    v = tuple(v)
    if not is_multidegree(v):
        return None
    out, i = [], 0
    while i < len(v):
        if v[i]:
            out.append("d")
            i += 2
        else:
            out.append("c")
            i += 1
    return "".join(out)


def coefficient(psi: CdPolynomial, v) -> int:
    v = tuple(v)
    if len(v) != psi.n:
        raise ValueError(f"multidegree of length {len(v)} for degree {psi.n}")
    w = word_from_mdeg(v)
    return 0 if w is None else psi[w]


def unit_vector(n: int, i: int) -> tuple[int, ...]:
    """e_i for 1 <= i <= n."""
    return tuple(int(j == i - 1) for j in range(n))


def multidegrees(n: int) -> list[tuple[int, ...]]:
    return [mdeg(w) for w in cd_words(n)]


# t-polynomials ---------------------------------------------------------------

def h_from_flag(fv: FlagVector) -> TPolynomial:
    """Expand sum_T f_T prod_{i not in T} (t_i - 1) into t-monomials.

    t^S only occurs in the terms with T inside the complement of S, with sign
    (-1)^{n - |T| - |S|}.
    """
    n = fv.n
    full = (1 << n) - 1
    h = {}
    for S in range(full + 1):
        comp = full ^ S
        total, T = 0, comp
        while True:
            f = fv.counts.get(T, 0)
            if f:
                total += -f if (comp ^ T).bit_count() & 1 else f
            if T == 0:
                break
            T = (T - 1) & comp
        if total:
            h[S] = total
    return TPolynomial(n, h)


@lru_cache(maxsize=4096)
def _expand(word: str) -> tuple[tuple[int, int], ...]:
    factors = []
    pos = 0
    for ch in word:
        if ch == "c":
            factors.append((1 << pos, 0))  # t_p + 1
            pos += 1
        else:
            factors.append((1 << pos, 1 << (pos + 1)))  # t_p + t_{p+1}
            pos += 2
    terms = {}
    for choice in product(*factors):
        m = 0
        for bit in choice:
            m |= bit
        terms[m] = terms.get(m, 0) + 1
    return tuple(sorted(terms.items()))


def expand_cd_word(word: str) -> TPolynomial:
    return TPolynomial(degree(word), dict(_expand(word)))


def expand_cd(psi: CdPolynomial) -> TPolynomial:
    out: dict[int, int] = {}
    for w, c in psi.coeffs.items():
        for m, k in _expand(w):
            out[m] = out.get(m, 0) + c * k
    return TPolynomial(psi.n, _nonzero(out))


def cd_from_h(h: TPolynomial, max_n: int = MAX_N) -> CdPolynomial:
    """Solve for the cd-polynomial whose expansion is ``h``.

    The system has one equation per t-monomial (2^n rows) and one unknown per
    degree-n word.  Raises :class:`NotCdExpressible` when no integer solution
    exists.
    """
    n = h.n
    if n > max_n:
        raise ValueError(f"n={n} exceeds the limit {max_n}")
    words = cd_words(n)
    rows = [dict() for _ in range(1 << n)]
    for j, w in enumerate(words):
        for m, k in _expand(w):
            rows[m][j] = k
    rhs = [h[m] for m in range(1 << n)]
    try:
        x = solve_exact(rows, rhs, len(words))
    except InconsistentSystem as exc:
        raise NotCdExpressible(f"h-table is not a combination of cd-words ({exc})") from None
    if any(v.denominator != 1 for v in x):
        raise NotCdExpressible("cd coefficients are not integral")
    return CdPolynomial(n, {w: int(v) for w, v in zip(words, x) if v})


def cd_index_of_flag(fv: FlagVector, max_n: int = MAX_N) -> CdPolynomial:
    return cd_from_h(h_from_flag(fv), max_n=max_n)


# text format ---------------------------------------------------------------

def format_cd(psi: CdPolynomial, include_zero: bool = False) -> str:
    lines = []
    for w, c in sorted(psi.coeffs.items()) if not include_zero else psi.items():
        if c or include_zero:
            lines.append(f"{w or '1'} {c}")
    return "\n".join(lines) + "\n"


def parse_cd(text: str) -> CdPolynomial:
    coeffs: dict[str, int] = {}
    n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<word> <integer>'")
        word = "" if parts[0] == "1" else parts[0]
        try:
            k = degree(word)
            c = int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}") from None
        if n is None:
            n = k
        elif k != n:
            raise ValueError(f"line {lineno}: word {parts[0]} has degree {k}, expected {n}")
        if word in coeffs:
            raise ValueError(f"line {lineno}: duplicate word {parts[0]}")
        coeffs[word] = c
    if n is None:
        raise ValueError("empty cd-polynomial file")
    return CdPolynomial(n, _nonzero(coeffs))
