"""Symbolic shelling calculus on products of simplex-boundary fans and cones.

Terms are ``Pi_k x sigma_l`` (kind SIGMA) and ``Pi_k x Pi_l`` (kind PI), both
of dimension k + l.  ``Pi_k`` alone is ``SIGMA(k, 0)``.  Operator words are
strings over ``C`` and ``B`` (B is the boundary operator) and act from the
right: the last character is applied first.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .cd import degree

SIGMA = "sigma"
PI = "pi"
MAX_TRACE_N = 12


class FanTerm(NamedTuple):
    kind: str
    k: int
    l: int

    @property
    def dim(self) -> int:
        return self.k + self.l

    def __str__(self):
        return f"Pi_{self.k} x {'sigma' if self.kind == SIGMA else 'Pi'}_{self.l}"


def pi(n: int) -> FanTerm:
    return FanTerm(SIGMA, n, 0)


FanSum = Counter  # FanTerm -> multiplicity


def boundary(s) -> FanSum:
    out = Counter()
    for t, m in _terms(s):
        if t.kind == SIGMA and t.l >= 1:
            out[FanTerm(PI, t.k, t.l - 1)] += m
    return out


def _c_choices(t: FanTerm):
    """(choice, resulting term) pairs of the C operation on one term."""
    if t.kind == SIGMA:
        for i in range(1, t.k + 1):
            yield i, FanTerm(SIGMA, i - 1, t.k + t.l - i)
    else:
        for i in range(t.k + 1):
            for j in range(t.l + 1):
                if (i, j) != (0, 0):
                    yield (i, j), FanTerm(SIGMA, i + j - 1, t.k + t.l - i - j)


def shell_C(s) -> FanSum:
    out = Counter()
    for t, m in _terms(s):
        if t.dim == 0:
            raise ValueError("C is undefined on 0-dimensional fans")
        for _, r in _c_choices(t):
            out[r] += m
    return out


def _terms(s):
    if isinstance(s, FanTerm):
        return [(s, 1)]
    return list(s.items())


# operator words ---------------------------------------------------------------

def validate_opword(w: str) -> str:
    if set(w) - {"C", "B"}:
        raise ValueError(f"operator word may only contain C and B: {w!r}")
    for pos, ch in enumerate(w):
        if ch == "B" and pos + 1 < len(w) and w[pos + 1] != "C":
            raise ValueError(f"B at position {pos} of {w!r} is neither last nor followed by C")
    return w


def opword_from_cd(word: str) -> str:
    degree(word)
    return "".join("C" if ch == "c" else "BC" for ch in word)


def cd_from_opword(w: str) -> tuple[str, bool]:
    """Inverse of :func:`opword_from_cd`; the flag says the word ends in a bare B."""
    validate_opword(w)
    tail = w.endswith("B")
    body = w[:-1] if tail else w
    return body.replace("BC", "d").replace("C", "c"), tail


def parse_opword(text: str) -> str:
    """Accept either an operator word (C/B) or a cd-word (c/d)."""
    if text and set(text) <= {"c", "d"}:
        return opword_from_cd(text)
    return validate_opword(text)


def apply_word(w: str, start) -> FanSum:
    validate_opword(w)
    s = Counter(dict(_terms(start)))
    for ch in reversed(w):
        s = boundary(s) if ch == "B" else shell_C(s)
    return s


def eval_word(w: str, start: FanTerm) -> int:
    """Number of 0-dimensional fans left after applying ``w`` to ``start``."""
    if len(w) != start.dim:
        raise ValueError(f"word length {len(w)} != dimension {start.dim}")
    return sum(m for t, m in apply_word(w, start).items() if t.dim == 0)


def eval_g_part(w: str, start: FanTerm) -> int:
    if not w.endswith("B"):
        raise ValueError("word must end in B")
    return eval_word(w, start)


# traces ---------------------------------------------------------------------

@dataclass(frozen=True)
class Branch:
    choices: tuple
    path: tuple[int, ...]
    terms: tuple[FanTerm, ...]

    def format(self) -> str:
        cs = " ".join(f"({c[0]},{c[1]})" if isinstance(c, tuple) else f"({c})"
                      for c in self.choices)
        return f"{cs or '-'} -> ({','.join(map(str, self.path))})"


def trace_eval(w: str, start: FanTerm, max_n: int = MAX_TRACE_N) -> list[Branch]:
    """Every branch of choices reaching a 0-dimensional fan, with its lattice path.

    Each fan in a branch carries a number: ``k`` for ``Pi_k x sigma_l``; for
    the target of a boundary step it is ``k + j`` where ``(i, j)`` is the next
    C choice (``k`` when the boundary is the last step).  Reading the numbers
    from the last fan back to ``start`` gives f(0), ..., f(n).
    """
    validate_opword(w)
    if len(w) != start.dim:
        raise ValueError(f"word length {len(w)} != dimension {start.dim}")
    if start.dim > max_n:
        raise ValueError(f"trace limited to dimension {max_n}")
    ops = w[::-1]
    out: list[Branch] = []

    def walk(pos, term, numbers, choices, terms):
        if pos == len(ops):
            if term.dim == 0:
                out.append(Branch(tuple(choices), tuple(reversed(numbers)), tuple(terms)))
            return
        if ops[pos] == "B":
            if term.kind != SIGMA or term.l == 0:
                return
            nxt = FanTerm(PI, term.k, term.l - 1)
            if pos + 1 == len(ops):
                walk(pos + 1, nxt, numbers + [term.k], choices, terms + [nxt])
                return
            # the number of the boundary fan depends on the following C choice
            for (i, j), r in _c_choices(nxt):
                walk(pos + 2, r, numbers + [term.k + j, i + j - 1],
                     choices + [(i, j)], terms + [nxt, r])
            return
        for c, r in _c_choices(term):
            number = r.k
            walk(pos + 1, r, numbers + [number], choices + [c], terms + [r])

    walk(0, start, [start.k], [], [start])
    out.sort(key=lambda b: (b.path, b.choices))
    return out


def parse_start(tokens) -> FanTerm:
    """``pi N``, ``pi K sigma L`` or ``pi K pi L``."""
    toks = [t.lower() for t in tokens]
    try:
        if len(toks) == 2 and toks[0] == "pi":
            return pi(int(toks[1]))
        if len(toks) == 4 and toks[0] == "pi" and toks[2] in ("sigma", "pi"):
            k, l = int(toks[1]), int(toks[3])
            if k < 0 or l < 0:
                raise ValueError
            return FanTerm(SIGMA if toks[2] == "sigma" else PI, k, l)
    except ValueError:
        pass
    raise ValueError(f"cannot parse start fan {' '.join(tokens)!r}")
