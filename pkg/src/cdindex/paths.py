"""Admissible lattice paths for cd-words, plain and h-weighted."""

from __future__ import annotations

from dataclasses import dataclass

from .cd import degree, mdeg

Path = tuple[int, ...]


@dataclass(frozen=True, order=True)
class LabeledPath:
    path: Path
    label: int = 1

    @property
    def n(self) -> int:
        return len(self.path) - 1

    def __str__(self):
        return f"{format_path(self.path)}#{self.label}"


def check_admissible(f, word: str) -> str | None:
    """Name of the first violated condition, or None when ``f`` is admissible."""
    f = tuple(f)
    v = mdeg(word)
    n = len(v)
    if len(f) != n + 1:
        raise ValueError(f"path has {len(f)} values, word {word!r} needs {n + 1}")
    if f[0] != 0 or f[n] != n or any(not 0 <= f[i] <= i for i in range(1, n)):
        return "range"
    for i in range(1, n + 1):
        if v[i - 1] == 0:
            if not f[i - 1] < f[i]:
                return "strict ascent"
        else:
            if not f[i - 1] >= f[i]:
                return "weak descent"
            if i > 1 and f[i - 1] - f[i] > f[i - 2] + 1:
                return "bound on descent"
    return None


def is_admissible(f, word: str) -> bool:
    return check_admissible(f, word) is None


def enumerate_admissible(word: str) -> list[Path]:
    """All admissible functions for ``word`` in lexicographic order.

    Depth-first over f(1), ..., f(n-1); each branch is pruned by the local
    conditions as soon as f(i) is placed, so no post-filtering is needed.
    """
    v = mdeg(word)
    n = len(v)
    if n == 0:
        return [(0,)]
    out: list[Path] = []
    f = [0] * (n + 1)
    f[n] = n

    def step_ok(i: int) -> bool:
        if v[i - 1] == 0:
            return f[i - 1] < f[i]
        if f[i - 1] < f[i]:
            return False
        return i == 1 or f[i - 1] - f[i] <= f[i - 2] + 1

    def extend(i: int):
        if i == n:
            if step_ok(n):
                out.append(tuple(f))
            return
        lo, hi = (f[i - 1] + 1, i) if v[i - 1] == 0 else (0, min(f[i - 1], i))
        for x in range(lo, hi + 1):
            f[i] = x
            if step_ok(i):
                extend(i + 1)

    extend(1)
    return out


def _check_h(h, n: int) -> tuple[int, ...]:
    h = tuple(int(x) for x in h)
    if len(h) != n + 1:
        raise ValueError(f"h-vector of length {len(h)} for degree {n}")
    if any(x < 0 for x in h):
        raise ValueError("h-vector entries must be nonnegative")
    return h


def label_count(f: Path, h) -> int:
    """Number of parallel last edges available to ``f``: h_{f(n-1)+1}."""
    n = len(f) - 1
    if n == 0:
        return 1
    return h[f[n - 1] + 1]


def enumerate_weighted(word: str, h) -> list[LabeledPath]:
    h = _check_h(h, degree(word))
    return [LabeledPath(f, k) for f in enumerate_admissible(word)
            for k in range(1, label_count(f, h) + 1)]


def count_weighted(word: str, h) -> int:
    h = _check_h(h, degree(word))
    return sum(label_count(f, h) for f in enumerate_admissible(word))


def support(f) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(f) if x < i)


def descents(f) -> tuple[int, ...]:
    """Positions i in 1..n with f(i-1) >= f(i); the 1-entries of the multidegree."""
    return tuple(i for i in range(1, len(f)) if f[i - 1] >= f[i])


def path_mdeg(f) -> tuple[int, ...]:
    d = set(descents(f))
    return tuple(int(i in d) for i in range(1, len(f)))


def format_path(f) -> str:
    return "(" + ",".join(str(x) for x in f) + ")"


def parse_path(text: str) -> Path | LabeledPath:
    text = text.strip()
    label = None
    if "#" in text:
        text, lab = text.rsplit("#", 1)
        label = int(lab)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"path must be parenthesized: {text!r}")
    values = tuple(int(x) for x in text[1:-1].split(","))
    return values if label is None else LabeledPath(values, label)
