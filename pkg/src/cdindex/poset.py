"""Finite bounded graded posets, chain counting and Moebius functions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class FlagVector:
    """Chain counts f_S keyed by the rank set S, stored as a bitmask.

    Bit ``i - 1`` of the mask stands for rank ``i``.  Missing masks count 0.
    """

    n: int
    counts: dict[int, int]

    def __getitem__(self, S) -> int:
        return self.counts.get(as_mask(S), 0)

    def __post_init__(self):
        if self.counts.get(0, 0) != 1:
            raise PosetError("f_empty must be 1")
        if any(v < 0 for v in self.counts.values()):
            raise PosetError("flag numbers must be nonnegative")
        if any(m >> self.n for m in self.counts):
            raise PosetError(f"rank set outside 1..{self.n}")


def as_mask(S) -> int:
    """Accept either a bitmask or an iterable of ranks in 1..n."""
    if isinstance(S, int):
        return S
    mask = 0
    for i in S:
        mask |= 1 << (i - 1)
    return mask


def mask_to_set(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True, eq=False)
class GradedPoset:
    """A bounded graded poset given by its cover relations and rank function.

    The poset has rank ``n + 1``: the bottom has rank 0 and the top rank
    ``n + 1``.  Gradedness is checked on construction.
    """

    elements: tuple[int, ...]
    covers: frozenset[tuple[int, int]]
    rank: dict[int, int] = field(repr=False)

    def __post_init__(self):
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise PosetError("duplicate element ids")
        if set(self.rank) != elems:
            raise PosetError("rank must be given for exactly the elements")
        if any(r < 0 for r in self.rank.values()):
            raise PosetError("ranks must be nonnegative")
        for a, b in self.covers:
            if a not in elems or b not in elems:
                raise PosetError(f"cover ({a}, {b}) mentions an unknown element")
            if self.rank[b] != self.rank[a] + 1:
                raise PosetError(f"cover ({a}, {b}) does not raise rank by one")
        bottoms = [x for x in self.elements if self.rank[x] == 0]
        if len(bottoms) != 1:
            raise PosetError("need a unique element of rank 0")
        top_rank = max(self.rank.values())
        tops = [x for x in self.elements if self.rank[x] == top_rank]
        if len(tops) != 1 or top_rank < 1:
            raise PosetError("need a unique top element of rank >= 1")
        # rank strictly increases along covers, so the digraph is acyclic; every
        # element must reach both ends via covers for all maximal chains to span
        for x in self.elements:
            if x != tops[0] and not self.upper_covers[x]:
                raise PosetError(f"element {x} is maximal but not the top")
            if x != bottoms[0] and not self.lower_covers[x]:
                raise PosetError(f"element {x} is minimal but not the bottom")

    @classmethod
    def from_covers(cls, covers, rank) -> GradedPoset:
        rank = dict(rank)
        return cls(tuple(sorted(rank)), frozenset(covers), rank)

    @property
    def n(self) -> int:
        return self.rank[self.top] - 1

    @cached_property
    def bottom(self) -> int:
        return next(x for x in self.elements if self.rank[x] == 0)

    @cached_property
    def top(self) -> int:
        r = max(self.rank.values())
        return next(x for x in self.elements if self.rank[x] == r)

    @cached_property
    def upper_covers(self) -> dict[int, list[int]]:
        up = {x: [] for x in self.elements}
        for a, b in self.covers:
            up[a].append(b)
        for v in up.values():
            v.sort()
        return up

    @cached_property
    def lower_covers(self) -> dict[int, list[int]]:
        down = {x: [] for x in self.elements}
        for a, b in self.covers:
            down[b].append(a)
        for v in down.values():
            v.sort()
        return down

    @cached_property
    def by_rank(self) -> list[list[int]]:
        levels = [[] for _ in range(self.n + 2)]
        for x in self.elements:
            levels[self.rank[x]].append(x)
        return levels

    @cached_property
    def _index(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def _up_bits(self) -> dict[int, int]:
        """Strict up-sets as bitsets over element positions (transitive closure)."""
        idx = self._index
        up = {}
        for level in reversed(self.by_rank):
            for x in level:
                bits = 0
                for y in self.upper_covers[x]:
                    bits |= up[y] | 1 << idx[y]
                up[x] = bits
        return up

    def strictly_above(self, x: int) -> list[int]:
        bits = self._up_bits[x]
        return [self.elements[i] for i in range(bits.bit_length()) if bits >> i & 1]

    def leq(self, x: int, y: int) -> bool:
        return x == y or bool(self._up_bits[x] >> self._index[y] & 1)

    def interval(self, x: int, y: int) -> list[int]:
        if not self.leq(x, y):
            raise PosetError(f"{x} is not below {y}")
        return [z for z in self.elements if self.leq(x, z) and self.leq(z, y)]


def build_boolean(m: int) -> GradedPoset:
    """Subsets of an m-element set ordered by inclusion; element ids are bitmasks."""
    if m < 1:
        raise ValueError("Boolean lattice needs m >= 1")
    rank = {s: s.bit_count() for s in range(1 << m)}
    covers = [(s, s | 1 << i) for s in range(1 << m) for i in range(m) if not s >> i & 1]
    return GradedPoset.from_covers(covers, rank)


def build_chain(length: int) -> GradedPoset:
    """The totally ordered poset 0 < 1 < ... < length."""
    return GradedPoset.from_covers([(i, i + 1) for i in range(length)],
                                   {i: i for i in range(length + 1)})


def flag_f_vector(P: GradedPoset) -> FlagVector:
    """Count chains 0 < x_1 < ... < x_m < 1 by rank set.

    Memoized depth-first walk from the top down: ``tails[x]`` maps a rank-set
    mask to the number of chains x < y_1 < ... < 1 using those ranks.
    """
    top = P.top
    tails: dict[int, Counter] = {top: Counter({0: 1})}
    for level in reversed(P.by_rank[:-1]):
        for x in level:
            acc = Counter()
            for y in P.strictly_above(x):
                if y == top:
                    acc[0] += 1
                    continue
                bit = 1 << (P.rank[y] - 1)
                for mask, c in tails[y].items():
                    acc[mask | bit] += c
            tails[x] = acc
    return FlagVector(P.n, dict(tails[P.bottom]))


def mobius(P: GradedPoset, x: int, y: int) -> int:
    if not P.leq(x, y):
        raise PosetError(f"{x} is not below {y}")
    return _mobius_from(P, x)[y]


def _mobius_from(P: GradedPoset, x: int) -> dict[int, int]:
    """mu(x, z) for every z >= x, filled in rank order."""
    mu = {x: 1}
    above = sorted(P.strictly_above(x), key=P.rank.__getitem__)
    for z in above:
        mu[z] = -sum(v for w, v in mu.items() if P.leq(w, z))
    return mu


def is_eulerian(P: GradedPoset) -> bool:
    for x in P.elements:
        rx = P.rank[x]
        for z, v in _mobius_from(P, x).items():
            if v != (-1) ** (P.rank[z] - rx):
                return False
    return True


# text format ---------------------------------------------------------------

def parse_poset(text: str) -> GradedPoset:
    """Read "rank <id> <r>" and "cover <id> <id>" lines; '#' starts a comment.

    Ids are arbitrary tokens; they are kept as integers when every one parses as such.
    """
    rank, covers = {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "rank" and len(parts) == 3:
                rank[parts[1]] = int(parts[2])
            elif parts[0] == "cover" and len(parts) == 3:
                covers.append((parts[1], parts[2]))
            else:
                raise ValueError
        except ValueError:
            raise PosetError(f"line {lineno}: cannot parse {raw!r}") from None
    ids = set(rank).union(*covers)
    if all(x.lstrip("-").isdigit() for x in ids):
        rank = {int(x): r for x, r in rank.items()}
        covers = [(int(a), int(b)) for a, b in covers]
    return GradedPoset.from_covers(covers, rank)


def format_poset(P: GradedPoset) -> str:
    lines = [f"rank {x} {P.rank[x]}" for x in P.elements]
    lines += [f"cover {a} {b}" for a, b in sorted(P.covers)]
    return "\n".join(lines) + "\n"
