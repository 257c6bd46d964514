"""Simplicial complexes: face numbers, flag numbers, shellings.

Face numbers follow the fan convention: ``f[i]`` counts faces with i vertices
(cones of dimension i), so ``f[0] = 1`` for the empty face and a pure complex
of dimension n-1 has ``f = (f_0, ..., f_n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

from .poset import FlagVector, GradedPoset

SHELLING_BUDGET = 10**7


class SearchExhausted(RuntimeError):
    """A bounded search hit its budget before reaching a verdict."""


class SimplicialComplex:
    def __init__(self, facets):
        fs = {frozenset(f) for f in facets}
        for a in fs:
            for b in fs:
                if a < b:
                    raise ValueError(f"facet {sorted(a)} is contained in {sorted(b)}")
        self.facets: list[frozenset] = sorted(fs, key=lambda f: sorted(map(str, f)))
        if not self.facets:
            raise ValueError("complex needs at least one facet")

    def __repr__(self):
        return f"SimplicialComplex({len(self.facets)} facets, dim {self.dim})"

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.facets)

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    @property
    def n(self) -> int:
        """Facet size; the complex has dimension n - 1."""
        return max(len(f) for f in self.facets)

    @property
    def dim(self) -> int:
        return self.n - 1

    @cached_property
    def faces(self) -> frozenset[frozenset]:
        out = set()
        for f in self.facets:
            for r in range(len(f) + 1):
                out.update(frozenset(c) for c in combinations(f, r))
        return frozenset(out)

    def require_pure(self):
        if not self.is_pure:
            raise ValueError("complex is not pure")


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    K.require_pure()
    f = [0] * (K.n + 1)
    for face in K.faces:
        f[len(face)] += 1
    return tuple(f)


def h_vector(f) -> tuple[int, ...]:
    """Coefficients of sum_i f_i (t - 1)^(n - i) in increasing powers of t."""
    n = len(f) - 1
    h = [0] * (n + 1)
    for i, fi in enumerate(f):
        e = n - i
        for j in range(e + 1):
            h[j] += fi * comb(e, j) * (-1) ** (e - j)
    return tuple(h)


def f_from_h(h) -> tuple[int, ...]:
    """Inverse of :func:`h_vector`: f_i = sum_j h_j C(j, n - i)."""
    n = len(h) - 1
    return tuple(sum(hj * comb(j, n - i) for j, hj in enumerate(h)) for i in range(n + 1))


def g_vector(h) -> tuple[int, ...]:
    n = len(h) - 1
    return (1,) + tuple(h[i] - h[i - 1] for i in range(1, n // 2 + 1))


def flag_from_face_numbers(f) -> FlagVector:
    """f_S = f_{s_k} * prod_j C(s_{j+1}, s_j) for S = {s_1 < ... < s_k}.

    A chain of faces with sizes s_1 < ... < s_k is fixed by its top face and
    a chain of subsets inside it.
    """
    n = len(f) - 1
    counts = {}
    for mask in range(1 << n):
        S = [i + 1 for i in range(n) if mask >> i & 1]
        val = f[S[-1]] if S else 1
        for a, b in zip(S, S[1:]):
            val *= comb(b, a)
        if val:
            counts[mask] = val
    return FlagVector(n, counts)


def flag_from_f(K: SimplicialComplex) -> FlagVector:
    return flag_from_face_numbers(f_vector(K))


def face_poset(K: SimplicialComplex) -> GradedPoset:
    """Faces ordered by inclusion, empty face at the bottom and a formal top."""
    K.require_pure()
    faces = sorted(K.faces, key=lambda s: (len(s), sorted(map(str, s))))
    ids = {s: i for i, s in enumerate(faces)}
    top = len(faces)
    rank = {i: len(s) for s, i in ids.items()}
    rank[top] = K.n + 1
    covers = []
    for s, i in ids.items():
        if len(s) == K.n:
            covers.append((i, top))
        for v in s:
            covers.append((ids[s - {v}], i))
    return GradedPoset.from_covers(covers, rank)


def euler_check(K: SimplicialComplex) -> bool:
    """Sphere Euler characteristic plus the pseudomanifold condition on ridges."""
    if not K.is_pure:
        return False
    n = K.n
    f = f_vector(K)
    chi = sum((-1) ** (i - 1) * f[i] for i in range(1, n + 1))
    if chi != 1 + (-1) ** (n - 1):
        return False
    if n == 1:
        return True
    ridges: dict[frozenset, int] = {}
    for F in K.facets:
        for v in F:
            r = F - {v}
            ridges[r] = ridges.get(r, 0) + 1
    return all(c == 2 for c in ridges.values())


# shellings ---------------------------------------------------------------

@dataclass(frozen=True)
class Shelling:
    order: tuple[frozenset, ...]
    restriction_sizes: tuple[int, ...]

    @property
    def types(self) -> tuple[int, ...]:
        """k for each step after the first: the intersection is Pi_k x sigma_(n-k-1)."""
        return tuple(r - 1 for r in self.restriction_sizes[1:])


def find_shelling(K: SimplicialComplex, budget: int = SHELLING_BUDGET) -> Shelling | None:
    """Backtracking search for a shelling order of the facets.

    Facet F may follow the facets placed so far iff F meets every earlier
    facet G inside a ridge F - {v} that is already covered, i.e. some v in
    F - G has F - {v} inside an earlier facet.  The restriction of F is the
    set of such v.  Returns None when the search space is exhausted without
    success; raises :class:`SearchExhausted` when ``budget`` partial orders
    have been tried.
    """
    K.require_pure()
    facets = K.facets
    N = len(facets)
    ridge_of = [{F - {v}: v for v in F} for F in facets]
    # facets sharing a ridge, for the restriction computation
    neighbours = [[j for j in range(N) if j != i and len(facets[i] & facets[j]) == len(facets[i]) - 1]
                  for i in range(N)]
    nodes = 0
    placed: list[int] = []
    used = [False] * N
    sizes: list[int] = []

    def restriction(i: int) -> set | None:
        F = facets[i]
        R = {ridge_of[i][F & facets[j]] for j in neighbours[i] if used[j]}
        for j in placed:
            G = facets[j]
            if not (F - G) & R:
                return None
        return R

    def extend() -> bool:
        nonlocal nodes
        if len(placed) == N:
            return True
        cands = []
        for i in range(N):
            if not used[i]:
                R = restriction(i)
                if R is not None:
                    cands.append((len(R), i))
        # favour facets that close up the most ridges; keeps the search greedy-first
        cands.sort(key=lambda t: (-t[0], t[1]))
        for r, i in cands:
            nodes += 1
            if nodes > budget:
                raise SearchExhausted(f"shelling search exceeded {budget} partial orders")
            used[i] = True
            placed.append(i)
            sizes.append(r)
            if extend():
                return True
            used[i] = False
            placed.pop()
            sizes.pop()
        return False

    for first in range(N):
        nodes += 1
        if nodes > budget:
            raise SearchExhausted(f"shelling search exceeded {budget} partial orders")
        used[first] = True
        placed.append(first)
        sizes.append(0)
        if extend():
            return Shelling(tuple(facets[i] for i in placed), tuple(sizes))
        used[first] = False
        placed.pop()
        sizes.pop()
    return None


def h_from_shelling(types, n: int) -> tuple[int, ...]:
    """h_0 = 1 for the first facet and h_{k+1} = number of steps of type k."""
    h = [0] * (n + 1)
    h[0] = 1
    for k in types:
        if not 0 <= k < n:
            raise ValueError(f"intersection type {k} out of range for n={n}")
        h[k + 1] += 1
    return tuple(h)


# constructions and text format ---------------------------------------------

def simplex_boundary(m: int) -> SimplicialComplex:
    """Boundary of the simplex on m vertices (face poset B_m)."""
    if m < 2:
        raise ValueError("need at least 2 vertices")
    return SimplicialComplex(combinations(range(1, m + 1), m - 1))


def single_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex([range(1, n + 1)])


def bipyramid(k: int) -> SimplicialComplex:
    """Suspension of a k-gon; vertices 1..k on the equator and poles N, S."""
    if k < 3:
        raise ValueError("polygon needs at least 3 sides")
    ring = list(range(1, k + 1))
    return SimplicialComplex([{ring[i], ring[(i + 1) % k], pole}
                              for i in range(k) for pole in ("N", "S")])


def octahedron() -> SimplicialComplex:
    return bipyramid(4)


def icosahedron() -> SimplicialComplex:
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [(0, up[i], up[j]), (11, lo[i], lo[j]),
                  (up[i], up[j], lo[i]), (lo[i], lo[j], up[j])]
    return SimplicialComplex(faces)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Join with vertex sets made disjoint by tagging."""
    return SimplicialComplex([{(0, v) for v in F} | {(1, v) for v in G}
                              for F in K.facets for G in L.facets])


def parse_complex(text: str) -> SimplicialComplex:
    facets = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            facets.append(line.split())
    if not facets:
        raise ValueError("no facets in complex file")
    return SimplicialComplex(facets)


def format_complex(K: SimplicialComplex) -> str:
    return "".join(" ".join(sorted(map(str, F))) + "\n" for F in K.facets)
