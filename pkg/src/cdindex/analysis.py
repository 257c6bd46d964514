"""Coefficient inequalities and colored-complex realizability of cd-polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from itertools import product as cartesian
from typing import NamedTuple

from .algebra import MultiGradedAlgebra
from .cd import CdPolynomial, coefficient, multidegrees
from .simplicial import SearchExhausted

MAX_VERTICES = 24
SEARCH_BUDGET = 10**6


class Violation(NamedTuple):
    v: tuple[int, ...]
    w: tuple[int, ...]
    lhs: int
    rhs: int

    def __str__(self):
        return f"Psi{_fmt(_add(self.v, self.w))} = {self.lhs} > {self.rhs} = Psi{_fmt(self.v)} * Psi{_fmt(self.w)}"


def _fmt(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _add(v, w):
    return tuple(a + b for a, b in zip(v, w))


def _indicator(n: int, S) -> tuple[int, ...]:
    return tuple(int(i + 1 in S) for i in range(n))


def _ones(v) -> tuple[int, ...]:
    return tuple(i + 1 for i, x in enumerate(v) if x)


def check_inequalities(psi: CdPolynomial) -> list[Violation]:
    """All splits u = v + w of a valid multidegree u with Psi_u > Psi_v * Psi_w.

    Any split of a 0-1 vector with no adjacent ones is itself a pair of such
    vectors, so only subsets of the support of u need to be visited.
    """
    n = psi.n
    out = []
    for u in multidegrees(n):
        top = coefficient(psi, u)
        ones = _ones(u)
        for r in range(len(ones) + 1):
            for part in combinations(ones, r):
                v = _indicator(n, part)
                w = tuple(a - b for a, b in zip(u, v))
                rhs = coefficient(psi, v) * coefficient(psi, w)
                if top > rhs:
                    out.append(Violation(v, w, top, rhs))
    return out


def check_product_inequality(psi: CdPolynomial) -> list[Violation]:
    """Psi_{e_i1 + ... + e_im} <= prod_j Psi_{e_ij}; reported against the first unit vector."""
    n = psi.n
    out = []
    for u in multidegrees(n):
        ones = _ones(u)
        if len(ones) < 2:
            continue
        rhs = 1
        for i in ones:
            rhs *= coefficient(psi, _indicator(n, (i,)))
        top = coefficient(psi, u)
        if top > rhs:
            first = _indicator(n, ones[:1])
            out.append(Violation(first, tuple(a - b for a, b in zip(u, first)), top, rhs))
    return out


# colored complexes ---------------------------------------------------------

Vertex = tuple[int, int]  # (color, index), index starting at 0


@dataclass(frozen=True)
class ColoredComplexWitness:
    n: int
    vertex_counts: dict[int, int]
    faces: tuple[tuple[Vertex, ...], ...]  # nonempty faces, vertices sorted by color

    def flag_numbers(self) -> dict[tuple[int, ...], int]:
        """Face counts per exact color set, the empty face included."""
        counts = {(): 1}
        for face in self.faces:
            key = tuple(c for c, _ in face)
            counts[key] = counts.get(key, 0) + 1
        return counts

    def format(self) -> str:
        lines = []
        for c in sorted(self.vertex_counts):
            names = " ".join(_vname((c, i)) for i in range(self.vertex_counts[c]))
            lines.append(f"color {c}: {names};" if names else f"color {c}: ;")
        for face in sorted(self.faces, key=lambda f: (len(f), f)):
            if len(face) > 1:
                lines.append(" ".join(_vname(v) for v in face))
        return "\n".join(lines) + "\n"


def _vname(v: Vertex) -> str:
    return f"v{v[0]}.{v[1] + 1}"


def color_sets(n: int) -> list[tuple[int, ...]]:
    """Color sets whose indicator is a valid multidegree, by size then lexicographically."""
    return sorted((_ones(v) for v in multidegrees(n)), key=lambda s: (len(s), s))


def verify_witness(W: ColoredComplexWitness, psi: CdPolynomial) -> bool:
    """Recount faces of ``W`` and compare with ``psi`` at every 0-1 vector."""
    n = psi.n
    if W.n != n:
        return False
    faceset = set(W.faces)
    for face in W.faces:
        colors = [c for c, _ in face]
        if len(set(colors)) != len(colors) or colors != sorted(colors):
            return False
        if any(not 0 <= i < W.vertex_counts.get(c, 0) for c, i in face):
            return False
        for r in range(1, len(face)):
            if any(sub not in faceset for sub in combinations(face, r)):
                return False
    for c, k in W.vertex_counts.items():
        if any(((c, i),) not in faceset for i in range(k)):
            return False
    counts = W.flag_numbers()
    for bits in range(1 << n):
        S = tuple(i + 1 for i in range(n) if bits >> i & 1)
        if counts.get(S, 0) != coefficient(psi, _indicator(n, S)):
            return False
    return sum(counts.values()) == sum(coefficient(psi, v) for v in multidegrees(n))


def realizable_as_colored_complex(psi: CdPolynomial, max_vertices: int = MAX_VERTICES,
                                  budget: int = SEARCH_BUDGET) -> ColoredComplexWitness | None:
    """Search for a colored complex whose exact-color-set face counts are ``psi``.

    Faces are chosen color set by color set (smaller sets first); within a
    color set they are picked in increasing lexicographic order, and a face
    may only introduce a vertex of color i not used by earlier faces if it is
    the lowest-indexed such vertex.  Every complex is isomorphic to one
    satisfying that rule, so exhausting the search proves that none exists.

    Returns a witness, or None when no complex exists; raises
    :class:`SearchExhausted` when the vertex cap or node budget is exceeded.
    """
    n = psi.n
    if any(c < 0 for c in psi.coeffs.values()):
        raise ValueError("realizability needs nonnegative coefficients")
    target = {S: coefficient(psi, _indicator(n, S)) for S in color_sets(n)}
    if target[()] != 1:
        return None
    nverts = {S[0]: c for S, c in target.items() if len(S) == 1}
    if sum(nverts.values()) > max_vertices:
        raise SearchExhausted(f"{sum(nverts.values())} vertices exceed the cap of {max_vertices}")
    levels = [S for S in target if len(S) >= 2]
    chosen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()  # (color set, indices)
    used = {c: 0 for c in nverts}
    nodes = 0

    def candidates(S):
        out = []
        for idx in cartesian(*(range(nverts[c]) for c in S)):
            # edges only need their vertices, which always exist
            if len(S) == 2 or all((S[:j] + S[j + 1:], idx[:j] + idx[j + 1:]) in chosen
                                  for j in range(len(S))):
                out.append(idx)
        return out

    def place(li: int) -> bool:
        if li == len(levels):
            return True
        S = levels[li]
        need = target[S]
        cands = candidates(S)
        if len(cands) < need:
            return False
        return pick(li, S, cands, 0, need)

    def pick(li, S, cands, start, need) -> bool:
        nonlocal nodes
        if need == 0:
            return place(li + 1)
        for at in range(start, len(cands) - need + 1):
            idx = cands[at]
            if any(i > used[c] for c, i in zip(S, idx)):
                continue
            nodes += 1
            if nodes > budget:
                raise SearchExhausted(f"realizability search exceeded {budget} nodes")
            saved = [used[c] for c in S]
            for c, i in zip(S, idx):
                used[c] = max(used[c], i + 1)
            chosen.add((S, idx))
            if pick(li, S, cands, at + 1, need - 1):
                return True
            chosen.discard((S, idx))
            for c, u in zip(S, saved):
                used[c] = u
        return False

    if not place(0):
        return None
    faces = [((c, i),) for c in sorted(nverts) for i in range(nverts[c])]
    faces += [tuple(zip(S, idx)) for S, idx in sorted(chosen, key=lambda t: (len(t[0]), t))]
    return ColoredComplexWitness(n, dict(nverts), tuple(faces))


def witness_from_algebra(A: MultiGradedAlgebra) -> ColoredComplexWitness:
    """Generators of degree e_i become vertices of color i; a set of them is a
    face when their product is nonzero."""
    n = A.n
    gens = {S[0]: A.generators(S[0]) for S in color_sets(n) if len(S) == 1}
    faces = []
    for S in color_sets(n):
        if not S:
            continue
        for idx in cartesian(*(range(len(gens[c])) for c in S)):
            if A.product(gens[c][i] for c, i in zip(S, idx)) is not None:
                faces.append(tuple(zip(S, idx)))
    return ColoredComplexWitness(n, {c: len(g) for c, g in gens.items()}, tuple(faces))


def load_counterexample() -> CdPolynomial:
    """The bundled degree-6 polynomial that passes the inequalities but is not realizable."""
    from importlib.resources import files

    from .cd import parse_cd
    return parse_cd(files("cdindex").joinpath("data/counterexample.cd").read_text())
