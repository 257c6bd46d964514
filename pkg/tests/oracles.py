"""Slow, independent reference computations used to freeze expected values.

Nothing here calls the code paths it is used to check.
"""

from itertools import combinations, product

import sympy


def reachability(P):
    """x -> set of elements >= x, by plain DFS over the cover pairs."""
    up = {x: set() for x in P.elements}
    for a, b in P.covers:
        up[a].add(b)
    out = {}
    for x in P.elements:
        seen, stack = {x}, [x]
        while stack:
            y = stack.pop()
            for z in up[y]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        out[x] = seen
    return out


def brute_chains(P):
    """rank-set (frozenset) -> number of chains, enumerating subsets of the proper part."""
    reach = reachability(P)
    bottom = next(x for x in P.elements if P.rank[x] == 0)
    top_rank = max(P.rank.values())
    inner = [x for x in P.elements if 0 < P.rank[x] < top_rank]
    counts = {}
    for size in range(top_rank):
        for combo in combinations(inner, size):
            combo = sorted(combo, key=lambda x: P.rank[x])
            if all(b in reach[a] and a != b for a, b in zip(combo, combo[1:])):
                key = frozenset(P.rank[x] for x in combo)
                counts[key] = counts.get(key, 0) + 1
    assert bottom in P.elements
    return counts


def hall_mobius(P, x, y):
    """Philip Hall: mu(x, y) = sum_k (-1)^k #(chains x = z_0 < ... < z_k = y)."""
    reach = reachability(P)
    if x == y:
        return 1
    inner = [z for z in P.elements if z in reach[x] and y in reach[z] and z not in (x, y)]
    total = 0
    for size in range(len(inner) + 1):
        for combo in combinations(inner, size):
            combo = sorted(combo, key=lambda z: P.rank[z])
            chain = [x, *combo, y]
            if all(b in reach[a] and a != b for a, b in zip(chain, chain[1:])):
                total += (-1) ** (len(chain) - 1)
    return total


def t_symbols(n):
    return sympy.symbols(f"t1:{n + 1}") if n else ()


def sympy_h(n, flag):
    """Expand sum_S f_S prod_{i not in S}(t_i - 1); flag maps frozensets of ranks to counts."""
    t = t_symbols(n)
    expr = 0
    for S, f in flag.items():
        term = f
        for i in range(1, n + 1):
            if i not in S:
                term *= t[i - 1] - 1
        expr += term
    return poly_to_table(n, sympy.expand(expr))


def poly_to_table(n, expr):
    """frozenset of t-indices -> coefficient."""
    t = t_symbols(n)
    if n == 0:
        return {frozenset(): int(expr)}
    poly = sympy.Poly(expr, *t)
    out = {}
    for exps, c in poly.terms():
        assert all(e <= 1 for e in exps)
        out[frozenset(i + 1 for i, e in enumerate(exps) if e)] = int(c)
    return {k: v for k, v in out.items() if v}


def sympy_word(word):
    n = len(word) + word.count("d")
    t = t_symbols(n)
    expr, pos = sympy.Integer(1), 0
    for ch in word:
        if ch == "c":
            expr *= t[pos] + 1
            pos += 1
        else:
            expr *= t[pos] + t[pos + 1]
            pos += 2
    return poly_to_table(n, sympy.expand(expr))


def words_of_degree(n):
    if n == 0:
        return [""]
    if n < 0:
        return []
    return sorted(["c" + w for w in words_of_degree(n - 1)] + ["d" + w for w in words_of_degree(n - 2)])


def sympy_cd(n, htable):
    """Solve for cd coefficients with sympy's linear solver."""
    words = words_of_degree(n)
    xs = sympy.symbols(f"x0:{len(words)}")
    tables = [sympy_word(w) for w in words]
    eqs = []
    for bits in range(1 << n):
        S = frozenset(i + 1 for i in range(n) if bits >> i & 1)
        eqs.append(sum(x * tb.get(S, 0) for x, tb in zip(xs, tables)) - htable.get(S, 0))
    sol = sympy.linsolve(eqs, *xs)
    if not sol:
        return None
    (vals,) = sol
    return {w: int(v) for w, v in zip(words, vals) if v != 0}


def brute_admissible(word):
    """Filter every sequence 0 <= f(i) <= i against the four conditions."""
    v = []
    for ch in word:
        v += [0] if ch == "c" else [1, 0]
    n = len(v)
    out = []
    for mid in product(*(range(i + 1) for i in range(1, n))):
        f = (0, *mid, n) if n else (0,)
        ok = True
        for i in range(1, n + 1):
            if v[i - 1] == 0 and not f[i - 1] < f[i]:
                ok = False
            if v[i - 1] == 1 and not f[i - 1] >= f[i]:
                ok = False
            if v[i - 1] == 1 and i > 1 and f[i - 1] - f[i] > f[i - 2] + 1:
                ok = False
        if ok:
            out.append(f)
    return out


def colored_complex_exists(n, table):
    """Existence of a colored complex by plain enumeration of face subsets, no symmetry breaking.

    ``table`` maps color tuples (sorted, no adjacent colors, max < n) to counts.
    """
    sets = sorted((S for S in table if len(S) >= 2), key=lambda S: (len(S), S))
    nv = {S[0]: table[S] for S in table if len(S) == 1}

    def rec(k, chosen):
        if k == len(sets):
            return True
        S = sets[k]
        cands = [idx for idx in product(*(range(nv[c]) for c in S))
                 if all((S[:j] + S[j + 1:], idx[:j] + idx[j + 1:]) in chosen or len(S) == 2
                        for j in range(len(S)))]
        for pick in combinations(cands, table[S]):
            if rec(k + 1, chosen | {(S, idx) for idx in pick}):
                return True
        return False

    return table.get((), 0) == 1 and rec(0, frozenset())
