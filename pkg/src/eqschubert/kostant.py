"""Localizations of equivariant Schubert classes and the product oracle.

``billey_restriction`` evaluates sigma^v at the fixed point w as a sum over
reduced subwords of a reduced word of w.  ``classical_product_oracle``
recovers classical structure constants by solving the localization
equations triangularly; it is independent of every Pieri/Chevalley rule
in this package and serves as their reference.
"""
from functools import lru_cache

from .partitions import Partition, transpose
from .polyring import EquivPoly, QuantumClass, poly_ring
from .typeweyl import FlagShape, Perm

__all__ = [
    "grassmannian_reduced_word", "xi", "billey_restriction",
    "restrictions_at", "classical_product_oracle", "c_word", "c_perm",
]


def grassmannian_reduced_word(a):
    """Reduced word of phi_m^{-1}(a) read row by row from the transpose.

    >>> grassmannian_reduced_word(Partition((5, 4), 2, 7))
    [6, 4, 5, 3, 4, 2, 3, 1, 2]
    """
    m, n = a.m, a.nplus1 - 1
    at = transpose(a)
    word = []
    for k in range(n + 1 - m, 0, -1):
        top = m + k - 1
        word.extend(range(top - at[k] + 1, top + 1))
    return word


def _root_of(prefix, i):
    """prefix(alpha_i) for a permutation prefix with prefix(i) < prefix(i+1)."""
    a, b = prefix(i), prefix(i + 1)
    n = len(prefix) - 1
    if a > b:
        raise ValueError("word is not reduced")
    return tuple(1 if a <= j < b else 0 for j in range(1, n + 1))


def xi(m, p, a):
    """xi^{m,p}(a): sum over subwords of the reduced word of a spelling
    m-p+1, ..., m of the products of the associated roots."""
    if a.m != m:
        raise ValueError(f"{a} is not in a box with {m} rows")
    n = a.nplus1 - 1
    ring = poly_ring(n)
    if p < 0 or p > m:
        return EquivPoly.zero(ring)
    target = list(range(m - p + 1, m + 1))
    dp = [EquivPoly.one(ring)] + [EquivPoly.zero(ring)] * p
    prefix = Perm.identity(n + 1)
    for i in grassmannian_reduced_word(a):
        gamma = None
        for k in range(p - 1, -1, -1):
            if target[k] == i and dp[k]:
                if gamma is None:
                    gamma = EquivPoly.linear(ring, _root_of(prefix, i))
                dp[k + 1] = dp[k + 1] + dp[k] * gamma
        prefix = prefix.rmul_s(i)
    return dp[p]


def _word_roots(rs, word):
    roots = []
    prefix = rs.identity()
    n = rs.n
    for i in word:
        g = rs.act_root(prefix, tuple(int(k == i - 1) for k in range(n)))
        if any(c < 0 for c in g):
            raise ValueError(f"word {word} is not reduced")
        roots.append(g)
        prefix = prefix.rmul_s(i)
    return roots


def _subword_sums(rs, word):
    """{v: sigma^v|_w} for w spelled by the reduced ``word``."""
    ring = poly_ring(rs.n)
    roots = [EquivPoly.linear(ring, g) for g in _word_roots(rs, word)]
    states = {rs.identity(): EquivPoly.one(ring)}
    for i, gamma in zip(word, roots):
        new = dict(states)
        for v, f in states.items():
            if not v.has_descent(i):
                x = v.rmul_s(i)
                g = f * gamma
                new[x] = new[x] + g if x in new else g
        states = new
    return states


@lru_cache(maxsize=50000)
def restrictions_at(rs, w):
    """All non-zero localizations sigma^v|_w, v <= w, as a dict."""
    return _subword_sums(rs, rs.reduced_word(w))


def billey_restriction(rs, v, w, word=None):
    """sigma^v|_w; ``word`` may be any reduced word of w."""
    if word is None:
        states = restrictions_at(rs, w)
    else:
        if rs.from_word(word) != w:
            raise ValueError(f"{word} does not spell {w}")
        states = _subword_sums(rs, list(word))
    return states.get(v, EquivPoly.zero(poly_ring(rs.n)))


def c_word(r, p):
    """Reduced word of c[r,p] = s_{r-p+1} ... s_r."""
    return list(range(r - p + 1, r + 1))


def c_perm(r, p, size):
    return Perm.from_word(c_word(r, p), size)


def classical_product_oracle(space, u, v):
    """sigma^u o sigma^v in H_T(G/P) by triangular localization solve."""
    if not isinstance(space, FlagShape):
        raise TypeError("space must be a FlagShape")
    if not (space.is_min_rep(u) and space.is_min_rep(v)):
        raise ValueError("u and v must be minimal coset representatives")
    rs = space.rs
    zero_q = (0,) * space.k
    solved = []
    out = {}
    for x in space.elements():
        loc = restrictions_at(rs, x)
        fu, fv = loc.get(u), loc.get(v)
        num = fu * fv if (fu is not None and fv is not None) else None
        for w, c in solved:
            f = loc.get(w)
            if f is not None:
                num = -(c * f) if num is None else num - c * f
        if num is None or not num:
            continue
        c = num.divexact(loc[x])
        solved.append((x, c))
        out[(x, zero_q)] = c
    return QuantumClass(space, out, check=False)
