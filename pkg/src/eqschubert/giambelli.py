"""Determinantal (Giambelli) formulas on Grassmannians and the ring
relations of QH_T(Gr(m, n+1)).

Formal expressions are polynomials in symbols e_1..e_m with coefficients
in Z[t_1..t_{n+1}]; ``evaluate`` sends e_p to sigma^{1^p} and products to
quantum products.  Coefficients are carried in t and converted back to
simple roots at the end, which must succeed exactly.

The tau recursion is only compatible with the coordinates
alpha_i = t_{i+1} - t_i (the image of ``polyring.alpha_to_t`` under
t_j -> -t_{n+2-j}); with alpha_i = t_{n+2-i} - t_{n+1-i} already
H_2 != sigma^2 on P^2.  ``to_t``/``from_t`` implement the working choice.
"""
from functools import lru_cache

from .partitions import Partition, transpose
from .pieri import grassmann_pieri, grassmann_space
from .polyring import EquivPoly, QuantumClass, poly_ring

__all__ = [
    "FormalE", "tau_shift_e", "h_determinant", "h_shift", "giambelli_det",
    "evaluate", "evaluate_t", "giambelli_class", "gr_full_product", "ring_relation_check",
    "sigma", "to_t", "from_t",
]


def to_t(p, nplus1=None):
    """alpha_i -> t_{i+1} - t_i."""
    n = p.ring.nvars
    tr = poly_ring(n + 1 if nplus1 is None else nplus1, "t")
    images = []
    for i in range(1, n + 1):
        vec = [0] * tr.nvars
        vec[i] += 1
        vec[i - 1] -= 1
        images.append(EquivPoly.linear(tr, vec))
    return p.substitute(images, tr)


def from_t(p, n):
    """Inverse of ``to_t`` with t_1 = 0; ValueError off the image."""
    ar = poly_ring(n, "a")
    images = []
    for k in range(1, p.ring.nvars + 1):
        vec = [0] * n
        for j in range(1, k):
            vec[j - 1] += 1
        images.append(EquivPoly.linear(ar, vec))
    q = p.substitute(images, ar)
    if to_t(q, p.ring.nvars) != p:
        raise ValueError(f"{p} is not in the image of Z[alpha]")
    return q


class FormalE:
    """Sum of coeff(t) * e_{p_1} ... e_{p_r}; monomials are sorted tuples
    (descending), the empty tuple being 1."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, ring, c):
        return cls(ring, {(): c if isinstance(c, EquivPoly) else EquivPoly.const(ring, c)})

    @classmethod
    def e(cls, ring, p):
        return cls(ring, {(p,) if p else (): EquivPoly.one(ring)})

    def __add__(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t[k] + v if k in t else v
        return FormalE(self.ring, t)

    def __neg__(self):
        return FormalE(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, EquivPoly)):
            return FormalE(self.ring, {k: v * other for k, v in self.terms.items()})
        t = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = tuple(sorted(ka + kb, reverse=True))
                v = va * vb
                t[k] = t[k] + v if k in t else v
        return FormalE(self.ring, t)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, FormalE) and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda x: (len(x), x)):
            mono = "*".join(f"e{p}" for p in k) or "1"
            parts.append(f"({self.terms[k]})*{mono}")
        return " + ".join(parts)


def _t(ring, i):
    if 1 <= i <= ring.nvars:
        return EquivPoly.var(ring, i)
    return EquivPoly.zero(ring)


@lru_cache(maxsize=None)
def tau_shift_e(s, p, m, n):
    """tau^s e_p for Gr(m, n+1), s >= 0."""
    ring = poly_ring(n + 1, "t")
    if p < 0 or p > m:
        return FormalE(ring)
    if s == 0:
        return FormalE.e(ring, p)
    return tau_shift_e(s - 1, p, m, n) + tau_shift_e(s - 1, p - 1, m, n) * (
        _t(ring, s) - _t(ring, m - p + s + 1))


def _det(entries, k, ring):
    """Determinant of the k x k matrix entries(i, j) (1-based), expanded
    column by column over subsets of used rows."""
    if k == 0:
        return FormalE.const(ring, 1)
    layer = {0: FormalE.const(ring, 1)}
    for j in range(1, k + 1):
        nxt = {}
        for used, val in layer.items():
            for i in range(1, k + 1):
                bit = 1 << (i - 1)
                if used & bit:
                    continue
                ent = entries(i, j)
                if not ent:
                    continue
                sign = -1 if bin(used >> i).count("1") % 2 else 1
                term = val * ent * sign
                key = used | bit
                nxt[key] = nxt[key] + term if key in nxt else term
        layer = nxt
    return layer.get((1 << k) - 1, FormalE(ring))


@lru_cache(maxsize=None)
def h_determinant(k, m, n):
    """H_k = det(tau^{j-1} e_{1+j-i}), with H_0 = 1 and H_k = 0 for k < 0."""
    ring = poly_ring(n + 1, "t")
    if k < 0:
        return FormalE(ring)
    return _det(lambda i, j: tau_shift_e(j - 1, 1 + j - i, m, n), k, ring)


@lru_cache(maxsize=None)
def h_shift(s, j, m, n):
    """tau^{-s} H_j for s >= 0."""
    if s == 0:
        return h_determinant(j, m, n)
    ring = poly_ring(n + 1, "t")
    return h_shift(s - 1, j, m, n) + h_shift(s - 1, j - 1, m, n) * (
        _t(ring, j + m - s) - _t(ring, 1 - s))


@lru_cache(maxsize=None)
def giambelli_det(lam):
    """det(tau^{j-1} e_{lam^T_i + j - i}) of size n+1-m."""
    m, n = lam.m, lam.nplus1 - 1
    lt = transpose(lam)
    ring = poly_ring(n + 1, "t")
    return _det(lambda i, j: tau_shift_e(j - 1, lt[i] + j - i, m, n), n + 1 - m, ring)


def sigma(lam):
    """sigma^lam as a class on Gr(m, n+1)."""
    n = lam.nplus1 - 1
    return QuantumClass(grassmann_space(lam.m, n),
                        {(lam.to_perm(), (0,)): EquivPoly.one(poly_ring(n))})


def _apply_e(p, cls, m, n, classical):
    out = QuantumClass(cls.space, {})
    for (w, d), c in cls.items():
        prod = grassmann_pieri(m, n, p, Partition.from_perm(w, m))
        if classical:
            prod = prod.classical_limit()
        out = out + prod.scale(c, qshift=d)
    return out


@lru_cache(maxsize=None)
def _apply_monomial(mono, mu, classical):
    m, n = mu.m, mu.nplus1 - 1
    cls = sigma(mu)
    for p in mono:
        cls = _apply_e(p, cls, m, n, classical)
    return cls


def evaluate_t(fe, m, n, base=None, classical=False):
    """Like ``evaluate`` but keep the coefficients in Z[t]: {(w, d): poly}."""
    base = Partition.zero(m, n + 1) if base is None else base
    acc = {}
    for mono, coeff in fe.terms.items():
        cls = _apply_monomial(mono, base, classical)
        for key, c in cls.items():
            v = to_t(c, n + 1) * coeff
            acc[key] = acc[key] + v if key in acc else v
    return {k: v for k, v in acc.items() if v}


def evaluate(fe, m, n, base=None, classical=False):
    """Evaluate a formal expression times sigma^base (default the unit)."""
    acc = evaluate_t(fe, m, n, base, classical)
    return QuantumClass(grassmann_space(m, n), {k: from_t(v, n) for k, v in acc.items()})


def giambelli_class(lam, classical=False):
    return evaluate(giambelli_det(lam), lam.m, lam.nplus1 - 1, classical=classical)


@lru_cache(maxsize=None)
def gr_full_product(m, n, lam, mu):
    """sigma^lam * sigma^mu in QH_T(Gr(m, n+1)) via the Giambelli expansion of lam."""
    return evaluate(giambelli_det(lam), m, n, base=mu)


def product_of_classes(a, b, m, n):
    """Bilinear extension of ``gr_full_product``."""
    out = QuantumClass(grassmann_space(m, n), {})
    for (wa, da), ca in a.items():
        for (wb, db), cb in b.items():
            prod = gr_full_product(m, n, Partition.from_perm(wa, m), Partition.from_perm(wb, m))
            shift = tuple(x + y for x, y in zip(da, db))
            out = out + prod.scale(ca * cb, qshift=shift)
    return out


def ring_relation_check(m, n):
    """Check H_r = sigma^r (r <= n+1-m), H_r = 0 (n-m+2 <= r <= n),
    H_{n+1} = (-1)^{m-1} q, and the classical recursion for tau^{1-M} H.

    Returns a list of failure messages (empty when everything holds).
    """
    fails = []
    space = grassmann_space(m, n)
    ring = poly_ring(n)
    for r in range(1, n + 2):
        got = evaluate(h_determinant(r, m, n), m, n)
        if r <= n + 1 - m:
            want = sigma(Partition((r,) + (0,) * (m - 1), m, n + 1))
        elif r <= n:
            want = QuantumClass(space, {})
        else:
            want = QuantumClass(space, {(space.rs.identity(), (1,)):
                                        EquivPoly.const(ring, (-1) ** (m - 1))})
        if got != want:
            fails.append(f"H_{r} = {got}, expected {want}")
    for big_m in range(1, n + 2):
        total = {}
        for p in range(0, m + 1):
            h = evaluate_t(h_shift(big_m - 1, big_m - p, m, n), m, n, classical=True)
            for (w, _d), f in h.items():
                prod = grassmann_pieri(m, n, p, Partition.from_perm(w, m)).classical_limit()
                for key, c in prod.items():
                    v = to_t(c, n + 1) * f * (-1) ** p
                    total[key] = total[key] + v if key in total else v
        left = {k: v for k, v in total.items() if v}
        if left:
            fails.append(f"recursion at M={big_m} leaves {len(left)} terms")
    return fails

