"""Equivariant quantum Pieri rules for type-A partial flag varieties.

Special classes are sigma^{c[n_i,p]} with c[r,p] = s_{r-p+1} ... s_r.
Quantum degrees are vectors d = (d_1, ..., d_k) for q_1^{d_1} ... q_k^{d_k}.
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache

from .kostant import billey_restriction, c_perm, xi
from .partitions import (Partition, associated_partition, vertical_strip_extensions)
from .polyring import EquivPoly, QuantumClass, poly_ring
from .structure import check_positivity
from .typeweyl import FlagShape, Perm, build_type_a

__all__ = [
    "FlagShape", "PieriDegree", "special_superior_set", "superior_cycles",
    "mu_partition", "robinson_pieri", "classical_pieri_gp", "pieri_degrees",
    "tau_phi", "tau_phi_words", "per_membership", "per_membership_by_length",
    "eq_quantum_pieri", "grassmann_pieri", "top_row_products", "grassmann_space",
]


def grassmann_space(m, n):
    return FlagShape.type_a(n, (m,))


# special superior sets

def _single_cycles(u, j):
    """Cycles (r i_p ... i_1) with i's <= j < r, u(r) > u(i_1) > ... > u(i_p)
    and l(u zeta) = l(u) + p.  Each entry is (r, (i_1, ..., i_p))."""
    N = len(u)
    lu = u.length
    out = []
    for r in range(j + 1, N + 1):
        below = [i for i in range(1, j + 1) if u(i) < u(r)]
        for size in range(1, len(below) + 1):
            for chosen in itertools.combinations(below, size):
                idx = tuple(sorted(chosen, key=lambda i: -u(i)))
                w = _apply_cycle(u, r, idx)
                if w.length == lu + size:
                    out.append((r, idx))
    return out


def _apply_cycle(u, r, idx):
    w = list(u.w)
    w[idx[0] - 1] = u(r)
    for a, b in zip(idx[1:], idx):
        w[a - 1] = u(b)
    w[r - 1] = u(idx[-1])
    return Perm(w)


def superior_cycles(u, j):
    """{w: cycles} over all w special j-superior to u (any degree)."""
    singles = _single_cycles(u, j)
    lu = u.length
    found = {u: ()}

    def rec(start, used, w, cycles, deg):
        for t in range(start, len(singles)):
            r, idx = singles[t]
            support = {r, *idx}
            if support & used:
                continue
            xs = list(w.w)
            xs[idx[0] - 1] = u(r)
            for a, b in zip(idx[1:], idx):
                xs[a - 1] = u(b)
            xs[r - 1] = u(idx[-1])
            x = Perm(xs)
            d = deg + len(idx)
            cyc = cycles + ((r, idx),)
            if x.length == lu + d:
                found[x] = cyc
            rec(t + 1, used | support, x, cyc, d)

    rec(0, frozenset(), u, (), 0)
    return found


def special_superior_set(u, j, p):
    """S_{j,p}(u): all w = u zeta_1 ... zeta_d special j-superior of degree p."""
    lu = u.length
    return sorted((w for w in superior_cycles(u, j) if w.length - lu == p),
                  key=lambda w: w.sort_key())


def mu_partition(w, u, j):
    """mu_{w,u,j}: the values u(1..j) left in place, as a partition.

    >>> mu_partition(Perm.parse("[4725136]"), Perm.parse("[3715246]"), 4).parts
    (5, 4)
    """
    support = {i for i in range(1, len(u) + 1) if w(i) != u(i)}
    vals = sorted((u(i) for i in range(1, j + 1) if i not in support), reverse=True)
    k = len(vals)
    return Partition(tuple(v - (k + 1 - t) for t, v in enumerate(vals, 1)), k, len(u))


# Robinson's full-flag rule

def _moved_perm(w, u, r, j):
    idx = [i for i in range(1, r + 1) if w(i) != u(i)]
    if len(idx) != j:
        raise ValueError(f"expected {j} cycle indices up to {r}, found {idx}")
    rest = [u(i) for i in range(1, r + 1) if i not in set(idx)]
    moved = [u(i) for i in idx]
    return Perm(rest + moved + list(u.w[r:]))


def robinson_pieri(n, r, p, u):
    """sigma^{c[r,p]} o sigma^u in H_T(Fl_{n+1}) by Robinson's rule."""
    space = FlagShape.full(build_type_a(n))
    rs = space.rs
    out = {}
    zero = (0,) * n
    for j in range(0, p + 1):
        for w in special_superior_set(u, r, j):
            v = _moved_perm(w, u, r, j)
            c = billey_restriction(rs, c_perm(r - j, p - j, n + 1), v)
            if c:
                out[(w, zero)] = c
    res = QuantumClass(space, out)
    check_positivity(res, p, u.length)
    return res


def classical_pieri_gp(space, i, p, u):
    """sigma^{c[n_i,p]} o sigma^u in H_T(G/P); i is the step index."""
    ni = _check_args(space, i, p, u)
    out = {}
    zero = (0,) * space.k
    for j in range(0, p + 1):
        for w in special_superior_set(u, ni, j):
            if not space.is_min_rep(w):
                raise AssertionError(f"{w} left W^P")
            mu = mu_partition(w, u, ni)
            c = xi(ni - j, p - j, mu)
            if c:
                out[(w, zero)] = c
    res = QuantumClass(space, out)
    check_positivity(res, p, u.length)
    return res


def _check_args(space, i, p, u):
    """Validate and return n_i."""
    if not space.rs.is_type_a:
        raise ValueError("Pieri rules are implemented for type A")
    if not 1 <= i <= space.k:
        raise ValueError(f"step index {i} is not in 1..{space.k} for {space}")
    ni = space.steps[i - 1]
    if not 1 <= p <= ni:
        raise ValueError(f"need 1 <= p <= {ni}")
    if not space.is_min_rep(u):
        raise ValueError(f"{u} is not in W^P")
    return ni


# quantum degrees

@dataclass(frozen=True)
class PieriDegree:
    """d = (d_1..d_k) with d_t = #{j : h_j <= t <= l_j}."""

    d: tuple
    h: tuple
    l: tuple

    @property
    def m(self):
        return len(self.h)

    @classmethod
    def from_jumps(cls, k, h, l):
        d = tuple(sum(1 for a, b in zip(h, l) if a <= t <= b) for t in range(1, k + 1))
        return cls(d, tuple(h), tuple(l))

    @classmethod
    def from_vector(cls, d):
        d = tuple(d)
        m = max(d) if d else 0
        h, l = [], []
        for j in range(1, m + 1):
            ts = [t for t, x in enumerate(d, 1) if x >= j]
            h.append(ts[0])
            l.append(ts[-1])
        pd = cls.from_jumps(len(d), h, l)
        if pd.d != d or any(a >= b for a, b in zip(h, h[1:])) or any(
                a <= b for a, b in zip(l, l[1:])):
            raise ValueError(f"{d} is not unimodal with unit steps")
        return pd


def _candidate_degrees(k, i_pos, p):
    yield PieriDegree((0,) * k, (), ())
    for m in range(1, p + 1):
        for h in itertools.combinations(range(1, i_pos + 1), m):
            for l in itertools.combinations(range(i_pos, k + 1), m):
                yield PieriDegree.from_jumps(k, h, tuple(reversed(l)))


def pieri_degrees(space, i, p, u):
    """Pie_{i,p}(u): unimodal degrees with peak d_i = m <= p satisfying (*)."""
    _check_args(space, i, p, u)
    ext = space.ext_steps
    i_pos = i
    out = []
    for pd in _candidate_degrees(space.k, i_pos, p):
        ok = True
        for h, l in zip(pd.h, pd.l):
            top = u(ext[h])
            if any(u(r) > top for r in range(ext[h] + 1, ext[l + 1] + 1)):
                ok = False
                break
        if ok:
            out.append(pd)
    return out


def _fill(size, fixed):
    vals = sorted(set(range(1, size + 1)) - set(fixed.values()))
    it = iter(vals)
    return Perm(fixed[x] if x in fixed else next(it) for x in range(1, size + 1))


def tau_phi(space, pd):
    """(tau_d, phi_d) from their defining values."""
    ext = space.ext_steps
    size = space.n + 1
    tau = {}
    phi = {}
    for j, (h, l) in enumerate(zip(pd.h, pd.l), 1):
        tau[ext[l + 1] - j + 1] = ext[h]
        phi[ext[l] - j + 1] = ext[h - 1] + 1
    return _fill(size, tau), _fill(size, phi)


def tau_phi_words(space, pd):
    """Reduced words tau^(m)...tau^(1) and phi^(m)...phi^(1)."""
    ext = space.ext_steps
    tw, pw = [], []
    for h, l in reversed(list(zip(pd.h, pd.l))):
        tw += list(range(ext[h], ext[l + 1]))
        pw += list(range(ext[h - 1] + 1, ext[l]))
    return tw, pw


def per_membership(space, pd, w):
    """w in W^P with w(n_{h_j - 1} + 1) < w(r) for n_{h_j-1} + 2 <= r <= n_{l_j} + 1."""
    if not space.is_min_rep(w):
        return False
    ext = space.ext_steps
    for h, l in zip(pd.h, pd.l):
        a = ext[h - 1] + 1
        if any(w(r) < w(a) for r in range(a + 1, ext[l] + 2)):
            return False
    return True


def per_membership_by_length(space, pd, w):
    """w in W^P with l(w phi_d) = l(w) + l(phi_d)."""
    if not space.is_min_rep(w):
        return False
    _tau, phi = tau_phi(space, pd)
    return (w * phi).length == w.length + phi.length


def eq_quantum_pieri(space, i, p, u, per=None):
    """sigma^{c[n_i,p]} * sigma^u in QH_T(G/P).

    ``per`` chooses the membership test for the sums over w; the default
    is ``per_membership``.
    """
    ni = _check_args(space, i, p, u)
    per = per_membership if per is None else per
    out = {}
    for pd in pieri_degrees(space, i, p, u):
        m = pd.m
        tau, phi = tau_phi(space, pd)
        ut = u * tau
        phi_inv = phi.inverse()
        for j in range(0, p - m + 1):
            if j > ni - m:
                break
            for x in special_superior_set(ut, ni - m, j):
                w = x * phi_inv
                if not per(space, pd, w):
                    continue
                c = xi(ni - m - j, p - m - j, mu_partition(x, ut, ni - m))
                if c:
                    key = (w, pd.d)
                    out[key] = out[key] + c if key in out else c
    res = QuantumClass(space, out)
    check_positivity(res, p, u.length)
    return res


# Grassmannians

@lru_cache(maxsize=None)
def grassmann_pieri(m, n, p, nu):
    """sigma^{1^p} * sigma^nu in QH_T(Gr(m, n+1)); nu is a Partition."""
    if nu.m != m or nu.nplus1 != n + 1:
        raise ValueError(f"{nu} is not in P_{m},{n + 1}")
    if not 0 <= p <= m:
        raise ValueError(f"need 0 <= p <= {m}")
    space = grassmann_space(m, n)
    ring = poly_ring(n)
    if p == 0:
        return QuantumClass(space, {(nu.to_perm(), (0,)): EquivPoly.one(ring)})
    out = {}
    for r in range(0, p + 1):
        for eta in vertical_strip_extensions(nu, r):
            c = xi(m - r, p - r, associated_partition(eta, nu))
            if c:
                out[(eta.to_perm(), (0,))] = c
    if nu[1] == n + 1 - m:
        nu1 = Partition(nu.parts[1:], m - 1, n + 1)
        for r in range(0, p):
            for kap1 in vertical_strip_extensions(nu1, r):
                if any(x < 1 for x in kap1.parts):
                    continue
                c = xi(m - 1 - r, p - 1 - r, associated_partition(kap1, nu1))
                if c:
                    kap = Partition(tuple(x - 1 for x in kap1.parts) + (0,), m, n + 1)
                    key = (kap.to_perm(), (1,))
                    out[key] = out[key] + c if key in out else c
    res = QuantumClass(space, out)
    check_positivity(res, p, nu.size)
    return res


def top_row_products(m, n):
    """{p: sigma^{1^p} * sigma^{(n+1-m, 0, ..., 0)}} for p = 1..m."""
    nu = Partition((n + 1 - m,) + (0,) * (m - 1), m, n + 1)
    return {p: grassmann_pieri(m, n, p, nu) for p in range(1, m + 1)}

