"""Filtration gradings, the Peterson-Woodward lift and quantum-to-classical
checks on structure constants N_{u,v}^{w,lam}."""
import itertools

from .typeweyl import FlagShape, longest_element

__all__ = [
    "PositivityError", "gr_beta", "filtration_check", "pw_lift",
    "pw_lift_search", "lift_twist", "psi_map", "qtc_vanishing",
    "qtc_reductions", "check_positivity", "pair_simple",
]


class PositivityError(AssertionError):
    """A structure coefficient failed the positivity or degree check."""


def pair_simple(rs, i, lam):
    """<alpha_i, lam> for lam in simple-coroot coordinates."""
    return sum(rs.cartan[i - 1][k] * c for k, c in enumerate(lam) if c)


def _sgn(w, i):
    return 1 if w.has_descent(i) else 0


def gr_beta(rs, beta, w, exps, lam):
    """(sgn_b(w) + <b,lam>, l(w) + |I| + <2rho,lam> - sgn_b(w) - <b,lam>)."""
    s = _sgn(w, beta)
    p = pair_simple(rs, beta, lam)
    return (s + p, w.length + sum(exps) + 2 * sum(lam) - s - p)


def filtration_check(rs, product, beta, bound):
    """Every term of ``product`` must have grading <= bound (lex).

    Returns (ok, lines) where lines use the form
    ``VIOLATION term=<w>|<I>|<lam> gr=<(a,b)> bound=<(c,d)>``.
    """
    lines = []
    for (w, lam), coeff in product.sorted_items():
        for exps, _c in coeff.terms():
            g = gr_beta(rs, beta, w, exps, lam)
            if g > tuple(bound):
                lines.append(
                    f"VIOLATION term={w}|{_tup(exps)}|{_tup(lam)} gr={_tup(g)} bound={_tup(bound)}")
    return not lines, lines


def _tup(t):
    return "(" + ",".join(map(str, t)) + ")"


def pw_lift(space, lam_p):
    """The unique lam_B = lam_P mod Q^vee_P with <gamma, lam_B> in {0,-1}
    for every positive root gamma of the Levi."""
    lam_p = tuple(lam_p)
    if len(lam_p) != space.k:
        raise ValueError(f"expected {space.k} quantum degrees")
    rs = space.rs
    if not rs.is_type_a:
        sols = pw_lift_search(space, lam_p, bound=10)
        if len(sols) != 1:
            raise ValueError(f"no unique lift for {lam_p}: {sols}")
        return sols[0]
    n = rs.n
    c = [0] * (n + 2)
    ext = space.ext_steps
    for j, s in enumerate(space.steps):
        c[s] = lam_p[j]
    for lo, hi in zip(ext, ext[1:]):
        length = hi - lo
        if length < 2:
            continue
        d = c[hi] - c[lo]
        delta = d // length
        extra = d - length * delta
        diffs = [delta] * (length - extra) + [delta + 1] * extra
        acc = c[lo]
        for t in range(lo + 1, hi):
            acc += diffs[t - lo - 1]
            c[t] = acc
    return tuple(c[1:n + 1])


def pw_lift_search(space, lam_p, bound=10):
    """All lifts with Levi coordinates in [-bound, bound] meeting the
    pairing condition (a brute-force check of uniqueness)."""
    rs = space.rs
    free = sorted(space.delta_p)
    levi_roots = [g for g in rs.positive_roots
                  if all(g[k] == 0 for k in range(rs.n) if (k + 1) not in space.delta_p)]
    sols = []
    for vals in itertools.product(range(-bound, bound + 1), repeat=len(free)):
        lam = [0] * rs.n
        for j, s in enumerate(space.steps):
            lam[s - 1] = lam_p[j]
        for t, v in zip(free, vals):
            lam[t - 1] = v
        if all(rs.pair(g, lam) in (0, -1) for g in levi_roots):
            sols.append(tuple(lam))
    return sols


def lift_twist(space, lam_b):
    """w_P w_P' where P' is generated by the Levi simple roots orthogonal to lam_B."""
    rs = space.rs
    dp = sorted(space.delta_p)
    dp2 = [a for a in dp if pair_simple(rs, a, lam_b) == 0]
    return longest_element(rs, dp) * longest_element(rs, dp2)


def psi_map(space, w, lam_p):
    """(w, lam_P) -> (w w_P w_P', lam_B)."""
    lam_b = pw_lift(space, lam_p)
    return w * lift_twist(space, lam_b), lam_b


def qtc_vanishing(rs, u, v, w, lam):
    """True when the necessary condition for N_{u,v}^{w,lam} != 0 holds."""
    return all(_sgn(w, i) + pair_simple(rs, i, lam) <= _sgn(u, i) + _sgn(v, i)
               for i in range(1, rs.n + 1))


def _minus(lam, k):
    lam = list(lam)
    lam[k - 1] -= 1
    return tuple(lam)


def qtc_reductions(rs, u, v, w, lam, k, rule="auto"):
    """Identities reducing N_{u,v}^{w,lam} at the simple index k.

    Returns a list of index tuples (u', v', w', lam') each claimed to carry
    the same coefficient.  ``rule`` is "theorem", "cor1", "cor2" or "auto"
    (every applicable rule).
    """
    su, sv, sw = _sgn(u, k), _sgn(v, k), _sgn(w, k)
    p = pair_simple(rs, k, lam)
    out = []
    applies = {
        "theorem": sw + p == su + sv == 2,
        "cor1": p == su == 0 and sw == sv == 1,
        "cor2": p == su == 1 and sw == sv == 0,
    }
    rules = ["theorem", "cor1", "cor2"] if rule == "auto" else [rule]
    for r in rules:
        if r not in applies:
            raise ValueError(f"unknown rule {r!r}")
        if not applies[r]:
            if rule != "auto":
                raise ValueError(f"hypotheses of {r} fail at k={k}")
            continue
        if r == "theorem":
            lam1 = _minus(lam, k)
            out.append((u.rmul_s(k), v.rmul_s(k), w, lam1))
            out.append((u, v.rmul_s(k), w.rmul_s(k), lam1 if sw == 0 else tuple(lam)))
        elif r == "cor1":
            out.append((u, v.rmul_s(k), w.rmul_s(k), tuple(lam)))
        else:
            out.append((u.rmul_s(k), v, w.rmul_s(k), _minus(lam, k)))
    return out


def check_positivity(product, len_u, len_v):
    """Each coefficient must be a non-negative, homogeneous polynomial of
    degree l(u) + l(v) - l(w_B) - <2rho, lam_B> at the G/B index."""
    space = product.space
    for (w, d), c in product.items():
        if isinstance(space, FlagShape) and not space.is_full:
            wb, lam = psi_map(space, w, d)
        else:
            wb, lam = w, d
        deg = len_u + len_v - wb.length - 2 * sum(lam)
        if not c.is_nonnegative() or not c.is_homogeneous(deg):
            raise PositivityError(
                f"coefficient {c} of {w} q^{d} is not non-negative of degree {deg}")
    return True
