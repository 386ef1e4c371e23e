"""Equivariant quantum Chevalley formula on G/B and divisor products on
type-A partial flags via the Peterson-Woodward comparison."""
from .polyring import EquivPoly, QuantumClass, poly_ring
from .typeweyl import FlagShape, weight_minus_image

__all__ = ["quantum_chevalley_gb", "divisor_product_gp"]


def quantum_chevalley_gb(rs, i, u):
    """sigma^{s_i} * sigma^u in QH_T(G/B) for any finite type."""
    n = rs.n
    ring = poly_ring(n)
    space = FlagShape.full(rs)
    out = {}
    lu = u.length
    zero = (0,) * n
    diag = weight_minus_image(rs, i, u)
    if any(c < 0 for c in diag):
        raise AssertionError(f"chi_{i} - u(chi_{i}) is not a non-negative root sum")
    if any(diag):
        out[(u, zero)] = EquivPoly.linear(ring, diag)
    for gamma in rs.positive_roots:
        co = rs.coroot[gamma]
        c = co[i - 1]
        if not c:
            continue
        x = u * rs.reflection(gamma)
        lx = x.length
        if lx == lu + 1:
            key = (x, zero)
        elif lx == lu + 1 - 2 * sum(co):
            key = (x, tuple(co))
        else:
            continue
        out[key] = out[key] + c if key in out else EquivPoly.const(ring, c)
    return QuantumClass(space, out, check=False)


def divisor_product_gp(space, i, u):
    """sigma^{s_{n_i}} * sigma^u on G/P (i the step index), read off from the
    G/B product.

    A G/B term (x, lam_B) is a G/P term (w, lam_P) exactly when it is the
    image of (w, lam_P) under the lift w -> w w_P w_P', lam_P -> lam_B.
    """
    from .structure import psi_map

    if not 1 <= i <= space.k:
        raise ValueError(f"step index {i} is not in 1..{space.k} for {space}")
    if not space.is_min_rep(u):
        raise ValueError(f"{u} is not in W^P")
    full = quantum_chevalley_gb(space.rs, space.steps[i - 1], u)
    out = {}
    for (x, lam), c in full.items():
        lam_p = tuple(lam[s - 1] for s in space.steps)
        w_guess, lam_b = _preimage(space, x, lam_p)
        if lam_b != lam or w_guess is None:
            continue
        if psi_map(space, w_guess, lam_p) != (x, lam):
            continue
        out[(w_guess, lam_p)] = c
    return QuantumClass(space, out)


def _preimage(space, x, lam_p):
    from .structure import pw_lift, lift_twist

    lam_b = pw_lift(space, lam_p)
    t = lift_twist(space, lam_b)
    w = x * t.inverse()
    if not space.is_min_rep(w):
        return None, lam_b
    return w, lam_b
