"""Exact polynomials in simple roots (or t-variables) and quantum classes.

An ``EquivPoly`` lives in Z[a_1..a_n] (kind "a") or Z[t_1..t_N] (kind
"t").  Terms are ordered graded-lexicographically with a_1 the leading
variable; the canonical text form lists them in descending order, e.g.
``3*a1^2*a2 + a3``.
"""
import re

from . import _backend
from .typeweyl import grassmannian_bijection

__all__ = [
    "PolyRing", "poly_ring", "EquivPoly", "NotDivisible", "QuantumClass",
    "poly_arith", "poly_exact_div", "alpha_to_t", "t_to_alpha",
    "evaluate_limits", "parse_poly", "format_poly", "unit_class", "basis_class",
]


class NotDivisible(ArithmeticError):
    """Exact division left a remainder."""


class PolyRing:
    def __init__(self, nvars, kind):
        if kind not in ("a", "t"):
            raise ValueError("kind must be 'a' or 't'")
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        self.nvars = nvars
        self.kind = kind
        self.width = min(16, 63 // (nvars + 1))
        if self.width < 4:
            raise ValueError(f"too many variables ({nvars})")
        self.max_degree = (1 << self.width) - 1
        self.deg_shift = self.width * nvars
        self._shifts = [self.width * (nvars - 1 - i) for i in range(nvars)]
        self._mask = (1 << self.width) - 1

    def key(self, exps):
        d = sum(exps)
        if d > self.max_degree or any(e < 0 for e in exps):
            raise OverflowError(f"monomial degree {d} exceeds {self.max_degree}")
        k = d << self.deg_shift
        for e, sh in zip(exps, self._shifts):
            k |= e << sh
        return k

    def exps(self, key):
        return tuple((key >> sh) & self._mask for sh in self._shifts)

    def degree_of_key(self, key):
        return key >> self.deg_shift

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (self.nvars, self.kind) == (other.nvars, other.kind)

    def __hash__(self):
        return hash((self.nvars, self.kind))

    def __repr__(self):
        return f"PolyRing({self.nvars}, {self.kind!r})"


_RINGS = {}


def poly_ring(nvars, kind="a"):
    key = (nvars, kind)
    if key not in _RINGS:
        _RINGS[key] = PolyRing(nvars, kind)
    return _RINGS[key]


class EquivPoly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("ring", "_t", "_hash")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self._t = terms if terms is not None else {}
        self._hash = None

    # construction
    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def const(cls, ring, c):
        return cls(ring, {0: c} if c else {})

    @classmethod
    def one(cls, ring):
        return cls.const(ring, 1)

    @classmethod
    def var(cls, ring, i):
        e = [0] * ring.nvars
        e[i - 1] = 1
        return cls(ring, {ring.key(e): 1})

    @classmethod
    def linear(cls, ring, vec):
        """sum_j vec[j] * x_{j+1}."""
        t = {}
        for j, c in enumerate(vec):
            if c:
                e = [0] * ring.nvars
                e[j] = 1
                t[ring.key(e)] = c
        return cls(ring, t)

    @classmethod
    def from_terms(cls, ring, terms):
        t = {}
        for exps, c in terms.items():
            if c:
                k = ring.key(exps)
                t[k] = t.get(k, 0) + c
        return cls(ring, {k: c for k, c in t.items() if c})

    # inspection
    def terms(self):
        """[(exponents, coeff)] in descending graded-lex order."""
        ring = self.ring
        return [(ring.exps(k), self._t[k]) for k in sorted(self._t, reverse=True)]

    def coefficients(self):
        return list(self._t.values())

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self):
        return not self._t

    def is_constant(self):
        return all(k == 0 for k in self._t)

    def constant_term(self):
        return self._t.get(0, 0)

    @property
    def degree(self):
        if not self._t:
            return -1
        return self.ring.degree_of_key(max(self._t))

    def degrees(self):
        return {self.ring.degree_of_key(k) for k in self._t}

    def is_homogeneous(self, d=None):
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (d is None or d in ds)

    def is_nonnegative(self):
        return all(c > 0 for c in self._t.values())

    # arithmetic
    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, int):
            return EquivPoly.const(self.ring, other)
        if isinstance(other, EquivPoly):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._t:
            return self
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return EquivPoly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return EquivPoly(self.ring, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return EquivPoly(self.ring, {})
            return EquivPoly(self.ring, {k: c * other for k, c in self._t.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._t or not other._t:
            return EquivPoly(self.ring, {})
        if self.degree + other.degree > self.ring.max_degree:
            raise OverflowError("product degree exceeds the packing limit")
        return EquivPoly(self.ring, _backend.mul(self._t, other._t))

    __rmul__ = __mul__

    def __pow__(self, e):
        out = EquivPoly.one(self.ring)
        for _ in range(e):
            out = out * self
        return out

    def divexact(self, other):
        """self / other, raising NotDivisible if there is a remainder."""
        other = self._coerce(other)
        if not other._t:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._t:
            return self
        q = _backend.divexact(self._t, other._t, self.ring.width, self.ring.nvars + 1)
        if q is None:
            raise NotDivisible(f"{other} does not divide {self}")
        return EquivPoly(self.ring, q)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        if not isinstance(other, EquivPoly):
            return NotImplemented
        return self.ring == other.ring and self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.nvars, self.ring.kind, frozenset(self._t.items())))
        return self._hash

    def subs(self, values):
        """Evaluate every variable at the given integers (list indexed from 0)."""
        total = 0
        for exps, c in self.terms():
            v = c
            for x, e in zip(values, exps):
                if e:
                    v *= x ** e
            total += v
        return total

    def substitute(self, images, target):
        """Ring map sending variable i to images[i-1] (polys in ``target``)."""
        out = EquivPoly.zero(target)
        cache = {}
        for exps, c in self.terms():
            term = EquivPoly.const(target, c)
            for i, e in enumerate(exps):
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = images[i] ** e
                    term = term * cache[(i, e)]
            out = out + term
        return out

    # text
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"EquivPoly({format_poly(self)!r})"

    def latex(self):
        return format_poly(self, latex=True)

    @classmethod
    def parse(cls, text, ring):
        return parse_poly(text, ring)


def _monomial_str(exps, kind, latex):
    parts = []
    for i, e in enumerate(exps, 1):
        if not e:
            continue
        if latex:
            v = (r"\alpha_{%d}" if kind == "a" else "t_{%d}") % i
            parts.append(v if e == 1 else f"{v}^{{{e}}}")
        else:
            v = f"{kind}{i}"
            parts.append(v if e == 1 else f"{v}^{e}")
    return ("" if latex else "*").join(parts)


def format_poly(p, latex=False):
    if not p:
        return "0"
    out = []
    for idx, (exps, c) in enumerate(p.terms()):
        mono = _monomial_str(exps, p.ring.kind, latex)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}{'' if latex else '*'}{mono}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([at])(\d+)(?:\^(\d+))?|([+\-*]))")


def parse_poly(text, ring):
    """Inverse of the canonical text form; accepts any term order."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    terms = {}
    sign = 1
    coef = None
    exps = [0] * ring.nvars
    have = False
    expect_factor = True

    def flush():
        nonlocal coef, exps, have
        if not have:
            raise ValueError(f"dangling operator in {text!r}")
        k = ring.key(exps)
        terms[k] = terms.get(k, 0) + sign * (1 if coef is None else coef)
        coef, exps, have = None, [0] * ring.nvars, False

    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
        pos = m.end()
        num, v, idx, e, op = m.groups()
        if num is not None or v is not None:
            if not expect_factor:
                raise ValueError(f"missing operator in {text!r}")
            if num is not None:
                coef = (1 if coef is None else coef) * int(num)
            else:
                if v != ring.kind:
                    raise ValueError(f"variable {v}{idx} does not belong to kind {ring.kind!r}")
                i = int(idx)
                if not 1 <= i <= ring.nvars:
                    raise ValueError(f"variable {v}{i} out of range")
                exps[i - 1] += int(e) if e else 1
            have = True
            expect_factor = False
        elif op == "*":
            if expect_factor:
                raise ValueError(f"misplaced '*' in {text!r}")
            expect_factor = True
        else:
            if have:
                flush()
            elif terms or coef is not None:
                raise ValueError(f"repeated sign in {text!r}")
            sign = 1 if op == "+" else -1
            expect_factor = True
    if expect_factor and have is False:
        raise ValueError(f"dangling operator in {text!r}")
    flush()
    return EquivPoly(ring, {k: c for k, c in terms.items() if c})


def poly_arith(op, a, b):
    """op in '+', '-', '*'."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_exact_div(a, b):
    return a.divexact(b)


def alpha_to_t(p, nplus1=None):
    """Embed Z[alpha] into Z[t]: alpha_i -> t_{n+2-i} - t_{n+1-i}."""
    if p.ring.kind != "a":
        raise ValueError("expected an alpha polynomial")
    n = p.ring.nvars
    nplus1 = n + 1 if nplus1 is None else nplus1
    tr = poly_ring(nplus1, "t")
    images = []
    for i in range(1, n + 1):
        vec = [0] * nplus1
        vec[n + 1 - i] += 1
        vec[n - i] -= 1
        images.append(EquivPoly.linear(tr, vec))
    return p.substitute(images, tr)


def t_to_alpha(p, n):
    """Inverse of ``alpha_to_t`` on its image; ValueError outside the image."""
    if p.ring.kind != "t":
        raise ValueError("expected a t polynomial")
    ar = poly_ring(n, "a")
    images = []
    # t_k = t_1 + alpha_n + alpha_{n-1} + ... + alpha_{n+2-k}; put t_1 = 0
    for k in range(1, p.ring.nvars + 1):
        vec = [0] * n
        for j in range(1, k):
            vec[n - j] += 1
        images.append(EquivPoly.linear(ar, vec))
    q = p.substitute(images, ar)
    if alpha_to_t(q, p.ring.nvars) != p:
        raise ValueError(f"{p} is not in the image of Z[alpha]")
    return q


class QuantumClass:
    """Finite sum of terms coeff * q^d * sigma^w on a flag shape.

    Keys are (w, d) with w in W^P and d a tuple of k non-negative ints.
    """

    __slots__ = ("space", "_c")

    def __init__(self, space, coeffs=None, check=True):
        self.space = space
        c = {}
        for key, v in (coeffs or {}).items():
            if v:
                c[key] = v
        if check:
            for (w, d) in c:
                if len(d) != space.k or any(x < 0 for x in d):
                    raise ValueError(f"bad quantum degree {d}")
                if not space.is_min_rep(w):
                    raise ValueError(f"{w} is not a minimal coset representative")
        self._c = c

    @property
    def ring(self):
        return poly_ring(self.space.n, "a")

    def items(self):
        return self._c.items()

    def keys(self):
        return self._c.keys()

    def coefficient(self, w, d=None):
        d = tuple(d) if d is not None else (0,) * self.space.k
        return self._c.get((w, d), EquivPoly.zero(self.ring))

    def __getitem__(self, key):
        return self._c[key]

    def __contains__(self, key):
        return key in self._c

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def sorted_items(self):
        """Sorted by total q-degree, then length of w, then one-line order."""
        return sorted(self._c.items(), key=lambda kv: (sum(kv[0][1]), kv[0][0].sort_key(), kv[0][1]))

    def __add__(self, other):
        if self.space != other.space:
            raise ValueError("space mismatch")
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c[k] + v if k in c else v
        return QuantumClass(self.space, c, check=False)

    def __neg__(self):
        return QuantumClass(self.space, {k: -v for k, v in self._c.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly, qshift=None):
        c = {}
        for (w, d), v in self._c.items():
            if qshift is not None:
                d = tuple(a + b for a, b in zip(d, qshift))
            c[(w, d)] = v * poly
        return QuantumClass(self.space, c, check=False)

    def __eq__(self, other):
        return isinstance(other, QuantumClass) and self.space == other.space and self._c == other._c

    __hash__ = None

    def classical_limit(self):
        z = (0,) * self.space.k
        return QuantumClass(self.space, {k: v for k, v in self._c.items() if k[1] == z}, check=False)

    def nonequivariant_limit(self):
        """Keep the degree-zero (constant) parts of the coefficients."""
        r = self.ring
        return QuantumClass(self.space, {k: EquivPoly.const(r, v.constant_term())
                                         for k, v in self._c.items()}, check=False)

    def __str__(self):
        from .tables import format_plain
        return format_plain(self)

    __repr__ = __str__


def evaluate_limits(cls, q_zero=True, alpha_zero=False):
    out = cls
    if q_zero:
        out = out.classical_limit()
    if alpha_zero:
        out = out.nonequivariant_limit()
    return out


def unit_class(space):
    """The unit sigma^{id}."""
    return QuantumClass(space, {(space.rs.identity(), (0,) * space.k): EquivPoly.one(poly_ring(space.n))},
                        check=False)


def basis_class(space, w, d=None, coeff=None):
    d = tuple(d) if d is not None else (0,) * space.k
    coeff = EquivPoly.one(poly_ring(space.n)) if coeff is None else coeff
    return QuantumClass(space, {(w, d): coeff})


def grassmann_partition(space, w):
    return grassmannian_bijection(w, space.steps[0])

