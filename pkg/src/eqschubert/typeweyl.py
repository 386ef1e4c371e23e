"""Root systems, Weyl groups, parabolic subgroups and minimal coset reps.

Type A elements are permutations in one-line notation (``Perm``); other
finite types use ``WeylElement``, which stores the images of the simple
roots and simple coroots.  Both share one small interface: ``length``,
``*`` (composition, (xy)(v) = x(y(v))), ``inverse()``, ``rmul_s(i)``
(right multiplication by s_i) and ``sort_key()``.
"""
import itertools
import os
import re
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "BudgetExceeded", "Perm", "WeylElement", "RootSystem", "FlagShape",
    "build_type_a", "build_root_system", "weyl_length", "sgn_beta",
    "coset_decompose", "longest_element", "grassmannian_bijection",
    "grassmannian_inverse", "enumerate_wp", "reduced_word", "max_w",
    "weight_minus_image", "fundamental_coweight_pairing",
]

DEFAULT_MAX_W = 40320


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed the element budget."""


def max_w():
    return int(os.environ.get("SCHUBERT_MAX_W", DEFAULT_MAX_W))


class Perm:
    """A permutation of 1..N in one-line notation.

    >>> Perm.parse("[3715246]").length
    9
    >>> str(Perm((1, 2, 3)).rmul_s(1))
    '[213]'
    """

    __slots__ = ("w", "_len", "_hash")

    def __init__(self, w):
        self.w = tuple(w)
        self._len = None
        self._hash = None

    @classmethod
    def identity(cls, size):
        return cls(range(1, size + 1))

    @classmethod
    def simple(cls, i, size):
        w = list(range(1, size + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def transposition(cls, a, b, size):
        w = list(range(1, size + 1))
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
        return cls(w)

    @classmethod
    def from_word(cls, word, size):
        w = list(range(1, size + 1))
        for i in word:
            w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def from_cycles(cls, cycles, size):
        """Cycle (a b ... z) sends a to b, ..., z to a."""
        w = list(range(1, size + 1))
        seen = set()
        for cyc in cycles:
            if seen & set(cyc) or len(set(cyc)) != len(cyc):
                raise ValueError("cycles must be disjoint")
            seen |= set(cyc)
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                if not 1 <= x <= size:
                    raise ValueError(f"cycle entry {x} out of range")
                w[x - 1] = y
        return cls(w)

    @classmethod
    def parse(cls, text, size=None):
        """Parse "[3715246]", "[10,3,...]" or cycle form "(2 3 4)(5 6)"."""
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"bad permutation {text!r}")
            body = text[1:-1].strip()
            if "," in body:
                vals = [int(x) for x in body.split(",")]
            elif " " in body:
                vals = [int(x) for x in body.split()]
            else:
                vals = [int(x) for x in body]
            if sorted(vals) != list(range(1, len(vals) + 1)):
                raise ValueError(f"not a permutation: {text!r}")
            if size is not None and len(vals) != size:
                raise ValueError(f"expected {size} entries in {text!r}")
            return cls(vals)
        if text.startswith("("):
            if size is None:
                raise ValueError("cycle notation needs the ambient size")
            cycles = []
            for m in re.finditer(r"\(([^()]*)\)", text):
                cycles.append([int(x) for x in m.group(1).replace(",", " ").split()])
            if re.sub(r"\([^()]*\)", "", text).strip():
                raise ValueError(f"bad cycle notation {text!r}")
            return cls.from_cycles(cycles, size)
        raise ValueError(f"bad permutation {text!r}")

    def __call__(self, i):
        return self.w[i - 1]

    def __len__(self):
        return len(self.w)

    @property
    def size(self):
        return len(self.w)

    @property
    def length(self):
        if self._len is None:
            w = self.w
            n = len(w)
            self._len = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
        return self._len

    def __mul__(self, other):
        w = self.w
        return Perm(w[j - 1] for j in other.w)

    def inverse(self):
        inv = [0] * len(self.w)
        for i, v in enumerate(self.w, 1):
            inv[v - 1] = i
        return Perm(inv)

    def rmul_s(self, i):
        w = list(self.w)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Perm(w)

    def swap(self, a, b):
        """Right multiplication by the transposition (a b)."""
        w = list(self.w)
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
        return Perm(w)

    def has_descent(self, i):
        return self.w[i - 1] > self.w[i]

    def sort_key(self):
        return (self.length, self.w)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.w == other.w

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.w)
        return self._hash

    def __str__(self):
        if len(self.w) > 9:
            return "[" + ",".join(map(str, self.w)) + "]"
        return "[" + "".join(map(str, self.w)) + "]"

    __repr__ = __str__


class WeylElement:
    """Element of a general Weyl group, stored by its action on simple
    roots and simple coroots (coordinates in the simple bases)."""

    __slots__ = ("rs", "img", "coimg", "_len", "_hash")

    def __init__(self, rs, img, coimg):
        self.rs = rs
        self.img = img
        self.coimg = coimg
        self._len = None
        self._hash = None

    @property
    def length(self):
        if self._len is None:
            self._len = sum(1 for g in self.rs.positive_roots
                            if _is_negative(_apply(self.img, g)))
        return self._len

    def act_root(self, vec):
        return _apply(self.img, vec)

    def act_coroot(self, vec):
        return _apply(self.coimg, vec)

    def __mul__(self, other):
        img = tuple(_apply(self.img, v) for v in other.img)
        coimg = tuple(_apply(self.coimg, v) for v in other.coimg)
        return WeylElement(self.rs, img, coimg)

    def inverse(self):
        w = self
        out = self.rs.identity()
        for i in reversed(self.rs.reduced_word(w)):
            out = out.rmul_s(i)
        return out

    def rmul_s(self, i):
        return self * self.rs.s(i)

    def has_descent(self, i):
        return _is_negative(self.img[i - 1])

    def sort_key(self):
        return (self.length, tuple(self.rs.reduced_word(self)))

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.img == other.img

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.img)
        return self._hash

    def __str__(self):
        word = self.rs.reduced_word(self)
        return "e" if not word else "s" + "s".join(map(str, word))

    __repr__ = __str__


def _apply(images, vec):
    n = len(images)
    out = [0] * n
    for j, c in enumerate(vec):
        if c:
            col = images[j]
            for k in range(n):
                out[k] += c * col[k]
    return tuple(out)


def _is_negative(vec):
    return any(c < 0 for c in vec)


def _gram(cartan_type, n):
    """Gram matrix (scaled to integers) of the simple roots."""
    g = [[0] * n for _ in range(n)]
    if cartan_type in "ABCD":
        vecs = []
        if cartan_type == "A":
            for i in range(n):
                v = [0] * (n + 1)
                v[i], v[i + 1] = 1, -1
                vecs.append(v)
        else:
            for i in range(n - 1):
                v = [0] * n
                v[i], v[i + 1] = 1, -1
                vecs.append(v)
            v = [0] * n
            if cartan_type == "B":
                v[n - 1] = 1
            elif cartan_type == "C":
                v[n - 1] = 2
            else:
                v[n - 2], v[n - 1] = 1, 1
            vecs.append(v)
        for i in range(n):
            for j in range(n):
                g[i][j] = sum(a * b for a, b in zip(vecs[i], vecs[j]))
        return g
    if cartan_type == "G" and n == 2:
        return [[2, -3], [-3, 6]]
    if cartan_type == "F" and n == 4:
        return [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    if cartan_type == "E" and n in (6, 7, 8):
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (6, 7), (7, 8)]
        for i in range(n):
            g[i][i] = 2
        for a, b in edges:
            if a <= n and b <= n:
                g[a - 1][b - 1] = g[b - 1][a - 1] = -1
        return g
    raise ValueError(f"unsupported Cartan type {cartan_type}{n}")


class RootSystem:
    """Finite root system given by its Cartan matrix.

    ``cartan[i][j]`` is the pairing of the i-th simple root with the j-th
    simple coroot.  Roots and coroots are tuples of simple coordinates.
    """

    def __init__(self, cartan_type, n):
        self.cartan_type = cartan_type
        self.n = n
        self.name = f"{cartan_type}{n}"
        g = _gram(cartan_type, n)
        self.cartan = tuple(tuple(2 * g[i][j] // g[j][j] for j in range(n)) for i in range(n))
        self.is_type_a = cartan_type == "A"
        roots = {}
        frontier = []
        for i in range(n):
            e = tuple(int(k == i) for k in range(n))
            roots[e] = e
            frontier.append(e)
        while frontier:
            new = []
            for g_ in frontier:
                cg = roots[g_]
                for i in range(n):
                    p = self.pair(g_, _unit(i, n))
                    r = list(g_)
                    r[i] -= p
                    r = tuple(r)
                    if _is_negative(r) or r in roots:
                        continue
                    q = self.pair(_unit(i, n), cg)
                    co = list(cg)
                    co[i] -= q
                    roots[r] = tuple(co)
                    new.append(r)
            frontier = new
        self.positive_roots = sorted(roots, key=lambda r: (sum(r), tuple(-c for c in r)))
        self.coroot = roots
        self._simple = {}
        self._words = {}

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"RootSystem({self.name})"

    def pair(self, root, coroot):
        """<root, coroot> for simple-root and simple-coroot coordinates."""
        c = self.cartan
        return sum(a * b * c[i][j] for i, a in enumerate(root) if a
                   for j, b in enumerate(coroot) if b)

    def height(self, vec):
        return sum(vec)

    # group elements
    def identity(self):
        if self.is_type_a:
            return Perm.identity(self.n + 1)
        e = tuple(_unit(i, self.n) for i in range(self.n))
        return WeylElement(self, e, e)

    def s(self, i):
        if self.is_type_a:
            return Perm.simple(i, self.n + 1)
        if i not in self._simple:
            n = self.n
            img, coimg = [], []
            for j in range(n):
                v = list(_unit(j, n))
                v[i - 1] -= self.cartan[j][i - 1]
                img.append(tuple(v))
                v = list(_unit(j, n))
                v[i - 1] -= self.cartan[i - 1][j]
                coimg.append(tuple(v))
            self._simple[i] = WeylElement(self, tuple(img), tuple(coimg))
        return self._simple[i]

    def from_word(self, word):
        if self.is_type_a:
            return Perm.from_word(word, self.n + 1)
        w = self.identity()
        for i in word:
            w = w * self.s(i)
        return w

    def reflection(self, root):
        """The reflection s_gamma for a positive root gamma."""
        if self.is_type_a:
            a = next(k for k, c in enumerate(root) if c) + 1
            b = a + sum(root)
            return Perm.transposition(a, b, self.n + 1)
        co = self.coroot[tuple(root)]
        n = self.n
        img, coimg = [], []
        for j in range(n):
            e = _unit(j, n)
            p = self.pair(e, co)
            img.append(tuple(e[k] - p * root[k] for k in range(n)))
            p = self.pair(root, e)
            coimg.append(tuple(e[k] - p * co[k] for k in range(n)))
        return WeylElement(self, tuple(img), tuple(coimg))

    def act_root(self, w, vec):
        if isinstance(w, Perm):
            return _perm_act(w, vec)
        return w.act_root(vec)

    def act_coroot(self, w, vec):
        if isinstance(w, Perm):
            return _perm_act(w, vec)
        return w.act_coroot(vec)

    def reduced_word(self, w):
        """Reduced word obtained by repeatedly stripping the smallest right descent."""
        if isinstance(w, Perm):
            return reduced_word(w)
        key = w.img
        if key not in self._words:
            word = []
            x = w
            while True:
                i = next((i for i in range(1, self.n + 1) if x.has_descent(i)), None)
                if i is None:
                    break
                word.append(i)
                x = x * self.s(i)
            self._words[key] = tuple(reversed(word))
        return list(self._words[key])

    def elements(self, budget=None):
        """All elements sorted by (length, canonical order)."""
        budget = max_w() if budget is None else budget
        if self.is_type_a:
            return enumerate_wp(FlagShape.full(self), budget=budget)
        return _bfs_elements(self, budget)

    def longest(self, subset=None):
        return longest_element(self, subset)


def _unit(i, n):
    return tuple(int(k == i) for k in range(n))


def _perm_act(w, vec):
    n = len(vec)
    eps = [0] * (n + 1)
    for k in range(n):
        eps[k] += vec[k]
        eps[k + 1] -= vec[k]
    out_eps = [0] * (n + 1)
    for k in range(n + 1):
        out_eps[w.w[k] - 1] = eps[k]
    out = []
    acc = 0
    for k in range(n):
        acc += out_eps[k]
        out.append(acc)
    return tuple(out)


def _bfs_elements(rs, budget):
    e = rs.identity()
    seen = {e}
    layer = [e]
    out = [e]
    while layer:
        nxt = []
        for w in layer:
            for i in range(1, rs.n + 1):
                if not w.has_descent(i):
                    x = w.rmul_s(i)
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
                        if len(seen) > budget:
                            raise BudgetExceeded(f"|W| exceeds budget {budget}")
        out.extend(sorted(nxt, key=lambda x: x.sort_key()))
        layer = nxt
    return out


def reduced_word(w):
    """Reduced word of a permutation, stripping the smallest right descent each time.

    >>> reduced_word(Perm.parse("[321]"))
    [1, 2, 1]
    """
    word = []
    x = list(w.w)
    while True:
        i = next((i for i in range(len(x) - 1) if x[i] > x[i + 1]), None)
        if i is None:
            break
        word.append(i + 1)
        x[i], x[i + 1] = x[i + 1], x[i]
    return word[::-1]


@lru_cache(maxsize=None)
def build_type_a(n):
    if n < 1:
        raise ValueError("rank must be at least 1")
    return RootSystem("A", n)


@lru_cache(maxsize=None)
def build_root_system(name):
    """Root system from a name such as "A3", "B2", "G2"."""
    m = re.fullmatch(r"([A-G])(\d+)", name.strip())
    if not m:
        raise ValueError(f"bad Cartan type {name!r}")
    t, n = m.group(1), int(m.group(2))
    if t == "A":
        return build_type_a(n)
    if (t in "BC" and n < 2) or (t == "D" and n < 3):
        raise ValueError(f"unsupported Cartan type {name}")
    return RootSystem(t, n)


def weyl_length(w):
    return w.length


def sgn_beta(rs, w, beta):
    """1 if w sends the positive root beta to a negative root, else 0.

    ``beta`` may be a simple index or a root vector.
    """
    if isinstance(beta, int):
        return int(w.has_descent(beta))
    return int(_is_negative(rs.act_root(w, beta)))


@dataclass(frozen=True)
class FlagShape:
    """A parabolic quotient G/P, given by the steps n_1 < ... < n_k.

    Delta_P is the set of simple roots not among the steps.  For type A
    this is the partial flag variety Fl_{n_1,...,n_k; n+1}.
    """

    rs: RootSystem
    steps: tuple

    def __post_init__(self):
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        if not steps or list(steps) != sorted(set(steps)):
            raise ValueError("steps must be strictly increasing and non-empty")
        if steps[0] < 1 or steps[-1] > self.rs.n:
            raise ValueError(f"steps must lie in 1..{self.rs.n}")

    @classmethod
    def type_a(cls, n, steps):
        return cls(build_type_a(n), tuple(steps))

    @classmethod
    def full(cls, rs):
        return cls(rs, tuple(range(1, rs.n + 1)))

    @property
    def n(self):
        return self.rs.n

    @property
    def k(self):
        return len(self.steps)

    @property
    def is_full(self):
        return self.k == self.rs.n

    @property
    def delta_p(self):
        return frozenset(range(1, self.rs.n + 1)) - frozenset(self.steps)

    @property
    def ext_steps(self):
        """(n_0, n_1, ..., n_k, n_{k+1}) with n_0 = 0 and n_{k+1} = n+1."""
        return (0,) + self.steps + (self.rs.n + 1,)

    def step_index(self, i):
        """Position j with n_j = i."""
        return self.steps.index(i) + 1

    def is_min_rep(self, w):
        return all(not w.has_descent(i) for i in self.delta_p)

    def elements(self, budget=None):
        return enumerate_wp(self, budget=budget)

    def __str__(self):
        return f"{self.rs.name} flag={','.join(map(str, self.steps))}"


def coset_decompose(rs, delta_p, w):
    """Split w = w_min * w_par with w_min minimal in w W_P."""
    delta_p = frozenset(delta_p)
    x = w
    par = []
    while True:
        i = next((i for i in sorted(delta_p) if x.has_descent(i)), None)
        if i is None:
            break
        x = x.rmul_s(i)
        par.append(i)
    return x, rs.from_word(par[::-1])


def longest_element(rs, subset=None):
    """Longest element of the subgroup generated by ``subset`` (all of W by default)."""
    subset = sorted(range(1, rs.n + 1) if subset is None else subset)
    w = rs.identity()
    while True:
        i = next((i for i in subset if not w.has_descent(i)), None)
        if i is None:
            return w
        w = w.rmul_s(i)


def grassmannian_bijection(w, m):
    """phi_m(w) = (w(m) - m, ..., w(1) - 1).

    >>> grassmannian_bijection(Perm.parse("[5712346]"), 2)
    (5, 4)
    """
    if any(w(i) > w(i + 1) for i in range(1, m)) or any(
            w(i) > w(i + 1) for i in range(m + 1, len(w))):
        raise ValueError(f"{w} is not a Grassmannian permutation for m={m}")
    return tuple(w(i) - i for i in range(m, 0, -1))


def grassmannian_inverse(parts, m, size):
    """The Grassmannian permutation with phi_m equal to ``parts``."""
    parts = tuple(parts)
    if len(parts) != m:
        raise ValueError("need exactly m parts")
    top = [parts[m - k] + k for k in range(1, m + 1)]
    rest = [v for v in range(1, size + 1) if v not in set(top)]
    w = top + rest
    if sorted(w) != list(range(1, size + 1)) or any(
            top[i] >= top[i + 1] for i in range(m - 1)):
        raise ValueError(f"{parts} does not fit the box")
    return Perm(w)


def enumerate_wp(shape, budget=None):
    """Minimal coset representatives W^P sorted by (length, one-line)."""
    budget = max_w() if budget is None else budget
    rs = shape.rs
    if not rs.is_type_a:
        elems = _bfs_elements(rs, budget)
        return [w for w in elems if shape.is_min_rep(w)]
    size = rs.n + 1
    sizes = [b - a for a, b in zip(shape.ext_steps, shape.ext_steps[1:])]
    count = 1
    rem = size
    for s in sizes:
        count *= _binom(rem, s)
        rem -= s
    if count > budget:
        raise BudgetExceeded(f"|W^P| = {count} exceeds budget {budget}")
    out = []

    def rec(avail, idx, acc):
        if idx == len(sizes):
            out.append(Perm(acc))
            return
        for chosen in itertools.combinations(avail, sizes[idx]):
            left = [v for v in avail if v not in chosen]
            rec(left, idx + 1, acc + list(chosen))

    rec(list(range(1, size + 1)), 0, [])
    out.sort(key=lambda w: w.sort_key())
    return out


def _binom(a, b):
    from math import comb
    return comb(a, b)


def fundamental_coweight_pairing(i, coroot):
    """<chi_i, gamma^vee>: the i-th simple-coroot coordinate."""
    return coroot[i - 1]


def weight_minus_image(rs, i, u):
    """chi_i - u(chi_i) as a root vector, via a reduced word of u."""
    word = rs.reduced_word(u)
    total = [0] * rs.n
    prefix = rs.identity()
    for j in word:
        if j == i:
            g = rs.act_root(prefix, _unit(j - 1, rs.n))
            for k in range(rs.n):
                total[k] += g[k]
        prefix = prefix.rmul_s(j)
    return tuple(total)

