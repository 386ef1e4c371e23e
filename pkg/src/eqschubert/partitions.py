"""Partitions in an m x (n+1-m) box, vertical strips and the associated
partition of a strip.

Text form: ``(6,3,2,2,0,0)@6x13`` meaning parts, m, and n+1.
"""
import itertools
import re
from dataclasses import dataclass

from .typeweyl import grassmannian_bijection, grassmannian_inverse

__all__ = [
    "Partition", "transpose", "vertical_strip_extensions",
    "associated_partition", "join_and_cut", "box_partitions",
]


@dataclass(frozen=True)
class Partition:
    """A partition in P_{m,n+1}: m weakly decreasing parts in [0, n+1-m]."""

    parts: tuple
    m: int
    nplus1: int

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if not 0 <= self.m <= self.nplus1:
            raise ValueError(f"bad box {self.m}x{self.nplus1}")
        if len(parts) != self.m:
            raise ValueError(f"{parts} does not have {self.m} parts")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        if parts and (parts[-1] < 0 or parts[0] > self.width):
            raise ValueError(f"{parts} does not fit in the {self.m}x{self.width} box")

    @classmethod
    def zero(cls, m, nplus1):
        return cls((0,) * m, m, nplus1)

    @property
    def width(self):
        return self.nplus1 - self.m

    @property
    def size(self):
        return sum(self.parts)

    def __getitem__(self, i):
        """1-based part; 0 beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= self.m else 0

    def __iter__(self):
        return iter(self.parts)

    def to_perm(self):
        return grassmannian_inverse(self.parts, self.m, self.nplus1)

    @classmethod
    def from_perm(cls, w, m):
        return cls(grassmannian_bijection(w, m), m, len(w))

    def cells(self):
        return {(i, j) for i in range(1, self.m + 1) for j in range(1, self[i] + 1)}

    def __str__(self):
        return f"({','.join(map(str, self.parts))})@{self.m}x{self.nplus1}"

    def short(self):
        return f"({','.join(map(str, self.parts))})"

    @classmethod
    def parse(cls, text, m=None, nplus1=None):
        t = text.strip()
        mt = re.fullmatch(r"\(([\d,\s]*)\)(?:@(\d+)x(\d+))?", t)
        if not mt:
            raise ValueError(f"bad partition {text!r}")
        body = mt.group(1).strip()
        parts = tuple(int(x) for x in body.split(",")) if body else ()
        if mt.group(2):
            bm, bn = int(mt.group(2)), int(mt.group(3))
            if (m is not None and m != bm) or (nplus1 is not None and nplus1 != bn):
                raise ValueError(f"box of {text!r} disagrees with {m}x{nplus1}")
            m, nplus1 = bm, bn
        if m is None or nplus1 is None:
            raise ValueError(f"partition {text!r} needs a box")
        if len(parts) < m:
            parts = parts + (0,) * (m - len(parts))
        return cls(parts, m, nplus1)


def transpose(a):
    """Conjugate partition, living in P_{n+1-m, n+1}."""
    w = a.width
    return Partition(tuple(sum(1 for x in a.parts if x >= j) for j in range(1, w + 1)),
                     w, a.nplus1)


def box_partitions(m, nplus1):
    """All partitions in P_{m,n+1}, by size then reverse-lex."""
    w = nplus1 - m
    out = [Partition(tuple(sorted(c, reverse=True)), m, nplus1)
           for c in itertools.combinations_with_replacement(range(w + 1), m)]
    out.sort(key=lambda p: (p.size, tuple(-x for x in p.parts)))
    return out


def vertical_strip_extensions(nu, r):
    """All eta in the same box with eta/nu a vertical strip of r boxes."""
    out = []
    for rows in itertools.combinations(range(nu.m), r):
        parts = list(nu.parts)
        for i in rows:
            parts[i] += 1
        if parts and parts[0] > nu.width:
            continue
        if any(a < b for a, b in zip(parts, parts[1:])):
            continue
        out.append(Partition(tuple(parts), nu.m, nu.nplus1))
    return out


def _strip_rows(eta, nu):
    if (eta.m, eta.nplus1) != (nu.m, nu.nplus1):
        raise ValueError("partitions live in different boxes")
    diff = [a - b for a, b in zip(eta.parts, nu.parts)]
    if any(d not in (0, 1) for d in diff):
        raise ValueError(f"{eta}/{nu} is not a vertical strip")
    return [i + 1 for i, d in enumerate(diff) if d == 0], sum(diff)


def associated_partition(eta, nu):
    """eta_nu: (nu_{j_i} - j_i + r + i)_i over the rows j_1 < ... with eta = nu.

    >>> nu = Partition((6,3,2,2,0,0), 6, 13)
    >>> associated_partition(Partition((6,3,3,2,1,1), 6, 13), nu).parts
    (9, 6, 4)
    """
    rows, r = _strip_rows(eta, nu)
    parts = tuple(nu[j] - j + r + i for i, j in enumerate(rows, 1))
    return Partition(parts, nu.m - r, nu.nplus1)


def join_and_cut(eta, nu):
    """eta_nu computed on cells: pad each strip-free row with one box per
    row of the m-row box below it, stack those rows into an (m-r)-row box,
    then trim each row by the number of rows below it there."""
    rows, r = _strip_rows(eta, nu)
    m = nu.m
    joined = []
    for j in rows:
        cells = [(j, c) for c in range(1, nu[j] + 1)]
        start = len(cells)
        cells += [(j, start + c) for c in range(1, m - j + 1)]
        joined.append(cells)
    mr = m - r
    out = []
    for i, cells in enumerate(joined, 1):
        below = mr - i
        if below > len(cells):
            raise ValueError(f"{eta}/{nu} leaves a row too short to cut")
        kept = cells[:len(cells) - below] if below else cells
        out.append(len(kept))
    return Partition(tuple(out), mr, nu.nplus1)

