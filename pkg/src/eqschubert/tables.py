"""Text renderings of quantum classes: plain, LaTeX and a round-trippable table.

Table format::

    #space A n=6 flag=2,4
    w=[3715246] q=0,0 c=a2^3 + ...
"""
from .partitions import Partition
from .polyring import QuantumClass, format_poly, parse_poly, poly_ring
from .typeweyl import FlagShape, Perm

__all__ = ["format_plain", "format_latex", "format_table", "parse_table", "format_class"]


def _is_grassmannian(space):
    return space.rs.is_type_a and space.k == 1


def _basis_plain(space, w):
    if _is_grassmannian(space):
        return "s" + Partition.from_perm(w, space.steps[0]).short()
    if isinstance(w, Perm):
        return f"s{w}"
    return f"s[{w}]"


def _q_plain(space, d):
    if not any(d):
        return ""
    if space.k == 1:
        return "q" if d[0] == 1 else f"q^{d[0]}"
    parts = []
    for j, e in enumerate(d, 1):
        if e:
            parts.append(f"q{j}" if e == 1 else f"q{j}^{e}")
    return "*".join(parts)


def format_plain(cls):
    if not cls:
        return "0"
    space = cls.space
    out = []
    ident = space.rs.identity()
    for (w, d), c in cls.sorted_items():
        neg = False
        factors = []
        if c != 1:
            if c == -1:
                neg = True
            elif len(c) == 1:
                txt = format_poly(c)
                if txt.startswith("-"):
                    neg, txt = True, txt[1:]
                factors.append(txt)
            else:
                factors.append(f"({format_poly(c)})")
        if w != ident:
            factors.append(_basis_plain(space, w))
        qs = _q_plain(space, d)
        if qs:
            factors.append(qs)
        body = "*".join(factors) or "1"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_latex(cls):
    if not cls:
        return "0"
    space = cls.space
    out = []
    for (w, d), c in cls.sorted_items():
        coef = "" if c == 1 else (c.latex() if len(c) == 1 else f"({c.latex()})")
        if _is_grassmannian(space):
            basis = r"\sigma^{%s}" % Partition.from_perm(w, space.steps[0]).short()
        else:
            basis = r"\sigma^{%s}" % w
        if space.k == 1:
            q = "" if not d[0] else ("q" if d[0] == 1 else f"q^{{{d[0]}}}")
        else:
            q = "".join((r"\bar q_{%d}" % j) if e == 1 else (r"\bar q_{%d}^{%d}" % (j, e))
                        for j, e in enumerate(d, 1) if e)
        out.append(f"{coef}{basis}{q}")
    return " + ".join(out)


def format_table(cls):
    space = cls.space
    if not space.rs.is_type_a:
        raise ValueError("table format is defined for type A")
    lines = [f"#space A n={space.n} flag={','.join(map(str, space.steps))}"]
    for (w, d), c in cls.sorted_items():
        lines.append(f"w={w} q={','.join(map(str, d))} c={format_poly(c)}")
    return "\n".join(lines) + "\n"


def parse_table(text):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#space A "):
        raise ValueError("missing '#space A' header")
    fields = dict(item.split("=", 1) for item in lines[0][len("#space A "):].split())
    n = int(fields["n"])
    steps = tuple(int(x) for x in fields["flag"].split(","))
    space = FlagShape.type_a(n, steps)
    ring = poly_ring(n)
    coeffs = {}
    for ln in lines[1:]:
        if not (ln.startswith("w=") and " q=" in ln and " c=" in ln):
            raise ValueError(f"bad table line {ln!r}")
        w_txt, rest = ln[2:].split(" q=", 1)
        q_txt, c_txt = rest.split(" c=", 1)
        w = Perm.parse(w_txt, n + 1)
        d = tuple(int(x) for x in q_txt.split(","))
        key = (w, d)
        if key in coeffs:
            raise ValueError(f"duplicate term {ln!r}")
        coeffs[key] = parse_poly(c_txt, ring)
    return QuantumClass(space, coeffs)


def format_class(cls, fmt="plain"):
    if fmt == "plain":
        return format_plain(cls)
    if fmt == "latex":
        return format_latex(cls)
    if fmt == "table":
        return format_table(cls)
    raise ValueError(f"unknown format {fmt!r}")

