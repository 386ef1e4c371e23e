"""Pure-Python sparse polynomial kernels.

Polynomials are dicts mapping a packed monomial key to an integer
coefficient.  A key stores the total degree in its top field and one
exponent per variable below it, so integer order on keys is graded-lex
order and monomial multiplication is key addition.
"""


def mul(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _divides(kb, ka, width, nfields):
    mask = (1 << width) - 1
    for f in range(nfields):
        sh = f * width
        if (kb >> sh) & mask > (ka >> sh) & mask:
            return False
    return True


def divexact(a, b, width, nfields):
    """Quotient a/b, or None when b does not divide a exactly."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = dict(a)
    bterms = sorted(b.items(), reverse=True)
    klead, clead = bterms[0]
    quot = {}
    while rem:
        k = max(rem)
        c = rem[k]
        if not _divides(klead, k, width, nfields) or c % clead:
            return None
        qk = k - klead
        qc = c // clead
        quot[qk] = qc
        for kb, cb in bterms:
            kk = qk + kb
            v = rem.get(kk, 0) - qc * cb
            if v:
                rem[kk] = v
            else:
                rem.pop(kk, None)
    return quot
