# distutils: language = c++
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse polynomial kernels on int64 keys and coefficients.

Same contract as the pure-Python module.  Any coefficient that leaves
the int64 range raises OverflowError so the caller can retry in Python.
"""
from libc.stdint cimport int64_t
from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from libcpp.map cimport map as cmap
from libcpp.utility cimport pair
from cython.operator cimport dereference as deref, preincrement as inc, predecrement as dec

cdef extern from *:
    """
    static inline int eqs_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int eqs_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int eqs_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint eqs_mul_ovf(long long a, long long b, long long *r) nogil
    bint eqs_sub_ovf(long long a, long long b, long long *r) nogil
    bint eqs_add_ovf(long long a, long long b, long long *r) nogil


cdef void _load(dict d, vector[int64_t]& ks, vector[int64_t]& cs) except *:
    ks.reserve(len(d))
    cs.reserve(len(d))
    for k, c in d.items():
        ks.push_back(k)
        cs.push_back(c)


def mul(dict a, dict b):
    cdef vector[int64_t] ka, ca, kb, cb
    if not a or not b:
        return {}
    _load(a, ka, ca)
    _load(b, kb, cb)
    cdef unordered_map[int64_t, long long] acc
    acc.reserve(ka.size() * kb.size())
    cdef size_t i, j
    cdef long long p, s
    cdef int64_t key
    for i in range(ka.size()):
        for j in range(kb.size()):
            if eqs_mul_ovf(ca[i], cb[j], &p):
                raise OverflowError("coefficient overflow")
            key = ka[i] + kb[j]
            if eqs_add_ovf(acc[key], p, &s):
                raise OverflowError("coefficient overflow")
            acc[key] = s
    out = {}
    cdef unordered_map[int64_t, long long].iterator it = acc.begin()
    while it != acc.end():
        if deref(it).second != 0:
            out[deref(it).first] = deref(it).second
        inc(it)
    return out


def divexact(dict a, dict b, int width, int nfields):
    """Quotient a/b, or None when b does not divide a exactly."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    cdef vector[int64_t] kb, cb
    bitems = sorted(b.items(), reverse=True)
    for k, c in bitems:
        kb.push_back(k)
        cb.push_back(c)
    cdef cmap[int64_t, long long] rem
    for k, c in a.items():
        rem[<int64_t>k] = <long long>c
    cdef int64_t mask = (1 << width) - 1
    cdef int64_t klead = kb[0], k0, qk, kk
    cdef long long clead = cb[0], c0, qc, p, v
    cdef int f
    cdef size_t j
    cdef cmap[int64_t, long long].iterator it
    quot = {}
    while not rem.empty():
        it = rem.end()
        dec(it)
        k0 = deref(it).first
        c0 = deref(it).second
        for f in range(nfields):
            if (klead >> (f * width)) & mask > (k0 >> (f * width)) & mask:
                return None
        if c0 % clead != 0:
            return None
        qk = k0 - klead
        qc = c0 // clead
        quot[qk] = qc
        for j in range(kb.size()):
            kk = qk + kb[j]
            if eqs_mul_ovf(qc, cb[j], &p):
                raise OverflowError("coefficient overflow")
            it = rem.find(kk)
            if it == rem.end():
                if eqs_sub_ovf(0, p, &v):
                    raise OverflowError("coefficient overflow")
                rem[kk] = v
            else:
                if eqs_sub_ovf(deref(it).second, p, &v):
                    raise OverflowError("coefficient overflow")
                if v == 0:
                    rem.erase(it)
                else:
                    deref(it).second = v
    return quot
