# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; mirror ``_pure.py`` exactly.

Inputs are C ``long long``; the dispatcher in ``__init__`` only routes
operands here when they are small enough that no intermediate can overflow.
"""


def h0_sum(parts, long long twist):
    cdef long long total = 0
    cdef long long d
    for a in parts:
        d = <long long>a + twist
        if d >= 0:
            total += d + 1
    return total


def h1_sum(parts, long long twist):
    cdef long long total = 0
    cdef long long d
    for a in parts:
        d = <long long>a + twist
        if d <= -2:
            total += -d - 1
    return total


def majorizes(general, special):
    cdef long long sg = 0
    cdef long long ss = 0
    cdef Py_ssize_t i, n = len(general)
    for i in range(n):
        sg += <long long>general[i]
        ss += <long long>special[i]
        if ss < sg:
            return False
    return True


cdef long long _h0(tuple parts, long long twist):
    cdef long long total = 0
    cdef long long d
    cdef Py_ssize_t i
    for i in range(len(parts)):
        d = <long long>parts[i] + twist
        if d >= 0:
            total += d + 1
    return total


def first_twist_violation(general, special, long long t_lo, long long t_hi):
    cdef tuple g = tuple(general)
    cdef tuple s = tuple(special)
    cdef long long t
    for t in range(t_lo, t_hi + 1):
        if _h0(g, t) > _h0(s, t):
            return t
    return None


def divisor_h0(long long e, long long a, long long b):
    cdef long long total = 0
    cdef long long i, d
    if a < 0:
        return 0
    for i in range(a + 1):
        d = b - i * e
        if d >= 0:
            total += d + 1
    return total
