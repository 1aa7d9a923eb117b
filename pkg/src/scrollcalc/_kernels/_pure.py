"""Pure-Python versions of the integer kernels.

Every function here has a twin of the same name in ``_fast.pyx``; both must
return identical values on every input.
"""


def h0_sum(parts, twist):
    total = 0
    for a in parts:
        d = a + twist
        if d >= 0:
            total += d + 1
    return total


def h1_sum(parts, twist):
    total = 0
    for a in parts:
        d = a + twist
        if d <= -2:
            total += -d - 1
    return total


def majorizes(general, special):
    """Partial sums of ``special`` dominate those of ``general``.

    Both sequences must be sorted descending and of equal length; equal total
    degree is checked by the caller.
    """
    sg = 0
    ss = 0
    for g, s in zip(general, special):
        sg += g
        ss += s
        if ss < sg:
            return False
    return True


def first_twist_violation(general, special, t_lo, t_hi):
    """Smallest twist in ``[t_lo, t_hi]`` where h0 of ``general`` exceeds ``special``.

    Returns ``None`` when no twist in the window violates semicontinuity.
    """
    for t in range(t_lo, t_hi + 1):
        if h0_sum(general, t) > h0_sum(special, t):
            return t
    return None


def divisor_h0(e, a, b):
    # pushforward of aC+bf is the sum of O(b - i*e) for i = 0..a;
    # sum the non-negative terms as an arithmetic series
    if a < 0 or b < 0:
        return 0
    top = a if e == 0 else min(a, b // e)
    terms = top + 1
    return terms * (b + 1) - e * top * terms // 2
