"""Integer kernels behind the cohomology and dominance computations.

The compiled ``_fast`` extension is used when it was built; otherwise the
``_pure`` module is used. Both expose the same functions. Operands too large
for the C ``long long`` path go through the pure module, and every result is
checked against the signed 64-bit range.
"""

from . import _pure

try:
    from . import _fast
except ImportError:  # extension not built
    _fast = None

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

# below these magnitudes no intermediate in _fast can leave int64
_SMALL = 2**40
_SMALL_LOOP = 2**20

_impl = _fast if _fast is not None else _pure
BACKEND = "fast" if _fast is not None else "pure"


def available_backends():
    return ["pure"] + (["fast"] if _fast is not None else [])


def use_backend(name):
    """Switch the active implementation (``"fast"`` or ``"pure"``)."""
    global _impl, BACKEND
    if name == "fast":
        if _fast is None:
            raise RuntimeError("compiled kernels are not built")
        _impl = _fast
    elif name == "pure":
        _impl = _pure
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name


def check_int64(value, what="value"):
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{what} {value} leaves the signed 64-bit range")
    return value


def _small_parts(parts, *scalars):
    if len(parts) >= _SMALL_LOOP:
        return False
    return all(-_SMALL < x < _SMALL for x in parts) and all(
        -_SMALL < x < _SMALL for x in scalars
    )


def h0_sum(parts, twist):
    mod = _impl if _small_parts(parts, twist) else _pure
    return check_int64(mod.h0_sum(parts, twist), "h0")


def h1_sum(parts, twist):
    mod = _impl if _small_parts(parts, twist) else _pure
    return check_int64(mod.h1_sum(parts, twist), "h1")


def majorizes(general, special):
    if _small_parts(general) and _small_parts(special):
        return _impl.majorizes(general, special)
    return _pure.majorizes(general, special)


def first_twist_violation(general, special, t_lo, t_hi):
    if _small_parts(general, t_lo, t_hi) and _small_parts(special):
        return _impl.first_twist_violation(general, special, t_lo, t_hi)
    return _pure.first_twist_violation(general, special, t_lo, t_hi)


def divisor_h0(e, a, b):
    if -_SMALL_LOOP < a < _SMALL_LOOP and -_SMALL_LOOP < e < _SMALL_LOOP and -_SMALL < b < _SMALL:
        return check_int64(_impl.divisor_h0(e, a, b), "h0")
    return check_int64(_pure.divisor_h0(e, a, b), "h0")
