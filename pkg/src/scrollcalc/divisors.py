"""Numerical divisor classes on the Hirzebruch surface F_e.

Num(F_e) is generated by the negative section C (C^2 = -e) and a fiber f
(f^2 = 0, C.f = 1). Cohomology of a class is computed by pushing forward to
P^1 (h0), Serre duality (h2) and Riemann-Roch (h1). A lattice-point count is
provided as an independent check on h0.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from ._kernels import check_int64


class SurfaceMismatch(ValueError):
    """Two classes living on different Hirzebruch surfaces were combined."""


class InternalInconsistency(RuntimeError):
    """Two computation routes that must agree did not."""


@dataclass(frozen=True, order=True)
class DivisorClass:
    """The class ``a*C + b*f`` on F_e."""

    e: int
    a: int
    b: int

    def __post_init__(self):
        if self.e < 0:
            raise ValueError(f"Hirzebruch index must be non-negative, got {self.e}")
        for name in ("e", "a", "b"):
            check_int64(getattr(self, name), name)

    @classmethod
    def section(cls, e: int) -> DivisorClass:
        return cls(e, 1, 0)

    @classmethod
    def fiber(cls, e: int) -> DivisorClass:
        return cls(e, 0, 1)

    def _check(self, other: DivisorClass) -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.e != self.e:
            raise SurfaceMismatch(f"surface mismatch: F{self.e} vs F{other.e}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.e, self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.e, self.a - other.a, self.b - other.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.e, -self.a, -self.b)

    def __mul__(self, n: int) -> DivisorClass:
        return DivisorClass(self.e, n * self.a, n * self.b)

    __rmul__ = __mul__

    def short(self) -> str:
        """``"2C+7f"``; the surface is left implicit."""
        terms = []
        for coeff, sym in ((self.a, "C"), (self.b, "f")):
            if coeff == 0:
                continue
            mag = "" if abs(coeff) == 1 else str(abs(coeff))
            sign = "-" if coeff < 0 else "+"
            terms.append((sign, mag + sym))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            out += sign + t
        return out

    def __str__(self) -> str:
        return f"{self.short()}@F{self.e}"

    def to_json(self) -> dict:
        return {"e": self.e, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class CohomologyTable:
    h0: int
    h1: int
    h2: int
    chi: int

    def __post_init__(self):
        if min(self.h0, self.h1, self.h2) < 0:
            raise InternalInconsistency(f"negative cohomology {self}")
        if self.chi != self.h0 - self.h1 + self.h2:
            raise InternalInconsistency(f"Euler characteristic mismatch in {self}")

    def __iter__(self):
        return iter((self.h0, self.h1, self.h2))


def intersect(D1: DivisorClass, D2: DivisorClass) -> int:
    D1._check(D2)
    e = D1.e
    return check_int64(-e * D1.a * D2.a + D1.a * D2.b + D2.a * D1.b, "intersection")


def canonical_class(e: int) -> DivisorClass:
    return DivisorClass(e, -2, -e - 2)


def is_effective(D: DivisorClass) -> bool:
    # the effective cone of F_e is spanned by C and f
    return D.a >= 0 and D.b >= 0


def is_very_ample(D: DivisorClass) -> bool:
    # on F_e ampleness and very ampleness coincide: a > 0 and b > a*e
    return D.a > 0 and D.b > D.a * D.e


def chi_rr(D: DivisorClass) -> int:
    """Riemann-Roch: ``D.(D-K)/2 + 1``."""
    twice = intersect(D, D - canonical_class(D.e))
    if twice % 2:
        raise InternalInconsistency(f"D.(D-K) is odd for {D}")
    return twice // 2 + 1


def _h0(D: DivisorClass) -> int:
    return _kernels.divisor_h0(D.e, D.a, D.b)


def cohomology(D: DivisorClass) -> CohomologyTable:
    h0 = _h0(D)
    h2 = _h0(canonical_class(D.e) - D)
    chi = chi_rr(D)
    h1 = h0 + h2 - chi
    if h1 < 0:
        raise InternalInconsistency(f"negative h1 for {D}: h0={h0} h2={h2} chi={chi}")
    return CohomologyTable(h0, h1, h2, chi)


def lattice_point_h0_oracle(D: DivisorClass) -> int:
    """Count monomials ``x^u y^v`` spanning H^0 by an explicit double loop.

    Sections of aC+bf correspond to lattice points with ``0 <= v <= a`` and
    ``0 <= u <= b - e*v``.
    """
    count = 0
    for v in range(0, D.a + 1):
        for u in range(0, D.b - D.e * v + 1):
            count += 1
    return count
