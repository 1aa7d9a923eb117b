"""Formal intersection monomials on a smooth projective threefold.

Cycles are polynomials with exact rational coefficients in the canonical
class ``K``, the hyperplane class ``L`` and the Chern classes ``c2``, ``c3``,
truncated above codimension 3. A codimension-3 cycle is turned into a number
by pairing its monomials with an intersection table keyed by

    K3, K2L, KL2, L3, c2K, c2L, c3
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

_DEGREE = {"K": 1, "L": 1, "c2": 2, "c3": 3}
_ORDER = {"K": 0, "L": 1, "c2": 2, "c3": 3}

MONOMIAL_NAMES = {
    ("K", "K", "K"): "K3",
    ("K", "K", "L"): "K2L",
    ("K", "L", "L"): "KL2",
    ("L", "L", "L"): "L3",
    ("K", "c2"): "c2K",
    ("L", "c2"): "c2L",
    ("c3",): "c3",
}


def _deg(mono: tuple[str, ...]) -> int:
    return sum(_DEGREE[g] for g in mono)


class Cycle:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[str, ...], Fraction] | None = None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def gen(cls, name: str) -> Cycle:
        return cls({(name,): Fraction(1)})

    @classmethod
    def const(cls, c) -> Cycle:
        return cls({(): Fraction(c)})

    @staticmethod
    def _coerce(other) -> Cycle:
        return other if isinstance(other, Cycle) else Cycle.const(other)

    def __add__(self, other) -> Cycle:
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Cycle(out)

    __radd__ = __add__

    def __neg__(self) -> Cycle:
        return Cycle({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Cycle:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Cycle:
        return self._coerce(other) - self

    def __mul__(self, other) -> Cycle:
        other = self._coerce(other)
        out: dict[tuple[str, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2, key=_ORDER.__getitem__))
                if _deg(m) > 3:
                    continue
                out[m] = out.get(m, 0) + c1 * c2
        return Cycle(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Cycle:
        out = Cycle.const(1)
        for _ in range(n):
            out = out * self
        return out

    def part(self, degree: int) -> Cycle:
        return Cycle({m: c for m, c in self.terms.items() if _deg(m) == degree})

    def __repr__(self) -> str:
        return f"Cycle({self.terms!r})"


def integrate(cycle: Cycle, table: Mapping[str, int]) -> Fraction:
    """Degree of the codimension-3 part of ``cycle`` against ``table``."""
    total = Fraction(0)
    for m, c in cycle.part(3).terms.items():
        total += c * table[MONOMIAL_NAMES[m]]
    return total


K = Cycle.gen("K")
L = Cycle.gen("L")
C2 = Cycle.gen("c2")
C3 = Cycle.gen("c3")


def normal_bundle_chern(n: int) -> tuple[Cycle, Cycle, Cycle]:
    """Chern classes of the normal bundle of a threefold in P^n.

    From ``c(T_X) c(N) = (1 + L)^(n+1)`` with ``c1(X) = -K``.
    """
    n1 = K + (n + 1) * L
    n2 = Fraction(n * (n + 1), 2) * L**2 + (n + 1) * L * K + K**2 - C2
    n3 = (
        Fraction((n - 1) * n * (n + 1), 6) * L**3
        + Fraction(n * (n + 1), 2) * K * L**2
        + (n + 1) * K**2 * L
        - (n + 1) * C2 * L
        - 2 * C2 * K
        + K**3
        - C3
    )
    return n1, n2, n3


def chi_normal_bundle(n: int, table: Mapping[str, int], chi_O: int = 1) -> Fraction:
    """Hirzebruch-Riemann-Roch for the normal bundle (rank n - 3) of X in P^n."""
    n1, n2, n3 = normal_bundle_chern(n)
    c1 = -K
    expr = (
        Fraction(1, 6) * (n1**3 - 3 * n1 * n2 + 3 * n3)
        + Fraction(1, 4) * c1 * (n1**2 - 2 * n2)
        + Fraction(1, 12) * (c1**2 + C2) * n1
    )
    return integrate(expr, table) + (n - 3) * chi_O
