"""Invariants of the threefold scroll X = P(E) embedded in P^n by O(1).

Covers the embedding dimension and degree, the sectional genus, the table of
degree-3 intersection numbers, the Hilbert polynomial, the dimension of the
Hilbert-scheme component through X (closed form and Hirzebruch-Riemann-Roch),
tangent-bundle cohomology and the codimension of the locus of such scrolls.

The helpers taking raw ``(e, b, k)`` accept any ``e >= 0`` so that the same
formulas can be evaluated on the degenerate side (``e`` replaced by 0 or 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import hrr
from .divisors import InternalInconsistency, intersect
from .extensions import (
    ScrollConfig,
    classes_for,
    dim_ext1_direct,
    end_branch,
    h0_end_E,
    require_strict,
)

# X is a P^1-bundle over a rational surface, so chi(O_X) = chi(O_{F_e}) = 1
CHI_O_X = 1


@dataclass(frozen=True)
class ScrollInvariants:
    n: int
    d: int
    g: int


@dataclass(frozen=True)
class IntersectionTable:
    K3: int
    K2L: int
    KL2: int
    L3: int
    c2L: int
    c2K: int
    c3: int

    def as_dict(self) -> dict[str, int]:
        return {
            "K3": self.K3,
            "K2L": self.K2L,
            "KL2": self.KL2,
            "L3": self.L3,
            "c2L": self.c2L,
            "c2K": self.c2K,
            "c3": self.c3,
        }


@dataclass(frozen=True)
class HilbertPolynomial:
    """P(T) = sum coeffs[i] T^i, exact rationals, lowest degree first."""

    coeffs: tuple[Fraction, ...]

    def __call__(self, m: int) -> Fraction:
        return sum(c * m**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = {0: "", 1: "T"}.get(i, f"T^{i}")
            terms.append(f"({c})" + ("*" + mono if mono else ""))
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class CodimRecord:
    kind: str  # "exact" or "upper_bound"
    value: int
    dimY_lower_bound: int
    tau: int  # -1 when the extension space is zero
    h0End_generic: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "dimY_lower_bound": self.dimY_lower_bound,
            "tau": self.tau,
            "h0End_generic": self.h0End_generic,
        }


@dataclass
class ComponentReport:
    cfg: ScrollConfig
    invariants: ScrollInvariants
    dim_component: int
    dim_component_hrr: int
    chi_T: int
    h0_T: int | None
    h1_T: int | None
    codim_scroll_locus: CodimRecord
    flags: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.dim_component != self.dim_component_hrr:
            self.flags.append(
                f"inconsistent: closed-form dimension {self.dim_component} "
                f"!= HRR dimension {self.dim_component_hrr}"
            )

    @property
    def consistent(self) -> bool:
        return not any(f.startswith("inconsistent") for f in self.flags)

    def to_json(self) -> dict:
        inv = self.invariants
        return {
            "cfg": self.cfg.to_json(),
            "n": inv.n,
            "d": inv.d,
            "g": inv.g,
            "dim_component": self.dim_component,
            "dim_component_hrr": self.dim_component_hrr,
            "chi_T": self.chi_T,
            "h0_T": self.h0_T,
            "h1_T": self.h1_T,
            "codim": self.codim_scroll_locus.to_json(),
            "flags": list(self.flags),
        }


# -- formulas in raw (e, b, k) -------------------------------------------------


def embedding_dim(e: int, b: int, k: int) -> int:
    return 4 * b - k - 6 * e + 4


def degree(e: int, b: int, k: int) -> int:
    """d = c1^2 - c2, with c1 = 3C + b f on F_e."""
    pair = classes_for(e, b, k)
    return intersect(pair.c1, pair.c1) - pair.c2


def table_for(e: int, b: int, k: int) -> IntersectionTable:
    d = degree(e, b, k)
    return IntersectionTable(
        K3=-8 * d + 36 * b - 54 * e - 48,
        K2L=4 * d - 14 * b + 21 * e + 20,
        KL2=-2 * d + 4 * b - 6 * e - 6,
        L3=d,
        c2L=2 * b - 3 * e + 10,
        c2K=-24,
        c3=8,
    )


def hilbert_polynomial_for(e: int, b: int, k: int) -> HilbertPolynomial:
    t = table_for(e, b, k)
    return HilbertPolynomial(
        (
            Fraction(CHI_O_X),
            Fraction(t.K2L + t.c2L, 12),
            Fraction(-t.KL2, 4),
            Fraction(t.L3, 6),
        )
    )


def dim_closed_for(e: int, b: int, k: int) -> int:
    n = embedding_dim(e, b, k)
    return n * (n + 1) + 3 * k - 2 * b + 3 * e - 5


def dim_hrr_for(e: int, b: int, k: int) -> int:
    n = embedding_dim(e, b, k)
    chi = hrr.chi_normal_bundle(n, table_for(e, b, k).as_dict(), CHI_O_X)
    if chi.denominator != 1:
        raise InternalInconsistency(f"HRR gave non-integral chi(N) = {chi} at {(e, b, k)}")
    return int(chi)


# -- operations on admissible configurations -----------------------------------


def invariants(cfg: ScrollConfig) -> ScrollInvariants:
    require_strict(cfg)
    e, b, k = cfg.e, cfg.b, cfg.k
    n = embedding_dim(e, b, k)
    d = 6 * b - 9 * e - k
    if d != degree(e, b, k):
        raise InternalInconsistency(f"degree formula disagrees with c1^2 - c2 at {cfg}")
    # 2g - 2 = (K + 2L) L^2 = KL^2 + 2d
    twice_g_minus_2 = table_for(e, b, k).KL2 + 2 * d
    g = 2 * b - 3 * e - 2
    if twice_g_minus_2 != 2 * g - 2:
        raise InternalInconsistency(f"sectional genus mismatch at {cfg}")
    return ScrollInvariants(n, d, g)


def intersection_table(cfg: ScrollConfig) -> IntersectionTable:
    require_strict(cfg)
    return table_for(cfg.e, cfg.b, cfg.k)


def hilbert_polynomial(cfg: ScrollConfig) -> HilbertPolynomial:
    require_strict(cfg)
    return hilbert_polynomial_for(cfg.e, cfg.b, cfg.k)


def dim_component_closed(cfg: ScrollConfig) -> int:
    require_strict(cfg)
    return dim_closed_for(cfg.e, cfg.b, cfg.k)


def dim_component_hrr(cfg: ScrollConfig) -> int:
    require_strict(cfg)
    return dim_hrr_for(cfg.e, cfg.b, cfg.k)


def tangent_cohomology(cfg: ScrollConfig) -> tuple[int, int | None, int | None]:
    """``(chi(T_X), h0(T_X), h1(T_X))``; the last two only when Ext^1(B, A) = 0."""
    require_strict(cfg)
    e, b, k = cfg.e, cfg.b, cfg.k
    chi_T = 6 * b - 4 * k + 9 - 9 * e
    n = embedding_dim(e, b, k)
    # normal sequence: chi(T_X) = h0(T_P^n|X) - h0(N) with h0(T_P^n|X) = (n+1)^2 - 1
    if chi_T != (n + 1) ** 2 - 1 - dim_closed_for(e, b, k):
        raise InternalInconsistency(f"chi(T_X) disagrees with the normal sequence at {cfg}")
    if dim_ext1_direct(cfg) != 0:
        return chi_T, None, None
    h0_T = 6 * b - 4 * k - 8 * e + 8
    h1_T = e - 1
    if h0_T - h1_T != chi_T:
        raise InternalInconsistency(f"h0(T) - h1(T) != chi(T) at {cfg}")
    return chi_T, h0_T, h1_T


def codim_scroll_locus(cfg: ScrollConfig) -> CodimRecord:
    """Codimension in the component of the locus filled by the scrolls X_e."""
    require_strict(cfg)
    e = cfg.e
    n = embedding_dim(cfg.e, cfg.b, cfg.k)
    ext = dim_ext1_direct(cfg)
    h0End = h0_end_E(cfg, generic=True)
    if ext == 0:
        _, h0_T, _ = tangent_cohomology(cfg)
        # the locus is a single PGL-orbit: dimension n(n+2) - h0(T_X)
        dimY = n * (n + 2) - h0_T
        return CodimRecord("exact", e - 1, dimY, -1, h0End)
    tau = ext - 1
    # orbit dimension is at least n(n+2) - dim Aut(X), dim Aut(X) = h0(End E) + 4 + e
    dimY = tau + n * (n + 2) - h0End - 4 - e
    if dim_component_closed(cfg) - dimY > e - 1:
        raise InternalInconsistency(
            f"parameter count leaves codimension {dim_component_closed(cfg) - dimY} > e-1 at {cfg}"
        )
    return CodimRecord("upper_bound", e - 1, dimY, tau, h0End)


def component_report(cfg: ScrollConfig) -> ComponentReport:
    inv = invariants(cfg)
    chi_T, h0_T, h1_T = tangent_cohomology(cfg)
    report = ComponentReport(
        cfg=cfg,
        invariants=inv,
        dim_component=dim_component_closed(cfg),
        dim_component_hrr=dim_component_hrr(cfg),
        chi_T=chi_T,
        h0_T=h0_T,
        h1_T=h1_T,
        codim_scroll_locus=codim_scroll_locus(cfg),
    )
    hp = hilbert_polynomial(cfg)
    if hp(0) != CHI_O_X or hp(1) != inv.n + 1:
        report.flags.append(f"inconsistent: Hilbert polynomial P(0)={hp(0)}, P(1)={hp(1)}")
    report.flags.append(f"derived: sectional genus g={inv.g} (not printed in source)")
    if end_branch(cfg) != 1:
        report.flags.append("generic: h0(End E) is the value for a general extension")
    return report
