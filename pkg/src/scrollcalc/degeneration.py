"""Moving the scroll from F_e to F_eps, eps in {0, 1}, and back.

For ``e >= 2`` put ``eps = e mod 2`` and ``b_eps = b - 3(e - eps)/2`` while
keeping ``k``. The scroll built from the same recipe on F_eps has the same
degree, embedding dimension and component dimension as X_e. The pushforwards
of the decomposable bundles to P^1 are rank-five splitting types, and the one
coming from F_eps specializes to the one from F_e. That pair of facts is the
numerical certificate produced by :func:`specialization_certificate`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import scroll
from .divisors import DivisorClass, InternalInconsistency, cohomology, intersect, is_very_ample
from .extensions import BundlePair, ScrollConfig, classes_for, require_strict
from .p1 import SplittingType, h0_p1, specializes, twist_window


@dataclass(frozen=True)
class EpsilonConfig:
    eps: int
    b_eps: int
    k_eps: int
    parent: ScrollConfig

    def __post_init__(self):
        p = self.parent
        if self.eps not in (0, 1) or (p.e - self.eps) % 2:
            raise ValueError(f"eps must be 0 or 1 with eps = e mod 2, got {self.eps} for e={p.e}")
        if self.k_eps != p.k:
            raise ValueError("k_eps must equal the parent k")
        if 2 * self.b_eps != 2 * p.b - 3 * (p.e - self.eps):
            raise ValueError("b_eps must equal b - 3(e - eps)/2")
        if translated_bounds_hold(self) != _strict(p):
            raise InternalInconsistency(
                f"translated bounds disagree with the parent admissibility at {p}"
            )

    def to_json(self) -> dict:
        return {"eps": self.eps, "b": self.b_eps, "k": self.k_eps}


def _strict(cfg: ScrollConfig) -> bool:
    e, b, k = cfg.e, cfg.b, cfg.k
    return b >= 3 * e + 1 and b - e < k < 2 * b - 4 * e


def translated_bounds_hold(ec: EpsilonConfig) -> bool:
    """Admissibility rewritten in (eps, b_eps, k_eps); all fractions doubled."""
    e, eps, b, k = ec.parent.e, ec.eps, ec.b_eps, ec.k_eps
    return (
        2 * b >= 3 * (e + eps) + 2
        and 2 * b + e - 3 * eps < 2 * k
        and k < 2 * b - 3 * eps - e
    )


def translate(e: int, b: int, k: int) -> tuple[int, int, int]:
    """``(eps, b_eps, k_eps)`` for any ``e >= 0``; the identity when e is already 0 or 1."""
    eps = e % 2
    return eps, b - 3 * (e - eps) // 2, k


def epsilon_config(cfg: ScrollConfig) -> EpsilonConfig:
    require_strict(cfg)
    return EpsilonConfig(*translate(cfg.e, cfg.b, cfg.k), cfg)


def epsilon_classes(ec: EpsilonConfig) -> BundlePair:
    pair = classes_for(ec.eps, ec.b_eps, ec.k_eps)
    if not (is_very_ample(pair.A) and is_very_ample(pair.B)):
        raise InternalInconsistency(f"A_eps or B_eps is not very ample for {ec}")
    return pair


def dim_ext1_eps_piecewise(ec: EpsilonConfig) -> int:
    eps, b, k = ec.eps, ec.b_eps, ec.k_eps
    if 2 * k < 3 * b + 2 - 5 * eps:
        return 0
    return 4 * k - 6 * b - 2 + 9 * eps


def h0_end_eps(ec: EpsilonConfig) -> int:
    """Endomorphisms of a general E_eps; first branch is the split bundle."""
    eps, b, k = ec.eps, ec.b_eps, ec.k_eps
    if 2 * k < 3 * b + 2 - 5 * eps:
        return 6 * b - 4 * k - 9 * eps + 4
    return 1


@dataclass(frozen=True)
class Invariance:
    deg_match: bool
    h0_match: bool
    dim_match: bool

    def all(self) -> bool:
        return self.deg_match and self.h0_match and self.dim_match

    def to_json(self) -> dict:
        return {"deg_match": self.deg_match, "h0_match": self.h0_match, "dim_match": self.dim_match}


def epsilon_invariance(cfg: ScrollConfig) -> Invariance:
    """Compare degree, h0 and component dimension of X_eps with those of X_e."""
    ec = epsilon_config(cfg)
    pair = epsilon_classes(ec)
    inv = scroll.invariants(cfg)

    deg_eps = intersect(pair.c1, pair.c1) - pair.c2
    cA, cB = cohomology(pair.A), cohomology(pair.B)
    if cA.h1 or cA.h2 or cB.h1 or cB.h2:
        raise InternalInconsistency(f"A_eps or B_eps has higher cohomology at {cfg}")
    h0_eps = cA.h0 + cB.h0
    n = inv.n
    dim_eps = n * (n + 1) + 3 * ec.k_eps - 2 * ec.b_eps + 3 * ec.eps - 5
    dim_eps_hrr = scroll.dim_hrr_for(ec.eps, ec.b_eps, ec.k_eps)
    dim_e = scroll.dim_component_closed(cfg)
    return Invariance(
        deg_match=deg_eps == inv.d,
        h0_match=h0_eps == n + 1,
        dim_match=dim_eps == dim_e and dim_eps_hrr == dim_e,
    )


def _pushforward(e: int, A: DivisorClass, B: DivisorClass) -> SplittingType:
    # pi_*(aC + bf) = Sym^a(O + O(-e)) (x) O(b) for a >= 0
    parts = [A.b - i * e for i in range(A.a + 1)] + [B.b - i * e for i in range(B.a + 1)]
    return SplittingType(tuple(parts))


def pushforward_type(cfg: ScrollConfig) -> SplittingType:
    require_strict(cfg)
    e, b, k = cfg.e, cfg.b, cfg.k
    pair = classes_for(e, b, k)
    T = _pushforward(e, pair.A, pair.B)
    if T.degree() != 4 * b - k - 6 * e:
        raise InternalInconsistency(f"pushforward degree mismatch at {cfg}")
    return T


def pushforward_type_eps(cfg: ScrollConfig) -> SplittingType:
    ec = epsilon_config(cfg)
    pair = epsilon_classes(ec)
    T = _pushforward(ec.eps, pair.A, pair.B)
    if T.degree() != pushforward_type(cfg).degree():
        raise InternalInconsistency(f"eps-side pushforward degree differs at {cfg}")
    return T


def xi_eta_parts(cfg: ScrollConfig) -> SplittingType:
    """The eps-side pushforward written directly in the parent's (e, b, k)."""
    e, b, k = cfg.e, cfg.b, cfg.k
    eps = e % 2
    xi2 = 2 * b - k - 3 * e
    return SplittingType(
        (
            xi2 + eps,
            xi2,
            xi2 - eps,
            k - b + (3 * e + eps) // 2,
            k - b + (3 * e - eps) // 2,
        )
    )


@dataclass(frozen=True)
class Certificate:
    cfg: ScrollConfig
    eps_cfg: EpsilonConfig
    balanced_side: SplittingType
    special_side: SplittingType
    dominates: bool
    gap_profile: list[tuple[int, int, int]]

    def to_json(self) -> dict:
        return {
            "cfg": self.cfg.to_json(),
            "eps_cfg": self.eps_cfg.to_json(),
            "type_e": self.special_side.to_json(),
            "type_eps": self.balanced_side.to_json(),
            "dominates": self.dominates,
            "gap_profile": [list(row) for row in self.gap_profile],
        }


def specialization_certificate(cfg: ScrollConfig) -> Certificate:
    ec = epsilon_config(cfg)
    t_e = pushforward_type(cfg)
    t_eps = pushforward_type_eps(cfg)
    lo, hi = twist_window(t_e, t_eps)
    profile = [
        (t, sum(h0_p1(a + t) for a in t_eps.parts), sum(h0_p1(a + t) for a in t_e.parts))
        for t in range(lo, hi + 1)
    ]
    return Certificate(cfg, ec, t_eps, t_e, specializes(t_eps, t_e), profile)


def join_spans(cfg: ScrollConfig) -> tuple[int, int]:
    """``(l, r)`` with P^l, P^r the linear spans of the two section surfaces."""
    pair = classes_for(cfg.e, cfg.b, cfg.k)
    return cohomology(pair.A).h0 - 1, cohomology(pair.B).h0 - 1
