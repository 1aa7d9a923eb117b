"""Line bundles and split bundles on the projective line.

A split bundle ``O(a_1) + ... + O(a_r)`` on P^1 is recorded by its
:class:`SplittingType`. Specialization between splitting types of equal rank
and degree is decided by majorization of descending partial sums; the
semicontinuity formulation over twists is kept as :func:`specializes_by_twists`
so that the two criteria can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from ._kernels import check_int64


def h0_p1(d: int) -> int:
    """Dimension of the space of degree-``d`` binary forms."""
    return max(d + 1, 0)


def h1_p1(d: int) -> int:
    return max(-d - 1, 0)


@dataclass(frozen=True)
class SplittingType:
    """Degrees of a direct sum of line bundles on P^1, kept sorted descending."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(a) for a in self.parts), reverse=True))
        if not parts:
            raise ValueError("a splitting type needs at least one part")
        for a in parts:
            check_int64(a, "splitting degree")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> SplittingType:
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> SplittingType:
        """Read the comma-separated form used on the command line, e.g. ``"7,5,4,3,2"``."""
        items = [s.strip() for s in text.split(",")]
        if not items or any(not s for s in items):
            raise ValueError(f"cannot parse splitting type {text!r}")
        try:
            return cls(tuple(int(s) for s in items))
        except ValueError as exc:
            raise ValueError(f"cannot parse splitting type {text!r}") from exc

    def rank(self) -> int:
        return len(self.parts)

    def degree(self) -> int:
        return check_int64(sum(self.parts), "degree")

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.parts)


def splitting_cohomology(T: SplittingType, twist: int) -> tuple[int, int]:
    """``(h0, h1)`` of ``T`` tensored with ``O(twist)``."""
    return _kernels.h0_sum(T.parts, twist), _kernels.h1_sum(T.parts, twist)


def twist_window(*types: SplittingType) -> tuple[int, int]:
    """Twists outside this closed window make every h0 sum zero or affine in t."""
    hi = max(T.parts[0] for T in types)
    lo = min(T.parts[-1] for T in types)
    return -hi - 1, -lo + 1


def _same_rank_degree(general: SplittingType, special: SplittingType) -> bool:
    return general.rank() == special.rank() and general.degree() == special.degree()


def specializes(general: SplittingType, special: SplittingType) -> bool:
    """True when ``general`` flatly degenerates to ``special``.

    Same rank and degree, and the descending partial sums of ``special``
    dominate those of ``general`` (``special`` is less balanced).
    """
    if not _same_rank_degree(general, special):
        return False
    return _kernels.majorizes(general.parts, special.parts)


def specializes_by_twists(general: SplittingType, special: SplittingType) -> bool:
    """Semicontinuity test: h0 can only jump up along a specialization."""
    if not _same_rank_degree(general, special):
        return False
    lo, hi = twist_window(general, special)
    return _kernels.first_twist_violation(general.parts, special.parts, lo, hi) is None


def specialization_failure(general: SplittingType, special: SplittingType) -> str | None:
    """Human-readable reason ``general`` does not specialize to ``special``, or None."""
    if general.rank() != special.rank():
        return f"rank mismatch {general.rank()} ≠ {special.rank()}"
    if general.degree() != special.degree():
        return f"degree mismatch {general.degree()} ≠ {special.degree()}"
    lo, hi = twist_window(general, special)
    t = _kernels.first_twist_violation(general.parts, special.parts, lo, hi)
    if t is None:
        return None
    g0 = _kernels.h0_sum(general.parts, t)
    s0 = _kernels.h0_sum(special.parts, t)
    return f"h0 at twist {t} is {g0} for {general} but {s0} for {special}"
