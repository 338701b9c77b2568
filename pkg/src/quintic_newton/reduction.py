"""Reduction of trinomial quintics x^5 + a*x + b to the canonical family.

Rescaling x by the fifth root of b turns Newton's method for x^5 + a*x + b
into Newton's method for x^5 - c*x + 1 with c = -a / |b|^(4/5); the scaling
commutes with the Newton step exactly, which ``conjugacy_check`` verifies
pointwise.  The b = 0 quintics have no constant term to normalize against
and reduce instead to one of three fixed degenerate forms.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .dynamics import C0, PoleError, family_value, newton_eval


@dataclass(frozen=True)
class BringJerrardQuintic:
    a: float
    b: float

    def value(self, x: float) -> float:
        try:
            return x ** 5 + self.a * x + self.b
        except OverflowError:
            if self.a == 0.0 or 4.0 * math.log(abs(x)) >= math.log(abs(self.a)):
                return math.copysign(math.inf, x)
            return math.copysign(math.inf, self.a * math.copysign(1.0, x))

    def newton(self, x: float, pole_tol: float = 1e-10) -> float:
        if abs(x) <= 1.0:
            den = 5.0 * x ** 4 + self.a
            if abs(den) <= pole_tol:
                raise PoleError(x, 0)
            return (4.0 * x ** 5 - self.b) / den
        inv = 1.0 / x
        den = 5.0 + self.a * inv ** 4
        if abs(den) <= pole_tol:
            raise PoleError(x, 0)
        return x * (4.0 - self.b * inv ** 5) / den


class Regime(enum.Enum):
    """Where the canonical parameter falls, read off the root structure."""
    NEGATIVE_C = "negative-c"            # one real root, no poles on the line
    ZERO_C = "zero-c"                    # one real root, single degenerate pole
    WINDOW_BAND = "window-band"          # one real root, two poles: coding band
    TANGENT = "tangent"                  # double root: band boundary
    THREE_ROOTS = "three-roots"          # three real roots, basins interleave


def classify_regime(c: float, rel_tol: float = 1e-12) -> Regime:
    if c < 0.0:
        return Regime.NEGATIVE_C
    if c == 0.0:
        return Regime.ZERO_C
    if abs(c - C0) <= rel_tol * C0:
        return Regime.TANGENT
    return Regime.WINDOW_BAND if c < C0 else Regime.THREE_ROOTS


@dataclass(frozen=True)
class ReducedQuintic:
    """Canonical form x^5 - c*x + 1, or a b = 0 degenerate form.

    kind is one of "canonical", "p_plus" (x^5 + x), "p_minus" (x^5 - x),
    "p_zero" (x^5).  ``scale`` is the factor carrying original coordinates
    to reduced ones: tau(x) = x * scale.
    """
    kind: str
    c: float
    scale: float

    def value(self, x: float) -> float:
        if self.kind == "canonical":
            return family_value(self.c, x)
        try:
            if self.kind == "p_plus":
                return x ** 5 + x
            if self.kind == "p_minus":
                return x ** 5 - x
            return x ** 5
        except OverflowError:
            return math.copysign(math.inf, x)

    def newton(self, x: float, pole_tol: float = 1e-10) -> float:
        if self.kind == "canonical":
            return newton_eval(self.c, x, pole_tol=pole_tol)
        if self.kind == "p_zero":
            return 0.8 * x
        sign = 1.0 if self.kind == "p_plus" else -1.0
        if abs(x) <= 1.0:
            den = 5.0 * x ** 4 + sign
            if abs(den) <= pole_tol:
                raise PoleError(x, 0)
            return 4.0 * x ** 5 / den
        den = 5.0 + sign * (1.0 / x) ** 4
        if abs(den) <= pole_tol:
            raise PoleError(x, 0)
        return 4.0 * x / den

    @property
    def regime(self) -> Regime | None:
        return classify_regime(self.c) if self.kind == "canonical" else None


def reduce_quintic(q: BringJerrardQuintic) -> ReducedQuintic:
    """Reduce x^5 + a*x + b; tau(x) = x * scale conjugates the Newton maps."""
    a, b = q.a, q.b
    if b == 0.0:
        if a == 0.0:
            return ReducedQuintic("p_zero", 0.0, 1.0)
        kind = "p_plus" if a > 0 else "p_minus"
        return ReducedQuintic(kind, 0.0, abs(a) ** -0.25)
    beta = math.copysign(abs(b) ** 0.2, b)
    return ReducedQuintic("canonical", -a / beta ** 4, 1.0 / beta)


@dataclass(frozen=True)
class ConjugacyReport:
    max_residual: float
    checked: int
    pole_points: tuple[float, ...]


def conjugacy_check(q: BringJerrardQuintic, reduced: ReducedQuintic,
                    points: list[float]) -> ConjugacyReport:
    """Largest relative mismatch of tau(N_q(x)) against N_reduced(tau(x)).

    Points where either Newton step sits on a pole are reported rather than
    silently dropped — hitting one means the test grid needs moving, not
    that the conjugacy holds vacuously.
    """
    worst = 0.0
    checked = 0
    poles: list[float] = []
    for x in points:
        try:
            lhs = q.newton(x) * reduced.scale
            rhs = reduced.newton(x * reduced.scale)
        except PoleError:
            poles.append(x)
            continue
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
        checked += 1
    return ConjugacyReport(worst, checked, tuple(poles))
