"""The Newton map of the one-parameter quintic family x^5 - c*x + 1.

For 0 < c < C0 the polynomial has a single real root and the Newton map on
the real line is a piecewise-monotone map with two poles (the critical
points of the polynomial) and one free critical point at zero.  This module
provides the map itself, the critical frame that cuts the line into the
coding pieces, orbit iteration with outcome classification, the raw
symbol stream of an orbit, and the locator for parameters whose critical
orbit closes up on a prescribed cycle word.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .words import RANK, is_admissible

# Parameter where the right local minimum of x^5 - c*x + 1 touches the axis:
# above it the polynomial has three real roots, below it one.
C0 = 5.0 * 2.0 ** (-1.6)


class PoleError(ArithmeticError):
    """An evaluation or orbit ran into a pole of the Newton map."""

    def __init__(self, x: float, iteration: int = 0):
        super().__init__(f"pole proximity at x={x!r} (iteration {iteration})")
        self.x = x
        self.iteration = iteration


# ----------------------------------------------------------------------
# the map
# ----------------------------------------------------------------------

def family_value(c: float, x: float) -> float:
    """f_c(x) = x^5 - c*x + 1."""
    try:
        return x ** 5 - c * x + 1.0
    except OverflowError:
        # the dominant term decides the sign; compare |x^5| with |c*x| in logs
        if c == 0.0 or 4.0 * math.log(abs(x)) >= math.log(abs(c)):
            return math.copysign(math.inf, x)
        return math.copysign(math.inf, -c * math.copysign(1.0, x))


def newton_eval(c: float, x: float, pole_tol: float = 1e-10) -> float:
    """One Newton step for f_c, written as (4x^5 - 1)/(5x^4 - c).

    For |x| > 1 the same fraction is evaluated in inverse powers of x,
    x*(4 - x^-5)/(5 - c*x^-4), so huge arguments never overflow the
    intermediate powers.
    """
    if not (math.isfinite(c) and math.isfinite(x)):
        raise ValueError(f"non-finite input c={c!r}, x={x!r}")
    if abs(x) <= 1.0:
        den = 5.0 * x ** 4 - c
        if abs(den) <= pole_tol:
            raise PoleError(x)
        return (4.0 * x ** 5 - 1.0) / den
    inv = 1.0 / x
    den = 5.0 - c * inv ** 4
    if abs(den) <= pole_tol:
        raise PoleError(x)
    return x * (4.0 - inv ** 5) / den


def newton_derivative(c: float, x: float, pole_tol: float = 1e-10) -> float:
    """N'(x) = 20 x^3 f_c(x) / f_c'(x)^2; zero exactly at roots and at zero."""
    if abs(x) <= 1.0:
        den = 5.0 * x ** 4 - c
        if abs(den) <= pole_tol:
            raise PoleError(x)
        return 20.0 * x ** 3 * family_value(c, x) / (den * den)
    inv = 1.0 / x
    den = 5.0 - c * inv ** 4
    if abs(den) <= pole_tol:
        raise PoleError(x)
    return 20.0 * (1.0 - c * inv ** 4 + inv ** 5) / (den * den)


# ----------------------------------------------------------------------
# critical frame
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CriticalFrame:
    """The four marked points cutting the line into the coding pieces.

    d0 is the real root of f_c left of both poles (unique there for every
    c > 0), d1 < 0 < d3 are the poles of the Newton map, and d2 = 0 is the
    free critical point.
    """

    c: float
    d0: float
    d1: float
    d2: float
    d3: float

    def classify(self, x: float) -> str:
        if x < self.d0:
            return "A"
        if x < self.d1:
            return "B"
        if x < 0.0:
            return "L"
        if x == 0.0:
            return "C"
        if x < self.d3:
            return "M"
        return "R"


def critical_frame(c: float) -> CriticalFrame:
    """Compute the frame for c > 0 (poles require a positive parameter)."""
    if not (c > 0.0 and math.isfinite(c)):
        raise ValueError(f"the critical frame needs c > 0, got {c!r}")
    d1 = -((c / 5.0) ** 0.25)
    d3 = -d1
    # f is positive at d1 (local max) and falls to -inf leftwards: bracket
    # down until the sign flips, then bisect.
    lo, hi = d1 - 1.0, d1
    while family_value(c, lo) >= 0.0:
        lo = d1 + 2.0 * (lo - d1)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if family_value(c, mid) < 0.0:
            lo = mid
        else:
            hi = mid
    d0 = 0.5 * (lo + hi)
    # a couple of Newton polish steps squeeze out the last bits
    for _ in range(3):
        fp = 5.0 * d0 ** 4 - c
        if fp != 0.0:
            d0 -= family_value(c, d0) / fp
    return CriticalFrame(c, d0, d1, 0.0, d3)


# ----------------------------------------------------------------------
# orbit iteration
# ----------------------------------------------------------------------

class OrbitResult:
    """Base class for orbit outcomes; match on the concrete type."""


@dataclass(frozen=True)
class ConvergedToRoot(OrbitResult):
    root: float
    iterations: int


@dataclass(frozen=True)
class PeriodicOrbit(OrbitResult):
    period: int
    phase: int
    representative: float
    iterations: int


@dataclass(frozen=True)
class HitPole(OrbitResult):
    iteration: int
    point: float


@dataclass(frozen=True)
class Truncated(OrbitResult):
    iterations: int
    last: float


def iterate_orbit(c: float, x0: float, max_iter: int = 100_000,
                  tol: float = 1e-12, pole_tol: float = 1e-10,
                  period_cap: int = 64) -> OrbitResult:
    """Iterate the Newton map and classify what the orbit does.

    Convergence means |f_c(x)| < tol (Newton then contracts quadratically,
    so the value test is the robust one).  Periodicity is the smallest lag
    <= period_cap that matches within tol and survives a confirmation
    window of three more laps without drift.
    """
    x = x0
    history = [x]
    for n in range(1, max_iter + 1):
        try:
            x = newton_eval(c, x, pole_tol)
        except PoleError as exc:
            return HitPole(n, exc.x)
        if abs(family_value(c, x)) < tol:
            root = x
            for _ in range(4):
                den = 5.0 * root ** 4 - c
                if den == 0.0:
                    break
                root -= family_value(c, root) / den
            return ConvergedToRoot(root, n)
        scale = max(1.0, abs(x))
        for lag in range(1, min(period_cap, len(history)) + 1):
            if abs(x - history[-lag]) < tol * scale:
                ok = True
                y = x
                seg = [x]
                try:
                    for _ in range(3 * lag):
                        y = newton_eval(c, y, pole_tol)
                        seg.append(y)
                except PoleError:
                    ok = False
                if ok:
                    for j in range(len(seg) - lag):
                        if abs(seg[j + lag] - seg[j]) >= 10 * tol * max(1.0, abs(seg[j])):
                            ok = False
                            break
                if ok:
                    return PeriodicOrbit(lag, n % lag, x, n)
                break  # failed confirmation: keep iterating, do not try longer lags now
        history.append(x)
        if len(history) > period_cap + 1:
            del history[0]
    return Truncated(max_iter, x)


# ----------------------------------------------------------------------
# symbol stream
# ----------------------------------------------------------------------

def symbol_stream(c: float, x0: float, n: int, tol: float = 1e-10,
                  pole_tol: float = 1e-10) -> str:
    """First n symbols of the orbit of x0, as a plain string.

    Landing within tol of zero reads C and the orbit continues; entering
    A or B ends the stream (everything after is A forever); passing within
    pole_tol of a pole raises PoleError.
    """
    frame = critical_frame(c)
    x = x0
    out: list[str] = []
    for i in range(n):
        if abs(x - frame.d1) <= pole_tol or abs(x - frame.d3) <= pole_tol:
            raise PoleError(x, i)
        if abs(x) <= tol:
            out.append("C")
        else:
            s = frame.classify(x)
            out.append(s)
            if s in ("A", "B"):
                break
        x = newton_eval(c, x, pole_tol)
    return "".join(out)


def critical_symbols(c: float, n: int, tol: float = 1e-10) -> str:
    """Symbols of the orbit of the free critical value N(0) = 1/c."""
    return symbol_stream(c, newton_eval(c, 0.0), n, tol)


# ----------------------------------------------------------------------
# superstable parameter location
# ----------------------------------------------------------------------

def _compare_stream_to_cycle(stream: str, word: str) -> int:
    """Signed lex comparison of a finite stream against a repeating cycle
    word; 0 when the stream never separates from the cycle."""
    k = len(word)
    flips = 0
    for i, s in enumerate(stream):
        w = word[i % k]
        if s != w:
            cmp = 1 if RANK[s] > RANK[w] else -1
            return cmp if flips % 2 == 0 else -cmp
        if s in ("B", "L"):
            flips += 1
    return 0


def _critical_symbols_robust(c: float, n: int) -> str:
    """Symbol stream of the critical value, nudging c off measure-zero
    pole collisions instead of failing the whole search."""
    for bump in (0.0, 1e-13, -1e-13, 1e-12):
        try:
            return critical_symbols(c * (1.0 + bump), n)
        except PoleError:
            continue
    raise PoleError(c)


def find_superstable_parameter(word: str, bracket: tuple[float, float] | None = None,
                               tol: float = 1e-13) -> float:
    """Parameter where the critical orbit closes up on the given cycle word.

    The kneading sequence is monotone in c, so the word's position in the
    symbolic order pins the parameter down by bisection; a final bisection
    on the sign of the k-th return of zero polishes the result.  Raises
    ValueError when the word is not an admissible cycle word or no
    parameter in the bracket realizes it.
    """
    if not (isinstance(word, str) and word.endswith("C") and is_admissible(word)):
        raise ValueError(f"not an admissible cycle word: {word!r}")
    k = len(word)
    lo, hi = bracket if bracket is not None else (1e-4, C0 - 1e-9)
    if not (0.0 < lo < hi):
        raise ValueError(f"bad bracket {bracket!r}")
    horizon = max(64, 6 * k)

    def side(c: float) -> int:
        # realized > word means c is below the target, realized < word above
        return _compare_stream_to_cycle(_critical_symbols_robust(c, horizon), word)

    s_lo, s_hi = side(lo), side(hi)
    if s_lo < 0 or s_hi > 0:
        raise ValueError(f"no parameter for {word} inside bracket ({lo}, {hi})")
    a, b = lo, hi
    for _ in range(200):
        if b - a <= max(tol, 1e-16 * b):
            break
        m = 0.5 * (a + b)
        s = side(m)
        if s > 0:
            a = m
        elif s < 0:
            b = m
        else:
            break  # stream no longer separates: close enough for polishing

    def kth_return(c: float) -> float:
        x = 0.0
        for _ in range(k):
            x = newton_eval(c, x)
        return x

    try:
        ga, gb = kth_return(a), kth_return(b)
        if (ga < 0) != (gb < 0):
            aa, bb = a, b
            while bb - aa > max(tol, 1e-16 * bb):
                mm = 0.5 * (aa + bb)
                gm = kth_return(mm)
                if gm == 0.0:
                    aa = bb = mm
                    break
                if (ga < 0) != (gm < 0):
                    bb = mm
                else:
                    aa, ga = mm, gm
            a, b = aa, bb
    except PoleError:
        pass  # fall back to the order bisection midpoint
    c_star = 0.5 * (a + b)
    residual = abs(kth_return(c_star))
    # secant polish: near the band edge the k-th return is steep in c, so
    # bisection at c-resolution tol can still leave a sizable residual
    try:
        cp, gp = a, kth_return(a)
        cc, gc = c_star, kth_return(c_star)
        for _ in range(12):
            if gc == 0.0 or gc == gp:
                break
            cn = cc - gc * (cc - cp) / (gc - gp)
            if not (lo < cn < hi):
                break
            cp, gp = cc, gc
            cc, gc = cn, kth_return(cn)
            if abs(gc) < 1e-14:
                break
        if abs(gc) < residual:
            c_star, residual = cc, abs(gc)
    except PoleError:
        pass
    if residual > 1e-8:
        raise ValueError(
            f"{word} not realized: return residual {residual:.3e} at c={c_star!r}")
    realized = _critical_symbols_robust(c_star, k)[: k - 1]
    if realized != word[: k - 1]:
        raise ValueError(
            f"bracket closed on {realized!r}, not {word[:-1]!r}")
    return c_star
