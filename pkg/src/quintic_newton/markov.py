"""Markov partitions at cycle parameters, transition matrices, and the
three entropy routes.

When the critical orbit is periodic the marked points plus the orbit cut
the line into intervals that map onto unions of each other; the growth rate
of the resulting 0/1 transition matrix is one route to the topological
entropy.  The kneading determinant gives a second, exact route, and lap
counting through powers of the matrix a third.  ``entropy_curve`` walks a
parameter grid using the kneading route, resolving each sampled orbit to a
closed symbolic form when it can and falling back to a truncated series
whose tail is provably below the working tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dynamics import (
    PoleError,
    critical_frame,
    newton_eval,
)
from .kneading import determinant_polynomial, kneading_determinant
from .polynomials import IntPolynomial, smallest_root_in
from .words import LAP_SIGN, SymbolWord, TAIL_PERIODIC

# entropy lives in [0, log(1+sqrt(2))]; the smallest admissible root of the
# entropy polynomials is sqrt(2)-1, searched with a hair of margin
BAND_ROOT_LO = math.sqrt(2.0) - 1.0
ENTROPY_MAX = math.log(1.0 + math.sqrt(2.0))


@dataclass(frozen=True)
class EntropyResult:
    t_star: float
    h: float
    method: str


def _result_from_root(t_star: float | None, method: str) -> EntropyResult:
    if t_star is None:
        return EntropyResult(1.0, 0.0, method)
    return EntropyResult(t_star, max(0.0, -math.log(t_star)), method)


def _band_root(f, tol: float = 1e-13) -> float | None:
    return smallest_root_in(f, BAND_ROOT_LO - 1e-9, 1.0, tol=tol)


# ----------------------------------------------------------------------
# partition and transition matrix
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class MarkovPartition:
    c: float
    boundaries: tuple[float, ...]
    intervals: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class TransitionMatrix:
    partition: MarkovPartition
    matrix: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.matrix)


def critical_orbit(c: float, period_cap: int = 64,
                   return_tol: float = 1e-6) -> list[float]:
    """The periodic critical orbit [0, N(0), ...] at a cycle parameter.

    Raises ValueError when the orbit fails to return to zero within the
    cap — the partition construction only makes sense on a closed orbit.
    """
    pts = [0.0]
    x = 0.0
    for _ in range(period_cap):
        x = newton_eval(c, x)
        if abs(x) <= return_tol:
            return pts
        pts.append(x)
    raise ValueError(f"critical orbit does not close up at c={c!r}")


def markov_partition(c: float, orbit: list[float] | None = None,
                     tol: float = 1e-9) -> MarkovPartition:
    """Cut the line along the marked points and the critical orbit.

    The piece between the free root and the left pole is transient — no
    orbit point lies there and nothing maps back into it — so it is left
    out of the state set.
    """
    frame = critical_frame(c)
    pts = critical_orbit(c) if orbit is None else [float(p) for p in orbit]
    marked = [frame.d0, frame.d1, frame.d3]
    for p in pts:
        for m in marked:
            if abs(p - m) < tol:
                raise ValueError(
                    f"orbit point {p!r} collides with a marked point {m!r}")
    for i, p in enumerate(pts):
        for q in pts[:i]:
            if abs(p - q) < tol:
                raise ValueError(f"degenerate orbit: {p!r} repeats")
        if frame.d0 < p < frame.d1:
            raise ValueError(
                f"orbit point {p!r} inside the transient gap; not a cycle orbit")
    boundaries = sorted(marked + pts)
    i0 = boundaries.index(frame.d0)
    if boundaries[i0 + 1] != frame.d1:
        raise ValueError("the transient gap is not empty")
    intervals: list[tuple[float, float]] = [(-math.inf, boundaries[0])]
    for i in range(len(boundaries) - 1):
        if i == i0:
            continue
        intervals.append((boundaries[i], boundaries[i + 1]))
    intervals.append((boundaries[-1], math.inf))
    return MarkovPartition(c, tuple(boundaries), tuple(intervals))


def transition_matrix(partition: MarkovPartition,
                      inner: float = 1e-9) -> TransitionMatrix:
    """0/1 matrix: does the open image of interval i cover part of j?

    The map is monotone on each interval (all turning and blow-up points
    are boundaries), so the image is the open interval between the one-sided
    limits at the ends.  Those limits must land on partition boundaries or
    escape beyond the frame; each computed endpoint is snapped to the grid
    and an endpoint that fails to snap raises, rather than guessing.
    """
    c = partition.c
    bounds = partition.boundaries
    gaps = [b2 - b1 for b1, b2 in zip(bounds, bounds[1:])]
    snap_tol = min(1e-5, min(gaps) / 8.0)

    def endpoint(x: float, from_right: bool) -> float:
        if math.isinf(x):
            return x  # N(x) ~ 4x/5 far out, same sign of infinity
        s = 1.0 if from_right else -1.0
        # one-sided limit by Richardson step: cancels the O(|N'| h) skew,
        # which near a pole-adjacent boundary would exceed the snap window
        v1 = newton_eval(c, x + s * inner)
        v2 = newton_eval(c, x + s * 2.0 * inner)
        return 2.0 * v1 - v2

    def snap(v: float) -> float:
        if math.isinf(v):
            return v
        if v > bounds[-1] + snap_tol:
            return math.inf
        if v < bounds[0] - snap_tol:
            return -math.inf
        best = min(bounds, key=lambda b: abs(b - v))
        if abs(best - v) <= snap_tol:
            return best
        raise ValueError(
            f"image endpoint {v!r} does not align with the partition "
            f"(nearest boundary off by {abs(best - v):.2e})")

    rows: list[tuple[int, ...]] = []
    for (u, w) in partition.intervals:
        a = endpoint(u, from_right=True)
        b = endpoint(w, from_right=False)
        lo, hi = snap(min(a, b)), snap(max(a, b))
        row = []
        for (p, q) in partition.intervals:
            row.append(1 if min(hi, q) - max(lo, p) > 0 else 0)
        rows.append(tuple(row))
    return TransitionMatrix(partition, tuple(rows))


# ----------------------------------------------------------------------
# characteristic polynomial and the entropy routes
# ----------------------------------------------------------------------

def _mat_mul(A, B):
    n = len(A)
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def char_poly(tm: TransitionMatrix | tuple[tuple[int, ...], ...]) -> IntPolynomial:
    """det(I - t*M) exactly, via traces of powers and Newton's identities."""
    M = list(list(r) for r in (tm.matrix if isinstance(tm, TransitionMatrix) else tm))
    n = len(M)
    traces = []
    P = M
    for _ in range(n):
        traces.append(sum(P[i][i] for i in range(n)))
        P = _mat_mul(P, M)
    e = [Fraction(1)]
    for j in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, j + 1):
            acc += (-1) ** (i - 1) * e[j - i] * traces[i - 1]
        e.append(acc / j)
    coeffs = []
    for j, ej in enumerate(e):
        if ej.denominator != 1:
            raise ArithmeticError("non-integer coefficient in char poly")
        coeffs.append((-1) ** j * int(ej))
    return IntPolynomial(coeffs)


def entropy_from_charpoly(p: IntPolynomial, tol: float = 1e-13) -> EntropyResult:
    """Entropy from the smallest band root of det(I - t*M)."""
    return _result_from_root(_band_root(p, tol), "charpoly")


def kneading_numerator(word) -> IntPolynomial:
    """Reduced numerator of the kneading determinant for any resolved word."""
    if isinstance(word, str) and word and word[-1] in ("C", "A"):
        return determinant_polynomial(word)
    return kneading_determinant(word).reduce().num


def entropy_from_kneading(word, tol: float = 1e-13) -> EntropyResult:
    """Entropy from the kneading determinant of a kneading word.

    Accepts cycle/convergent strings or a resolved SymbolWord (periodic
    tails included, so window-interior sequences work too)."""
    return _result_from_root(_band_root(kneading_numerator(word), tol), "kneading")


def lap_growth_estimate(c: float, k_max: int = 20) -> EntropyResult:
    """Entropy from the growth of path counts through the transition matrix.

    The total number of admissible k-step itineraries grows like the
    spectral radius; the ratio of consecutive totals converges to it
    geometrically (much faster than the k-th root does).
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    tm = transition_matrix(markov_partition(c))
    M = [list(r) for r in tm.matrix]
    P = M
    prev = None
    total = sum(sum(r) for r in P)
    for _ in range(k_max - 1):
        prev = total
        P = _mat_mul(P, M)
        total = sum(sum(r) for r in P)
    ratio = total / prev
    return EntropyResult(1.0 / ratio, math.log(ratio), "lap-growth")


# ----------------------------------------------------------------------
# the entropy curve
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CurvePoint:
    c: float
    t_star: float
    entropy: float
    method: str
    period: int


def _orbit_symbols(c: float, horizon: int,
                   tol: float = 1e-10) -> tuple[list[str], list[float], int]:
    """Symbols and points of the critical value orbit.

    Returns (symbols, points, pole_index); pole_index is the position where
    a pole cut the stream short, or -1.  Entering A or B ends the stream
    (the continuation is an infinite A run)."""
    frame = critical_frame(c)
    x = newton_eval(c, 0.0)
    syms: list[str] = []
    xs: list[float] = []
    for i in range(horizon):
        if abs(x - frame.d1) <= tol or abs(x - frame.d3) <= tol:
            return syms, xs, i
        xs.append(x)
        if abs(x) <= tol:
            syms.append("C")
            return syms, xs, -1
        s = frame.classify(x)
        syms.append(s)
        if s in ("A", "B"):
            return syms, xs, -1
        x = newton_eval(c, x)
    return syms, xs, -1


def _series_root(syms: list[str], tol: float = 1e-13) -> float | None:
    """Smallest band root of the truncated kneading series.

    The series is the cleared determinant written symbol by symbol; with
    the weights bounded by 1 the truncation error at t is below
    2 t^(H+1) / (1 - t), which the caller checks against the root found.
    """
    signs = [1]
    for s in syms[:-1]:
        signs.append(signs[-1] * LAP_SIGN[s])

    def f(t: float) -> float:
        acc = 1.0 - 3.0 * t
        tm = 1.0
        for e, s in zip(signs, syms):
            tm *= t
            if s == "L":
                w = t
            elif s == "M":
                w = 1.0 - 2.0 * t
            elif s == "R":
                w = 1.0 - t
            else:
                w = 0.0
            acc += 2.0 * e * w * tm
        return acc

    return smallest_root_in(f, BAND_ROOT_LO - 1e-9, 1.0 - 1e-9, tol=tol)


def entropy_point(c: float, horizon: int = 64, max_horizon: int = 4096) -> CurvePoint:
    """Entropy at a single parameter through the kneading route.

    Orbits that close up, fall into the absorbing run, or settle on a
    periodic tail within the horizon get the exact polynomial treatment;
    anything else gets the truncated series, with the horizon grown until
    the series tail is negligible at the root found.
    """
    H = horizon
    nudges = 0
    while True:
        syms, xs, pole_at = _orbit_symbols(c, H)
        if 0 <= pole_at < 24 and nudges < 3:
            # an early pole collision: nudge off the measure-zero parameter
            c = c * (1.0 + 1e-12)
            nudges += 1
            continue
        hit_pole = pole_at >= 0
        if hit_pole:
            syms, xs = syms[:pole_at], xs[:pole_at]
        last = syms[-1] if syms else ""
        if last == "C":
            word = "".join(syms[:-1]) + "C"
            root = _band_root(kneading_numerator(word))
            return _curve_point(c, root, "kneading", len(word))
        if last in ("A", "B"):
            word = "".join(syms[:-1]) + "A"
            root = _band_root(kneading_numerator(word))
            return _curve_point(c, root, "kneading", 0)
        s_p = _tail_period(syms, xs)
        if s_p is not None:
            s, p = s_p
            Y = SymbolWord("".join(syms[: s + p]), TAIL_PERIODIC, s)
            root = _band_root(kneading_numerator(Y))
            return _curve_point(c, root, "kneading", p)
        root = _series_root(syms)
        t_hat = root if root is not None else 1.0 - 1e-9
        tail = 2.0 * t_hat ** (len(syms) + 1) / max(1e-9, 1.0 - t_hat)
        if tail < 1e-12 or H >= max_horizon or hit_pole:
            return _curve_point(c, root, "kneading-series", 0)
        H = min(max_horizon, 2 * H)


def _curve_point(c: float, root: float | None, method: str, period: int) -> CurvePoint:
    res = _result_from_root(root, method)
    return CurvePoint(c, res.t_star, res.h, method, period)


def _tail_period(syms: list[str], xs: list[float],
                 tol: float = 1e-9) -> tuple[int, int] | None:
    """Earliest (start, period) with a numerically repeating tail, or None."""
    n = len(xs)
    for p in range(1, min(n // 2, 256) + 1):
        for s in range(0, n - 2 * p + 1):
            if abs(xs[s + p] - xs[s]) < tol * max(1.0, abs(xs[s])):
                if all(syms[j] == syms[j + p] for j in range(s, len(syms) - p)):
                    return s, p
    return None


def entropy_curve(c_lo: float, c_hi: float, n: int,
                  horizon: int = 64, workers: int = 1) -> list[CurvePoint]:
    """Entropy sampled on a uniform closed grid of n parameters."""
    if n < 2:
        raise ValueError("need at least two grid points")
    if not (0.0 < c_lo < c_hi):
        raise ValueError(f"bad parameter range ({c_lo}, {c_hi})")
    cs = [c_lo + (c_hi - c_lo) * i / (n - 1) for i in range(n)]
    if workers > 1:
        import multiprocessing as mp
        with mp.Pool(workers) as pool:
            return pool.starmap(entropy_point, [(c, horizon) for c in cs])
    return [entropy_point(c, horizon) for c in cs]
