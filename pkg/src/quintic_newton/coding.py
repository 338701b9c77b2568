"""Numeric orbit coding: itineraries as SymbolWords and the kneading data.

The symbols come straight from the critical frame; the work here is tail
classification — deciding from the floating-point orbit whether the
itinerary has fallen into the absorbing A run, closed up on a periodic
block, or remains unresolved at the requested length.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dynamics import critical_frame, newton_eval, PoleError
from .words import (
    SymbolWord,
    TAIL_A_INF,
    TAIL_PERIODIC,
    TAIL_UNRESOLVED,
)


def itinerary(c: float, x0: float, length: int, tol: float = 1e-10) -> SymbolWord:
    """Symbolic itinerary of the orbit of x0 under the Newton map.

    A point within tol of zero reads C; within tol of a pole the itinerary
    is undefined and PoleError is raised.  The tail is classified from the
    numeric orbit: entering A or B resolves to an infinite A run, a revisit
    of an earlier point within tol resolves to a periodic tail, anything
    else is left unresolved.
    """
    if length < 1:
        raise ValueError("length must be positive")
    frame = critical_frame(c)
    xs = [x0]
    syms: list[str] = []
    x = x0
    for i in range(length):
        if abs(x - frame.d1) <= tol or abs(x - frame.d3) <= tol:
            raise PoleError(x, i)
        if abs(x) <= tol:
            syms.append("C")
        else:
            s = frame.classify(x)
            syms.append(s)
            if s in ("A", "B"):
                # the left end is absorbing: the rest of the word is A
                head = "".join(syms) if s == "A" else "".join(syms) + "A"
                return SymbolWord(head, TAIL_A_INF)
        x = newton_eval(c, x)
        xs.append(x)

    # look for the earliest numeric recurrence x_{s+p} == x_s
    n = len(syms)
    for p in range(1, n // 2 + 1):
        for s in range(0, n - 2 * p + 1):
            scale = max(1.0, abs(xs[s]))
            if abs(xs[s + p] - xs[s]) < tol * scale:
                if all(syms[j] == syms[j + p] for j in range(s, n - p)):
                    return SymbolWord("".join(syms[: s + p]), TAIL_PERIODIC, s)
    return SymbolWord("".join(syms), TAIL_UNRESOLVED)


@dataclass(frozen=True)
class KneadingData:
    """The four kneading sequences at a band parameter.

    The free root side and both pole sides have parameter-independent
    futures inside the band (an infinite A run, an infinite R run); only
    the sequence of the critical value carries information about c.
    """

    c: float
    U: SymbolWord       # shifted itinerary at the free root
    X: SymbolWord       # shifted itinerary on the right side of the left pole
    Y: SymbolWord       # shifted itinerary of zero: the kneading sequence
    Z: SymbolWord       # shifted itinerary on the right side of the right pole

    @property
    def period(self) -> int | None:
        return self.Y.period


def kneading_data(c: float, length: int = 64, tol: float = 1e-10) -> KneadingData:
    """Kneading data at a parameter in the open band (0, C0)."""
    word = itinerary(c, 0.0, length, tol)
    return KneadingData(
        c=c,
        U=SymbolWord("A", TAIL_A_INF),
        X=SymbolWord("R", TAIL_PERIODIC, 0),
        Y=word.shift(1),
        Z=SymbolWord("A", TAIL_A_INF),
    )
