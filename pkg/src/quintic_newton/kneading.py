"""Kneading increments, determinants, and the cycle-polynomial tree.

Each of the four marked points of the critical frame (free root, left pole,
zero, right pole) has one-sided symbolic futures; the weighted difference of
their invariant coordinates is a formal series over the five interval
symbols with rational-function coefficients in t.  Deleting one column of
the resulting 4 x 5 matrix and dividing by (1 - eps*t) gives a determinant
D(t) that does not depend on the deleted column.  For a critical cycle of
length k the combination

    P(t) = D(t) * (1 - t)^2 * (1 - t^k)

is an integer polynomial with a rigid shape: 1 - t, middle coefficients in
{-2, 0, 2}, and a tail -delta*(t^k + t^(k+1)) whose sign delta flips with
the parity of L's in the word.  The same combination without the cycle
factor handles convergent words.  ``cycle_polynomial`` rebuilds P by a
three-case suffix recursion instead of the determinant;
``build_polynomial_tree`` cross-checks the two routes and refuses to hand
out a tree where they disagree.
"""
from __future__ import annotations

from dataclasses import dataclass

from .polynomials import IntPolynomial, RationalFunctionInT
from .words import (
    LAP_SIGN,
    SymbolWord,
    TAIL_A_INF,
    TAIL_PERIODIC,
    TAIL_UNRESOLVED,
    WordError,
    generate_tree,
    parse_parent,
)

# increment components; C never shows up in an increment
ALPHABET = "ABLMR"
_IDX = {s: i for i, s in enumerate(ALPHABET)}

# slope sign of the map on each branch, in ALPHABET order
COLUMN_SIGNS = (1, -1, -1, 1, 1)


class StructureError(ValueError):
    """A polynomial failed the rigid shape the recursion relies on."""


# ----------------------------------------------------------------------
# formal series over the symbols
# ----------------------------------------------------------------------

class FormalSymbolSeries:
    """A vector of rational functions in t, one per interval symbol."""

    __slots__ = ("components",)

    def __init__(self, components=None):
        if components is None:
            components = [RationalFunctionInT() for _ in ALPHABET]
        comps = list(components)
        if len(comps) != len(ALPHABET):
            raise ValueError("need one component per symbol")
        self.components = [RationalFunctionInT._coerce(c) for c in comps]

    def __getitem__(self, symbol: str) -> RationalFunctionInT:
        return self.components[_IDX[symbol]]

    def __sub__(self, other: "FormalSymbolSeries") -> "FormalSymbolSeries":
        return FormalSymbolSeries(
            [a - b for a, b in zip(self.components, other.components)])

    def __add__(self, other: "FormalSymbolSeries") -> "FormalSymbolSeries":
        return FormalSymbolSeries(
            [a + b for a, b in zip(self.components, other.components)])

    def __repr__(self):
        parts = [f"{s}: {c!r}" for s, c in zip(ALPHABET, self.components)
                 if not c.is_zero()]
        return "FormalSymbolSeries(" + ", ".join(parts) + ")"


def invariant_coordinate(w: SymbolWord) -> FormalSymbolSeries:
    """theta(w) = sum over positions of (running slope sign) * symbol * t^m.

    The word must have a resolved tail and contain no C: the coordinate is
    defined for orbits of ordinary points, and the closed forms for the two
    tail kinds are geometric series in t.
    """
    if not isinstance(w, SymbolWord):
        raise WordError("invariant_coordinate expects a SymbolWord")
    if "C" in w.head:
        raise WordError("C has no invariant coordinate; use the cycle forms")
    comps = [RationalFunctionInT() for _ in ALPHABET]
    eps = 1
    if w.tail == TAIL_A_INF:
        for m, s in enumerate(w.head):
            comps[_IDX[s]] += IntPolynomial.t_power(m, eps)
            eps *= LAP_SIGN[s]
        # the final A of the head repeats; slope sign of A is +1
        comps[_IDX["A"]] += RationalFunctionInT(
            IntPolynomial.t_power(len(w.head), eps), (1,))
        return FormalSymbolSeries(comps)
    if w.tail == TAIL_PERIODIC:
        start, p = w.start, w.period
        for m in range(start):
            s = w.head[m]
            comps[_IDX[s]] += IntPolynomial.t_power(m, eps)
            eps *= LAP_SIGN[s]
        block = w.head[start:start + p]
        block_sign = 1
        for s in block:
            block_sign *= LAP_SIGN[s]
        if block_sign > 0:
            factor = RationalFunctionInT(IntPolynomial.one(), (p,))
        else:
            # alternating repetition: 1/(1 + t^p) written over (1 - t^2p)
            factor = RationalFunctionInT(
                IntPolynomial.one_minus_t_power(p), (2 * p,))
        for j, s in enumerate(block):
            term = RationalFunctionInT(
                IntPolynomial.t_power(start + j, eps)) * factor
            comps[_IDX[s]] += term
            eps *= LAP_SIGN[s]
        return FormalSymbolSeries(comps)
    raise WordError(f"cannot form the coordinate of an unresolved word {w}")


# ----------------------------------------------------------------------
# the four kneading increments
# ----------------------------------------------------------------------

def _universal_increments() -> tuple[FormalSymbolSeries, FormalSymbolSeries,
                                     FormalSymbolSeries]:
    """Increments at the free root and the two poles.

    Their one-sided futures do not depend on the parameter inside the
    no-root band: the root side falls to an infinite A run, pole sides
    escape to the far right and then run down the R branch.
    """
    one_minus_t = (1,)
    nu0 = FormalSymbolSeries()
    nu0.components[_IDX["B"]] = RationalFunctionInT(IntPolynomial.one())
    nu0.components[_IDX["A"]] = RationalFunctionInT(
        IntPolynomial([-1, -1]), one_minus_t)          # -(1+t)/(1-t)
    nu1 = FormalSymbolSeries()
    nu1.components[_IDX["L"]] = RationalFunctionInT(IntPolynomial.one())
    nu1.components[_IDX["B"]] = RationalFunctionInT(IntPolynomial([-1]))
    nu1.components[_IDX["A"]] = RationalFunctionInT(
        IntPolynomial([0, 1]), one_minus_t)            # t/(1-t)
    nu1.components[_IDX["R"]] = RationalFunctionInT(
        IntPolynomial([0, -1]), one_minus_t)           # -t/(1-t)
    nu3 = FormalSymbolSeries()
    nu3.components[_IDX["R"]] = RationalFunctionInT(
        IntPolynomial([1, -2]), one_minus_t)           # 1 - t/(1-t) = (1-2t)/(1-t)
    nu3.components[_IDX["M"]] = RationalFunctionInT(IntPolynomial([-1]))
    nu3.components[_IDX["A"]] = RationalFunctionInT(
        IntPolynomial([0, 1]), one_minus_t)            # t/(1-t)
    return nu0, nu1, nu3


def _critical_side_streams(word) -> tuple[SymbolWord, SymbolWord]:
    """One-sided symbol streams of the zero point for a kneading word.

    For a cycle word the recurrence of zero resolves to M or L according to
    the product of slope signs over the interior (the two sides then agree
    from that point on); for other resolved words the two streams differ
    only in the leading symbol.
    """
    if isinstance(word, str):
        if word.endswith("C"):
            interior = word[:-1]
            if "C" in interior:
                raise WordError(f"misplaced C in {word!r}")
            sign = 1
            for s in interior:
                sign *= LAP_SIGN[s]
            x = "M" if sign > 0 else "L"
            k = len(word)
            plus = SymbolWord("M" + interior + x + interior, TAIL_PERIODIC, k)
            minus = SymbolWord("L" + interior + x + interior, TAIL_PERIODIC, k)
            return plus, minus
        word = SymbolWord(word, TAIL_A_INF if word.endswith("A") else TAIL_UNRESOLVED)
    if not isinstance(word, SymbolWord):
        raise WordError(f"not a word: {word!r}")
    if "C" in word.head:
        if word.tail == TAIL_PERIODIC and word.start == 0 \
                and word.head.endswith("C") and word.head.count("C") == 1:
            return _critical_side_streams(word.head)
        raise WordError(f"cannot take side streams of {word}")
    if word.tail == TAIL_A_INF:
        return (SymbolWord("M" + word.head, TAIL_A_INF),
                SymbolWord("L" + word.head, TAIL_A_INF))
    if word.tail == TAIL_PERIODIC:
        return (SymbolWord("M" + word.head, TAIL_PERIODIC, word.start + 1),
                SymbolWord("L" + word.head, TAIL_PERIODIC, word.start + 1))
    raise WordError(f"cannot take side streams of an unresolved word {word}")


def kneading_increment(point_index: int, word=None) -> FormalSymbolSeries:
    """nu_i for marked point i in {0: root, 1: left pole, 2: zero, 3: right
    pole}.  The zero increment needs the kneading word; the others are
    parameter independent."""
    nu0, nu1, nu3 = _universal_increments()
    if point_index == 0:
        return nu0
    if point_index == 1:
        return nu1
    if point_index == 3:
        return nu3
    if point_index == 2:
        if word is None:
            raise ValueError("the zero increment needs the kneading word")
        plus, minus = _critical_side_streams(word)
        return invariant_coordinate(plus) - invariant_coordinate(minus)
    raise ValueError(f"no marked point {point_index}")


@dataclass(frozen=True)
class KneadingMatrix:
    """The 4 x 5 matrix of increments, rows ordered by marked point."""

    rows: tuple[FormalSymbolSeries, FormalSymbolSeries,
                FormalSymbolSeries, FormalSymbolSeries]

    @classmethod
    def from_word(cls, word) -> "KneadingMatrix":
        return cls(tuple(kneading_increment(i, word) for i in range(4)))

    def entry(self, i: int, symbol: str) -> RationalFunctionInT:
        return self.rows[i][symbol]


# ----------------------------------------------------------------------
# determinant
# ----------------------------------------------------------------------

def _det(rows: list[list[RationalFunctionInT]]) -> RationalFunctionInT:
    if len(rows) == 1:
        return rows[0][0]
    acc = RationalFunctionInT()
    for j in range(len(rows)):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def kneading_determinant(word_or_matrix, column: str = "B") -> RationalFunctionInT:
    """D(t) from the increment matrix with one column struck out.

    The result is independent of the choice of column; the default B keeps
    the intermediate expressions smallest.  The struck column's slope sign
    eps enters through the final division by (1 - eps*t).
    """
    if isinstance(word_or_matrix, KneadingMatrix):
        matrix = word_or_matrix
    else:
        matrix = KneadingMatrix.from_word(word_or_matrix)
    j = _IDX[column]
    keep = [s for s in ALPHABET if s != column]
    rows = [[row[s] for s in keep] for row in matrix.rows]
    det = _det(rows)
    if j % 2 == 1:
        det = -det
    eps = COLUMN_SIGNS[j]
    if eps > 0:
        return det.over(1)                       # / (1 - t)
    # / (1 + t), written exactly as * (1 - t) / (1 - t^2)
    return (det * IntPolynomial.one_minus_t_power(1)).over(2)


def determinant_polynomial(word) -> IntPolynomial:
    """The cleared integer form of D for a cycle or convergent word.

    Cycle words clear (1-t)^2 (1-t^k); convergent words clear (1-t)^2.
    Raises ArithmeticError if the product fails to be a polynomial, which
    would mean the word does not carry a consistent increment."""
    D = kneading_determinant(word)
    sq = IntPolynomial([1, -2, 1])               # (1 - t)^2
    if isinstance(word, str) and word.endswith("C"):
        k = len(word)
        out = D * sq * IntPolynomial.one_minus_t_power(k)
    else:
        out = D * sq
    return out.as_polynomial()


# ----------------------------------------------------------------------
# shape, branch step, recursion
# ----------------------------------------------------------------------

def shape_split(P: IntPolynomial, k: int) -> tuple[IntPolynomial, int]:
    """Split the cleared cycle polynomial as p(t) + q(t).

    p has degree < k, starts 1 - t, and all later coefficients lie in
    {-2, 0, 2}; q = -delta*(t^k + t^(k+1)) with delta +1 or -1.  Returns
    (p, delta) and raises StructureError when the shape does not hold.
    """
    if P.degree != k + 1:
        raise StructureError(f"degree {P.degree}, expected {k + 1}: {P}")
    cs = [P[m] for m in range(k + 2)]
    if cs[0] != 1 or cs[1] != -1:
        raise StructureError(f"head is not 1 - t: {P}")
    for j in range(2, k):
        if cs[j] not in (-2, 0, 2):
            raise StructureError(f"middle coefficient {cs[j]} at t^{j}: {P}")
    if cs[k] != cs[k + 1] or cs[k] not in (-1, 1):
        raise StructureError(f"tail is not -delta*(t^{k} + t^{k+1}): {P}")
    delta = -cs[k]
    return IntPolynomial(cs[:k]), delta


def tree_polynomial_step(d_k: IntPolynomial, k: int, branch: str,
                         delta: int | None = None) -> IntPolynomial:
    """One branch step of the cycle-polynomial recursion.

    ``d_k`` is the cleared polynomial of a length-k cycle word (the form
    with the single (1-t) factor still in place).  The four branch images
    are the literal step formulas; only the R branch lands on the cleared
    polynomial of the one-longer cycle word, the other three are the
    convergent and germination images used to assemble longer cycles.
    """
    p, d = shape_split(d_k, k)
    if delta is not None and delta != d:
        raise StructureError(f"claimed delta {delta} but split gives {d}")
    tk = IntPolynomial.t_power(k, 2 * d)
    if branch == "A":
        return p - tk
    if branch == "L":
        return p + tk
    if branch == "M":
        return p - IntPolynomial.t_power(k + 1, 2 * d)
    if branch == "R":
        q = IntPolynomial.t_power(k, -d) + IntPolynomial.t_power(k + 1, -d)
        return p + q.shift(1)
    raise ValueError(f"unknown branch {branch!r}")


_ROOT_WORD = "RC"
_ROOT_POLY = IntPolynomial([1, -1, -1, -1])


def cycle_polynomial(word: str) -> IntPolynomial:
    """Cleared polynomial of a cycle word by the suffix recursion.

    Works for every word the suffix parsing reaches, including the
    formally-valid intermediates that are not themselves admissible; the
    recursion agrees with the determinant route on all of them.
    """
    up = parse_parent(word)
    if up is None:
        return _ROOT_POLY
    parent, edge = up
    P = cycle_polynomial(parent)
    kp = len(parent)
    p, delta = shape_split(P, kp)
    if edge == "R":
        return tree_polynomial_step(P, kp, "R")
    g = tree_polynomial_step(P, kp, "A")
    if edge == "M":
        kc = kp + 1
        return g - IntPolynomial.t_power(kc, delta) \
                 - IntPolynomial.t_power(kc + 1, delta)
    if edge == "L":
        kc = kp + 2
        return g + IntPolynomial.t_power(kc, delta) \
                 + IntPolynomial.t_power(kc + 1, delta)
    raise WordError(f"unexpected edge {edge!r}")


def convergent_polynomial(word: str) -> IntPolynomial:
    """Cleared polynomial of a convergent word: the A image of its cycle."""
    if not word.endswith("A"):
        raise WordError(f"not a convergent word: {word!r}")
    interior = word[:-1]
    cycle = interior + "C"
    return tree_polynomial_step(cycle_polynomial(cycle), len(cycle), "A")


# ----------------------------------------------------------------------
# the decorated tree
# ----------------------------------------------------------------------

@dataclass
class PolyTreeNode:
    word: str
    level: int
    kind: str
    parent: str | None
    edge: str
    poly: IntPolynomial
    reduced: IntPolynomial | None     # poly / (1 - t) when that is exact


def build_polynomial_tree(max_level: int) -> dict[int, list[PolyTreeNode]]:
    """The admissible word tree with exact polynomials attached.

    Every cycle node's recursion value is recomputed through the
    determinant and the two must agree exactly; a mismatch raises
    RuntimeError rather than returning a partial tree.
    """
    one_minus_t = IntPolynomial.one_minus_t_power(1)
    out: dict[int, list[PolyTreeNode]] = {}
    for level, nodes in generate_tree(max_level).items():
        bucket = []
        for node in nodes:
            if node.kind == "cycle":
                poly = cycle_polynomial(node.word)
                check = determinant_polynomial(node.word)
            else:
                poly = convergent_polynomial(node.word)
                check = determinant_polynomial(node.word)
            if poly != check:
                raise RuntimeError(
                    f"recursion and determinant disagree on {node.word}: "
                    f"{poly} vs {check}")
            bucket.append(PolyTreeNode(
                node.word, node.level, node.kind, node.parent, node.edge,
                poly, poly.try_div_exact(one_minus_t)))
        out[level] = bucket
    return out
