import itertools

import pytest
from hypothesis import given, strategies as st

from frozen import LEVELS
from quintic_newton.words import (
    SymbolWord,
    TAIL_A_INF,
    TAIL_PERIODIC,
    TAIL_UNRESOLVED,
    WordError,
    admissible_convergents,
    admissible_cycles,
    generate_tree,
    is_admissible,
    order_compare,
    parse_parent,
    transition_allowed,
)


# ----------------------------------------------------------------------
# SymbolWord structure
# ----------------------------------------------------------------------

def test_word_string_forms_round_trip():
    for w in [
        SymbolWord("RLRC", TAIL_PERIODIC, 0),
        SymbolWord("MRRC", TAIL_PERIODIC, 1),
        SymbolWord("RRA", TAIL_A_INF),
        SymbolWord("RLM", TAIL_UNRESOLVED),
    ]:
        assert SymbolWord.parse(str(w)) == w


def test_word_validation():
    with pytest.raises(WordError):
        SymbolWord("RRB", TAIL_A_INF)       # A tail needs an A head ending
    with pytest.raises(WordError):
        SymbolWord("RC", TAIL_PERIODIC, 5)  # start beyond the head
    with pytest.raises(WordError):
        SymbolWord("RXC", TAIL_PERIODIC, 0)


def test_shift_rotates_the_periodic_block():
    w = SymbolWord("RLRC", TAIL_PERIODIC, 0)
    assert str(w.shift(1)) == "(LRCR)^"
    assert w.shift(4) == w
    assert w.period == 4
    y = SymbolWord("CRLR", TAIL_PERIODIC, 0).shift(1)
    assert str(y) == "(RLRC)^"


def test_symbol_at_walks_head_then_tail():
    w = SymbolWord("MRRC", TAIL_PERIODIC, 1)   # M then (RRC)^inf
    assert [w.symbol_at(i) for i in range(7)] == list("MRRCRRC")
    a = SymbolWord("RRA", TAIL_A_INF)
    assert [a.symbol_at(i) for i in range(5)] == list("RRAAA")


# ----------------------------------------------------------------------
# order
# ----------------------------------------------------------------------

def test_order_fixtures():
    # the flip parity counts B and L in the common prefix
    assert order_compare("MRRM", "MRRR") < 0
    assert order_compare("RLRA", "RLRR") > 0
    assert order_compare("RC", "RC") == 0
    # words ascend as their parameters descend
    chain = ["MRC", "RLRC", "RC", "RRC"]
    for a, b in zip(chain, chain[1:]):
        assert order_compare(a, b) < 0, (a, b)


def test_order_is_antisymmetric_on_cycles():
    words = admissible_cycles(5)
    for a, b in itertools.combinations(words, 2):
        assert order_compare(a, b) == -order_compare(b, a)


@given(st.lists(st.sampled_from("MRL"), min_size=1, max_size=6),
       st.lists(st.sampled_from("MRL"), min_size=1, max_size=6))
def test_order_consistent_with_equality(xs, ys):
    a, b = "".join(xs), "".join(ys)
    cmp = order_compare(a, b)
    if a == b:
        assert cmp == 0
    else:
        assert cmp == -order_compare(b, a)


# ----------------------------------------------------------------------
# admissibility
# ----------------------------------------------------------------------

def test_transition_rules():
    assert transition_allowed("A", "A")
    assert transition_allowed("B", "A")
    assert not transition_allowed("A", "R")
    assert transition_allowed("L", "M") and transition_allowed("L", "R")
    assert not transition_allowed("L", "L")
    assert transition_allowed("R", "C") and not transition_allowed("M", "C")
    assert transition_allowed("C", "R") and not transition_allowed("C", "A")


def test_admissibility_fixtures():
    assert is_admissible("RLRC")
    assert not is_admissible("LMAC")
    assert not is_admissible("RMRC")   # fails shift dominance, not transitions
    assert is_admissible("RC") and is_admissible("MRC")
    assert not is_admissible("MC")     # only R may precede C
    assert is_admissible("RRA")
    assert not is_admissible("RRB")
    assert is_admissible(SymbolWord("M", TAIL_PERIODIC, 0))


def test_admissible_counts_match_brute_force():
    for k, want in LEVELS.items():
        if k > 6:
            continue
        brute = ["".join(w) + "C"
                 for w in itertools.product("ABLCMR", repeat=k - 1)
                 if is_admissible("".join(w) + "C")]
        got = admissible_cycles(k)
        assert len(got) == want
        assert sorted(got) == sorted(brute)


def test_admissible_cycles_level_7_count():
    assert len(admissible_cycles(7)) == LEVELS[7]


def test_cycles_are_sorted_by_order():
    for k in (4, 5, 6):
        words = admissible_cycles(k)
        for a, b in zip(words, words[1:]):
            assert order_compare(a, b) < 0


def test_convergent_words():
    assert admissible_convergents(2) == ["RA"]
    assert sorted(admissible_convergents(3)) == ["MRA", "RRA"]
    assert len(admissible_convergents(6)) == 13


# ----------------------------------------------------------------------
# the tree
# ----------------------------------------------------------------------

def test_parse_parent_edges():
    assert parse_parent("RC") is None
    assert parse_parent("RRC") == ("RC", "R")
    assert parse_parent("MRC") == ("RC", "M")
    assert parse_parent("RLRC") == ("RC", "L")
    assert parse_parent("MMRC") == ("MRC", "M")
    with pytest.raises(WordError):
        parse_parent("RBC")


def test_generate_tree_levels_and_edges():
    tree = generate_tree(5)
    for level, nodes in tree.items():
        cycles = [n for n in nodes if n.kind == "cycle"]
        assert len(cycles) == LEVELS[level]
    by_word = {n.word: n for nodes in tree.values() for n in nodes}
    assert by_word["RC"].parent is None
    assert by_word["RRC"].parent == "RC" and by_word["RRC"].edge == "R"
    assert by_word["RA"].parent == "RC" and by_word["RA"].edge == "A"
    # the chain to RMRRC passes through the inadmissible intermediate RMRC
    assert by_word["RMRRC"].parent == "RRC"
    assert by_word["RMRRC"].edge == "MR"
