import pytest

from frozen import SUPERSTABLE
from quintic_newton.coding import KneadingData, itinerary, kneading_data
from quintic_newton.dynamics import PoleError, find_superstable_parameter
from quintic_newton.words import (
    SymbolWord,
    TAIL_A_INF,
    TAIL_PERIODIC,
    TAIL_UNRESOLVED,
)


def test_itinerary_of_superstable_cycle():
    c = find_superstable_parameter("RLRC")
    w = itinerary(c, 0.0, 40)
    assert str(w) == "(CRLR)^"
    assert w.tail == TAIL_PERIODIC
    assert w.period == 4 and w.start == 0


def test_itinerary_absorbed_orbit_ends_in_a_tail():
    # c = 0.8 sits in a window where the critical orbit reaches the free root
    w = itinerary(0.8, 0.0, 60)
    assert w.tail == TAIL_A_INF
    assert w.head.endswith("A")
    assert w.head.startswith("CR")


def test_itinerary_generic_point_off_the_critical_orbit():
    c = SUPERSTABLE["RLRC"]
    w = itinerary(c, 0.9, 30)
    assert w.tail in (TAIL_PERIODIC, TAIL_A_INF, TAIL_UNRESOLVED)
    assert len(w.head) >= 1


def test_itinerary_unresolved_when_budget_is_tiny():
    w = itinerary(1.55, 0.0, 6)
    assert w.tail == TAIL_UNRESOLVED
    assert len(w.head) == 6


def test_itinerary_raises_on_pole_start():
    pole = (1.0 / 5.0) ** 0.25
    with pytest.raises(PoleError):
        itinerary(1.0, pole, 10)


def test_kneading_data_universal_rows():
    c = SUPERSTABLE["RLRC"]
    kd = kneading_data(c)
    assert isinstance(kd, KneadingData)
    assert kd.U == SymbolWord("A", TAIL_A_INF)
    assert kd.X == SymbolWord("R", TAIL_PERIODIC, 0)
    assert kd.Z == SymbolWord("A", TAIL_A_INF)
    assert str(kd.Y) == "(RLRC)^"
    assert kd.period == 4


def test_kneading_data_shifts_off_the_leading_c():
    c = find_superstable_parameter("RC")
    kd = kneading_data(c)
    assert str(kd.Y) == "(RC)^"
    assert kd.period == 2
