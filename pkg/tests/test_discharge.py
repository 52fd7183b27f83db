from fractions import Fraction

import pytest

from dpd import corpus
from dpd.discharge import (ChargeLedger, HypothesisViolation, bound_trace, discharge, initial_charges,
                           special_c4s, verify)


def test_initial_sum_zero(entries):
    for e in entries.values():
        led = initial_charges(e.graph, require="none")
        assert sum(led.initial.values()) == 0


def test_requires_outer_triangle(entries):
    with pytest.raises(HypothesisViolation):
        discharge(entries["c4"].graph)


def test_special_c4_trace(entries):
    G = entries["special-c4"].graph
    led = discharge(G)
    rep = verify(G, led)
    assert rep["ok"] and rep["integrity"] == []
    assert rep["outer"]["mu_final"] == "1"
    c, = special_c4s(G, led.clusters)
    t = bound_trace(G, led, c)
    assert Fraction(t["mu_star"]) >= Fraction(2, 3)
    assert [Fraction(x) for _, x in t["terms"]] == [Fraction(2, 3), Fraction(-1), 4 * (Fraction(3, 7) - Fraction(1, 3))]
    assert Fraction(t["bound"]) == Fraction(1, 21) > 0
    assert Fraction(t["mu_final"]) >= Fraction(t["bound"])
    assert t["star_ok"] and t["final_ok"]


def test_ledger_json_round_trip(entries):
    G = entries["special-c4"].graph
    led = discharge(G)
    data = led.to_json()
    back = ChargeLedger.from_json(data)
    assert back.replay() == led.replay()
    assert all(isinstance(t["amount"], str) for t in data["transfers"])
    t = data["transfers"][0]
    assert set(t) >= {"rule", "from", "to", "amount"}
    assert verify(G, back)["integrity"] == []


def test_tampered_ledger_flagged(entries):
    G = entries["special-c4"].graph
    led = discharge(G)
    led.transfers[0].amount += 1
    rep = verify(G, led)
    assert rep["integrity"] and not rep["ok"]


def test_conservation_every_transfer(entries):
    for e in entries.values():
        try:
            led = discharge(e.graph)
        except HypothesisViolation:
            continue
        ch = dict(led.initial)
        for t in led.transfers:
            ch[t.src] = ch.get(t.src, 0) - t.amount
            ch[t.dst] = ch.get(t.dst, 0) + t.amount
            assert sum(ch.values()) == 0
        assert all(ch.get(k, 0) == v for k, v in led.mu_final.items())


def test_outer_face_ends_at_one(entries):
    for e in entries.values():
        try:
            led = discharge(e.graph)
        except HypothesisViolation:
            continue
        assert verify(e.graph, led)["outer"]["mu_final"] == "1", e.id
