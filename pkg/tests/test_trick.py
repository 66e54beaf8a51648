"""Plan, encode and decode the nut trick."""

import pytest

from permsum.errors import (
    CollidingWeights,
    PoolTooSmall,
    SizeMismatch,
    UnknownSum,
)
from permsum.permcore import Permutation, enumerate_antilex
from permsum.trick import (
    assignment_json_payload,
    decode,
    default_labels,
    encode,
    plan,
    plan_from_json,
    plan_json_payload,
)
from permsum.weighting import eval_sum, extremal_sums

P = Permutation


@pytest.fixture
def original():
    """Three mediums, multipliers 1/2/4, eighteen pool nuts."""
    return plan(3, pool=18, weights=(1, 2, 4))


class TestPlan:
    def test_original_numbers(self, original):
        assert original.inputs.x == (1, 2, 3)
        assert original.weights.g == (1, 2, 4)
        assert original.pool == 18
        assert original.labels == ("a", "b", "c")

    def test_pool_defaults_to_exact_max(self):
        assert plan(3, weights=(1, 2, 4)).pool == 17

    def test_pool_too_small(self):
        with pytest.raises(PoolTooSmall):
            plan(3, pool=10, weights=(1, 2, 4))

    def test_colliding_weights_rejected(self):
        with pytest.raises(CollidingWeights):
            plan(4, weights=(1, 3, 9, 27))

    def test_greedy_default(self):
        p = plan(4)
        assert p.weights.g == (1, 2, 5, 15)
        assert p.pool == 80

    def test_base_method(self):
        p = plan(3, method="base")
        assert p.weights.g == (1, 3, 9)
        assert p.pool == extremal_sums(p.weights, p.inputs)[1] == 34

    def test_needs_two_persons(self):
        with pytest.raises(SizeMismatch):
            plan(1)

    def test_labels_past_alphabet(self):
        assert default_labels(3) == ("a", "b", "c")
        assert default_labels(27)[-1] == "obj27"


class TestEncode:
    def test_worked_examples(self, original):
        assert encode(original, P((1, 2, 3))) == 1
        assert encode(original, P((3, 2, 1))) == 7
        assert encode(original, P((2, 1, 3))) == 2

    def test_size_mismatch(self, original):
        with pytest.raises(SizeMismatch):
            encode(original, P((1, 2, 3, 4)))

    def test_remainder_range(self, original):
        lo, hi = extremal_sums(original.weights, original.inputs)
        for p in enumerate_antilex(3):
            left = encode(original, p)
            assert 0 <= left <= original.pool - lo
            assert left >= original.pool - hi


class TestDecode:
    def test_round_trip_every_permutation(self, original):
        for p in enumerate_antilex(3):
            assert decode(original, encode(original, p)).perm == p

    def test_lookup_examples(self, original):
        assert decode(original, 1).perm.values == (1, 2, 3)
        assert decode(original, 7).perm.values == (3, 2, 1)

    def test_unknown_sum(self, original):
        with pytest.raises(UnknownSum):
            decode(original, 0)  # nothing sums to the full pool of 18
        with pytest.raises(UnknownSum):
            decode(original, 19)

    def test_readable_rows(self, original):
        assignment = decode(original, 7)
        assert assignment.readable == (("a", 3, 3), ("b", 2, 4), ("c", 1, 4))
        nuts_total = sum(row[2] for row in assignment.readable)
        assert nuts_total == eval_sum(
            original.weights, original.inputs, assignment.perm
        )


class TestSerialization:
    def test_payload(self, original):
        assert plan_json_payload(original) == {
            "n": 3,
            "x": [1, 2, 3],
            "g": [1, 2, 4],
            "pool": 18,
            "labels": ["a", "b", "c"],
        }

    def test_round_trip(self, original):
        rebuilt = plan_from_json(plan_json_payload(original))
        assert rebuilt == original

    def test_wrapper_tolerated(self, original):
        doc = {"schema_version": "1", "command": "trick plan",
               "payload": plan_json_payload(original)}
        assert plan_from_json(doc) == original

    def test_assignment_payload(self, original):
        payload = assignment_json_payload(original, decode(original, 7))
        assert payload == {
            "perm": [3, 2, 1],
            "sum": 11,
            "readable": [
                {"object": "a", "person": 3, "nuts": 3},
                {"object": "b", "person": 2, "nuts": 4},
                {"object": "c", "person": 1, "nuts": 4},
            ],
        }
