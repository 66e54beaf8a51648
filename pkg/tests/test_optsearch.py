"""The exact minimizer and its difference-vector view of distinctness."""

import itertools

import pytest

from permsum.errors import (
    InfeasibleBudget,
    NonInjectiveInputs,
    TooLarge,
    UnsupportedInputs,
)
from permsum.optsearch import (
    SearchConfig,
    difference_vectors,
    exact_search,
    result_json_payload,
)
from permsum.weighting import InputVector, extremal_sums, verify_distinct

from conftest import oracle_distinct


def brute_optimum(n, x, first_floor, cap):
    """Reference search: enumerate increasing tuples outright."""
    xs = sorted(x)
    best = None
    top = cap + n  # safe upper bound on any single weight
    for g in itertools.combinations(range(first_floor, top), n):
        obj = sum(gj * xj for gj, xj in zip(g, xs))
        if obj > cap:
            continue
        if oracle_distinct(g, x):
            cand = (obj, g)
            if best is None or cand < best:
                best = cand
    return best


class TestDifferenceVectors:
    def test_two_elements(self):
        assert set(difference_vectors(2)) == {(1, -1), (-1, 1)}

    def test_three_elements_counted_with_multiplicity(self):
        vectors = difference_vectors(3)
        assert len(vectors) == 30
        assert all(sum(d) == 0 for d in vectors)
        assert all(any(v != 0 for v in d) for d in vectors)

    def test_limit(self):
        with pytest.raises(TooLarge):
            difference_vectors(6)

    def test_orthogonality_characterizes_distinctness(self):
        for g in [(1, 2, 4), (1, 2, 3), (1, 3, 9, 27), (1, 2, 5, 15)]:
            n = len(g)
            x = tuple(range(1, n + 1))
            clean = all(
                sum(gj * dj for gj, dj in zip(g, d)) != 0
                for d in difference_vectors(n)
            )
            assert clean == oracle_distinct(g, x)


class TestExactSearch:
    def test_two(self):
        result = exact_search(SearchConfig(2))
        assert (result.weights.g, result.max_sum, result.optimal) == ((1, 2), 5, True)

    def test_three(self):
        result = exact_search(SearchConfig(3))
        assert (result.weights.g, result.max_sum, result.optimal) == ((1, 2, 4), 17, True)

    def test_three_allow_zero(self):
        result = exact_search(SearchConfig(3, allow_zero=True))
        assert (result.weights.g, result.max_sum) == ((0, 1, 3), 11)

    def test_four_matches_brute_reference(self):
        result = exact_search(SearchConfig(4))
        assert result.optimal
        assert result.max_sum <= 80
        want = brute_optimum(4, (1, 2, 3, 4), 1, 80)
        assert (result.max_sum, result.weights.g) == want == (80, (1, 2, 5, 15))

    def test_result_is_verified_distinct(self):
        for n in (2, 3, 4):
            result = exact_search(SearchConfig(n))
            x = InputVector.identity(n)
            assert verify_distinct(result.weights, x).distinct
            assert extremal_sums(result.weights, x)[1] == result.max_sum

    def test_never_beats_nothing_below_greedy(self):
        from permsum.construct import greedy_sequence

        for n in (2, 3, 4, 5):
            greedy_hi = extremal_sums(
                greedy_sequence(n).weights, InputVector.identity(n)
            )[1]
            assert exact_search(SearchConfig(n)).max_sum <= greedy_hi

    def test_five_frozen(self):
        result = exact_search(SearchConfig(5))
        assert (result.weights.g, result.max_sum) == ((1, 3, 6, 22, 92), 573)

    def test_explicit_budget(self):
        assert exact_search(SearchConfig(3, budget=17)).max_sum == 17
        with pytest.raises(InfeasibleBudget):
            exact_search(SearchConfig(3, budget=16))

    def test_custom_inputs(self):
        x = (0, 1, 2)
        result = exact_search(SearchConfig(3, inputs=InputVector(x)))
        want = brute_optimum(3, x, 1, 40)
        assert (result.max_sum, result.weights.g) == want

    def test_deterministic(self):
        a = exact_search(SearchConfig(4))
        b = exact_search(SearchConfig(4))
        assert a == b

    def test_single_person(self):
        result = exact_search(SearchConfig(1))
        assert (result.weights.g, result.max_sum) == ((1,), 1)

    def test_rejections(self):
        with pytest.raises(TooLarge):
            exact_search(SearchConfig(6))
        with pytest.raises(NonInjectiveInputs):
            exact_search(SearchConfig(2, inputs=InputVector((3, 3))))
        with pytest.raises(UnsupportedInputs):
            exact_search(SearchConfig(2, inputs=InputVector((-1, 2))))

    def test_json_payload(self):
        result = exact_search(SearchConfig(3))
        payload = result_json_payload(result)
        assert payload == {
            "weights": [1, 2, 4],
            "max_sum": 17,
            "optimal": True,
            "nodes_explored": result.nodes_explored,
            "budget": 17,
        }
