"""Rank-query set and positional-insert sequence, certified against plain
list references on large random scripts."""

import bisect
import random
import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permdel import (
    DuplicateInsertError,
    IndexOutOfRangeError,
    InsertableSequence,
    ParamOutOfRangeError,
    RankedSet,
)


class TestRankedSet:
    def test_insert_and_size(self):
        s = RankedSet(8)
        for x in (2, 4, 1):
            s.insert(x)
        assert len(s) == 3

    def test_count_less_examples(self):
        s = RankedSet(8, values=(1, 2, 4))
        assert s.count_less(4) == 2
        assert s.count_less(0) == 0
        assert s.count_less(100) == 3

    def test_empty(self):
        s = RankedSet(8)
        assert s.count_less(5) == 0

    def test_prefix_insertion(self):
        s = RankedSet(16)
        for k in range(10):
            s.insert(k)
            assert s.count_less(k + 1) == k + 1

    def test_duplicate_insert(self):
        s = RankedSet(4, values=(2,))
        with pytest.raises(DuplicateInsertError):
            s.insert(2)

    def test_out_of_universe(self):
        s = RankedSet(4)
        with pytest.raises(ParamOutOfRangeError):
            s.insert(4)
        with pytest.raises(ParamOutOfRangeError):
            s.insert(-1)

    def test_contains(self):
        s = RankedSet(4, values=(1, 3))
        assert 1 in s and 3 in s and 2 not in s and 7 not in s

    def test_matches_sorted_reference_on_large_script(self):
        rng = random.Random(0xBEEF)
        universe = 5000
        s = RankedSet(universe)
        reference: list[int] = []
        unused = list(range(universe))
        rng.shuffle(unused)
        for _ in range(10_000):
            if unused and rng.random() < 0.5:
                x = unused.pop()
                s.insert(x)
                bisect.insort(reference, x)
            else:
                x = rng.randrange(-10, universe + 10)
                assert s.count_less(x) == bisect.bisect_left(reference, x)

    @given(st.lists(st.integers(0, 30), unique=True), st.integers(-5, 40))
    def test_matches_reference(self, values, probe):
        s = RankedSet(31, values=values)
        assert s.count_less(probe) == sum(1 for v in values if v < probe)


class TestInsertableSequence:
    def test_insert_into_empty(self):
        q = InsertableSequence()
        q.insert_at(0, 7)
        assert len(q) == 1
        assert q.get(0) == 7

    def test_append_via_insert(self):
        q = InsertableSequence((3, 4))
        q.insert_at(2, 2)
        assert q.to_list() == [3, 4, 2]

    def test_insert_past_end_rejected(self):
        q = InsertableSequence((3, 4, 2))
        with pytest.raises(IndexOutOfRangeError):
            q.insert_at(5, 9)
        with pytest.raises(IndexOutOfRangeError):
            q.insert_at(-1, 9)

    def test_doubled_word_script(self):
        # replay of the mirrored-insertion walk that rebuilds a length-5
        # permutation; the doubled array must end as 3420134201
        q = InsertableSequence((3, 4, 3, 4))
        q.insert_at(2, 2)
        q.insert_at(5, 2)
        q.insert_at(3, 1)
        q.insert_at(7, 1)
        q.insert_at(3, 0)
        q.insert_at(8, 0)
        assert q.to_list() == [3, 4, 2, 0, 1, 3, 4, 2, 0, 1]
        assert q.get(2) == 2
        assert q.get(4) == 1

    def test_get_bounds(self):
        q = InsertableSequence((5,))
        assert q.get(0) == 5
        with pytest.raises(IndexOutOfRangeError):
            q.get(1)
        with pytest.raises(IndexOutOfRangeError):
            q.get(-1)

    def test_matches_list_reference_on_large_script(self):
        rng = random.Random(0xD00D)
        q = InsertableSequence()
        reference: list[int] = []
        for step in range(10_000):
            if not reference or rng.random() < 0.6:
                k = rng.randint(0, len(reference))
                v = rng.randrange(1_000_000)
                q.insert_at(k, v)
                reference.insert(k, v)
            else:
                k = rng.randrange(len(reference))
                assert q.get(k) == reference[k]
        assert q.to_list() == reference

    @given(
        st.lists(
            st.tuples(st.integers(0, 1000), st.integers(0, 99)), max_size=60
        )
    )
    def test_matches_reference(self, ops):
        q = InsertableSequence()
        reference: list[int] = []
        for pos, v in ops:
            k = pos % (len(reference) + 1)
            q.insert_at(k, v)
            reference.insert(k, v)
        assert q.to_list() == reference
        for k in range(len(reference)):
            assert q.get(k) == reference[k]

    def test_million_inserts_and_doubling_ratio(self):
        # volume smoke test: a million random-position inserts must finish,
        # and doubling the workload must cost at most 2.5x
        def workload(count: int) -> float:
            rng = random.Random(42)
            q = InsertableSequence()
            insert_at = q.insert_at
            start = time.perf_counter()
            for i in range(count):
                insert_at(rng.randint(0, i), i)
            return time.perf_counter() - start

        workload(50_000)  # warm up allocator and code paths
        half = min(workload(500_000), workload(500_000))
        full = min(workload(1_000_000), workload(1_000_000))
        assert full / half <= 2.5
