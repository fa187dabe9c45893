#  Licensed to the lecturehall developers under one or more contributor
#  license agreements. See the NOTICE file distributed with
#  this work for additional information regarding copyright
#  ownership. The lecturehall developers license this file to you under
#  the Apache License, Version 2.0 (the "License"); you may
#  not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
# 	http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing,
#  software distributed under the License is distributed on an
#  "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
#  KIND, either express or implied.  See the License for the
#  specific language governing permissions and limitations
#  under the License.

# File called _pytest for PyCharm compatibility

import itertools

import pytest

from lecturehall import (
    BudgetExceededError,
    DimensionMismatchError,
    IntegerOverflowError,
    InvalidInputError,
    LabeledPoset,
    LatticePoint,
    SSequence,
    cone_contains,
    count_dilate_points,
    enumerate_dilate_points,
    is_partition,
    join,
    meet,
    natural_posets,
    order_polytope_contains,
    simplex_contains,
    translation_window_check,
)
from lecturehall.tests.common import TestData, weakly_increasing_sequences


class TestMembership(TestData):
    def test_cone_contains(self):
        s = self.s123()

        assert cone_contains(s, (1, 2, 3))
        assert not cone_contains(s, (2, 1, 0))
        assert cone_contains(s, (0, 1, 2))
        assert not cone_contains(s, (-1, 0, 0))
        assert cone_contains(s, LatticePoint((0, 0, 0)))

    def test_simplex_contains(self):
        s = self.s123()

        assert simplex_contains(s, (1, 2, 3), 1)
        assert simplex_contains(s, (1, 3, 5), 2)
        assert not simplex_contains(s, (0, 0, 4), 1)
        assert simplex_contains(s, (0, 0, 4), 2)

    def test_order_polytope_contains(self):
        square, ones = LabeledPoset.antichain(2), SSequence((1, 1))
        assert order_polytope_contains(square, ones, (1, 1))
        assert order_polytope_contains(self.chain3(), self.s123(), (0, 1, 2))
        assert not order_polytope_contains(self.vee(), SSequence((1, 1, 2)), (1, 0, 1))
        assert not order_polytope_contains(square, ones, (2, 0))
        assert order_polytope_contains(square, ones, (2, 0), 2)

    def test_dimension_errors(self):
        with pytest.raises(DimensionMismatchError):
            cone_contains(self.s123(), (1, 2))
        with pytest.raises(DimensionMismatchError):
            order_polytope_contains(LabeledPoset.chain(2), self.s123(), (0, 0, 0))
        with pytest.raises(DimensionMismatchError):
            is_partition(self.chain3(), self.s123(), (0, 0))

    @pytest.mark.parametrize("k", [0, -1])
    def test_invalid_k(self, k):
        with pytest.raises(InvalidInputError):
            simplex_contains(self.s123(), (0, 0, 0), k)
        with pytest.raises(InvalidInputError):
            enumerate_dilate_points(self.chain3(), self.s123(), k)

    def test_overflow_is_detected(self):
        s = SSequence((1, 2**40))
        with pytest.raises(IntegerOverflowError):
            cone_contains(s, (2**40, 2**40))

    def test_chain_matches_simplex(self):
        for s in weakly_increasing_sequences(3, 3):
            chain = LabeledPoset.chain(s.n)
            for k in (1, 2, 3):
                for lam in itertools.product(*[range(k * v + 2) for v in s]):
                    got = order_polytope_contains(chain, s, lam, k)
                    assert got == simplex_contains(s, lam, k), (s, lam, k)


class TestEnumeration(TestData):
    def test_chain_points(self):
        points = enumerate_dilate_points(self.chain3(), self.s123(), 1)

        assert [p.to_list() for p in points] == [
            [0, 0, 0],
            [0, 0, 1],
            [0, 0, 2],
            [0, 0, 3],
            [0, 1, 2],
            [0, 1, 3],
            [0, 2, 3],
            [1, 2, 3],
        ]

    def test_small_cases(self):
        segment = enumerate_dilate_points(LabeledPoset.chain(1), SSequence((1,)), 2)
        assert [p.to_list() for p in segment] == [[0], [1], [2]]
        square = enumerate_dilate_points(LabeledPoset.antichain(2), SSequence((1, 1)))
        assert len(square) == 4

    def test_sorted_and_counted(self):
        for poset in natural_posets(3):
            for s in (SSequence((1, 2, 3)), SSequence((2, 1, 3))):
                for k in (1, 2):
                    points = enumerate_dilate_points(poset, s, k)
                    assert all(a < b for a, b in zip(points, points[1:]))
                    assert len(points) == count_dilate_points(poset, s, k)
                    assert all(order_polytope_contains(poset, s, p, k) for p in points)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_dilate_points(self.chain3(), self.s123(), 1, budget=10)
        # the box has exactly 2 * 3 * 4 points
        points = enumerate_dilate_points(self.chain3(), self.s123(), 1, budget=24)
        assert len(points) == 8
        with pytest.raises(BudgetExceededError):
            count_dilate_points(self.chain3(), self.s123(), 3, budget=100)


class TestLattice(TestData):
    def test_meet_join(self):
        assert meet((1, 3, 5), (1, 2, 3)) == LatticePoint((1, 2, 3))
        assert join((0, 1, 2), (1, 0, 0)) == LatticePoint((1, 1, 2))
        x = LatticePoint((2, 0, 7))
        assert meet(x, x) == x
        assert join(x, x) == x
        with pytest.raises(DimensionMismatchError):
            meet((1, 2), (1, 2, 3))

    def test_closure_under_meet_and_join(self):
        for poset in natural_posets(3):
            for s in (SSequence((1, 2, 3)), SSequence((3, 1, 2))):
                for k in (1, 2):
                    points = enumerate_dilate_points(poset, s, k)
                    for a, b in itertools.combinations(points, 2):
                        assert is_partition(poset, s, meet(a, b))
                        assert is_partition(poset, s, join(a, b))

    def test_translation_window(self):
        for poset in natural_posets(3):
            for k in (1, 2, 3):
                assert translation_window_check(poset, SSequence((1, 2, 2)), k)

    def test_is_partition_allows_negative_entries(self):
        assert is_partition(self.chain3(), self.s123(), (-1, -2, -3))
        assert not is_partition(self.chain3(), self.s123(), (1, 0, 0))
