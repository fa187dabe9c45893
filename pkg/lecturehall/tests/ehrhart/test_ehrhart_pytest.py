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

import pytest

from lecturehall import (
    BudgetExceededError,
    IntPolynomial,
    InvalidInputError,
    LabeledPoset,
    SSequence,
    binomial,
    cone_partition_counts,
    ehrhart_counts,
    eulerian_oracle,
    hstar,
    hstar_from_counts,
    lecture_hall_gf,
    linear_extension_oracle,
    natural_posets,
    odd_product_gf,
)
from lecturehall.tests.common import TestData


class TestIntPolynomial:
    def test_trims_trailing_zeros(self):
        assert IntPolynomial((1, 4, 1, 0, 0)) == IntPolynomial((1, 4, 1))
        assert IntPolynomial((0, 0)).coeffs == ()
        assert IntPolynomial(()).degree == -1

    def test_evaluate_and_index(self):
        p = IntPolynomial((1, 4, 1))
        assert p(1) == 6
        assert p(2) == 13
        assert p[1] == 4
        assert p[7] == 0

    def test_multiply(self):
        assert IntPolynomial((1, 1)) * IntPolynomial((1, 1)) == IntPolynomial((1, 2, 1))
        product = IntPolynomial((1, -1)) * IntPolynomial((1, 1))
        assert product == IntPolynomial((1, 0, -1))

    @pytest.mark.parametrize(
        ["coeffs", "text"],
        [
            ((1, 4, 1), "1 + 4x + x^2"),
            ((0, -1, 2), "-x + 2x^2"),
            ((3,), "3"),
            ((), "0"),
            ((1, 0, -3), "1 - 3x^2"),
        ],
    )
    def test_str(self, coeffs, text):
        assert str(IntPolynomial(coeffs)) == text


class TestEhrhart(TestData):
    def test_chain_lecture_hall_counts(self):
        assert ehrhart_counts(self.chain3(), self.s123(), 3) == [1, 8, 27, 64]
        assert hstar(self.chain3(), self.s123()).to_list() == [1, 4, 1]

    def test_hand_computed_values(self):
        assert ehrhart_counts(self.chain3(), SSequence((1, 1, 2)), 3) == [1, 5, 14, 30]
        assert hstar(self.chain3(), SSequence((1, 1, 2))).to_list() == [1, 1]
        assert ehrhart_counts(self.chain3(), SSequence((1, 2, 2)), 1)[1] == 7
        assert hstar(self.chain3(), SSequence((1, 2, 2))).to_list() == [1, 3]

    def test_single_element(self):
        # a segment [0, k*s_1]
        assert ehrhart_counts(LabeledPoset.chain(1), SSequence((4,)), 2) == [1, 5, 9]
        assert hstar(LabeledPoset.chain(1), SSequence((4,))).to_list() == [1, 3]

    def test_negative_kmax(self):
        with pytest.raises(InvalidInputError):
            ehrhart_counts(self.chain3(), self.s123(), -1)

    def test_hstar_nonnegative_for_all_small_posets(self):
        for poset in natural_posets(3):
            for s in (SSequence((1, 2, 3)), SSequence((2, 1, 2)), SSequence((1, 1, 1))):
                h = hstar(poset, s)
                assert h[0] == 1
                assert all(c >= 0 for c in h.coeffs)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_lecture_hall_simplex_is_eulerian(self, n):
        s = SSequence.lecture_hall(n)
        assert hstar(LabeledPoset.chain(n), s) == eulerian_oracle(n)

    def test_volume_counts_linear_extensions(self):
        for poset in natural_posets(3):
            assert hstar(poset, SSequence.ones(3))(1) == linear_extension_oracle(poset)

    def test_chain_volume_is_product(self):
        for s in (SSequence((1, 2, 3)), SSequence((2, 3, 3)), SSequence((1, 1, 2))):
            assert hstar(LabeledPoset.chain(3), s)(1) == s.product()


class TestHstarFromCounts:
    def test_recovers_known_polynomials(self):
        assert hstar_from_counts([1, 8, 27, 64], 3).to_list() == [1, 4, 1]
        assert hstar_from_counts([1, 2, 3], 1).to_list() == [1]
        assert hstar_from_counts([1, 4, 9], 2).to_list() == [1, 1]

    def test_rejects_bad_counts(self):
        with pytest.raises(InvalidInputError):
            hstar_from_counts([2, 3], 1)
        with pytest.raises(InvalidInputError):
            hstar_from_counts([1, 2], 2)
        with pytest.raises(InvalidInputError):
            hstar_from_counts([1, 0, 0], 1)
        with pytest.raises(InvalidInputError):
            hstar_from_counts([1, 0], 1)
        with pytest.raises(InvalidInputError):
            hstar_from_counts([1], -1)


class TestOracles:
    def test_eulerian(self):
        assert eulerian_oracle(1).to_list() == [1]
        assert eulerian_oracle(3).to_list() == [1, 4, 1]
        assert eulerian_oracle(5).to_list() == [1, 26, 66, 26, 1]
        with pytest.raises(InvalidInputError):
            eulerian_oracle(0)
        with pytest.raises(InvalidInputError):
            eulerian_oracle(10)

    def test_linear_extensions(self):
        assert linear_extension_oracle(LabeledPoset.chain(4)) == 1
        assert linear_extension_oracle(LabeledPoset.antichain(3)) == 6
        assert linear_extension_oracle(LabeledPoset(3, [(1, 3), (2, 3)])) == 2

    def test_cone_partition_counts(self):
        assert cone_partition_counts(SSequence.ones(2), 4) == [1, 1, 2, 2, 3]
        with pytest.raises(BudgetExceededError):
            cone_partition_counts(SSequence.ones(2), 4, budget=10)
        with pytest.raises(InvalidInputError):
            cone_partition_counts(SSequence.ones(2), -1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_lecture_hall_partitions_match_odd_parts(self, n):
        assert lecture_hall_gf(n, 15) == odd_product_gf(n, 15)

    def test_odd_product(self):
        # partitions into parts 1 and 3
        assert odd_product_gf(2, 6) == [1, 1, 1, 2, 2, 2, 3]
        with pytest.raises(InvalidInputError):
            odd_product_gf(0, 3)

    def test_binomial(self):
        assert binomial(5, 2) == 10
        assert binomial(2, 5) == 0
        assert binomial(4, -1) == 0
        assert binomial(0, 0) == 1
