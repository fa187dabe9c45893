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
    DimensionMismatchError,
    IntegerOverflowError,
    InvalidInputError,
    LatticePoint,
    SSequence,
)


class TestSSequence:
    def test_parse(self):
        s = SSequence.parse("1,2,3")

        assert s.s == (1, 2, 3)
        assert s.n == 3
        assert s.s0 == 0
        assert s.s_ext == 4
        assert str(s) == "1,2,3"
        assert s.to_list() == [1, 2, 3]

    def test_flags(self):
        assert SSequence((1, 2, 3)).weakly_increasing
        assert SSequence((1, 2, 3)).zero_one_diff
        assert SSequence((1, 1, 2)).zero_one_diff
        assert SSequence((1, 2, 2)).zero_one_diff

        # s_0 = 0 forces s_1 = 1
        assert not SSequence((2, 3)).zero_one_diff
        assert SSequence((2, 3)).weakly_increasing
        assert not SSequence((1, 3)).zero_one_diff
        assert not SSequence((2, 1)).weakly_increasing
        assert not SSequence((2, 1)).zero_one_diff

    def test_at(self):
        s = SSequence((1, 1, 2))

        assert [s.at(i) for i in range(5)] == [0, 1, 1, 2, 3]
        with pytest.raises(IndexError):
            s.at(5)

    def test_constructors(self):
        assert SSequence.lecture_hall(4).s == (1, 2, 3, 4)
        assert SSequence.ones(3).s == (1, 1, 1)
        assert SSequence((1, 2, 3)).product() == 6

    @pytest.mark.parametrize("bad", ["", "1,a", "1,2.5"])
    def test_parse_invalid(self, bad):
        with pytest.raises(InvalidInputError):
            SSequence.parse(bad)

    @pytest.mark.parametrize("values", [(), (0, 1), (1, -2), (True, 1), (1.0,)])
    def test_invalid_entries(self, values):
        with pytest.raises(InvalidInputError):
            SSequence(values)

    def test_overflow(self):
        with pytest.raises(IntegerOverflowError):
            SSequence((1, 2**63))

    def test_hashable(self):
        assert len({SSequence((1, 2)), SSequence.parse("1,2")}) == 1


class TestLatticePoint:
    def test_arithmetic(self):
        a = LatticePoint((1, 3, 5))
        b = LatticePoint((1, 2, 3))

        assert a + b == LatticePoint((2, 5, 8))
        assert a - b == LatticePoint((0, 1, 2))
        assert a - (1, 1, 1) == LatticePoint((0, 2, 4))
        assert a.dim == 3
        assert list(a) == [1, 3, 5]
        assert repr(b) == "LatticePoint((1, 2, 3))"

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            LatticePoint((1, 2)) + LatticePoint((1, 2, 3))

    def test_order_is_lexicographic(self):
        points = [LatticePoint((0, 2)), LatticePoint((1, 0)), LatticePoint((0, 1))]
        assert sorted(points) == [
            LatticePoint((0, 1)),
            LatticePoint((0, 2)),
            LatticePoint((1, 0)),
        ]

    def test_zeros(self):
        assert LatticePoint.zeros(3) == LatticePoint((0, 0, 0))
