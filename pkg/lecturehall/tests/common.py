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

import itertools
from typing import List, Tuple

import numpy as np

from lecturehall import LabeledPoset, SSequence, random_natural_poset

# Weakly increasing with 0,1-differences
GATED_SEQUENCES = [SSequence((1, 2, 3)), SSequence((1, 1, 2)), SSequence((1, 2, 2))]
LARGE_GATED_SEQUENCE = SSequence((1, 2, 3, 4))


def weakly_increasing_sequences(max_n: int = 3, max_entry: int = 3) -> List[SSequence]:
    return [
        SSequence(values)
        for n in range(1, max_n + 1)
        for values in itertools.combinations_with_replacement(
            range(1, max_entry + 1), n
        )
    ]


def random_poset_cases(
    count: int = 20, seed: int = 0, max_entry: int = 3
) -> List[Tuple[LabeledPoset, SSequence]]:
    """Random naturally labeled posets on [3] paired with weakly increasing s."""
    rng = np.random.default_rng(seed)
    sequences = weakly_increasing_sequences(3, max_entry)
    cases = []
    for _ in range(count):
        poset = random_natural_poset(3, rng)
        candidates = [s for s in sequences if s.n == 3]
        cases.append((poset, candidates[int(rng.integers(len(candidates)))]))
    return cases


class TestData:
    def s123(self) -> SSequence:
        return SSequence((1, 2, 3))

    def chain3(self) -> LabeledPoset:
        return LabeledPoset.chain(3)

    def vee(self) -> LabeledPoset:
        # 1 and 2 both below 3
        return LabeledPoset(3, [(1, 3), (2, 3)])

    def gated_sequences(self) -> List[SSequence]:
        return GATED_SEQUENCES

    def gated_sequences_with_large(self) -> List[SSequence]:
        return GATED_SEQUENCES + [LARGE_GATED_SEQUENCE]
