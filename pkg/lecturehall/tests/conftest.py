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

import json

import numpy as np
import pytest

from lecturehall.common import DEFAULT_RANDOM_SEED


@pytest.fixture
def rng():
    return np.random.default_rng(DEFAULT_RANDOM_SEED)


@pytest.fixture
def vee_poset_file(tmp_path):
    path = tmp_path / "vee.json"
    path.write_text(json.dumps({"n": 3, "covers": [[1, 3], [2, 3]]}))
    return str(path)
