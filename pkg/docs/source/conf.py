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


import datetime
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

import lecturehall  # noqa: E402

project = "lecturehall"
copyright = f"{datetime.date.today().year}, the lecturehall developers"
version = str(lecturehall.__version__)
release = version

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "numpydoc",
]

doctest_global_setup = """
import numpy as np
import pandas as pd
import lecturehall as lh
"""

numpydoc_attributes_as_param_list = False
numpydoc_show_class_members = False

exclude_patterns = []
html_theme = "alabaster"
master_doc = "index"
