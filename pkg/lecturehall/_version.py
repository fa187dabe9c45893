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

__title__ = "lecturehall"
__description__ = (
    "Exact lattice-point algebra for s-lecture hall polytopes: IDP chains, "
    "alcoved transforms, quadratic Groebner bases and unimodular triangulations"
)
__version__ = "0.1.0a1"
__author__ = "The lecturehall developers"
__maintainer__ = "The lecturehall developers"
