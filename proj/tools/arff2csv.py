# Copyright 2026 The VPCME Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Converts ARFF files whose trailing attributes are 0/1 labels into the
headerless CSV read by `vpcme`. Usage: arff2csv.py OUT.csv IN.arff [IN2.arff ...]"""

import sys
import numpy as np
from scipy.io import arff

rows = []
for path in sys.argv[2:]:
    data, _ = arff.loadarff(path)
    rows += [[float(v.decode() if isinstance(v, bytes) else v) for v in r] for r in data]
np.savetxt(sys.argv[1], np.array(rows), delimiter=",", fmt="%.17g")
