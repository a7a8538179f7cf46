# Copyright (c) 2018-present Invforge Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import sys

VERSION = (1, 0, "0a1")
__version__ = ".".join([str(s) for s in VERSION])

__title__ = "invforge"
__description__ = (
    "Exact equivalence-group action, equivariant moving frame and algebra "
    "of differential invariants for the diffusion equations "
    "u_t = u_xx + f(u, u_x). "
    "Verification suites, classification and equivalence testing.")
__url__ = "https://github.com/invforge/invforge"

__author__ = "Invforge Developers"
__email__ = "dev@invforge.org"

__license__ = "Apache Software License"
__copyright__ = "Copyright 2018-present Invforge Developers"

if sys.version_info < (3, 8, 0):
    msg = ("Invforge v%s does not run under Python version %s.\n"
           "Minimum supported version is 3.8, please upgrade Python.\n")
    sys.stderr.write(msg % (__version__, sys.version))
    sys.exit(1)
