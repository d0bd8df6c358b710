# Copyright 2026 The qgdec Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Graph-based decoding of stabilizer codes."""

from qgdec._core import (
    BudgetExceeded,
    CommutationError,
    Error,
    ExtractionInvalid,
    GraphExtraction,
    InsufficientData,
    NotCss,
    ParseError,
    StabilizerCode,
    SyndromeMismatch,
    ValidationError,
    builtin_names,
    code,
    collapse_fit,
    decode,
    exact_p_L,
    extract,
    is_logical_error,
    load_code,
    measure_beta,
    simulate,
    validate,
    verify_distance,
)

__version__ = "0.1.0"
