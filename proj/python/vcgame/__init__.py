# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Exact analysis of pricing games between vendors and a submodular buyer."""

import json as _json

from ._vcgame import (  # noqa: F401
    CapExceeded,
    Error,
    Game,
    ParseError,
    best_response,
    category_equilibrium,
    demand,
    dynamics,
    harmonic,
    mechanism_prices,
    payoff_table,
    pure_equilibria,
    verify_equilibrium,
)
from ._vcgame import equilibrium_report_json as _report_json


def equilibrium_report(game, threads=1, cap=1 << 20):
    """Equilibria, welfare ratios and the H_m + 1 bound check as a dict."""
    return _json.loads(_report_json(game, threads, cap))


__version__ = "0.1.0"
