// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VCGAME_VCGAME_HPP_
#define VCGAME_VCGAME_HPP_

#include "vcgame/analysis.hpp"
#include "vcgame/instances.hpp"
#include "vcgame/io.hpp"
#include "vcgame/item_set.hpp"
#include "vcgame/linear_program.hpp"
#include "vcgame/market.hpp"
#include "vcgame/pmvc.hpp"
#include "vcgame/rational.hpp"
#include "vcgame/valuation.hpp"
#include "vcgame/vc_game.hpp"

#endif  // VCGAME_VCGAME_HPP_
