// Copyright 2026 The ledpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEDP_LEDP_HPP_
#define LEDP_LEDP_HPP_

#include "ledp/core_decomposition.hpp"
#include "ledp/errors.hpp"
#include "ledp/graph.hpp"
#include "ledp/invariants.hpp"
#include "ledp/la_framework.hpp"
#include "ledp/ledger.hpp"
#include "ledp/ledp_densest.hpp"
#include "ledp/level_params.hpp"
#include "ledp/mwu_densest.hpp"
#include "ledp/noise.hpp"
#include "ledp/oracles.hpp"
#include "ledp/rational.hpp"
#include "ledp/report.hpp"
#include "ledp/rng.hpp"
#include "ledp/smoke_test.hpp"
#include "ledp/transcript.hpp"

#endif  // LEDP_LEDP_HPP_
