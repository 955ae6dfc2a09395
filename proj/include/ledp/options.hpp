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

#ifndef LEDP_OPTIONS_HPP_
#define LEDP_OPTIONS_HPP_

#include <cmath>
#include <cstdint>

#include "ledp/errors.hpp"

namespace ledp {

struct RunOptions {
  std::uint64_t seed = 0;
  // Every noise draw returns 0. The ledger is still charged.
  bool noiseless = false;
  // Logs raw counts and noise. Output of such runs is not private.
  bool debug_nonprivate = false;
  // Keep per-message payloads in the transcript, not just per-round totals.
  bool record_messages = true;
};

inline void ValidateEpsilon(double epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive and finite");
  }
}

}  // namespace ledp

#endif  // LEDP_OPTIONS_HPP_
