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

#ifndef LEDP_LEDGER_HPP_
#define LEDP_LEDGER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ledp/errors.hpp"

namespace ledp {

using BigRational = boost::multiprecision::cpp_rational;

// Amounts are kept as exact fractions of the budget epsilon, so a run that
// spends its whole budget totals exactly 1.
struct LedgerEntry {
  std::string label;
  BigRational per_call_share;
  std::int64_t calls;
  std::int64_t group_factor;

  BigRational share() const {
    return per_call_share * calls * group_factor;
  }
};

// Basic composition: total = sum of per-call epsilon x calls x group factor.
class BudgetLedger {
 public:
  explicit BudgetLedger(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0)) throw DomainError("budget epsilon must be positive");
  }

  // per_call_share is per-call epsilon divided by the budget.
  void Charge(const std::string& label, const BigRational& per_call_share,
              std::int64_t calls, std::int64_t group_factor) {
    if (per_call_share <= 0 || calls < 1 || group_factor < 1) {
      throw DomainError("ledger charge '" + label +
                        "' needs positive arguments");
    }
    LedgerEntry e{label, per_call_share, calls, group_factor};
    BigRational next = total_ + e.share();
    if (next > 1) throw BudgetExceededError(label);
    total_ = next;
    entries_.push_back(std::move(e));
  }

  // Same as Charge with per-call epsilon in absolute units. The ratio of the
  // two doubles is taken exactly.
  void ChargeEpsilon(const std::string& label, double per_call_epsilon,
                     std::int64_t calls, std::int64_t group_factor) {
    if (!(per_call_epsilon > 0)) {
      throw DomainError("ledger charge '" + label +
                        "' needs positive arguments");
    }
    Charge(label, BigRational(per_call_epsilon) / BigRational(epsilon_), calls,
           group_factor);
  }

  double budget() const { return epsilon_; }
  const BigRational& total_share() const { return total_; }
  double total_epsilon() const {
    return static_cast<double>(total_) * epsilon_;
  }
  bool SpentExactly() const { return total_ == 1; }
  const std::vector<LedgerEntry>& entries() const { return entries_; }

 private:
  double epsilon_;
  BigRational total_ = 0;
  std::vector<LedgerEntry> entries_;
};

inline std::string ToString(const BigRational& r) {
  return r.str();
}

}  // namespace ledp

#endif  // LEDP_LEDGER_HPP_
