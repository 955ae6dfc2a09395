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

#ifndef LEDP_TRANSCRIPT_HPP_
#define LEDP_TRANSCRIPT_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ledp/graph.hpp"

namespace ledp {

// Two's-complement width needed to send v.
inline std::int64_t SignedBitWidth(std::int64_t v) {
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v)
                            : static_cast<std::uint64_t>(v);
  return static_cast<std::int64_t>(std::bit_width(mag)) + 1;
}

// One released message. `released` is the public payload. When a node
// answers for several group copies, `slots[k]` names the copy of
// `released[k]`. `true_value` and `noise` are filled only in
// debug-nonprivate runs.
struct Message {
  NodeId node = 0;
  std::int64_t bits = 0;
  std::vector<std::int64_t> released;
  std::vector<std::int64_t> slots;
  std::vector<std::int64_t> true_value;
  std::vector<std::int64_t> noise;
};

struct Round {
  std::int64_t index = 0;
  std::string randomizer;
  double epsilon_per_call = 0;
  std::int64_t num_messages = 0;
  std::int64_t total_bits = 0;
  std::int64_t max_bits = 0;
  std::vector<Message> messages;  // empty unless messages are recorded
};

// Public record of a protocol run. Parameters needed to post-process the
// run are kept in `params`.
class Transcript {
 public:
  Transcript() = default;
  Transcript(std::string algorithm, bool record_messages, bool debug)
      : algorithm_(std::move(algorithm)),
        record_(record_messages),
        debug_(debug) {}

  Round& BeginRound(std::int64_t index, std::string randomizer,
                    double epsilon_per_call) {
    Round r;
    r.index = index;
    r.randomizer = std::move(randomizer);
    r.epsilon_per_call = epsilon_per_call;
    rounds_.push_back(std::move(r));
    return rounds_.back();
  }

  void AddMessage(Message m) {
    Round& r = rounds_.back();
    ++r.num_messages;
    r.total_bits += m.bits;
    r.max_bits = std::max(r.max_bits, m.bits);
    max_bits_ = std::max(max_bits_, m.bits);
    total_bits_ += m.bits;
    if (!record_) return;
    if (!debug_) {
      m.true_value.clear();
      m.noise.clear();
    }
    r.messages.push_back(std::move(m));
  }

  const std::string& algorithm() const { return algorithm_; }
  bool records_messages() const { return record_; }
  bool debug_nonprivate() const { return debug_; }
  const std::vector<Round>& rounds() const { return rounds_; }
  std::int64_t num_rounds() const {
    return static_cast<std::int64_t>(rounds_.size());
  }
  std::int64_t max_message_bits() const { return max_bits_; }
  std::int64_t total_bits() const { return total_bits_; }
  nlohmann::json& params() { return params_; }
  const nlohmann::json& params() const { return params_; }

  // Round payloads are included only when `full` is set and messages were
  // recorded.
  nlohmann::json ToJson(bool full = true) const {
    nlohmann::json j;
    j["algorithm"] = algorithm_;
    j["params"] = params_;
    j["num_rounds"] = num_rounds();
    j["max_message_bits"] = max_bits_;
    j["total_bits"] = total_bits_;
    j["debug_nonprivate"] = debug_;
    j["messages_recorded"] = record_ && full;
    nlohmann::json rounds = nlohmann::json::array();
    for (const Round& r : rounds_) {
      nlohmann::json jr;
      jr["round"] = r.index;
      jr["randomizer"] = r.randomizer;
      jr["epsilon_per_call"] = r.epsilon_per_call;
      jr["num_messages"] = r.num_messages;
      jr["total_bits"] = r.total_bits;
      if (record_ && full) {
        nlohmann::json msgs = nlohmann::json::array();
        for (const Message& m : r.messages) {
          nlohmann::json jm;
          jm["node"] = m.node;
          jm["bits"] = m.bits;
          jm["released"] = m.released;
          if (!m.slots.empty()) jm["slots"] = m.slots;
          if (debug_) {
            jm["value"] = m.true_value;
            jm["noise"] = m.noise;
          }
          msgs.push_back(std::move(jm));
        }
        jr["messages"] = std::move(msgs);
      }
      rounds.push_back(std::move(jr));
    }
    j["rounds"] = std::move(rounds);
    return j;
  }

  static Transcript FromJson(const nlohmann::json& j) {
    Transcript t(j.at("algorithm").get<std::string>(),
                 j.at("messages_recorded").get<bool>(),
                 j.at("debug_nonprivate").get<bool>());
    t.params_ = j.at("params");
    for (const auto& jr : j.at("rounds")) {
      t.BeginRound(jr.at("round").get<std::int64_t>(),
                   jr.at("randomizer").get<std::string>(),
                   jr.at("epsilon_per_call").get<double>());
      if (!t.record_) {
        Round& r = t.rounds_.back();
        r.num_messages = jr.at("num_messages").get<std::int64_t>();
        r.total_bits = jr.at("total_bits").get<std::int64_t>();
        t.total_bits_ += r.total_bits;
        continue;
      }
      for (const auto& jm : jr.at("messages")) {
        Message m;
        m.node = jm.at("node").get<NodeId>();
        m.bits = jm.at("bits").get<std::int64_t>();
        m.released = jm.at("released").get<std::vector<std::int64_t>>();
        if (jm.contains("slots")) {
          m.slots = jm.at("slots").get<std::vector<std::int64_t>>();
        }
        if (jm.contains("value")) {
          m.true_value = jm.at("value").get<std::vector<std::int64_t>>();
          m.noise = jm.at("noise").get<std::vector<std::int64_t>>();
        }
        t.AddMessage(std::move(m));
      }
    }
    t.max_bits_ = std::max(t.max_bits_, j.at("max_message_bits").get<std::int64_t>());
    return t;
  }

 private:
  std::string algorithm_;
  bool record_ = true;
  bool debug_ = false;
  std::vector<Round> rounds_;
  std::int64_t max_bits_ = 0;
  std::int64_t total_bits_ = 0;
  nlohmann::json params_ = nlohmann::json::object();
};

}  // namespace ledp

#endif  // LEDP_TRANSCRIPT_HPP_
