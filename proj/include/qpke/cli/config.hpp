// Copyright 2026 The qpke-lab Authors.
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

#ifndef QPKE_CLI_CONFIG_HPP_
#define QPKE_CLI_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpke/errors.hpp"
#include "qpke/games.hpp"
#include "qpke/primitives.hpp"
#include "qpke/schemes.hpp"

namespace qpke::cli {

enum class ReportFormat { kTable, kText, kCsv };

inline std::string_view to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::kTable:
      return "table";
    case ReportFormat::kText:
      return "text";
    case ReportFormat::kCsv:
      return "csv";
  }
  return "?";
}

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "table") return ReportFormat::kTable;
  if (s == "text") return ReportFormat::kText;
  if (s == "csv") return ReportFormat::kCsv;
  throw ConfigError("unknown report format '" + std::string(s) + "'");
}

// Everything a run depends on. Two runs with equal configs produce
// byte-identical reports.
struct ExperimentConfig {
  schemes::SchemeKind scheme = schemes::SchemeKind::kOwf;
  primitives::PrimitiveConfig primitives;
  schemes::MixedPayload mixed = schemes::MixedPayload::kSampledBasisState;
  games::GameKind game = games::GameKind::kCpa;
  std::string adversary = "random-guess";
  std::string suite;  // "" or "mutations"
  std::string hybrid = "all";
  int copies = 1;
  int queries = 3;
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  ReportFormat format = ReportFormat::kTable;
  std::string out;          // report file; empty: stdout only
  std::string transcripts;  // transcript file; empty: none kept

  int lambda() const { return primitives.lambda; }

  schemes::SchemeConfig scheme_config() const {
    return {scheme, primitives, mixed};
  }

  void validate() const {
    primitives.validate();
    if (trials < 1) throw ConfigError("trials must be at least 1");
    if (copies < 0 || copies > 16) throw ConfigError("copies out of range");
    if (queries < 0 || queries > 16) throw ConfigError("queries out of range");
    if (!suite.empty() && suite != "mutations") {
      throw ConfigError("unknown suite '" + suite + "'");
    }
  }

  // Header records: every field that affects the numbers, in a fixed order.
  std::vector<std::pair<std::string, std::string>> header() const {
    const auto& p = primitives;
    return {
        {"scheme", std::string(schemes::to_string(scheme))},
        {"lambda", std::to_string(p.lambda)},
        {"d", std::to_string(p.d())},
        {"n", std::to_string(p.prfs_qubits)},
        {"m", std::to_string(p.pd_measured)},
        {"w", std::to_string(p.pd_tag)},
        {"prf", std::string(primitives::to_string(p.function))},
        {"ske", std::string(primitives::to_string(p.ske))},
        {"mutation", std::string(primitives::to_string(p.mutation))},
        {"mixed", mixed == schemes::MixedPayload::kDensityMatrix ? "density"
                                                                 : "sampled"},
        {"game", std::string(games::to_string(game))},
        {"adversary", adversary},
        {"suite", suite.empty() ? "-" : suite},
        {"hybrid", hybrid},
        {"copies", std::to_string(copies)},
        {"queries", std::to_string(queries)},
        {"trials", std::to_string(trials)},
        {"seed", std::to_string(seed)},
        {"bit_order", "lsb0"},
    };
  }
};

}  // namespace qpke::cli

#endif  // QPKE_CLI_CONFIG_HPP_
