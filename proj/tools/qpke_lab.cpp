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

// qpke_lab: correctness, game and analysis runs with reproducible reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qpke/cli.hpp"
#include "qpke/runtime.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kConfigError = 2;

constexpr const char* kFooter = R"(
Exit status: 0 success, 1 an acceptance check failed, 2 configuration or
capacity error.

Environment:
  QPKE_QMAX      largest pure state in qubits (default 20)
  QPKE_DM_QMAX   largest density matrix in qubits (default 10)

Bit order: qubit 0 is the least significant bit of a basis index.)";

struct Flags {
  std::string scheme = "owf";
  int lambda = 4;
  int n = 4;
  int d = 0;
  int m = 1;
  int w = 6;
  std::string prf = "counter";
  std::string ske = "nonce-pad";
  std::string mutation = "none";
  std::string mixed = "sampled";
  std::string game = "cpa";
  std::string adversary = "random-guess";
  std::string suite;
  std::string hybrid = "all";
  int copies = 1;
  int queries = 3;
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  std::string format = "table";
  std::string out;
  std::string transcripts;
  std::string config;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw qpke::ConfigError("cannot read '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Flags override a --config file, which overrides the defaults.
qpke::cli::ExperimentConfig to_config(const Flags& f, const CLI::App& app) {
  using qpke::primitives::PrimitiveConfig;
  qpke::cli::ExperimentConfig c;
  PrimitiveConfig p = f.config.empty()
                          ? PrimitiveConfig{}
                          : PrimitiveConfig::from_text(read_file(f.config));
  auto given = [&app](const char* name) { return app.count(name) > 0; };
  if (f.config.empty() || given("--lambda")) p.lambda = f.lambda;
  if (f.config.empty() || given("--n")) p.prfs_qubits = f.n;
  if (f.config.empty() || given("--d")) p.input_width = f.d;
  if (f.config.empty() || given("--m")) p.pd_measured = f.m;
  if (f.config.empty() || given("--w")) p.pd_tag = f.w;
  if (f.config.empty() || given("--prf")) {
    p.function = qpke::primitives::parse_function_mode(f.prf);
  }
  if (f.config.empty() || given("--ske")) {
    p.ske = qpke::primitives::parse_ske_mode(f.ske);
  }
  if (f.config.empty() || given("--mutation")) {
    p.mutation = qpke::primitives::parse_mutation(f.mutation);
  }
  c.primitives = p;
  c.scheme = qpke::schemes::parse_scheme_kind(f.scheme);
  if (f.mixed == "sampled") {
    c.mixed = qpke::schemes::MixedPayload::kSampledBasisState;
  } else if (f.mixed == "density") {
    c.mixed = qpke::schemes::MixedPayload::kDensityMatrix;
  } else {
    throw qpke::ConfigError("unknown mixed payload '" + f.mixed + "'");
  }
  c.game = qpke::games::parse_game_kind(f.game);
  c.adversary = f.adversary;
  c.suite = f.suite;
  c.hybrid = f.hybrid;
  c.copies = f.copies;
  c.queries = f.queries;
  c.trials = f.trials;
  c.seed = f.seed;
  c.format = qpke::cli::parse_report_format(f.format);
  c.out = f.out;
  c.transcripts = f.transcripts;
  c.validate();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  qpke::keep_freed_memory();
  CLI::App app{"Quantum public-key encryption laboratory"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--scheme", f.scheme, "owf | prfspd | prfs")
      ->capture_default_str();
  app.add_option("--lambda", f.lambda, "security parameter, 1..16")
      ->capture_default_str();
  app.add_option("--n", f.n, "PRFS output qubits")->capture_default_str();
  app.add_option("--d", f.d, "input width; 0 means lambda")
      ->capture_default_str();
  app.add_option("--m", f.m, "PRFSPD measured index width")
      ->capture_default_str();
  app.add_option("--w", f.w, "PRFSPD tag width")->capture_default_str();
  app.add_option("--prf", f.prf, "counter | random")->capture_default_str();
  app.add_option("--ske", f.ske, "nonce-pad | one-time-pad | fixed-nonce")
      ->capture_default_str();
  app.add_option(
         "--mutation", f.mutation,
         "none | ske-fixed-nonce | prf-key-independent | "
         "prfspd-key-independent | prfs-constant | collapsed-public-key")
      ->capture_default_str();
  app.add_option("--mixed", f.mixed,
                 "PRFS m=1 payload: sampled basis state or density matrix")
      ->capture_default_str();
  app.add_option("--game", f.game, "cpa | cpa-eo | cpa-eo-multi | cloning")
      ->capture_default_str();
  app.add_option("--adversary", f.adversary,
                 "random-guess | always-zero | copy-and-measure | pad-reuse | "
                 "public-prf | public-ver | state-projector | swap-test; "
                 "cloning: measure-and-forge | duplicate | lucky-guess")
      ->capture_default_str();
  app.add_option("--suite", f.suite,
                 "game: 'mutations' runs every paired "
                 "broken primitive and attack");
  app.add_option("--hybrid", f.hybrid,
                 "analyze: punctured | commuting | random-key | optimal | all")
      ->capture_default_str();
  app.add_option("--copies", f.copies, "public-key copies for --hybrid optimal")
      ->capture_default_str();
  app.add_option("--queries", f.queries,
                 "largest query count for --hybrid random-key")
      ->capture_default_str();
  app.add_option("--trials", f.trials, "Monte Carlo trials")
      ->capture_default_str();
  app.add_option("--seed", f.seed, "master seed")->capture_default_str();
  app.add_option("--format", f.format, "table | text | csv")
      ->capture_default_str();
  app.add_option("--out", f.out, "also write the report to this file");
  app.add_option("--transcripts", f.transcripts,
                 "game: write every transcript to this file");
  app.add_option("--config", f.config,
                 "primitive config file (key = value lines); flags override");

  auto* correctness =
      app.add_subcommand("correctness", "decryption round-trip suite");
  auto* game = app.add_subcommand("game", "security game estimate");
  auto* analyze = app.add_subcommand("analyze", "hybrid checks and bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    const auto c = to_config(f, app);
    qpke::cli::Report report;
    if (correctness->parsed()) {
      report = qpke::cli::cmd_correctness(c);
    } else if (game->parsed()) {
      report = qpke::cli::cmd_game(c);
    } else if (analyze->parsed()) {
      report = qpke::cli::cmd_analyze(c);
    }
    const std::string text = report.render(c.format);
    std::cout << text;
    if (!c.out.empty()) qpke::cli::detail::write_file(c.out, text);
    return report.passed ? kOk : kCheckFailed;
  } catch (const qpke::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
}
