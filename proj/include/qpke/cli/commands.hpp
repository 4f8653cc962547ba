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

#ifndef QPKE_CLI_COMMANDS_HPP_
#define QPKE_CLI_COMMANDS_HPP_

#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "qpke/analysis.hpp"
#include "qpke/cli/config.hpp"
#include "qpke/cli/report.hpp"
#include "qpke/errors.hpp"
#include "qpke/games.hpp"
#include "qpke/rng.hpp"
#include "qpke/schemes.hpp"

namespace qpke::cli {

namespace detail {

// Enumerations larger than this fall back to sampling.
inline constexpr double kExhaustiveLimit = 16777216.0;  // 2^24

inline std::shared_ptr<const schemes::Scheme> build_scheme(
    const ExperimentConfig& c) {
  return schemes::make_scheme(c.scheme_config(), Rng(c.seed).split(3).next());
}

struct Tally {
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double rate() const {
    return trials == 0
               ? 0.0
               : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

inline std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// Columns of the correctness report.
inline std::vector<std::string> correctness_columns() {
  return {"scheme", "case",     "method", "trials",  "successes",
          "rate",   "expected", "ci_low", "ci_high", "check"};
}

// Row for an exact (enumerated or computed) rate that must equal `expected`.
// A negative `successes` marks an averaged probability with no count.
inline std::vector<std::string> exact_row(const std::string& scheme,
                                          const std::string& name,
                                          std::int64_t trials,
                                          std::int64_t successes, double rate,
                                          double expected, bool& ok) {
  const bool pass = std::abs(rate - expected) <= 1e-12;
  ok = ok && pass;
  return {scheme,
          name,
          "EXACT",
          std::to_string(trials),
          successes < 0 ? "-" : std::to_string(successes),
          fmt(rate),
          fmt(expected),
          fmt(rate),
          fmt(rate),
          pass_fail(pass)};
}

// Row for a Monte Carlo rate compared with `expected` at 3 sigma, sigma
// taken at the expected rate. `at_least` makes the check one-sided.
inline std::vector<std::string> empirical_row(const std::string& scheme,
                                              const std::string& name,
                                              const Tally& t, double expected,
                                              bool at_least, bool& ok) {
  const auto e = games::make_estimate(t.trials, t.successes);
  const double sigma =
      std::sqrt(expected * (1.0 - expected) / static_cast<double>(t.trials));
  const double gap = e.estimate - expected;
  const bool pass = at_least ? gap >= -3.0 * sigma - 1e-12
                             : std::abs(gap) <= 3.0 * sigma + 1e-12;
  ok = ok && pass;
  return {scheme,
          name,
          "EMPIRICAL",
          std::to_string(t.trials),
          std::to_string(t.successes),
          fmt(e.estimate),
          (at_least ? ">=" : "") + fmt(expected),
          fmt(e.lower),
          fmt(e.upper),
          pass_fail(pass)};
}

// Full Gen / QPKGen / Enc / Dec round trips with uniformly random messages.
inline Tally sampled_round_trips(const schemes::Scheme& s, std::int64_t trials,
                                 Rng rng, int width,
                                 std::optional<Bits> fixed = std::nullopt) {
  Tally t;
  for (std::int64_t i = 0; i < trials; ++i) {
    const auto dk = s.gen(rng);
    const Bits m = fixed ? *fixed : rng.bits(width);
    auto enc = s.encrypt(s.qpk_gen(dk), m, rng);
    ++t.trials;
    if (s.decrypt(dk, enc.ciphertext, rng) == m) ++t.successes;
  }
  return t;
}

inline void owf_correctness(const ExperimentConfig& c, Report& r) {
  const auto scheme = build_scheme(c);
  const auto& s = dynamic_cast<const schemes::OwfScheme&>(*scheme);
  const int l = c.lambda();
  const int width = games::default_message_width(s);
  const std::uint64_t points = std::uint64_t{1} << l;
  const std::uint64_t nonces = std::uint64_t{1} << s.cipher().nonce_width();
  const double work = static_cast<double>(points) *
                      static_cast<double>(points) *
                      static_cast<double>(nonces) * std::ldexp(1.0, width);
  if (work <= kExhaustiveLimit) {
    // Every dk, every measurement outcome x (each has probability 2^-l),
    // every message and every nonce.
    Tally t;
    for (std::uint64_t dk = 0; dk < points; ++dk) {
      const schemes::DecryptionKey key(Bits(dk, l));
      for (std::uint64_t x = 0; x < points; ++x) {
        const Bits xb(x, l);
        const schemes::OwfResidue res{xb, s.function()(key.bits(), xb)};
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << width); ++m) {
          const Bits mb(m, width);
          for (std::uint64_t nonce = 0; nonce < nonces; ++nonce) {
            const Bits nb(nonce, s.cipher().nonce_width());
            Rng unused(0);
            ++t.trials;
            if (s.decrypt(key, s.seal(res, mb, nb), unused) == mb) {
              ++t.successes;
            }
          }
        }
      }
    }
    r.add_row(exact_row("owf", "all-dk-x-m-nonce", t.trials, t.successes,
                        t.rate(), 1.0, r.passed));
  } else {
    r.notes.push_back("owf exhaustive enumeration skipped: " + fmt_sci(work) +
                      " cases exceed 2^24");
  }
  const Tally t = sampled_round_trips(s, c.trials, Rng(c.seed).split(0), width);
  r.add_row(empirical_row("owf", "round-trip", t, 1.0, false, r.passed));
}

inline void prfspd_correctness(const ExperimentConfig& c, Report& r) {
  const auto scheme = build_scheme(c);
  const auto& s = dynamic_cast<const schemes::PrfspdScheme&>(*scheme);
  const auto& pd = s.prfspd();
  const auto& p = pd.params();
  const double work =
      std::ldexp(1.0, p.key_width + p.input_width + p.output_qubits());
  if (work <= kExhaustiveLimit) {
    // Gen -> Del -> Ver for every key, every input and every Del outcome of
    // nonzero probability.
    Tally t;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << p.key_width); ++k) {
      const Bits key(k, p.key_width);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << p.input_width); ++x) {
        const Bits xb(x, p.input_width);
        const auto state = pd.gen(key, xb);
        const auto probs =
            qsim::outcome_probabilities(state, {0, state.qubit_count()});
        for (std::uint64_t o = 0; o < probs.size(); ++o) {
          if (!(probs[o] > 0.0)) continue;
          ++t.trials;
          if (pd.ver(key, xb,
                     primitives::PrfspdProof(Bits(o, p.proof_width())))) {
            ++t.successes;
          }
        }
      }
    }
    r.add_row(exact_row("prfspd", "gen-del-ver", t.trials, t.successes,
                        t.rate(), 1.0, r.passed));
  } else {
    r.notes.push_back("prfspd exhaustive enumeration skipped: " +
                      fmt_sci(work) + " cases exceed 2^24");
  }
  // A zero key bit puts a uniform proof in its slot, which Ver accepts with
  // probability 2^-w; with k uniform each slot fails with 2^-(w+1).
  const double lower =
      std::pow(1.0 - std::ldexp(1.0, -(p.tag_width + 1)), c.lambda());
  const Tally t = sampled_round_trips(s, c.trials, Rng(c.seed).split(0),
                                      games::default_message_width(s));
  r.add_row(empirical_row("prfspd", "round-trip", t, lower, true, r.passed));
}

inline void prfs_correctness(const ExperimentConfig& c, Report& r) {
  const auto scheme = build_scheme(c);
  const auto& s = dynamic_cast<const schemes::PrfsScheme&>(*scheme);
  const int l = c.lambda();
  const int d = c.primitives.d();
  const int n = s.payload_qubits();
  const qsim::QuantumState mixed = qsim::DensityMatrix::maximally_mixed(n);
  const double expect1 = 1.0 - std::ldexp(1.0, -n);
  if (l + d <= 12) {
    // Decryption success averaged over every (dk, x) with the exact
    // ciphertext payloads: psi_{dk,x} for m = 0 and I/2^n for m = 1.
    double sum0 = 0.0;
    double sum1 = 0.0;
    std::int64_t cases = 0;
    for (std::uint64_t dk = 0; dk < (std::uint64_t{1} << l); ++dk) {
      const schemes::DecryptionKey key(Bits(dk, l));
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << d); ++x) {
        const Bits xb(x, d);
        const schemes::Ciphertext pure =
            schemes::PrfsCiphertext{xb, s.prfs()(key.bits(), xb)};
        const schemes::Ciphertext mix = schemes::PrfsCiphertext{xb, mixed};
        sum0 += s.zero_probability(key, pure);
        sum1 += 1.0 - s.zero_probability(key, mix);
        ++cases;
      }
    }
    const double cs = static_cast<double>(cases);
    r.add_row(
        exact_row("prfs", "message-0", cases, -1, sum0 / cs, 1.0, r.passed));
    r.add_row(exact_row("prfs", "message-1", cases, -1, sum1 / cs, expect1,
                        r.passed));
  } else {
    r.notes.push_back("prfs exact average skipped: 2^" + std::to_string(l + d) +
                      " (dk, x) pairs exceed 2^12");
  }
  const Tally t0 =
      sampled_round_trips(s, c.trials, Rng(c.seed).split(0), 1, Bits::zeros(1));
  r.add_row(empirical_row("prfs", "message-0", t0, 1.0, false, r.passed));
  const Tally t1 =
      sampled_round_trips(s, c.trials, Rng(c.seed).split(1), 1, Bits::ones(1));
  r.add_row(empirical_row("prfs", "message-1", t1, expect1, false, r.passed));
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw ConfigError("cannot write '" + path + "'");
}

inline games::EstimatorOptions estimator_options(const ExperimentConfig& c) {
  games::EstimatorOptions opt;
  opt.keep_transcripts = !c.transcripts.empty();
  return opt;
}

inline void write_transcripts(const ExperimentConfig& c,
                              const games::EstimateResult& res) {
  if (c.transcripts.empty()) return;
  std::string text;
  for (const auto& t : res.transcripts) text += t.serialize();
  write_file(c.transcripts, text);
}

inline std::vector<std::string> game_columns() {
  return {"game", "scheme", "adversary", "trials",    "wins", "invalid",
          "rate", "ci_low", "ci_high",   "advantage", "check"};
}

// Adversaries whose guess is independent of b.
inline bool is_baseline(const std::string& name) {
  return name == "random-guess" || name == "always-zero";
}

inline void add_game_row(const ExperimentConfig& c, const std::string& scheme,
                         const games::AdvantageEstimate& e, Report& r) {
  std::string check = "-";
  if (is_baseline(c.adversary)) {
    const double sigma = std::sqrt(0.25 / static_cast<double>(e.trials));
    const bool pass = std::abs(e.estimate - 0.5) <= 3.0 * sigma;
    r.passed = r.passed && pass;
    check = pass_fail(pass);
  }
  r.add_row(
      {std::string(games::to_string(c.game)), scheme, c.adversary,
       std::to_string(e.trials), std::to_string(e.wins),
       std::to_string(e.invalid), fmt(e.estimate), fmt(e.lower), fmt(e.upper),
       c.game == games::GameKind::kCloning ? "-" : fmt(e.advantage()), check});
}

inline Report mutation_suite_report(const ExperimentConfig& c) {
  Report r = make_report("game", c,
                         {"mutation", "scheme", "game", "adversary", "broken",
                          "honest", "honest_limit", "check"});
  primitives::PrimitiveConfig base = c.primitives;
  base.mutation = primitives::Mutation::kNone;
  for (const auto& m : games::run_mutation_suite(base, c.trials, c.seed,
                                                 estimator_options(c))) {
    r.passed = r.passed && m.passed();
    r.add_row({std::string(primitives::to_string(m.c.mutation)),
               std::string(schemes::to_string(m.c.scheme)),
               std::string(games::to_string(m.c.game)), m.c.adversary,
               fmt(m.broken.estimate), fmt(m.honest.estimate),
               fmt(m.honest_limit), pass_fail(m.passed())});
  }
  r.notes.push_back(
      "broken must reach 0.900000; honest must stay at or "
      "below honest_limit = 0.5 + 5*2^(-lambda/2) + 3 sigma");
  return r;
}

inline std::vector<std::string> analysis_columns() {
  return {"pair",    "metric", "method",    "lambda",   "copies",
          "queries", "value",  "reference", "abs_diff", "check"};
}

inline void add_hybrid_row(const analysis::HybridReport& h, double reference,
                           double tolerance, Report& r) {
  const double diff = std::abs(h.value - reference);
  const bool pass = diff <= tolerance;
  r.passed = r.passed && pass;
  r.add_row({h.pair, h.metric, h.method, std::to_string(h.lambda),
             std::to_string(h.copies), std::to_string(h.queries), fmt(h.value),
             fmt(reference), fmt_sci(diff), pass_fail(pass)});
}

}  // namespace detail

// Round-trip suite for the configured scheme.
inline Report cmd_correctness(const ExperimentConfig& c) {
  c.validate();
  Report r = make_report("correctness", c, detail::correctness_columns());
  switch (c.scheme) {
    case schemes::SchemeKind::kOwf:
      detail::owf_correctness(c, r);
      break;
    case schemes::SchemeKind::kPrfspd:
      detail::prfspd_correctness(c, r);
      break;
    case schemes::SchemeKind::kPrfs:
      detail::prfs_correctness(c, r);
      break;
  }
  return r;
}

// One game estimate, or the mutation suite when c.suite == "mutations".
inline Report cmd_game(const ExperimentConfig& c) {
  c.validate();
  if (c.suite == "mutations") return detail::mutation_suite_report(c);
  Report r = make_report("game", c, detail::game_columns());
  const auto opt = detail::estimator_options(c);
  games::EstimateResult res;
  std::string scheme_name(schemes::to_string(c.scheme));
  if (c.game == games::GameKind::kCloning) {
    schemes::SchemeConfig sc = c.scheme_config();
    sc.kind = schemes::SchemeKind::kPrfspd;
    const auto scheme = std::static_pointer_cast<const schemes::PrfspdScheme>(
        schemes::make_scheme(sc, Rng(c.seed).split(3).next()));
    const games::CloningSetup setup{
        std::shared_ptr<const primitives::Prfspd>(scheme, &scheme->prfspd()),
        games::make_cloning_adversary(c.adversary),
        {}};
    res = games::estimate_advantage(setup, c.trials, c.seed, opt);
    scheme_name = scheme->prfspd().name();
    r.notes.push_back(
        "cloning: rate is the forgery probability; accepting "
        "density 2^-w = " +
        fmt(scheme->prfspd().params().accepting_density()));
  } else {
    const games::GameSetup setup{c.game,
                                 schemes::scheme_factory(c.scheme_config()),
                                 games::make_adversary(c.adversary),
                                 {}};
    res = games::estimate_advantage(setup, c.trials, c.seed, opt);
  }
  detail::add_game_row(c, scheme_name, res.estimate, r);
  detail::write_transcripts(c, res);
  return r;
}

// Hybrid checks and Helstrom bounds. c.hybrid selects: punctured, commuting,
// random-key, optimal or all (the first three).
inline Report cmd_analyze(const ExperimentConfig& c) {
  c.validate();
  const std::string& h = c.hybrid;
  if (h != "all" && h != "punctured" && h != "commuting" && h != "random-key" &&
      h != "optimal") {
    throw ConfigError("unknown hybrid check '" + h + "'");
  }
  Report r = make_report("analyze", c, detail::analysis_columns());
  const bool all = h == "all";
  if (all || h == "punctured") {
    for (int l = 2; l <= 6; ++l) {
      for (int p = 1; p <= 4; ++p) {
        detail::add_hybrid_row(analysis::punctured_key_report(l, p),
                               analysis::punctured_key_distance(l, p), 1e-9, r);
      }
    }
  }
  if (all || h == "commuting") {
    for (int l = 1; l <= 3; ++l) {
      detail::add_hybrid_row(
          analysis::commuting_measurement_check(l, 2, c.seed), 0.0, 1e-12, r);
    }
  }
  if (all || h == "random-key") {
    for (int q = 0; q <= c.queries; ++q) {
      detail::add_hybrid_row(
          analysis::random_key_indistinguishability_check(2, q), 0.0, 1e-12, r);
    }
  }
  if (h == "optimal") {
    const auto scheme = detail::build_scheme(c);
    const auto pair = games::default_challenge(*scheme);
    const auto a = analysis::optimal_advantage(c.scheme_config(), c.copies,
                                               pair.m0, pair.m1);
    r.add_row({"IND-CPA", "trace-distance", "random-function-moments",
               std::to_string(a.lambda), std::to_string(a.copies), "0",
               fmt(a.value), "-", "-", "-"});
    r.notes.push_back(std::string(schemes::to_string(c.scheme)) +
                      " view: " + std::to_string(a.qubits) + " qubits, " +
                      std::to_string(a.labels) + " classical labels");
  }
  return r;
}

}  // namespace qpke::cli

#endif  // QPKE_CLI_COMMANDS_HPP_
