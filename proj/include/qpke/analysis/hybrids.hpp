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

#ifndef QPKE_ANALYSIS_HYBRIDS_HPP_
#define QPKE_ANALYSIS_HYBRIDS_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpke/errors.hpp"
#include "qpke/primitives.hpp"
#include "qpke/qsim.hpp"
#include "qpke/schemes.hpp"

namespace qpke::analysis {

// One number comparing two adjacent hybrids of the OWF-scheme security proof.
struct HybridReport {
  std::string pair;    // "H0-H1", "H1-H2", "H3-H4"
  std::string metric;  // "total-variation" or "trace-distance"
  std::string method;  // "closed-form", "explicit-tensor", "enumeration"
  double value = 0.0;
  int lambda = 0;
  int copies = 0;
  int queries = 0;
};

// sqrt(1 - (1 - 2^-lambda)^p): trace distance between p copies of the OWF
// public key and p copies of the same key with the branch x* removed.
inline double punctured_key_distance(int lambda, int copies) {
  if (lambda < 1 || lambda > 62) throw RangeError("λ out of range");
  if (copies < 0) throw RangeError("copies must be non-negative");
  const double overlap2 =
      std::pow(1.0 - std::ldexp(1.0, -lambda), static_cast<double>(copies));
  return std::sqrt(std::max(0.0, 1.0 - overlap2));
}

// The same quantity from explicit states: |qpk>^{(x)p} and |qpk'>^{(x)p} with
// qpk' = puncture(qpk, x*) for the counter-PRF OWF scheme.
inline double punctured_key_distance_explicit(int lambda, int copies,
                                              const Bits& dk,
                                              const Bits& x_star) {
  if (copies < 0) throw RangeError("copies must be non-negative");
  if (copies == 0) return 0.0;
  qsim::require_capacity(2 * lambda * copies, "punctured key tensor power");
  primitives::PrimitiveConfig c;
  c.lambda = lambda;
  const schemes::OwfScheme scheme(c);
  const qsim::PureState qpk =
      scheme.qpk_gen(schemes::DecryptionKey(dk)).single_state();
  const qsim::PureState punctured = qsim::puncture(qpk, x_star, scheme.left());
  return qsim::trace_distance(qsim::tensor_power(qpk, copies),
                              qsim::tensor_power(punctured, copies));
}

// H1-H2 report. Uses the explicit construction when it fits in memory and the
// closed form otherwise.
inline HybridReport punctured_key_report(int lambda, int copies) {
  HybridReport r{"H1-H2",
                 "trace-distance",
                 "closed-form",
                 punctured_key_distance(lambda, copies),
                 lambda,
                 copies,
                 0};
  if (copies > 0 && 2 * lambda * copies <= qsim::max_qubits()) {
    r.method = "explicit-tensor";
    r.value = punctured_key_distance_explicit(
        lambda, copies, Bits::zeros(lambda), Bits::zeros(lambda));
  }
  return r;
}

namespace detail {

// Joint distribution of measuring `first` and then `second` on `s`, indexed
// by first_outcome | second_outcome << first.width.
inline std::vector<double> sequential_distribution(const qsim::PureState& s,
                                                   qsim::WireRange first,
                                                   qsim::WireRange second,
                                                   bool first_is_low) {
  const int low_width = first_is_low ? first.width : second.width;
  std::vector<double> joint(std::size_t{1} << (first.width + second.width),
                            0.0);
  const auto p1 = qsim::outcome_probabilities(s, first);
  for (std::uint64_t k = 0; k < p1.size(); ++k) {
    if (!(p1[k] > 0.0)) continue;
    const qsim::PureState post = qsim::detail::project(s, first, k, p1[k]);
    const auto p2 = qsim::outcome_probabilities(post, second);
    for (std::uint64_t j = 0; j < p2.size(); ++j) {
      if (!(p2[j] > 0.0)) continue;
      const std::uint64_t idx =
          first_is_low ? (k | (j << low_width)) : (j | (k << low_width));
      joint[idx] += p1[k] * p2[j];
    }
  }
  return joint;
}

inline double total_variation(const std::vector<double>& a,
                              const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return 0.5 * s;
}

}  // namespace detail

// H0-H1: the challenger's measurement of its key copy and the adversary's
// measurements of `copies` further copies, in either order. Both joint
// distributions of (x*, f(x*), adversary outcomes) are computed exactly.
inline HybridReport commuting_measurement_check(int lambda, int copies = 2,
                                                std::uint64_t dk_seed = 1) {
  if (lambda < 1 || lambda > 3) {
    throw CapacityError("commuting check enumerates λ ≤ 3 only");
  }
  if (copies < 1) throw RangeError("at least one adversary copy is needed");
  const int key_qubits = 2 * lambda;
  qsim::require_capacity(key_qubits * (copies + 1), "commuting check");
  primitives::PrimitiveConfig c;
  c.lambda = lambda;
  const schemes::OwfScheme scheme(c);
  Rng rng(dk_seed);
  const qsim::PureState qpk = scheme.qpk_gen(scheme.gen(rng)).single_state();
  const qsim::PureState joint = qsim::tensor_power(qpk, copies + 1);
  const qsim::WireRange challenger{0, key_qubits};
  const qsim::WireRange adversary{key_qubits, key_qubits * copies};
  const auto challenger_first =
      detail::sequential_distribution(joint, challenger, adversary, true);
  const auto adversary_first =
      detail::sequential_distribution(joint, adversary, challenger, false);
  return {"H0-H1",
          "total-variation",
          "enumeration",
          detail::total_variation(challenger_first, adversary_first),
          lambda,
          copies,
          0};
}

// Messages used by the H3-H4 check when none are given.
inline std::vector<Bits> default_query_messages(int queries) {
  std::vector<Bits> m;
  for (int i = 0; i < queries; ++i) {
    m.emplace_back(static_cast<std::uint64_t>(0xA5 ^ (i * 0x3B)), 8);
  }
  return m;
}

// H3-H4: with a random function H, the adversary sees the punctured key
// (x*, H restricted to x != x*) and nonce-pad ciphertexts of `messages` under
// H(x*) in H3 or under a fresh uniform z in H4. Both distributions are
// enumerated over every table H, every x*, every z and every nonce.
inline HybridReport random_key_indistinguishability_check(
    int lambda, const std::vector<Bits>& messages) {
  const int q = static_cast<int>(messages.size());
  const std::uint64_t points = std::uint64_t{1} << lambda;
  // (2^lambda)^(2^lambda) tables, 2^lambda choices of x* and z, 2^(lambda q)
  // nonce vectors.
  const double work = std::pow(2.0, lambda * static_cast<double>(points)) *
                      std::pow(2.0, lambda * (2.0 + q));
  if (lambda < 1 || work > std::pow(2.0, 24)) {
    throw CapacityError(
        "H3-H4 enumeration over random functions is limited "
        "to about 2^24 outcomes (λ = 2 with up to 6 queries)");
  }
  const primitives::SymmetricCipher ske(lambda);
  const std::uint64_t tables = std::uint64_t{1} << (lambda * points);
  const std::uint64_t nonce_vectors = std::uint64_t{1} << (lambda * q);
  const std::uint64_t value_mask = Bits::mask(lambda);

  using Dist = std::map<std::string, double>;
  auto visible = [&](std::uint64_t table, std::uint64_t x_star,
                     std::uint64_t nonces, std::uint64_t key) {
    std::string v;
    v.push_back(static_cast<char>(x_star));
    for (std::uint64_t x = 0; x < points; ++x) {
      if (x == x_star) continue;
      v.push_back(static_cast<char>((table >> (lambda * x)) & value_mask));
    }
    for (int i = 0; i < q; ++i) {
      const Bits r((nonces >> (lambda * i)) & value_mask, lambda);
      const auto ct = ske.encrypt_with_nonce(Bits(key, lambda), messages[i], r);
      v.push_back(static_cast<char>(r.value()));
      for (int byte = 0; byte < 8; ++byte) {
        v.push_back(static_cast<char>((ct.body.value() >> (8 * byte)) & 0xFF));
      }
    }
    return v;
  };

  Dist h3;
  Dist h4;
  const double w3 =
      1.0 / (static_cast<double>(tables) * points * nonce_vectors);
  const double w4 = w3 / static_cast<double>(points);
  for (std::uint64_t table = 0; table < tables; ++table) {
    for (std::uint64_t x_star = 0; x_star < points; ++x_star) {
      const std::uint64_t h_star = (table >> (lambda * x_star)) & value_mask;
      for (std::uint64_t nonces = 0; nonces < nonce_vectors; ++nonces) {
        h3[visible(table, x_star, nonces, h_star)] += w3;
        for (std::uint64_t z = 0; z < points; ++z) {
          h4[visible(table, x_star, nonces, z)] += w4;
        }
      }
    }
  }
  double tv = 0.0;
  for (const auto& [k, p] : h3) {
    auto it = h4.find(k);
    tv += std::abs(p - (it == h4.end() ? 0.0 : it->second));
  }
  for (const auto& [k, p] : h4) {
    if (!h3.contains(k)) tv += p;
  }
  return {"H3-H4", "total-variation", "enumeration", 0.5 * tv, lambda, 0, q};
}

inline HybridReport random_key_indistinguishability_check(int lambda,
                                                          int queries) {
  return random_key_indistinguishability_check(lambda,
                                               default_query_messages(queries));
}

}  // namespace qpke::analysis

#endif  // QPKE_ANALYSIS_HYBRIDS_HPP_
