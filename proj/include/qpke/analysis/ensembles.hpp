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

#ifndef QPKE_ANALYSIS_ENSEMBLES_HPP_
#define QPKE_ANALYSIS_ENSEMBLES_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <array>
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

// Exact optimal distinguishing advantage of the IND-CPA game with `copies`
// public-key copies: the trace distance between the adversary's views for m0
// and m1, averaged over a uniformly random function in place of the PRF or
// PRFS and over all encryption randomness.
struct EnsembleAdvantage {
  schemes::SchemeKind scheme = schemes::SchemeKind::kOwf;
  int lambda = 0;
  int copies = 0;
  int qubits = 0;          // quantum part of the view
  std::size_t labels = 0;  // distinct classical parts of the view
  Bits m0;
  Bits m1;
  double value = 0.0;
};

namespace detail {

using RealMatrix = Eigen::MatrixXd;

inline double symmetric_trace_norm(const RealMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  if (m.rows() == 1) return std::abs(m(0, 0));
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

inline void require_view_capacity(int qubits) {
  if (qubits < 0 || qubits > qsim::max_density_qubits()) {
    throw CapacityError("adversary view needs " + std::to_string(qubits) +
                        " qubits, over the density-matrix limit of " +
                        std::to_string(qsim::max_density_qubits()));
  }
}

// Partial assignment of a random function on a small domain; -1 is unset.
class Constraints {
 public:
  explicit Constraints(int domain)
      : value_(static_cast<std::size_t>(domain), -1) {}

  bool add(std::uint64_t x, std::int64_t y) {
    auto& v = value_[x];
    if (v == -1) {
      v = y;
      touched_.push_back(x);
      return true;
    }
    return v == y;
  }

  int distinct() const { return static_cast<int>(touched_.size()); }

  void clear() {
    for (auto x : touched_) value_[x] = -1;
    touched_.clear();
  }

 private:
  std::vector<std::int64_t> value_;
  std::vector<std::uint64_t> touched_;
};

// M(x*, k)[r, c] = E_H[ <r|qpk_H>^{(x)p} <qpk_H|^{(x)p}|c> 1{H(x*) = k} ] for
// the OWF key sum_x |x>|H(x)> with H uniform on lambda-bit strings.
inline RealMatrix owf_key_moment(int lambda, int copies, std::uint64_t x_star,
                                 std::uint64_t k) {
  const std::uint64_t dim = std::uint64_t{1} << (2 * lambda * copies);
  const std::uint64_t mask = Bits::mask(lambda);
  const double amp2 = std::ldexp(1.0, -lambda * copies);
  RealMatrix m = RealMatrix::Zero(static_cast<Eigen::Index>(dim),
                                  static_cast<Eigen::Index>(dim));
  Constraints cons(1 << lambda);
  auto add_copies = [&](std::uint64_t idx) {
    for (int j = 0; j < copies; ++j) {
      const std::uint64_t x = (idx >> (2 * lambda * j)) & mask;
      const std::uint64_t y = (idx >> (2 * lambda * j + lambda)) & mask;
      if (!cons.add(x, static_cast<std::int64_t>(y))) return false;
    }
    return true;
  };
  for (std::uint64_t r = 0; r < dim; ++r) {
    cons.clear();
    if (!cons.add(x_star, static_cast<std::int64_t>(k)) || !add_copies(r))
      continue;
    for (std::uint64_t c = 0; c < dim; ++c) {
      cons.clear();
      cons.add(x_star, static_cast<std::int64_t>(k));
      if (!add_copies(r) || !add_copies(c)) continue;
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          amp2 * std::ldexp(1.0, -lambda * cons.distinct());
    }
  }
  return m;
}

inline EnsembleAdvantage owf_advantage(const primitives::PrimitiveConfig& cfg,
                                       int copies, const Bits& m0,
                                       const Bits& m1) {
  const int lambda = cfg.lambda;
  const int qubits = 2 * lambda * copies;
  require_view_capacity(qubits);
  const primitives::SymmetricCipher ske(lambda, cfg.ske);
  const int w = m0.width();
  if (cfg.ske == primitives::SkeMode::kOneTimePad && w > lambda) {
    throw MessageDomainError("one-time pad messages are at most λ bits");
  }
  std::vector<Bits> nonces;
  if (cfg.ske == primitives::SkeMode::kNoncePad) {
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << lambda); ++r) {
      nonces.emplace_back(r, lambda);
    }
  } else {
    nonces.push_back(Bits::zeros(ske.nonce_width()));
  }
  const std::uint64_t points = std::uint64_t{1} << lambda;
  const double label_weight =
      1.0 / (static_cast<double>(points) * static_cast<double>(nonces.size()));

  std::vector<RealMatrix> moments;  // indexed by k, for the current x*
  EnsembleAdvantage out;
  double total = 0.0;
  for (std::uint64_t x_star = 0; x_star < points; ++x_star) {
    moments.clear();
    for (std::uint64_t k = 0; k < points; ++k) {
      moments.push_back(owf_key_moment(lambda, copies, x_star, k));
    }
    for (const Bits& nonce : nonces) {
      // Labels with this (x*, nonce), keyed by ciphertext body: A_{m0} -
      // A_{m1}.
      std::map<Bits, RealMatrix> diff;
      for (std::uint64_t k = 0; k < points; ++k) {
        const Bits pad = ske.pad(Bits(k, lambda), nonce, w);
        for (int b = 0; b < 2; ++b) {
          const Bits body = (b == 0 ? m0 : m1) ^ pad;
          auto [it, fresh] = diff.try_emplace(body);
          if (fresh) {
            it->second = RealMatrix::Zero(moments[k].rows(), moments[k].cols());
          }
          const double sign = b == 0 ? label_weight : -label_weight;
          it->second += sign * moments[k];
        }
      }
      out.labels += diff.size();
      for (const auto& [body, d] : diff) total += symmetric_trace_norm(d);
    }
  }
  out.value = std::clamp(0.5 * total, 0.0, 1.0);
  out.qubits = qubits;
  return out;
}

// True when every point occurs an even number of times.
template <std::size_t N>
bool all_paired(std::array<std::uint64_t, N>& pts, std::size_t count) {
  std::sort(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(count));
  for (std::size_t i = 0; i < count; i += 2) {
    if (i + 1 >= count || pts[i] != pts[i + 1]) return false;
  }
  return true;
}

// PRFS scheme with phase states (-1)^{H(x || y)} for a uniformly random
// one-bit H. E_H[(-1)^{sum of H over a multiset}] is 1 when every point
// appears an even number of times and 0 otherwise.
inline EnsembleAdvantage prfs_advantage(const primitives::PrimitiveConfig& cfg,
                                        int copies, const Bits& m0,
                                        const Bits& m1) {
  const int d = cfg.d();
  const int n = cfg.prfs_qubits;
  const int block = d + n;
  const int qubits = block * copies + n;
  require_view_capacity(qubits);
  if (m0.width() != 1) {
    throw MessageDomainError("the PRFS scheme encrypts single bits");
  }
  constexpr std::size_t kMaxPoints = 2 * 16 + 2;
  if (2 * static_cast<std::size_t>(copies) + 2 > kMaxPoints) {
    throw CapacityError("too many key copies for the PRFS ensemble");
  }
  const std::uint64_t dim = std::uint64_t{1} << qubits;
  const std::uint64_t xmask = Bits::mask(d);
  const std::uint64_t ymask = Bits::mask(n);
  const std::uint64_t block_mask = Bits::mask(block);
  const double key_amp2 = std::ldexp(1.0, -block * copies);
  const double label_weight = std::ldexp(1.0, -d);

  auto copy_points = [&](std::uint64_t idx,
                         std::array<std::uint64_t, kMaxPoints>& pts,
                         std::size_t& count) {
    for (int j = 0; j < copies; ++j) {
      pts[count++] = (idx >> (block * j)) & block_mask;  // x_j | y_j << d
    }
  };

  EnsembleAdvantage out;
  double total = 0.0;
  for (std::uint64_t x_star = 0; x_star <= xmask; ++x_star) {
    RealMatrix diff = RealMatrix::Zero(static_cast<Eigen::Index>(dim),
                                       static_cast<Eigen::Index>(dim));
    for (std::uint64_t r = 0; r < dim; ++r) {
      const std::uint64_t yr = (r >> (block * copies)) & ymask;
      for (std::uint64_t c = 0; c < dim; ++c) {
        const std::uint64_t yc = (c >> (block * copies)) & ymask;
        std::array<std::uint64_t, kMaxPoints> pts{};
        std::size_t count = 0;
        copy_points(r, pts, count);
        copy_points(c, pts, count);
        // Pure payload psi_{H,x*}.
        auto pure = pts;
        std::size_t pure_count = count;
        pure[pure_count++] = x_star | (yr << d);
        pure[pure_count++] = x_star | (yc << d);
        const double v_pure =
            all_paired(pure, pure_count) ? key_amp2 * std::ldexp(1.0, -n) : 0.0;
        // Maximally mixed payload.
        const double v_mixed = (yr == yc && all_paired(pts, count))
                                   ? key_amp2 * std::ldexp(1.0, -n)
                                   : 0.0;
        const double a0 = m0.bit(0) ? v_mixed : v_pure;
        const double a1 = m1.bit(0) ? v_mixed : v_pure;
        diff(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            label_weight * (a0 - a1);
      }
    }
    ++out.labels;
    total += symmetric_trace_norm(diff);
  }
  out.value = std::clamp(0.5 * total, 0.0, 1.0);
  out.qubits = qubits;
  return out;
}

}  // namespace detail

// Helstrom bound for the IND-CPA game with `copies` key copies. The keyed
// function is always replaced by a uniformly random one, whatever
// `c.primitives.function` says. Supported: the OWF scheme (any SKE mode) and
// the PRFS scheme; the PRFSPD scheme's lambda-slot key does not fit.
inline EnsembleAdvantage optimal_advantage(const schemes::SchemeConfig& c,
                                           int copies, const Bits& m0,
                                           const Bits& m1) {
  c.primitives.validate();
  if (copies < 0) throw RangeError("copies must be non-negative");
  if (m0.width() != m1.width()) {
    throw MessageDomainError("challenge messages differ in length");
  }
  if (m0.width() < 1) throw MessageDomainError("empty message");
  EnsembleAdvantage out;
  switch (c.kind) {
    case schemes::SchemeKind::kOwf:
      out = detail::owf_advantage(c.primitives, copies, m0, m1);
      break;
    case schemes::SchemeKind::kPrfs:
      out = detail::prfs_advantage(c.primitives, copies, m0, m1);
      break;
    case schemes::SchemeKind::kPrfspd:
      throw CapacityError(
          "the PRFSPD-scheme view has λ slots of d + m + w qubits each, beyond "
          "exact density-matrix computation");
  }
  out.scheme = c.kind;
  out.lambda = c.primitives.lambda;
  out.copies = copies;
  out.m0 = m0;
  out.m1 = m1;
  return out;
}

}  // namespace qpke::analysis

#endif  // QPKE_ANALYSIS_ENSEMBLES_HPP_
