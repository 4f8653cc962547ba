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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qpke/analysis.hpp"

namespace qpke::analysis {
namespace {

using primitives::PrimitiveConfig;
using primitives::SkeMode;
using schemes::SchemeConfig;
using schemes::SchemeKind;

using Matrix = Eigen::MatrixXd;
using Views = std::map<std::pair<std::uint64_t, std::uint64_t>, Matrix>;

double trace_norm(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

Eigen::VectorXd tensor_power(const Eigen::VectorXd& v, int p) {
  Eigen::VectorXd out = Eigen::VectorXd::Ones(1);
  for (int i = 0; i < p; ++i) {
    Eigen::VectorXd next(out.size() * v.size());
    for (Eigen::Index hi = 0; hi < v.size(); ++hi) {
      next.segment(hi * out.size(), out.size()) = v(hi) * out;
    }
    out = next;
  }
  return out;
}

// a (x) b with a on the high qubits.
Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double half_distance(const Views& a, const Views& b) {
  double total = 0.0;
  for (const auto& [label, m] : a) {
    auto it = b.find(label);
    total += trace_norm(it == b.end() ? m : Matrix(m - it->second));
  }
  for (const auto& [label, m] : b) {
    if (!a.contains(label)) total += trace_norm(m);
  }
  return 0.5 * total;
}

// Adversary view for the OWF scheme with every function table H enumerated:
// p copies of sum_x |x>|H(x)>, plus the label (x*, nonce, body).
Views owf_views(const PrimitiveConfig& cfg, int copies, const Bits& m) {
  const int l = cfg.lambda;
  const std::uint64_t points = std::uint64_t{1} << l;
  const std::uint64_t tables = std::uint64_t{1} << (l * points);
  const primitives::SymmetricCipher ske(l, cfg.ske);
  const std::uint64_t nonces = std::uint64_t{1} << ske.nonce_width();
  const double weight = 1.0 / double(tables * points * nonces);
  Views views;
  for (std::uint64_t t = 0; t < tables; ++t) {
    auto h = [&](std::uint64_t x) { return (t >> (l * x)) & Bits::mask(l); };
    Eigen::VectorXd key = Eigen::VectorXd::Zero(Eigen::Index(1) << (2 * l));
    for (std::uint64_t x = 0; x < points; ++x) {
      key(Eigen::Index(x | (h(x) << l))) = std::pow(2.0, -l / 2.0);
    }
    const Eigen::VectorXd v = tensor_power(key, copies);
    const Matrix proj = v * v.transpose();
    for (std::uint64_t xs = 0; xs < points; ++xs) {
      for (std::uint64_t r = 0; r < nonces; ++r) {
        const auto ct = ske.encrypt_with_nonce(Bits(h(xs), l), m,
                                               Bits(r, ske.nonce_width()));
        const std::pair<std::uint64_t, std::uint64_t> label{xs | (r << 8),
                                                            ct.body.value()};
        auto [it, fresh] =
            views.try_emplace(label, Matrix::Zero(v.size(), v.size()));
        it->second += weight * proj;
      }
    }
  }
  return views;
}

// PRFS scheme with phase states (-1)^{H(x, y)} for every one-bit H: p key
// copies and the payload, labelled by x*.
Views prfs_views(const PrimitiveConfig& cfg, int copies, bool message) {
  const int d = cfg.d();
  const int n = cfg.prfs_qubits;
  const std::uint64_t points = std::uint64_t{1} << (d + n);
  const std::uint64_t tables = std::uint64_t{1} << points;
  const Eigen::Index ny = Eigen::Index(1) << n;
  const double weight = 1.0 / double(tables << d);
  Views views;
  for (std::uint64_t t = 0; t < tables; ++t) {
    auto sign = [&](std::uint64_t x, std::uint64_t y) {
      return ((t >> (x | (y << d))) & 1) ? -1.0 : 1.0;
    };
    Eigen::VectorXd key(Eigen::Index(1) << (d + n));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << d); ++x) {
      for (std::uint64_t y = 0; y < std::uint64_t(ny); ++y) {
        key(Eigen::Index(x | (y << d))) =
            sign(x, y) * std::pow(2.0, -(d + n) / 2.0);
      }
    }
    const Eigen::VectorXd kv = tensor_power(key, copies);
    const Matrix kp = kv * kv.transpose();
    for (std::uint64_t xs = 0; xs < (std::uint64_t{1} << d); ++xs) {
      Matrix payload;
      if (message) {
        payload = Matrix::Identity(ny, ny) / double(ny);
      } else {
        Eigen::VectorXd psi(ny);
        for (Eigen::Index y = 0; y < ny; ++y) {
          psi(y) = sign(xs, std::uint64_t(y)) / std::sqrt(double(ny));
        }
        payload = psi * psi.transpose();
      }
      // Key copies occupy the low qubits, the payload the high ones.
      const Matrix joint = kron(payload, kp);
      auto [it, fresh] =
          views.try_emplace({xs, 0}, Matrix::Zero(joint.rows(), joint.cols()));
      it->second += weight * joint;
    }
  }
  return views;
}

SchemeConfig scheme(SchemeKind k, int lambda, SkeMode ske = SkeMode::kNoncePad,
                    int n = 4) {
  SchemeConfig c;
  c.kind = k;
  c.primitives.lambda = lambda;
  c.primitives.ske = ske;
  c.primitives.prfs_qubits = n;
  return c;
}

TEST(OptimalAdvantage, OwfMatchesBruteForce) {
  for (auto ske : {SkeMode::kOneTimePad, SkeMode::kNoncePad}) {
    for (int l : {1, 2}) {
      for (int p : {0, 1, 2}) {
        if (l == 2 && p == 2) continue;
        const auto c = scheme(SchemeKind::kOwf, l, ske);
        const Bits m0 = Bits::zeros(l);
        const Bits m1 = Bits::ones(l);
        const double brute = half_distance(owf_views(c.primitives, p, m0),
                                           owf_views(c.primitives, p, m1));
        EXPECT_NEAR(optimal_advantage(c, p, m0, m1).value, brute, 1e-9)
            << "lambda=" << l << " p=" << p;
      }
    }
  }
}

TEST(OptimalAdvantage, OwfOneTimePadValues) {
  const auto c1 = scheme(SchemeKind::kOwf, 1, SkeMode::kOneTimePad);
  EXPECT_NEAR(optimal_advantage(c1, 1, Bits(0, 1), Bits(1, 1)).value,
              std::sqrt(0.5), 1e-9);
  // Without key copies the pad is uniform and the view carries nothing.
  EXPECT_NEAR(optimal_advantage(c1, 0, Bits(0, 1), Bits(1, 1)).value, 0.0,
              1e-12);
}

TEST(OptimalAdvantage, PrfsMatchesBruteForce) {
  for (int n : {1, 2}) {
    for (int p : {0, 1}) {
      auto c = scheme(SchemeKind::kPrfs, 1, SkeMode::kNoncePad, n);
      const double brute = half_distance(prfs_views(c.primitives, p, false),
                                         prfs_views(c.primitives, p, true));
      EXPECT_NEAR(optimal_advantage(c, p, Bits(0, 1), Bits(1, 1)).value, brute,
                  1e-9)
          << "n=" << n << " p=" << p;
    }
  }
}

TEST(OptimalAdvantage, PrfsDecreasesWithOutputQubits) {
  const double n2 =
      optimal_advantage(scheme(SchemeKind::kPrfs, 2, SkeMode::kNoncePad, 2), 1,
                        Bits(0, 1), Bits(1, 1))
          .value;
  const double n3 =
      optimal_advantage(scheme(SchemeKind::kPrfs, 2, SkeMode::kNoncePad, 3), 1,
                        Bits(0, 1), Bits(1, 1))
          .value;
  EXPECT_NEAR(n2, 0.140625, 1e-9);
  EXPECT_NEAR(n3, 0.136719, 1e-6);
  EXPECT_GT(n2, 0.0);
  EXPECT_LT(n3, n2);
}

TEST(OptimalAdvantage, SymmetricAndZeroOnEqualMessages) {
  const auto owf = scheme(SchemeKind::kOwf, 2);
  Rng rng(3);
  for (int i = 0; i < 5; ++i) {
    const Bits a = rng.bits(4);
    const Bits b = rng.bits(4);
    EXPECT_NEAR(optimal_advantage(owf, 1, a, b).value,
                optimal_advantage(owf, 1, b, a).value, 1e-12);
    EXPECT_NEAR(optimal_advantage(owf, 1, a, a).value, 0.0, 1e-12);
  }
  const auto prfs = scheme(SchemeKind::kPrfs, 2, SkeMode::kNoncePad, 2);
  EXPECT_NEAR(optimal_advantage(prfs, 1, Bits(1, 1), Bits(0, 1)).value,
              optimal_advantage(prfs, 1, Bits(0, 1), Bits(1, 1)).value, 1e-12);
  EXPECT_NEAR(optimal_advantage(prfs, 1, Bits(1, 1), Bits(1, 1)).value, 0.0,
              1e-12);
}

TEST(OptimalAdvantage, Limits) {
  EXPECT_THROW(optimal_advantage(scheme(SchemeKind::kPrfspd, 2), 1, Bits(0, 1),
                                 Bits(1, 1)),
               CapacityError);
  EXPECT_THROW(
      optimal_advantage(scheme(SchemeKind::kOwf, 6), 1, Bits(0, 1), Bits(1, 1)),
      CapacityError);
  EXPECT_THROW(
      optimal_advantage(scheme(SchemeKind::kOwf, 2), 1, Bits(0, 1), Bits(1, 2)),
      MessageDomainError);
  EXPECT_THROW(
      optimal_advantage(scheme(SchemeKind::kOwf, 0), 1, Bits(0, 1), Bits(1, 1)),
      ConfigError);
}

TEST(PuncturedKey, ExplicitMatchesClosedForm) {
  for (int l = 2; l <= 6; ++l) {
    for (int p = 1; p <= 4; ++p) {
      const double closed = punctured_key_distance(l, p);
      const double overlap = std::pow(1.0 - std::ldexp(1.0, -l), p);
      EXPECT_NEAR(closed, std::sqrt(1.0 - overlap), 1e-15);
      if (2 * l * p > 16) continue;
      Rng rng(l * 10 + p);
      const Bits dk = rng.bits(l);
      const Bits xs = rng.bits(l);
      EXPECT_NEAR(punctured_key_distance_explicit(l, p, dk, xs), closed, 1e-9)
          << "lambda=" << l << " p=" << p;
    }
  }
  EXPECT_NEAR(punctured_key_distance(4, 2), 0.34798, 1e-5);
  EXPECT_EQ(punctured_key_distance(3, 0), 0.0);
  EXPECT_THROW(punctured_key_distance(0, 1), RangeError);
}

TEST(PuncturedKey, ReportMethods) {
  EXPECT_EQ(punctured_key_report(4, 2).method, "explicit-tensor");
  const auto big = punctured_key_report(6, 4);
  EXPECT_EQ(big.method, "closed-form");
  EXPECT_EQ(big.value, punctured_key_distance(6, 4));
}

TEST(Hybrids, MeasurementsCommute) {
  for (int l = 1; l <= 3; ++l) {
    for (std::uint64_t seed : {1, 2}) {
      const auto r = commuting_measurement_check(l, 2, seed);
      EXPECT_EQ(r.pair, "H0-H1");
      EXPECT_NEAR(r.value, 0.0, 1e-12) << "lambda=" << l;
    }
  }
  EXPECT_NEAR(commuting_measurement_check(2, 1).value, 0.0, 1e-12);
  EXPECT_THROW(commuting_measurement_check(4), CapacityError);
}

TEST(Hybrids, TotalVariationDetectsDifferences) {
  EXPECT_DOUBLE_EQ(detail::total_variation({0.5, 0.5}, {1.0, 0.0}), 0.5);
  EXPECT_DOUBLE_EQ(detail::total_variation({0.25, 0.75}, {0.25, 0.75}), 0.0);
}

TEST(Hybrids, RandomKeyIndistinguishable) {
  for (int q = 0; q <= 3; ++q) {
    const auto r = random_key_indistinguishability_check(2, q);
    EXPECT_EQ(r.pair, "H3-H4");
    EXPECT_EQ(r.queries, q);
    EXPECT_NEAR(r.value, 0.0, 1e-12) << "queries=" << q;
  }
  EXPECT_THROW(random_key_indistinguishability_check(3, 1), CapacityError);
}

}  // namespace
}  // namespace qpke::analysis
