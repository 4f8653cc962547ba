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

#ifndef QPKE_TESTS_TEST_UTIL_HPP_
#define QPKE_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <cstdint>

namespace qpke::testing {

// Standard deviation of a mean of n Bernoulli(p) draws.
inline double binomial_sigma(double p, std::int64_t n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// |observed - expected| within k standard deviations taken at `expected`.
inline bool within_sigmas(double observed, double expected, std::int64_t n,
                          double k) {
  return std::abs(observed - expected) <= k * binomial_sigma(expected, n);
}

}  // namespace qpke::testing

#endif  // QPKE_TESTS_TEST_UTIL_HPP_
