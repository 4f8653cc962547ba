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

#ifndef QPKE_QSIM_DUMP_HPP_
#define QPKE_QSIM_DUMP_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpke/errors.hpp"
#include "qpke/qsim/state.hpp"

namespace qpke::qsim {

// Debug text format:
//
//   qpke-state qubits=<q>
//   <basis index> <re> <im>      (one line per nonzero amplitude)
//
// Basis indices are little-endian: qubit 0 is the least significant bit.
inline void dump_state(std::ostream& os, const PureState& s) {
  std::ostringstream buf;
  buf.precision(17);
  buf << "qpke-state qubits=" << s.qubit_count() << '\n';
  const auto a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (a[i] == Amplitude{}) continue;
    buf << i << ' ' << a[i].real() << ' ' << a[i].imag() << '\n';
  }
  os << buf.str();
}

inline PureState parse_state(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header.rfind("qpke-state qubits=", 0) != 0) {
    throw DimensionError("missing qpke-state header");
  }
  const int q =
      std::stoi(header.substr(std::string("qpke-state qubits=").size()));
  require_capacity(q, "parsed state");
  std::vector<Amplitude> amps(std::size_t{1} << q);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) break;
    std::istringstream ls(line);
    std::uint64_t idx = 0;
    double re = 0.0;
    double im = 0.0;
    if (!(ls >> idx >> re >> im) || idx >= amps.size()) {
      throw DimensionError("bad amplitude line: " + line);
    }
    amps[idx] = Amplitude(re, im);
  }
  return PureState::from_amplitudes(q, std::move(amps));
}

}  // namespace qpke::qsim

#endif  // QPKE_QSIM_DUMP_HPP_
