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

#ifndef QPKE_PRIMITIVES_CONFIG_HPP_
#define QPKE_PRIMITIVES_CONFIG_HPP_

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "qpke/errors.hpp"
#include "qpke/primitives/ske.hpp"

namespace qpke::primitives {

// Where keyed functions come from.
enum class FunctionMode {
  kCounterPrf,      // deterministic toy PRF
  kRandomFunction,  // one lazily sampled random function, key ignored
};

// Deliberately broken instantiations used to check that attacks are detected.
enum class Mutation {
  kNone,
  kSkeFixedNonce,         // symmetric pads repeat across encryptions
  kPrfKeyIndependent,     // f_k = f_0 for every k
  kPrfspdKeyIndependent,  // PRFSPD tags computable without the key
  kPrfsConstant,          // PRFS outputs one fixed state
  kCollapsedPublicKey,    // OWF scheme hands out an already measured key
};

inline constexpr std::array<std::pair<Mutation, std::string_view>, 6>
    kMutationNames{{
        {Mutation::kNone, "none"},
        {Mutation::kSkeFixedNonce, "ske-fixed-nonce"},
        {Mutation::kPrfKeyIndependent, "prf-key-independent"},
        {Mutation::kPrfspdKeyIndependent, "prfspd-key-independent"},
        {Mutation::kPrfsConstant, "prfs-constant"},
        {Mutation::kCollapsedPublicKey, "collapsed-public-key"},
    }};

inline std::string_view to_string(Mutation m) {
  for (const auto& [k, v] : kMutationNames) {
    if (k == m) return v;
  }
  return "?";
}

inline Mutation parse_mutation(std::string_view s) {
  for (const auto& [k, v] : kMutationNames) {
    if (v == s) return k;
  }
  throw ConfigError("unknown mutation '" + std::string(s) + "'");
}

inline std::string_view to_string(FunctionMode m) {
  return m == FunctionMode::kCounterPrf ? "counter" : "random";
}

inline FunctionMode parse_function_mode(std::string_view s) {
  if (s == "counter") return FunctionMode::kCounterPrf;
  if (s == "random") return FunctionMode::kRandomFunction;
  throw ConfigError("unknown function mode '" + std::string(s) + "'");
}

// Widths and instantiation selectors shared by every primitive.
//
// Text form, one "key = value" per line ('#' starts a comment):
//   lambda, d, n, m, w, c   integers (c must equal m + w)
//   prf                     counter | random
//   ske                     nonce-pad | one-time-pad | fixed-nonce
//   mutation                see kMutationNames
//   bit_order               lsb0 (qubit 0 is the least significant bit)
struct PrimitiveConfig {
  int lambda = 4;
  int input_width = 0;  // d; 0 means "same as lambda"
  int prfs_qubits = 4;  // n
  int pd_measured = 1;  // m
  int pd_tag = 6;       // w
  FunctionMode function = FunctionMode::kCounterPrf;
  SkeMode ske = SkeMode::kNoncePad;
  Mutation mutation = Mutation::kNone;

  int d() const { return input_width == 0 ? lambda : input_width; }
  int proof_width() const { return pd_measured + pd_tag; }

  void validate() const {
    if (lambda < 1 || lambda > 16) throw ConfigError("λ out of range");
    if (d() < 1 || d() > 16) throw ConfigError("d out of range");
    if (prfs_qubits < 1 || prfs_qubits > 12)
      throw ConfigError("n out of range");
    if (pd_measured < 1 || pd_measured > 8) throw ConfigError("m out of range");
    if (pd_tag < 1 || pd_tag > 32) throw ConfigError("w out of range");
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "lambda = " << lambda << '\n'
       << "d = " << d() << '\n'
       << "n = " << prfs_qubits << '\n'
       << "m = " << pd_measured << '\n'
       << "w = " << pd_tag << '\n'
       << "c = " << proof_width() << '\n'
       << "prf = " << to_string(function) << '\n'
       << "ske = " << to_string(ske) << '\n'
       << "mutation = " << to_string(mutation) << '\n'
       << "bit_order = lsb0\n";
    return os.str();
  }

  static PrimitiveConfig from_text(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
          throw ConfigError("config line without '=': " + line);
        }
        continue;
      }
      kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    PrimitiveConfig c;
    std::string c_text;
    for (const auto& [k, v] : kv) {
      if (k == "lambda")
        c.lambda = to_int(k, v);
      else if (k == "d")
        c.input_width = to_int(k, v);
      else if (k == "n")
        c.prfs_qubits = to_int(k, v);
      else if (k == "m")
        c.pd_measured = to_int(k, v);
      else if (k == "w")
        c.pd_tag = to_int(k, v);
      else if (k == "c")
        c_text = v;
      else if (k == "prf")
        c.function = parse_function_mode(v);
      else if (k == "ske")
        c.ske = parse_ske_mode(v);
      else if (k == "mutation")
        c.mutation = parse_mutation(v);
      else if (k == "bit_order") {
        if (v != "lsb0")
          throw ConfigError("only bit_order = lsb0 is supported");
      } else {
        throw ConfigError("unknown config key '" + k + "'");
      }
    }
    if (!c_text.empty() && to_int("c", c_text) != c.proof_width()) {
      throw ConfigError("c must equal m + w");
    }
    c.validate();
    return c;
  }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  static int to_int(const std::string& key, const std::string& v) {
    try {
      std::size_t used = 0;
      const int r = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return r;
    } catch (const std::exception&) {
      throw ConfigError("config key '" + key + "' needs an integer");
    }
  }
};

}  // namespace qpke::primitives

#endif  // QPKE_PRIMITIVES_CONFIG_HPP_
