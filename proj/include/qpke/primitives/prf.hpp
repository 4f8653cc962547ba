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

#ifndef QPKE_PRIMITIVES_PRF_HPP_
#define QPKE_PRIMITIVES_PRF_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "qpke/bits.hpp"
#include "qpke/errors.hpp"
#include "qpke/rng.hpp"

namespace qpke::primitives {

// Key for a PRF, PRFS or PRFSPD; its width is the security parameter.
class PrfKey {
 public:
  explicit PrfKey(Bits bits) : bits_(bits) {}
  const Bits& bits() const { return bits_; }
  int width() const { return bits_.width(); }
  friend bool operator==(const PrfKey&, const PrfKey&) = default;

 private:
  Bits bits_;
};

struct FunctionShape {
  int key_width = 0;
  int input_width = 0;
  int output_width = 0;
  friend bool operator==(const FunctionShape&, const FunctionShape&) = default;
};

// Domain-separation tags for the counter-mode construction.
enum class PrfDomain : std::uint64_t {
  kKeyedFunction = 0x7066756E63746E31ULL,
  kSymmetricPad = 0x736B652D70616431ULL,
};

// Counter-mode toy PRF. The seed block absorbs the parameter word, then the
// key, then the input, each through mix64; output block i is
// mix64(seed + (i + 1) * 0xD1B54A32D192ED03) and the first `width` bits of
// the concatenated blocks form the result. Only width <= 64 is supported, so
// a single block is ever used.
inline Bits prf_stream(PrfDomain domain, const Bits& key, const Bits& input,
                       int width) {
  if (width < 0 || width > Bits::kMaxWidth) {
    throw WidthError("PRF output width outside [0, 64]");
  }
  const std::uint64_t params =
      static_cast<std::uint64_t>(key.width()) |
      (static_cast<std::uint64_t>(input.width()) << 8) |
      (static_cast<std::uint64_t>(width) << 16);
  std::uint64_t s = mix64(static_cast<std::uint64_t>(domain) ^ params);
  s = mix64(s ^ key.value());
  s = mix64(s ^ input.value());
  const std::uint64_t block = mix64(s + 0xD1B54A32D192ED03ULL);
  return Bits(block, width);
}

// A keyed family {f_k} with fixed widths. Width checks live here, concrete
// families implement evaluate().
class KeyedFunction {
 public:
  explicit KeyedFunction(FunctionShape shape) : shape_(shape) {}
  virtual ~KeyedFunction() = default;

  Bits operator()(const Bits& key, const Bits& input) const {
    key.require_width(shape_.key_width, "function key");
    input.require_width(shape_.input_width, "function input");
    return evaluate(key, input);
  }

  const FunctionShape& shape() const { return shape_; }
  virtual std::string name() const = 0;

 protected:
  virtual Bits evaluate(const Bits& key, const Bits& input) const = 0;

 private:
  FunctionShape shape_;
};

class CounterModePrf final : public KeyedFunction {
 public:
  explicit CounterModePrf(FunctionShape shape) : KeyedFunction(shape) {}
  std::string name() const override { return "counter"; }

 protected:
  Bits evaluate(const Bits& key, const Bits& input) const override {
    return prf_stream(PrfDomain::kKeyedFunction, key, input,
                      shape().output_width);
  }
};

// Lazily sampled uniformly random function. The first query of an input draws
// a fresh output from the table's generator; later queries replay it. Safe to
// query from several threads: concurrent first queries agree on one value.
class RandomFunctionTable {
 public:
  RandomFunctionTable(int input_width, int output_width, std::uint64_t seed)
      : input_width_(input_width), output_width_(output_width), rng_(seed) {}

  Bits operator()(const Bits& input) const {
    input.require_width(input_width_, "random function input");
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = table_.try_emplace(input);
    if (inserted) it->second = rng_.bits(output_width_);
    return it->second;
  }

  int input_width() const { return input_width_; }
  int output_width() const { return output_width_; }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return table_.size();
  }

 private:
  int input_width_;
  int output_width_;
  mutable std::mutex mu_;
  mutable Rng rng_;
  mutable std::unordered_map<Bits, Bits> table_;
};

// A single random function H used in place of every f_k: the key is ignored.
class RandomFunctionFamily final : public KeyedFunction {
 public:
  RandomFunctionFamily(FunctionShape shape, std::uint64_t seed)
      : KeyedFunction(shape),
        table_(std::make_shared<RandomFunctionTable>(
            shape.input_width, shape.output_width, seed)) {}

  std::string name() const override { return "random"; }
  const RandomFunctionTable& table() const { return *table_; }

 protected:
  Bits evaluate(const Bits&, const Bits& input) const override {
    return (*table_)(input);
  }

 private:
  std::shared_ptr<RandomFunctionTable> table_;
};

// Broken family for mutation tests: always evaluates with the all-zero key, so
// anyone can compute it.
class KeyIndependentFunction final : public KeyedFunction {
 public:
  explicit KeyIndependentFunction(std::shared_ptr<const KeyedFunction> inner)
      : KeyedFunction(inner->shape()), inner_(std::move(inner)) {}

  std::string name() const override { return "key-independent"; }

 protected:
  Bits evaluate(const Bits&, const Bits& input) const override {
    return (*inner_)(Bits::zeros(shape().key_width), input);
  }

 private:
  std::shared_ptr<const KeyedFunction> inner_;
};

inline std::shared_ptr<const KeyedFunction> make_counter_prf(FunctionShape s) {
  return std::make_shared<CounterModePrf>(s);
}

// f_k(x) under the counter-mode instantiation.
inline Bits prf_eval(const PrfKey& k, const Bits& x, int output_width) {
  return CounterModePrf({k.width(), x.width(), output_width})(k.bits(), x);
}

}  // namespace qpke::primitives

#endif  // QPKE_PRIMITIVES_PRF_HPP_
