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

#ifndef QPKE_BITS_HPP_
#define QPKE_BITS_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "qpke/errors.hpp"

namespace qpke {

// Fixed-width classical bit string of at most 64 bits.
//
// Bit i of the string is bit i of value(), and bit i is the one that lives on
// qubit (offset + i) when the string labels a register. Text renderings put
// bit 0 first, so "01" is the two-bit string with bit 1 set.
class Bits {
 public:
  static constexpr int kMaxWidth = 64;

  constexpr Bits() = default;
  constexpr Bits(std::uint64_t value, int width)
      : value_(value), width_(width) {
    if (width < 0 || width > kMaxWidth) {
      throw WidthError("bit string width " + std::to_string(width) +
                       " outside [0, 64]");
    }
    value_ &= mask(width);
  }

  static constexpr Bits zeros(int width) { return Bits(0, width); }
  static constexpr Bits ones(int width) {
    return Bits(~std::uint64_t{0}, width);
  }

  // Parses "0110"-style text, bit 0 first.
  static Bits parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxWidth)) {
      throw WidthError("bit string longer than 64 characters");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        v |= std::uint64_t{1} << i;
      } else if (text[i] != '0') {
        throw WidthError("bit string may only contain '0' and '1'");
      }
    }
    return Bits(v, static_cast<int>(text.size()));
  }

  static constexpr std::uint64_t mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  }

  constexpr std::uint64_t value() const { return value_; }
  constexpr int width() const { return width_; }
  constexpr bool empty() const { return width_ == 0; }

  constexpr bool bit(int i) const { return ((value_ >> i) & 1U) != 0; }

  // this ∥ high: this occupies the low bits, `high` the bits above it.
  Bits concat(const Bits& high) const {
    if (width_ + high.width_ > kMaxWidth) {
      throw WidthError("concatenation exceeds 64 bits");
    }
    return Bits(value_ | (high.value_ << width_), width_ + high.width_);
  }

  // Bits [offset, offset + width) as a new string.
  Bits slice(int offset, int width) const {
    if (offset < 0 || width < 0 || offset + width > width_) {
      throw WidthError("slice outside bit string");
    }
    return Bits(width == 0 ? 0 : (value_ >> offset), width);
  }

  Bits operator^(const Bits& other) const {
    require_same_width(other);
    return Bits(value_ ^ other.value_, width_);
  }

  void require_width(int width, const char* what) const {
    if (width_ != width) {
      throw WidthError(std::string(what) + ": expected " +
                       std::to_string(width) + " bits, got " +
                       std::to_string(width_));
    }
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i) {
      if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
  }

  friend constexpr bool operator==(const Bits&, const Bits&) = default;
  friend constexpr auto operator<=>(const Bits& a, const Bits& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  void require_same_width(const Bits& other) const {
    if (width_ != other.width_) throw WidthError("xor of unequal widths");
  }

  std::uint64_t value_ = 0;
  int width_ = 0;
};

}  // namespace qpke

template <>
struct std::hash<qpke::Bits> {
  std::size_t operator()(const qpke::Bits& b) const noexcept {
    return std::hash<std::uint64_t>{}(b.value() * 0x9E3779B97F4A7C15ULL ^
                                      static_cast<std::uint64_t>(b.width()));
  }
};

#endif  // QPKE_BITS_HPP_
