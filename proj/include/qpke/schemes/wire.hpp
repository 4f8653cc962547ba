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

#ifndef QPKE_SCHEMES_WIRE_HPP_
#define QPKE_SCHEMES_WIRE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qpke/errors.hpp"
#include "qpke/schemes/types.hpp"

namespace qpke::schemes {

// Byte encoding of classical ciphertexts.
//
//   ciphertext := tag:u8  lambda:u8  fields
//   OWF    (tag 0x01): bits(x) bits(nonce) bits(body)
//   PRFSPD (tag 0x02): bits(nonce) bits(body) count:u16 { bits(x) bits(y~) }*
//   bits(s)  := len:u16 followed by ceil(len / 8) bytes; bit i of s is bit
//               (i mod 8) of byte (i / 8); unused high bits are zero.
//
// All u16 values are big-endian. Decoding rejects unknown tags, truncation,
// trailing bytes and nonzero padding.
inline constexpr std::uint8_t kOwfTag = 0x01;
inline constexpr std::uint8_t kPrfspdTag = 0x02;

struct WireCiphertext {
  int lambda = 0;
  Ciphertext ciphertext;
};

namespace wire_detail {

inline void put_u16(std::vector<std::uint8_t>& out, std::size_t v) {
  if (v > 0xFFFF) throw WidthError("length does not fit in 16 bits");
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

inline void put_bits(std::vector<std::uint8_t>& out, const Bits& b) {
  put_u16(out, static_cast<std::size_t>(b.width()));
  const int bytes = (b.width() + 7) / 8;
  for (int i = 0; i < bytes; ++i) {
    out.push_back(static_cast<std::uint8_t>((b.value() >> (8 * i)) & 0xFF));
  }
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8() {
    need(1);
    return in_[pos_++];
  }

  std::size_t u16() {
    need(2);
    const std::size_t v = (std::size_t{in_[pos_]} << 8) | in_[pos_ + 1];
    pos_ += 2;
    return v;
  }

  Bits bits() {
    const std::size_t len = u16();
    if (len > static_cast<std::size_t>(Bits::kMaxWidth)) {
      throw MalformedCiphertextError("bit field longer than 64 bits");
    }
    const std::size_t bytes = (len + 7) / 8;
    need(bytes);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bytes; ++i) {
      v |= std::uint64_t{in_[pos_ + i]} << (8 * i);
    }
    pos_ += bytes;
    const int w = static_cast<int>(len);
    if ((v & ~Bits::mask(w)) != 0) {
      throw MalformedCiphertextError("nonzero padding bits");
    }
    return Bits(v, w);
  }

  void finish() const {
    if (pos_ != in_.size()) throw MalformedCiphertextError("trailing bytes");
  }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw MalformedCiphertextError("truncated");
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace wire_detail

// bits(s) on its own, as used inside ciphertext records.
inline std::vector<std::uint8_t> encode_bits(const Bits& b) {
  std::vector<std::uint8_t> out;
  wire_detail::put_bits(out, b);
  return out;
}

inline std::vector<std::uint8_t> serialize(const Ciphertext& ct, int lambda) {
  using namespace wire_detail;
  if (lambda < 0 || lambda > 0xFF) throw WidthError("λ does not fit in a byte");
  std::vector<std::uint8_t> out;
  if (const auto* c = std::get_if<OwfCiphertext>(&ct)) {
    out.push_back(kOwfTag);
    out.push_back(static_cast<std::uint8_t>(lambda));
    put_bits(out, c->x);
    put_bits(out, c->body.nonce);
    put_bits(out, c->body.body);
  } else if (const auto* c = std::get_if<PrfspdCiphertext>(&ct)) {
    out.push_back(kPrfspdTag);
    out.push_back(static_cast<std::uint8_t>(lambda));
    put_bits(out, c->ske_part.nonce);
    put_bits(out, c->ske_part.body);
    put_u16(out, c->slots.size());
    for (const auto& s : c->slots) {
      put_bits(out, s.x);
      put_bits(out, s.tag);
    }
  } else {
    throw MalformedCiphertextError("quantum ciphertexts have no byte encoding");
  }
  return out;
}

inline WireCiphertext deserialize(std::span<const std::uint8_t> bytes) {
  wire_detail::Reader r(bytes);
  const std::uint8_t tag = r.u8();
  WireCiphertext out;
  out.lambda = r.u8();
  if (tag == kOwfTag) {
    OwfCiphertext c;
    c.x = r.bits();
    c.body.nonce = r.bits();
    c.body.body = r.bits();
    out.ciphertext = c;
  } else if (tag == kPrfspdTag) {
    PrfspdCiphertext c;
    c.ske_part.nonce = r.bits();
    c.ske_part.body = r.bits();
    const std::size_t count = r.u16();
    for (std::size_t i = 0; i < count; ++i) {
      PrfspdSlot s;
      s.x = r.bits();
      s.tag = r.bits();
      c.slots.push_back(s);
    }
    out.ciphertext = std::move(c);
  } else {
    throw MalformedCiphertextError("unknown ciphertext tag " +
                                   std::to_string(tag));
  }
  r.finish();
  return out;
}

inline std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

}  // namespace qpke::schemes

#endif  // QPKE_SCHEMES_WIRE_HPP_
