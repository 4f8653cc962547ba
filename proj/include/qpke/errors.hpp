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

#ifndef QPKE_ERRORS_HPP_
#define QPKE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qpke {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state, register or enumeration would exceed the configured capacity.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Operands live in spaces of different dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A bit string or register has the wrong width.
class WidthError : public Error {
 public:
  using Error::Error;
};

// Wire ranges that must be disjoint overlap, or a range falls outside a state.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Projection onto a subspace that carries no amplitude.
class EmptyProjectionError : public Error {
 public:
  using Error::Error;
};

// Single-shot public key used twice.
class KeyConsumedError : public Error {
 public:
  using Error::Error;
};

// Ciphertext bytes or variants that cannot be interpreted.
class MalformedCiphertextError : public Error {
 public:
  using Error::Error;
};

// Message outside the scheme's plaintext domain.
class MessageDomainError : public Error {
 public:
  using Error::Error;
};

// A game was asked of a scheme that lacks the needed capability.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// An adversary broke the rules of a game (budget, message lengths, ...).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Bad user-facing configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpke

#endif  // QPKE_ERRORS_HPP_
