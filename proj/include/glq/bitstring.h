// Copyright 2026 The glq Authors
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

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace glq {

// Fixed-length bit string of 1..64 bits.
//
// Label convention: bit i is the i-th symbol from the left, and the leftmost
// symbol is the most significant bit of value(). "10" therefore has value 2,
// which is also the basis-state index used by StateVector.
class BitString {
 public:
  static constexpr int kMaxLength = 64;

  BitString(int length, std::uint64_t value);

  static BitString zeros(int length) { return BitString(length, 0); }
  // e_j: a single 1 at position j.
  static BitString unit(int length, int j);
  static BitString parse(std::string_view label);
  static BitString from_hex(int length, std::string_view hex);

  int size() const { return length_; }
  std::uint64_t value() const { return value_; }

  bool get(int i) const;
  BitString with_bit(int i, bool bit) const;
  // Leading `count` symbols as a new string.
  BitString prefix(int count) const;

  BitString operator^(const BitString& other) const;
  BitString& operator^=(const BitString& other);
  bool operator==(const BitString& other) const;

  std::string str() const;
  // Most-significant-first hex, ceil(n/4) digits, zero padded on the left.
  std::string hex() const;

 private:
  void check_index(int i) const;
  void check_same_length(const BitString& other) const;

  int length_;
  std::uint64_t value_;
};

// Inner product mod 2.
bool dot(const BitString& a, const BitString& x);

inline std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~0ULL : ((1ULL << bits) - 1);
}

inline bool parity(std::uint64_t v) { return (std::popcount(v) & 1) != 0; }

}  // namespace glq
