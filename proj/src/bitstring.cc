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

#include "glq/bitstring.h"

#include <stdexcept>

namespace glq {

BitString::BitString(int length, std::uint64_t value)
    : length_(length), value_(value) {
  if (length < 1 || length > kMaxLength) {
    throw std::invalid_argument("BitString: length must be in 1..64, got " +
                                std::to_string(length));
  }
  if ((value & ~low_mask(length)) != 0) {
    throw std::invalid_argument("BitString: value has bits beyond length");
  }
}

BitString BitString::unit(int length, int j) {
  BitString s = zeros(length);
  return s.with_bit(j, true);
}

BitString BitString::parse(std::string_view label) {
  if (label.empty() || label.size() > kMaxLength) {
    throw std::invalid_argument("BitString: bad label length");
  }
  std::uint64_t v = 0;
  for (char ch : label) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("BitString: label must be binary: " +
                                  std::string(label));
    }
    v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return BitString(static_cast<int>(label.size()), v);
}

BitString BitString::from_hex(int length, std::string_view hex) {
  if (hex.empty() || hex.size() > 16) {
    throw std::invalid_argument("BitString: bad hex length");
  }
  std::uint64_t v = 0;
  for (char ch : hex) {
    int d;
    if (ch >= '0' && ch <= '9') {
      d = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      d = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      d = ch - 'A' + 10;
    } else {
      throw std::invalid_argument("BitString: bad hex digit in " +
                                  std::string(hex));
    }
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return BitString(length, v);
}

void BitString::check_index(int i) const {
  if (i < 0 || i >= length_) {
    throw std::out_of_range("BitString: index " + std::to_string(i) +
                            " outside 0.." + std::to_string(length_ - 1));
  }
}

void BitString::check_same_length(const BitString& other) const {
  if (other.length_ != length_) {
    throw std::invalid_argument("BitString: length mismatch " +
                                std::to_string(length_) + " vs " +
                                std::to_string(other.length_));
  }
}

bool BitString::get(int i) const {
  check_index(i);
  return ((value_ >> (length_ - 1 - i)) & 1) != 0;
}

BitString BitString::with_bit(int i, bool bit) const {
  check_index(i);
  const std::uint64_t m = 1ULL << (length_ - 1 - i);
  return BitString(length_, bit ? (value_ | m) : (value_ & ~m));
}

BitString BitString::prefix(int count) const {
  if (count < 1 || count > length_) {
    throw std::invalid_argument("BitString: bad prefix length");
  }
  return BitString(count, value_ >> (length_ - count));
}

BitString BitString::operator^(const BitString& other) const {
  check_same_length(other);
  return BitString(length_, value_ ^ other.value_);
}

BitString& BitString::operator^=(const BitString& other) {
  check_same_length(other);
  value_ ^= other.value_;
  return *this;
}

bool BitString::operator==(const BitString& other) const {
  check_same_length(other);
  return value_ == other.value_;
}

std::string BitString::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (get(i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::string BitString::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int digits = (length_ + 3) / 4;
  std::string out(static_cast<std::size_t>(digits), '0');
  std::uint64_t v = value_;
  for (int i = digits - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[v & 0xf];
    v >>= 4;
  }
  return out;
}

bool dot(const BitString& a, const BitString& x) {
  if (a.size() != x.size()) {
    throw std::invalid_argument("dot: length mismatch");
  }
  return parity(a.value() & x.value());
}

}  // namespace glq
