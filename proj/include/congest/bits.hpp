// Copyright 2026 The Congest Subgraph Detection Authors
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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace congest {

/// Number of bits needed to write `value` in binary; 0 for value 0.
constexpr int bit_width_of(std::uint64_t value) {
  int width = 0;
  while (value != 0) {
    ++width;
    value >>= 1;
  }
  return width;
}

/// ceil(log2(n)) for n >= 1.
constexpr int ceil_log2(std::uint64_t n) {
  return n <= 1 ? 0 : bit_width_of(n - 1);
}

/// A packed, append-only sequence of bits. Fixed-width unsigned fields are
/// written most-significant bit first, so the layout of a message is the
/// concatenation of its fields in schema order.
class BitString {
 public:
  BitString() = default;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool bit(std::size_t index) const {
    return (words_[index / 64] >> (index % 64)) & 1U;
  }

  void push_bit(bool value);
  void push(std::uint64_t value, int width);
  void append(const BitString& other);
  void append(const BitString& other, std::size_t begin, std::size_t count);

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Sequential reader over a BitString. Reading past the end throws
/// ProtocolError: a malformed message is a program bug, never data.
class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(&bits) {}

  std::uint64_t read(int width);
  bool read_bit() { return read(1) != 0; }
  std::size_t remaining() const { return bits_->size() - pos_; }
  bool at_end() const { return pos_ == bits_->size(); }

 private:
  const BitString* bits_;
  std::size_t pos_ = 0;
};

}  // namespace congest
