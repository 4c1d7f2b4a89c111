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

#include "congest/bits.hpp"

#include "congest/error.hpp"

namespace congest {

void BitString::push_bit(bool value) {
  if (size_ % 64 == 0) words_.push_back(0);
  if (value) words_.back() |= std::uint64_t{1} << (size_ % 64);
  ++size_;
}

void BitString::push(std::uint64_t value, int width) {
  if (width < 64 && (value >> width) != 0) {
    throw ProtocolError("value does not fit in " + std::to_string(width) + " bits");
  }
  for (int i = width - 1; i >= 0; --i) push_bit((value >> i) & 1U);
}

void BitString::append(const BitString& other) { append(other, 0, other.size()); }

void BitString::append(const BitString& other, std::size_t begin, std::size_t count) {
  for (std::size_t i = begin; i < begin + count; ++i) push_bit(other.bit(i));
}

std::uint64_t BitReader::read(int width) {
  if (static_cast<std::size_t>(width) > remaining()) {
    throw ProtocolError("message truncated");
  }
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) value = (value << 1) | (bits_->bit(pos_++) ? 1U : 0U);
  return value;
}

}  // namespace congest
