// Copyright 2026 The citeflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace citeflow {

using FieldIndex = std::size_t;

inline constexpr std::size_t kMaxFields = 64;

// Set of field indices packed into one word. Taxonomies are capped at
// kMaxFields entries so that shared-field tests are a single AND.
class FieldSet {
 public:
  constexpr FieldSet() = default;
  constexpr explicit FieldSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr FieldSet of(FieldIndex f) { return FieldSet{std::uint64_t{1} << f}; }

  constexpr bool contains(FieldIndex f) const { return (bits_ >> f) & 1U; }
  constexpr void insert(FieldIndex f) { bits_ |= std::uint64_t{1} << f; }
  constexpr void erase(FieldIndex f) { bits_ &= ~(std::uint64_t{1} << f); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool intersects(FieldSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr FieldSet& operator|=(FieldSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr FieldSet operator|(FieldSet a, FieldSet b) { return FieldSet{a.bits_ | b.bits_}; }
  friend constexpr FieldSet operator&(FieldSet a, FieldSet b) { return FieldSet{a.bits_ & b.bits_}; }
  friend constexpr bool operator==(FieldSet, FieldSet) = default;

  // Ascending field indices.
  std::vector<FieldIndex> indices() const {
    std::vector<FieldIndex> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<FieldIndex>(std::countr_zero(b)));
    }
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace citeflow
