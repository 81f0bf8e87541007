// Copyright 2026 The TermForge Authors.
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

#ifndef TERMFORGE_IDENTIFIER_H_
#define TERMFORGE_IDENTIFIER_H_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace termforge {

enum class IdKind : uint8_t { kConcept = 0, kAtom = 1, kType = 2 };

inline constexpr uint32_t kMaxSerial = 100000000;  // 10^8, exclusive

// Two-letter prefix for a kind: MC, MA or MT.
std::string_view id_prefix(IdKind kind);

// A vocabulary identifier: prefix plus exactly eight zero-padded digits.
struct Identifier {
  IdKind kind = IdKind::kConcept;
  uint32_t serial = 0;

  std::string str() const;

  // Parses "MC00001175" style strings. Throws MalformedIdentifier.
  static Identifier parse(std::string_view text);

  // Parses and additionally checks the kind.
  static Identifier parse(std::string_view text, IdKind expected);

  auto operator<=>(const Identifier &) const = default;
};

inline Identifier concept_id(uint32_t serial) { return {IdKind::kConcept, serial}; }
inline Identifier atom_id(uint32_t serial) { return {IdKind::kAtom, serial}; }
inline Identifier type_id(uint32_t serial) { return {IdKind::kType, serial}; }

// Per-kind monotonic counters. The stored value is the next serial to hand
// out; serials are never reused.
class IdCounters {
 public:
  IdCounters() { next_.fill(1); }

  // Returns the next identifier of `kind` and advances the counter.
  // Throws CounterExhausted once the serial would reach 10^8.
  Identifier mint(IdKind kind);

  uint32_t next(IdKind kind) const { return next_[static_cast<size_t>(kind)]; }
  void set_next(IdKind kind, uint32_t value);

  bool operator==(const IdCounters &) const = default;

 private:
  std::array<uint32_t, 3> next_;
};

}  // namespace termforge

template <>
struct std::hash<termforge::Identifier> {
  size_t operator()(const termforge::Identifier &id) const noexcept {
    return std::hash<uint64_t>()((uint64_t{static_cast<uint8_t>(id.kind)} << 32) | id.serial);
  }
};

#endif  // TERMFORGE_IDENTIFIER_H_
