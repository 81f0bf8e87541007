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

#include "termforge/identifier.h"

#include <cstdio>

#include "termforge/error.h"

namespace termforge {

std::string_view id_prefix(IdKind kind) {
  switch (kind) {
    case IdKind::kConcept: return "MC";
    case IdKind::kAtom: return "MA";
    case IdKind::kType: return "MT";
  }
  return "??";
}

std::string Identifier::str() const {
  char digits[16];
  std::snprintf(digits, sizeof(digits), "%08u", serial);
  std::string out(id_prefix(kind));
  out += digits;
  return out;
}

Identifier Identifier::parse(std::string_view text) {
  if (text.size() != 10) {
    throw Error(ErrorCode::kMalformedIdentifier, "expected 10 characters: '" + std::string(text) + "'");
  }
  Identifier id;
  std::string_view prefix = text.substr(0, 2);
  if (prefix == "MC") {
    id.kind = IdKind::kConcept;
  } else if (prefix == "MA") {
    id.kind = IdKind::kAtom;
  } else if (prefix == "MT") {
    id.kind = IdKind::kType;
  } else {
    throw Error(ErrorCode::kMalformedIdentifier, "unknown prefix: '" + std::string(text) + "'");
  }
  uint32_t serial = 0;
  for (char c : text.substr(2)) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kMalformedIdentifier, "non-digit serial: '" + std::string(text) + "'");
    }
    serial = serial * 10 + static_cast<uint32_t>(c - '0');
  }
  id.serial = serial;
  return id;
}

Identifier Identifier::parse(std::string_view text, IdKind expected) {
  Identifier id = parse(text);
  if (id.kind != expected) {
    throw Error(ErrorCode::kMalformedIdentifier,
                "expected " + std::string(id_prefix(expected)) + " identifier: '" + std::string(text) + "'");
  }
  return id;
}

Identifier IdCounters::mint(IdKind kind) {
  uint32_t &next = next_[static_cast<size_t>(kind)];
  if (next >= kMaxSerial) {
    throw Error(ErrorCode::kCounterExhausted, std::string(id_prefix(kind)) + " serials exhausted");
  }
  return Identifier{kind, next++};
}

void IdCounters::set_next(IdKind kind, uint32_t value) {
  if (value > kMaxSerial) {
    throw Error(ErrorCode::kCounterExhausted, "counter beyond 10^8 for " + std::string(id_prefix(kind)));
  }
  next_[static_cast<size_t>(kind)] = value;
}

}  // namespace termforge
