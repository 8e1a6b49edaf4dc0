// Copyright 2026 The LHIP Toolkit Authors
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

#ifndef LHIP_SYMBOL_HPP_
#define LHIP_SYMBOL_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace lhip {

/// Interned string. Two symbols with the same text have the same id, so
/// comparison is a single integer compare. The intern table is process-wide
/// and append-only; symbols stay valid for the process lifetime.
class Symbol {
 public:
  Symbol();  // the empty symbol ""
  explicit Symbol(std::string_view text);

  const std::string& str() const;
  uint32_t id() const { return id_; }
  bool empty() const { return id_ == 0; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }
  // Orders by interning sequence, not lexicographically; stable within a run.
  friend bool operator<(Symbol a, Symbol b) { return a.id_ < b.id_; }

 private:
  uint32_t id_;
};

}  // namespace lhip

template <>
struct std::hash<lhip::Symbol> {
  size_t operator()(lhip::Symbol s) const noexcept {
    return std::hash<uint32_t>{}(s.id());
  }
};

#endif  // LHIP_SYMBOL_HPP_
