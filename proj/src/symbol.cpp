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

#include "lhip/symbol.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace lhip {
namespace {

struct Table {
  std::mutex mu;
  // deque keeps references stable while growing
  std::deque<std::string> names;
  std::unordered_map<std::string_view, uint32_t> index;

  Table() { intern(""); }

  uint32_t intern(std::string_view text) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = index.find(text);
    if (it != index.end()) return it->second;
    names.emplace_back(text);
    uint32_t id = static_cast<uint32_t>(names.size() - 1);
    index.emplace(std::string_view(names.back()), id);
    return id;
  }

  const std::string& name(uint32_t id) {
    std::lock_guard<std::mutex> lock(mu);
    return names[id];
  }
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

Symbol::Symbol() : id_(0) {}

Symbol::Symbol(std::string_view text) : id_(table().intern(text)) {}

const std::string& Symbol::str() const { return table().name(id_); }

}  // namespace lhip
