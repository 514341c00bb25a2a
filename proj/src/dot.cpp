// Copyright 2026 The ccpbisim Authors
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

#include "ccpbisim/dot.hpp"

#include <algorithm>
#include <sstream>

namespace ccpbisim {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const StateSpace& space, const ConstraintSystem& sys,
                   const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  out << "  node [shape=box];\n";
  for (std::size_t s = 0; s < space.size(); ++s) {
    out << "  n" << s << " [label=" << quote(to_string(space.states[s], sys));
    std::vector<std::string> style;
    if (std::find(space.initials.begin(), space.initials.end(), s) !=
        space.initials.end()) {
      style.push_back("bold");
    }
    if (space.derived[s]) style.push_back("dashed");
    if (!style.empty()) {
      std::string joined;
      for (const auto& st : style) joined += (joined.empty() ? "" : ",") + st;
      out << ", style=" << quote(joined);
    }
    out << "];\n";
  }
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (const auto& e : space.edges[s]) {
      out << "  n" << s << " -> n" << e.target
          << " [label=" << quote(sys.to_string(e.label)) << "];\n";
    }
  }
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (const auto& e : space.derived_edges[s]) {
      out << "  n" << s << " -> n" << e.target
          << " [label=" << quote(sys.to_string(e.label))
          << ", style=dotted];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ccpbisim
