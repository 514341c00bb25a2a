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

#include "ccpbisim/syntax.hpp"

#include <algorithm>
#include <functional>

#include "ccpbisim/error.hpp"

namespace ccpbisim {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Process Process::make(Node node) {
  std::size_t h = static_cast<std::size_t>(node.kind) * 0x100000001b3ULL;
  h = mix(h, node.c.hash());
  h = mix(h, std::hash<std::string>{}(node.name));
  for (const auto& a : node.args) h = mix(h, std::hash<std::string>{}(a));
  if (node.left) {
    h = mix(h, node.left->hash());
    node.size += node.left->node_count();
  }
  if (node.right) {
    h = mix(h, node.right->hash());
    node.size += node.right->node_count();
  }
  node.hash = h;
  return Process(std::make_shared<const Node>(std::move(node)));
}

Process::Process() : node_(Process::stop().node_) {}

Process Process::stop() {
  static const std::shared_ptr<const Node> node = [] {
    Node n;
    n.kind = ProcessKind::stop;
    n.hash = 0x5f0;
    return std::make_shared<const Node>(std::move(n));
  }();
  return Process(node);
}

Process Process::tell(Constraint c) {
  Node n;
  n.kind = ProcessKind::tell;
  n.c = std::move(c);
  return make(std::move(n));
}

Process Process::ask(Constraint c, Process body) {
  Node n;
  n.kind = ProcessKind::ask;
  n.c = std::move(c);
  n.left = std::make_shared<const Process>(std::move(body));
  return make(std::move(n));
}

Process Process::par(Process left, Process right) {
  Node n;
  n.kind = ProcessKind::par;
  n.left = std::make_shared<const Process>(std::move(left));
  n.right = std::make_shared<const Process>(std::move(right));
  return make(std::move(n));
}

Process Process::sum(Process left, Process right) {
  Node n;
  n.kind = ProcessKind::sum;
  n.left = std::make_shared<const Process>(std::move(left));
  n.right = std::make_shared<const Process>(std::move(right));
  return make(std::move(n));
}

Process Process::local(std::string var, Constraint info, Process body) {
  Node n;
  n.kind = ProcessKind::local;
  n.name = std::move(var);
  n.c = std::move(info);
  n.left = std::make_shared<const Process>(std::move(body));
  return make(std::move(n));
}

Process Process::call(std::string name, std::vector<std::string> args) {
  Node n;
  n.kind = ProcessKind::call;
  n.name = std::move(name);
  n.args = std::move(args);
  return make(std::move(n));
}

bool operator==(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
  if (x.c != y.c || x.name != y.name || x.args != y.args) return false;
  if (x.left && !(*x.left == *y.left)) return false;
  if (x.right && !(*x.right == *y.right)) return false;
  return true;
}

std::strong_ordering operator<=>(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto o = x.kind <=> y.kind; o != 0) return o;
  if (auto o = x.c <=> y.c; o != 0) return o;
  if (auto o = x.name <=> y.name; o != 0) return o;
  if (auto o = x.args <=> y.args; o != 0) return o;
  if (x.left) {
    if (auto o = *x.left <=> *y.left; o != 0) return o;
  }
  if (x.right) {
    if (auto o = *x.right <=> *y.right; o != 0) return o;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Configuration& a,
                                 const Configuration& b) {
  if (auto o = a.process <=> b.process; o != 0) return o;
  return a.store <=> b.store;
}

std::string to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::sb: return "sb";
    case QueryKind::barbed: return "barbed";
    case QueryKind::syntactic: return "syntactic";
    case QueryKind::irredundant: return "irredundant";
  }
  return "sb";
}

std::vector<Configuration> Program::initial_states() const {
  if (!initials.empty()) return initials;
  std::vector<Configuration> out;
  auto add = [&](const Configuration& g) {
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  };
  for (const auto& q : queries) {
    add(q.lhs);
    add(q.rhs);
  }
  return out;
}

std::set<std::string> free_variables(const Process& p,
                                     const ConstraintSystem& sys) {
  std::set<std::string> out;
  switch (p.kind()) {
    case ProcessKind::stop:
      break;
    case ProcessKind::tell:
      out = sys.free_variables(p.constraint());
      break;
    case ProcessKind::ask: {
      out = sys.free_variables(p.constraint());
      auto b = free_variables(p.body(), sys);
      out.insert(b.begin(), b.end());
      break;
    }
    case ProcessKind::par:
    case ProcessKind::sum: {
      out = free_variables(p.left(), sys);
      auto r = free_variables(p.right(), sys);
      out.insert(r.begin(), r.end());
      break;
    }
    case ProcessKind::local: {
      out = sys.free_variables(p.constraint());
      auto b = free_variables(p.body(), sys);
      out.insert(b.begin(), b.end());
      out.erase(p.name());
      break;
    }
    case ProcessKind::call:
      out.insert(p.args().begin(), p.args().end());
      break;
  }
  return out;
}

Process substitute(const Process& p, const Renaming& renaming,
                   const ConstraintSystem& sys) {
  auto fv = free_variables(p, sys);
  Renaming active;
  for (const auto& [from, to] : renaming) {
    if (from != to && fv.count(from)) active.emplace(from, to);
  }
  if (active.empty()) return p;

  switch (p.kind()) {
    case ProcessKind::stop:
      return p;
    case ProcessKind::tell:
      return Process::tell(sys.rename(p.constraint(), active));
    case ProcessKind::ask:
      return Process::ask(sys.rename(p.constraint(), active),
                          substitute(p.body(), active, sys));
    case ProcessKind::par:
      return Process::par(substitute(p.left(), active, sys),
                          substitute(p.right(), active, sys));
    case ProcessKind::sum:
      return Process::sum(substitute(p.left(), active, sys),
                          substitute(p.right(), active, sys));
    case ProcessKind::call: {
      std::vector<std::string> args = p.args();
      for (auto& a : args) {
        auto it = active.find(a);
        if (it != active.end()) a = it->second;
      }
      return Process::call(p.name(), std::move(args));
    }
    case ProcessKind::local: {
      std::string bound = p.name();
      Constraint info = p.constraint();
      Process body = p.body();
      std::set<std::string> targets;
      for (const auto& [from, to] : active) targets.insert(to);
      if (targets.count(bound)) {
        std::set<std::string> avoid = free_variables(body, sys);
        auto ci = sys.free_variables(info);
        avoid.insert(ci.begin(), ci.end());
        avoid.insert(targets.begin(), targets.end());
        for (const auto& [from, to] : active) avoid.insert(from);
        std::string fresh = fresh_var(avoid);
        if (sys.is_schematic() && !sys.has_variable(fresh)) {
          throw Error(ErrorKind::fresh_pool_exhausted,
                      "no atoms for fresh variable " + fresh +
                          "; raise the `fresh` pool size");
        }
        Renaming alpha{{bound, fresh}};
        info = sys.rename(info, alpha);
        body = substitute(body, alpha, sys);
        bound = fresh;
      }
      return Process::local(bound, sys.rename(info, active),
                            substitute(body, active, sys));
    }
  }
  return p;
}

bool all_canonical(const Process& p, const ConstraintSystem& sys) {
  switch (p.kind()) {
    case ProcessKind::stop:
    case ProcessKind::call:
      return true;
    case ProcessKind::tell:
      return sys.is_canonical(p.constraint());
    case ProcessKind::ask:
    case ProcessKind::local:
      return sys.is_canonical(p.constraint()) && all_canonical(p.body(), sys);
    case ProcessKind::par:
    case ProcessKind::sum:
      return all_canonical(p.left(), sys) && all_canonical(p.right(), sys);
  }
  return true;
}

namespace {

// 0: sum, 1: parallel, 2: prefix and atomic terms.
int level_of(const Process& p) {
  switch (p.kind()) {
    case ProcessKind::sum: return 0;
    case ProcessKind::par: return 1;
    default: return 2;
  }
}

void print(const Process& p, const ConstraintSystem& sys, int min_level,
           std::string& out) {
  const bool paren = level_of(p) < min_level;
  if (paren) out += '(';
  switch (p.kind()) {
    case ProcessKind::stop:
      out += '0';
      break;
    case ProcessKind::tell:
      out += "tell(" + sys.to_string(p.constraint()) + ")";
      break;
    case ProcessKind::ask:
      out += "ask(" + sys.to_string(p.constraint()) + ") -> ";
      print(p.body(), sys, 2, out);
      break;
    case ProcessKind::par:
      print(p.left(), sys, 1, out);
      out += " || ";
      print(p.right(), sys, 2, out);
      break;
    case ProcessKind::sum:
      print(p.left(), sys, 0, out);
      out += " + ";
      print(p.right(), sys, 1, out);
      break;
    case ProcessKind::local:
      out += "local " + p.name();
      if (!p.constraint().is_true()) {
        out += " (" + sys.to_string(p.constraint()) + ")";
      }
      out += " in ";
      print(p.body(), sys, 2, out);
      break;
    case ProcessKind::call: {
      out += p.name() + "(";
      for (std::size_t i = 0; i < p.args().size(); ++i) {
        if (i) out += ", ";
        out += p.args()[i];
      }
      out += ')';
      break;
    }
  }
  if (paren) out += ')';
}

}  // namespace

std::string to_string(const Process& p, const ConstraintSystem& sys) {
  std::string out;
  print(p, sys, 0, out);
  return out;
}

std::string to_string(const Configuration& g, const ConstraintSystem& sys) {
  return "<" + to_string(g.process, sys) + ", " + sys.to_string(g.store) + ">";
}

std::string to_string(const Program& program) {
  const auto& sys = program.system;
  std::string out = sys.declaration();
  for (const auto& [name, def] : program.env) {
    out += "proc " + name + "(";
    for (std::size_t i = 0; i < def.formals.size(); ++i) {
      if (i) out += ", ";
      out += def.formals[i];
    }
    out += ") = " + to_string(def.body, sys) + ";\n";
  }
  if (!program.initials.empty()) {
    out += "init ";
    for (std::size_t i = 0; i < program.initials.size(); ++i) {
      if (i) out += ", ";
      out += to_string(program.initials[i], sys);
    }
    out += ";\n";
  }
  for (const auto& q : program.queries) {
    out += "query " + to_string(q.kind) + " " + to_string(q.lhs, sys) + " ~ " +
           to_string(q.rhs, sys) + ";\n";
  }
  return out;
}

}  // namespace ccpbisim
