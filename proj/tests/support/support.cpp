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

#include "support.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ccpbisim/error.hpp"
#include "ccpbisim/parser.hpp"
#include "ccpbisim/semantics.hpp"

#ifndef CCPBISIM_TEST_DATA
#define CCPBISIM_TEST_DATA "tests/data"
#endif

namespace ccpbisim::testing {

std::string data_path(const std::string& name) {
  return std::string(CCPBISIM_TEST_DATA) + "/" + name;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Program running_example() {
  return parse_program(read_text(data_path("running_example.ccp")));
}

Configuration conf(const Program& prog, const std::string& text) {
  return parse_configuration(text, prog);
}

Constraint cons(const ConstraintSystem& sys, const std::string& text) {
  if (text == "true") return Constraint();
  if (text == "false") return Constraint::inconsistent();
  std::vector<std::string> names;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, '&');) {
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              tok.end());
    names.push_back(tok);
  }
  return sys.canonicalize_names(names);
}

std::vector<Constraint> brute_min_enablers(const ConstraintSystem& sys,
                                           const Constraint& c,
                                           const Constraint& d) {
  std::vector<Constraint> enabling;
  for (const auto& a : sys.enumerate_con0()) {
    if (sys.leq(c, sys.lub(d, a))) enabling.push_back(a);
  }
  std::vector<Constraint> out;
  for (const auto& m : enabling) {
    bool minimal = std::none_of(enabling.begin(), enabling.end(),
                                [&](const Constraint& o) { return sys.lt(o, m); });
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConstraintSystem random_system(std::mt19937_64& rng, std::size_t max_atoms,
                               bool with_conflicts) {
  static const char* kNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(max_atoms, 8));
  std::bernoulli_distribution imply(0.2);
  std::bernoulli_distribution conflict(0.08);
  ConstraintSystem::TableSpec spec;
  std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) spec.atoms.push_back(kNames[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && imply(rng)) spec.implications.emplace_back(kNames[i], kNames[j]);
    }
  }
  if (with_conflicts) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (conflict(rng)) spec.conflicts.emplace_back(kNames[i], kNames[j]);
      }
    }
  }
  return ConstraintSystem::table(spec);
}

namespace {

class Generator {
 public:
  Generator(std::mt19937_64& rng, const ConstraintSystem& sys,
            std::vector<std::string> procs)
      : rng_(rng), sys_(sys), procs_(std::move(procs)) {}

  Constraint constraint(bool allow_false = true) {
    if (allow_false && chance(0.03)) return Constraint::inconsistent();
    std::uniform_int_distribution<int> k(0, 2);
    std::uniform_int_distribution<AtomId> atom(
        0, static_cast<AtomId>(sys_.atom_count() - 1));
    std::vector<AtomId> raw;
    for (int i = k(rng_); i > 0; --i) raw.push_back(atom(rng_));
    return sys_.canonicalize(raw);
  }

  // A process of at most `budget` nodes. Calls only appear under an ask.
  Process process(std::size_t budget, bool guarded) {
    std::vector<int> kinds{0, 1};  // stop, tell
    if (budget >= 2) kinds.push_back(2);  // ask
    if (budget >= 2) kinds.push_back(2);
    if (budget >= 3) {
      kinds.push_back(3);  // par
      kinds.push_back(4);  // sum
      kinds.push_back(4);
    }
    if (guarded && !procs_.empty()) kinds.push_back(5);  // call
    std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
    const int kind = kinds[pick(rng_)];
    switch (kind) {
      case 0:
        return Process::stop();
      case 1:
        return Process::tell(constraint());
      case 2:
        return Process::ask(constraint(), process(budget - 1, true));
      case 3:
      case 4: {
        std::uniform_int_distribution<std::size_t> split(1, budget - 2);
        std::size_t l = split(rng_);
        Process a = process(l, guarded);
        Process b = process(budget - 1 - a.node_count(), guarded);
        return kind == 3 ? Process::par(a, b) : Process::sum(a, b);
      }
      default: {
        std::uniform_int_distribution<std::size_t> which(0, procs_.size() - 1);
        return Process::call(procs_[which(rng_)]);
      }
    }
  }

  // A copy of p with one constraint replaced.
  Process mutate(const Process& p) {
    std::vector<int> slots;
    count_slots(p, slots);
    if (slots.empty()) return Process::sum(p, Process::tell(constraint(false)));
    std::uniform_int_distribution<std::size_t> which(0, slots.size() - 1);
    std::size_t target = which(rng_);
    std::size_t seen = 0;
    return rebuild(p, target, seen);
  }

  bool chance(double q) { return std::bernoulli_distribution(q)(rng_); }

 private:
  void count_slots(const Process& p, std::vector<int>& slots) {
    switch (p.kind()) {
      case ProcessKind::tell:
        slots.push_back(0);
        return;
      case ProcessKind::ask:
        slots.push_back(0);
        count_slots(p.body(), slots);
        return;
      case ProcessKind::par:
      case ProcessKind::sum:
        count_slots(p.left(), slots);
        count_slots(p.right(), slots);
        return;
      default:
        return;
    }
  }

  Process rebuild(const Process& p, std::size_t target, std::size_t& seen) {
    switch (p.kind()) {
      case ProcessKind::tell:
        return seen++ == target ? Process::tell(constraint(false)) : p;
      case ProcessKind::ask: {
        Constraint c = seen++ == target ? constraint(false) : p.constraint();
        return Process::ask(c, rebuild(p.body(), target, seen));
      }
      case ProcessKind::par: {
        Process l = rebuild(p.left(), target, seen);
        return Process::par(l, rebuild(p.right(), target, seen));
      }
      case ProcessKind::sum: {
        Process l = rebuild(p.left(), target, seen);
        return Process::sum(l, rebuild(p.right(), target, seen));
      }
      default:
        return p;
    }
  }

  std::mt19937_64& rng_;
  const ConstraintSystem& sys_;
  std::vector<std::string> procs_;
};

}  // namespace

std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed,
                                       const CorpusLimits& limits) {
  std::vector<CorpusEntry> out;
  std::mt19937_64 rng(seed);
  std::uint64_t attempt = 0;
  while (out.size() < count) {
    std::uint64_t s = seed * 1000003 + attempt++;
    std::mt19937_64 local(s);
    CorpusEntry entry;
    entry.seed = s;
    Program& prog = entry.program;
    prog.system = random_system(local, limits.max_atoms,
                                std::bernoulli_distribution(0.3)(local));
    std::vector<std::string> names;
    std::size_t nprocs = std::uniform_int_distribution<std::size_t>(0, 2)(local);
    for (std::size_t i = 0; i < nprocs; ++i) names.push_back(std::string(1, 'A' + i));
    Generator gen(local, prog.system, names);
    for (const auto& n : names) {
      prog.env.emplace(n, ProcDef{{}, gen.process(5, false)});
    }

    const std::size_t half = (limits.max_nodes - 1) / 2;
    std::size_t npairs = std::uniform_int_distribution<std::size_t>(1, 2)(local);
    for (std::size_t k = 0; k < npairs; ++k) {
      Constraint d = gen.chance(0.7) ? Constraint() : gen.constraint(false);
      Process p = gen.process(half, false);
      Process q;
      switch (std::uniform_int_distribution<int>(0, 6)(local)) {
        case 0:
          q = gen.process(half, false);
          break;
        case 1: {
          // ask(c) -> X  versus  ask(c) -> X + ask(c lub e) -> X.
          Constraint c = gen.constraint(false);
          Process x = gen.process(std::max<std::size_t>(1, half - 3), true);
          p = Process::ask(c, x);
          q = Process::sum(
              p, Process::ask(prog.system.lub(c, gen.constraint(false)), x));
          break;
        }
        case 2: {
          Process r = gen.process(half, false);
          q = Process::par(r, p);
          p = Process::par(p, r);
          break;
        }
        case 3:
          q = Process::sum(p, p);
          break;
        case 4:
        case 5: {
          // ask(c) -> X  versus  ask(c) -> X + ask(c lub e) -> (X + Y).
          // The stronger branch leads to a state outside the reachable
          // part, so the pair exercises redundancy.
          Constraint c = gen.constraint(false);
          Constraint e = prog.system.lub(c, gen.constraint(false));
          std::size_t room = std::max<std::size_t>(1, (limits.max_nodes - 6) / 2);
          Process x = gen.process(room, true);
          Process y = Process::ask(gen.constraint(false), gen.process(1, true));
          p = Process::ask(c, x);
          q = Process::sum(p, Process::ask(e, Process::sum(x, y)));
          if (gen.chance(0.5)) std::swap(p, q);
          break;
        }
        default:
          q = gen.mutate(p);
          break;
      }
      if (p.node_count() > limits.max_nodes || q.node_count() > limits.max_nodes) {
        continue;
      }
      entry.pairs.emplace_back(Configuration{p, d}, Configuration{q, d});
    }
    if (entry.pairs.empty()) continue;
    for (const auto& [a, b] : entry.pairs) {
      for (const auto* g : {&a, &b}) {
        if (std::find(prog.initials.begin(), prog.initials.end(), *g) ==
            prog.initials.end()) {
          prog.initials.push_back(*g);
        }
      }
    }
    try {
      Context ctx(prog);
      reachable(prog.initials, ctx, StepMode::labeled, limits.max_states);
    } catch (const Error&) {
      continue;
    }
    out.push_back(std::move(entry));
  }
  (void)rng;
  return out;
}

namespace {

class DotChecker {
 public:
  explicit DotChecker(const std::string& text) : s_(text) {}

  DotSummary run() {
    DotSummary out;
    try {
      skip();
      if (word() == "strict") skip_word();
      std::string kind = word();
      if (kind != "digraph" && kind != "graph") fail("expected digraph or graph");
      directed_ = kind == "digraph";
      skip_word();
      if (peek() != '{') id();
      expect('{');
      while (peek() != '}') {
        statement(out);
        if (peek() == ';') expect(';');
      }
      expect('}');
      skip();
      if (i_ != s_.size()) fail("trailing input");
      out.ok = true;
    } catch (const std::runtime_error& e) {
      out.error = e.what();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error(msg + " at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_.compare(i_, 2, "//") == 0) {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }
  char peek() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    return s_[i_];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::string word() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) {
      ++j;
    }
    return s_.substr(i_, j - i_);
  }
  void skip_word() { i_ += word().size(); }
  std::string id() {
    char c = peek();
    if (c == '"') {
      std::string out;
      ++i_;
      while (true) {
        if (i_ >= s_.size()) fail("unterminated string");
        char d = s_[i_++];
        if (d == '\\') {
          if (i_ >= s_.size()) fail("dangling escape");
          out += s_[i_++];
        } else if (d == '"') {
          break;
        } else {
          out += d;
        }
      }
      return out;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
        c == '.') {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' ||
              s_[j] == '.' || (s_[j] == '-' && j == i_))) {
        ++j;
      }
      std::string out = s_.substr(i_, j - i_);
      i_ = j;
      return out;
    }
    fail("expected an id");
  }
  void attributes() {
    while (peek() == '[') {
      expect('[');
      while (peek() != ']') {
        id();
        if (peek() == '=') {
          expect('=');
          id();
        }
        if (peek() == ',' || peek() == ';') ++i_;
      }
      expect(']');
    }
  }
  bool edge_op() {
    skip();
    const char* op = directed_ ? "->" : "--";
    if (s_.compare(i_, 2, op) == 0) {
      i_ += 2;
      return true;
    }
    return false;
  }
  void statement(DotSummary& out) {
    std::string w = word();
    if (w == "node" || w == "edge" || w == "graph") {
      skip_word();
      attributes();
      return;
    }
    id();
    if (peek() == '=') {
      expect('=');
      id();
      return;
    }
    bool edge = false;
    while (edge_op()) {
      id();
      edge = true;
    }
    attributes();
    if (edge) {
      ++out.edges;
    } else {
      ++out.nodes;
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  bool directed_ = true;
};

}  // namespace

DotSummary check_dot(const std::string& text) { return DotChecker(text).run(); }

}  // namespace ccpbisim::testing
