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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Time limits are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccpbisim/bench.hpp"
#include "ccpbisim/derivation.hpp"
#include "ccpbisim/oracle.hpp"
#include "ccpbisim/refinement.hpp"
#include "support.hpp"

using namespace ccpbisim;
using testing::conf;

namespace {

constexpr double kGoldenLimit = 1.0;      // seconds, criteria 1 to 3
constexpr double kDerivesLimit = 60.0;
constexpr double kDifferentialLimit = 300.0;
constexpr double kConsistencyLimit = 60.0;
constexpr double kMonotoneLimit = 60.0;
constexpr double kBenchLimit = 300.0;
constexpr double kLatticeLimit = 30.0;

constexpr std::size_t kCorpusPrograms = 220;
constexpr std::uint64_t kCorpusSeed = 20260101;
constexpr std::size_t kMinPrograms = 200;
constexpr std::size_t kMinPairs = 200;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records mismatches; keeps the first few for the report.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  std::size_t checks() const { return checks_; }
  bool ok() const { return failures_ == 0; }
  Outcome outcome(const std::string& summary) const {
    if (ok()) return {true, summary};
    return {false, summary + ", " + std::to_string(failures_) +
                       " mismatches: " + notes_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
};

const std::vector<testing::CorpusEntry>& corpus() {
  static const auto c = testing::random_corpus(kCorpusPrograms, kCorpusSeed);
  return c;
}

using Blocks = std::set<std::set<std::string>>;

Blocks named(const Partition& part, const StateSpace& space,
             const ConstraintSystem& sys) {
  Blocks out;
  for (const auto& b : part.blocks()) {
    std::set<std::string> names;
    for (std::size_t s : b) names.insert(to_string(space.states[s], sys));
    out.insert(names);
  }
  return out;
}

const std::string RpS = "<R'() + S(), true>";
const std::string S = "<S(), true>";
const std::string RS = "<R() + S(), true>";
const std::string PQp = "<P() + Q'(), z_lt_5>";
const std::string PQ = "<P() + Q(), z_lt_5>";
const std::string P5 = "<P(), z_lt_5>";
const std::string P7 = "<P(), z_lt_7>";
const std::string Tp = "<T'(), x_lt_5 & z_lt_5>";
const std::string T55 = "<T(), x_lt_5 & z_lt_5>";
const std::string T75 = "<T(), x_lt_7 & z_lt_5>";
const std::string T77 = "<T(), x_lt_7 & z_lt_7>";
const std::string O55 = "<0, x_lt_5 & z_lt_5>";
const std::string O75 = "<0, x_lt_7 & z_lt_5>";
const std::string O77 = "<0, x_lt_7 & z_lt_7>";
const std::string Oy = "<0, x_lt_5 & y_eq_1 & z_lt_5>";

Outcome golden_trace() {
  Program p = testing::running_example();
  Context ctx(p);
  RefinementResult res = ccp_partition_refine(p.initial_states(), ctx);
  const Blocks tail = {{T77}, {O77}, {T75}, {O75}, {Oy}};
  auto with_tail = [&](Blocks head) {
    head.insert(tail.begin(), tail.end());
    return head;
  };
  Blocks p0 = {{RpS, S, RS}, {PQp, PQ, P5}, {P7}, {Tp, T55, O55},
               {T77, O77},   {T75, O75},    {Oy}};
  Blocks p1 = with_tail({{RpS, S, RS}, {PQp, PQ, P5}, {P7}, {Tp}, {T55}, {O55}});
  Blocks p2 = with_tail({{RpS, S, RS}, {PQp}, {PQ, P5}, {P7}, {Tp}, {T55}, {O55}});
  Blocks p3 = with_tail({{RpS}, {S, RS}, {PQp}, {PQ, P5}, {P7}, {Tp}, {T55}, {O55}});
  const std::vector<Blocks> expected = {p0, p1, p2, p3, p3};

  Tally t;
  t.expect(res.space.size() == 15, "carrier has " +
                                       std::to_string(res.space.size()) +
                                       " states");
  t.expect(res.trace.partitions.size() == expected.size(),
           std::to_string(res.trace.partitions.size()) + " partitions");
  std::ostringstream counts;
  for (std::size_t i = 0; i < res.trace.partitions.size(); ++i) {
    counts << (i ? "," : "") << res.trace.partitions[i].block_count();
    if (i < expected.size()) {
      t.expect(named(res.trace.partitions[i], res.space, p.system) ==
                   expected[i],
               "P" + std::to_string(i) + " differs");
    }
  }
  return t.outcome("block counts " + counts.str() + ", 15 states");
}

Outcome golden_lts() {
  Program p = testing::running_example();
  Context ctx(p);
  const auto& sys = p.system;
  StateSpace space = reachable(p.initial_states(), ctx, StepMode::labeled);
  std::set<std::string> states;
  for (const auto& g : space.states) states.insert(to_string(g, sys));
  std::set<std::string> arcs;
  for (const auto& t : space.transitions()) {
    arcs.insert(to_string(t.source, sys) + " " + sys.to_string(t.label) + " " +
                to_string(t.target, sys));
  }
  auto arc = [](const std::string& a, const char* l, const std::string& b) {
    return a + " " + l + " " + b;
  };
  const std::set<std::string> want_states = {RpS, S,   RS,  PQp, P7,
                                             PQ,  Tp,  T77, T55, T75,
                                             Oy,  O77, O55, O75};
  const std::set<std::string> want_arcs = {
      arc(RpS, "z_lt_5", PQp), arc(RpS, "z_lt_7", P7), arc(S, "z_lt_7", P7),
      arc(RS, "z_lt_5", PQ),   arc(RS, "z_lt_7", P7),  arc(PQp, "x_lt_5", Tp),
      arc(PQp, "x_lt_7", T75), arc(P7, "x_lt_7", T77), arc(PQ, "x_lt_5", T55),
      arc(PQ, "x_lt_7", T75),  arc(Tp, "true", Oy),    arc(T77, "true", O77),
      arc(T55, "true", O55),   arc(T75, "true", O75)};

  Tally t;
  t.expect(states == want_states, "reachable states differ");
  t.expect(arcs == want_arcs, "reachable arcs differ");

  StateSpace closed = closure(p.initial_states(), ctx);
  std::set<std::string> added;
  for (std::size_t s = 0; s < closed.size(); ++s) {
    if (closed.derived[s]) added.insert(to_string(closed.states[s], sys));
  }
  t.expect(added == std::set<std::string>{P5}, "closure adds other states");
  auto p5 = closed.find(conf(p, P5));
  t.expect(p5 && closed.edges[*p5].size() == 1 &&
               closed.edges[*p5][0].label == testing::cons(sys, "x_lt_7") &&
               to_string(closed.states[closed.edges[*p5][0].target], sys) ==
                   T75,
           "successor of the added state");
  t.expect(closed.edge_count() == space.edge_count() + 1,
           "closure adds other rule edges");
  return t.outcome(std::to_string(space.size()) + " states, " +
                   std::to_string(space.edge_count()) +
                   " arcs; closure adds " + P5 + " and one arc");
}

Outcome example_verdicts() {
  Program p = testing::running_example();
  Context ctx(p);
  Tally t;
  auto sb = [&](const std::string& a, const std::string& b) {
    return sb_equiv(conf(p, a), conf(p, b), ctx);
  };
  t.expect(sb("<P() + Q(), true>", "<P(), true>"), "P+Q ~ P");
  t.expect(!sb("<P(), true>", "<Q(), true>"), "P !~ Q");
  t.expect(sb(RS, S), "R+S ~ S");
  t.expect(!sb(RpS, S), "R'+S !~ S");
  t.expect(!sb(PQp, P5), "P+Q' !~ P at z<5");
  t.expect(!syntactic_bisim(conf(p, PQ), conf(p, P5), ctx),
           "P+Q and P at z<5 syntactically apart");
  return t.outcome(std::to_string(t.checks()) + " verdicts");
}

Outcome derivation_suite() {
  Tally t;
  std::size_t pairs = 0;
  auto run = [&](const std::vector<Configuration>& initials,
                 const Context& ctx) {
    StateSpace space = closure(initials, ctx);
    for (std::size_t s = 0; s < space.size(); ++s) {
      std::vector<Transition> out;
      for (const auto* group : {&space.edges[s], &space.derived_edges[s]}) {
        for (const auto& e : *group) {
          out.push_back({space.states[s], e.label, space.states[e.target]});
        }
      }
      for (const auto& a : out) {
        for (const auto& b : out) {
          ++pairs;
          t.expect(derives_def(a, b, ctx.sys) == derives(a, b, ctx.sys),
                   to_string(a.source, ctx.sys));
        }
      }
    }
  };
  Program p = testing::running_example();
  run(p.initial_states(), Context(p));
  std::size_t programs = 0;
  for (const auto& entry : corpus()) {
    run(entry.program.initials, Context(entry.program));
    ++programs;
  }
  t.expect(programs >= kMinPrograms, "corpus too small");
  return t.outcome(std::to_string(pairs) + " pairs over " +
                   std::to_string(programs + 1) + " programs");
}

Outcome differential_suite() {
  Tally t;
  std::size_t pairs = 0, equivalent = 0;
  for (const auto& entry : corpus()) {
    Context ctx(entry.program);
    for (const auto& [a, b] : entry.pairs) {
      bool fast = sb_equiv(a, b, ctx);
      bool irr = irredundant_gfp(a, b, ctx);
      bool sat = sb_oracle(a, b, ctx);
      t.expect(fast == irr && irr == sat,
               "seed " + std::to_string(entry.seed) + ": " +
                   to_string(a, ctx.sys) + " vs " + to_string(b, ctx.sys));
      ++pairs;
      equivalent += sat;
    }
  }
  t.expect(pairs >= kMinPairs, "too few pairs");
  return t.outcome(std::to_string(pairs) + " pairs, " +
                   std::to_string(equivalent) + " equivalent");
}

Outcome consistency_suite() {
  Tally t;
  for (const auto& entry : corpus()) {
    const auto& sys = entry.program.system;
    Context ctx(entry.program);
    RefinementResult res = ccp_partition_refine(entry.program.initials, ctx);
    const StateSpace& full = res.space;
    auto redundant = redundancy(res.partition, full, sys);

    // Reachable states only, in their original order, without the
    // redundant moves.
    std::vector<std::size_t> keep;
    std::vector<std::size_t> index(full.size(), full.size());
    for (std::size_t s = 0; s < full.size(); ++s) {
      if (full.derived[s]) continue;
      index[s] = keep.size();
      keep.push_back(s);
    }
    StateSpace pruned;
    for (std::size_t s : keep) pruned.intern(full.states[s], full.size());
    pruned.edges.assign(keep.size(), {});
    pruned.derived_edges.assign(keep.size(), {});
    pruned.derived.assign(keep.size(), false);
    for (std::size_t s : full.initials) pruned.initials.push_back(index[s]);
    for (std::size_t k = 0; k < keep.size(); ++k) {
      const auto& edges = full.edges[keep[k]];
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (redundant[keep[k]][e]) continue;
        pruned.edges[k].push_back(Edge{edges[e].label, index[edges[e].target]});
      }
    }
    Partition plain =
        std_partition_refine(pruned, initial_partition_barbs(pruned));
    t.expect(plain == res.partition.restrict(keep),
             "seed " + std::to_string(entry.seed));
  }
  return t.outcome(std::to_string(t.checks()) + " programs");
}

Outcome monotone_suite() {
  Tally t;
  std::size_t most = 0;
  for (const auto& entry : corpus()) {
    Context ctx(entry.program);
    RefinementResult res = ccp_partition_refine(entry.program.initials, ctx);
    t.expect(res.iterations() <= res.space.size(),
             "seed " + std::to_string(entry.seed) + " iterations");
    for (std::size_t i = 1; i < res.trace.partitions.size(); ++i) {
      t.expect(res.trace.partitions[i].refines(res.trace.partitions[i - 1]),
               "seed " + std::to_string(entry.seed) + " step " +
                   std::to_string(i));
    }
    most = std::max(most, res.iterations());
  }
  return t.outcome(std::to_string(corpus().size()) +
                   " programs, at most " + std::to_string(most) +
                   " iterations");
}

Outcome bench_suite() {
  auto reports = run_bench({2, 4, 6, 8});
  Tally t;
  std::ostringstream ratios;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    t.expect(!r.error, "n=" + std::to_string(r.n) + ": " + r.error.value_or(""));
    ratios << (i ? ", " : "") << r.closure_states << "/" << r.config_states;
    if (i > 0) {
      t.expect(r.ratio() > reports[i - 1].ratio(),
               "ratio drops at n=" + std::to_string(r.n));
    }
  }
  return t.outcome("closure/reachable " + ratios.str());
}

void lattice_laws(const ConstraintSystem& sys, Tally& t) {
  auto all = sys.enumerate_con0();
  for (const auto& a : all) {
    t.expect(sys.leq(a, a), "reflexivity");
    t.expect(sys.leq(Constraint(), a) &&
                 sys.leq(a, Constraint::inconsistent()),
             "bounds");
    for (const auto& b : all) {
      if (sys.leq(a, b) && sys.leq(b, a)) t.expect(a == b, "antisymmetry");
      auto j = sys.lub(a, b);
      t.expect(j == sys.lub(b, a), "lub commutes");
      t.expect(sys.leq(a, j) && sys.leq(b, j), "lub is an upper bound");
      t.expect((sys.leq(a, b)) == (j == b), "lub and order agree");
      for (const auto& c : all) {
        if (sys.leq(a, b) && sys.leq(b, c)) t.expect(sys.leq(a, c), "transitivity");
        if (sys.leq(a, c) && sys.leq(b, c)) t.expect(sys.leq(j, c), "lub is least");
        t.expect(sys.lub(j, c) == sys.lub(a, sys.lub(b, c)), "lub associates");
      }
      // Minimality and coverage against the definition.
      auto m = sys.min_enablers(a, b);
      std::vector<Constraint> enablers;
      for (const auto& e : all) {
        if (sys.leq(a, sys.lub(b, e))) enablers.push_back(e);
      }
      for (const auto& e : m) {
        t.expect(sys.leq(a, sys.lub(b, e)), "enabler enables");
        for (const auto& f : enablers) {
          t.expect(!sys.lt(f, e), "enabler is minimal");
        }
      }
      for (const auto& f : enablers) {
        t.expect(std::any_of(m.begin(), m.end(),
                             [&](const Constraint& e) { return sys.leq(e, f); }),
                 "enablers are covered");
      }
    }
  }
}

Outcome lattice_suite() {
  Tally t;
  Program p = testing::running_example();
  std::size_t elements = p.system.enumerate_con0().size() - 1;
  // Three choices for each of x and z, two for y.
  t.expect(elements == 18, std::to_string(elements) + " consistent elements");
  lattice_laws(p.system, t);
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 50; ++i) {
    lattice_laws(testing::random_system(rng, 5, i % 2 == 1), t);
  }
  return t.outcome(std::to_string(elements) +
                   " consistent elements on the example, 50 random systems, " +
                   std::to_string(t.checks()) + " checks");
}

struct Criterion {
  const char* name;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1 golden partition trace", kGoldenLimit, golden_trace},
      {"AC2 golden labeled state space", kGoldenLimit, golden_lts},
      {"AC3 example verdicts", kGoldenLimit, example_verdicts},
      {"AC4 derivation fast path", kDerivesLimit, derivation_suite},
      {"AC5 differential equivalence", kDifferentialLimit, differential_suite},
      {"AC6 pruned plain refinement", kConsistencyLimit, consistency_suite},
      {"AC7 termination and monotonicity", kMonotoneLimit, monotone_suite},
      {"AC8 exponential family", kBenchLimit, bench_suite},
      {"AC9 lattice laws", kLatticeLimit, lattice_suite},
  };
  // Build the corpus outside the timed sections.
  std::printf("corpus: %zu programs\n", corpus().size());
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    bool in_time = secs <= c.limit;
    bool pass = o.ok && in_time;
    if (!in_time) o.detail += ", over the time limit";
    std::printf("%s %s: %s (%.3f s, limit %.0f s)\n", pass ? "PASS" : "FAIL",
                c.name, o.detail.c_str(), secs, c.limit);
    failed += !pass;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
