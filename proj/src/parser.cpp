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

#include "ccpbisim/parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "ccpbisim/error.hpp"

namespace ccpbisim {

namespace {

enum class Tok {
  ident,
  number,
  lbrace,
  rbrace,
  lparen,
  rparen,
  semi,
  comma,
  arrow,
  parallel,
  plus,
  amp,
  langle,
  rangle,
  tilde,
  colon,
  equals,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto ident_start = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  };
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "//") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (src.substr(i, 2) == "/*") {
      int l = line, cl = col;
      advance(2);
      while (i < src.size() && src.substr(i, 2) != "*/") advance(1);
      if (i >= src.size()) {
        throw SyntaxError(ErrorKind::syntax, "unterminated comment", l, cl);
      }
      advance(2);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (ident_start(c) || (c == '#' && i + 1 < src.size() &&
                           std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      while (j < src.size() && src[j] == '\'') ++j;
      t.kind = Tok::ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      t.kind = Tok::number;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "->") {
      t.kind = Tok::arrow;
    } else if (two == "||") {
      t.kind = Tok::parallel;
    } else {
      switch (c) {
        case '{': t.kind = Tok::lbrace; break;
        case '}': t.kind = Tok::rbrace; break;
        case '(': t.kind = Tok::lparen; break;
        case ')': t.kind = Tok::rparen; break;
        case ';': t.kind = Tok::semi; break;
        case ',': t.kind = Tok::comma; break;
        case '+': t.kind = Tok::plus; break;
        case '&': t.kind = Tok::amp; break;
        case '<': t.kind = Tok::langle; break;
        case '>': t.kind = Tok::rangle; break;
        case '~': t.kind = Tok::tilde; break;
        case ':': t.kind = Tok::colon; break;
        case '=': t.kind = Tok::equals; break;
        default:
          throw SyntaxError(ErrorKind::syntax,
                            std::string("unexpected character '") + c + "'",
                            line, col);
      }
    }
    std::size_t len = (t.kind == Tok::arrow || t.kind == Tok::parallel) ? 2 : 1;
    t.text = std::string(src.substr(i, len));
    advance(len);
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

struct RawAtom {
  std::string name;
  std::optional<std::string> var;
  int line = 0;
  int column = 0;
};

struct RawConstraint {
  bool is_false = false;
  std::vector<RawAtom> atoms;
};

struct ProcSite {
  int line = 0;
  int column = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Program program() {
    Program prog;
    if (peek_keyword("system")) prog.system = system_block();
    sys_ = &prog.system;
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::ident && t.text == "proc") {
        proc_def(prog);
      } else if (t.kind == Tok::ident && t.text == "init") {
        next();
        do {
          prog.initials.push_back(config_checked());
        } while (accept(Tok::comma));
        expect(Tok::semi, "';'");
      } else if (t.kind == Tok::ident && t.text == "query") {
        query(prog);
      } else {
        fail(t, "expected 'proc', 'init' or 'query'");
      }
    }
    validate(prog);
    return prog;
  }

  Process lone_process(const Program& ctx) {
    sys_ = &ctx.system;
    Process p = process();
    expect_end();
    check_calls_against(p, ctx.env, toks_.front());
    return p;
  }

  Configuration lone_configuration(const Program& ctx) {
    sys_ = &ctx.system;
    const Token& at = peek();
    Configuration g = config();
    expect_end();
    check_calls_against(g.process, ctx.env, at);
    check_query_variables(g, at);
    return g;
  }

 private:
  // Tokens.
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  bool peek_keyword(std::string_view kw) const {
    return peek().kind == Tok::ident && peek().text == kw;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg,
                         ErrorKind kind = ErrorKind::syntax) const {
    std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(kind, msg + " (found " + found + ")", t.line, t.column);
  }
  [[noreturn]] void fail_at(const Token& t, ErrorKind kind,
                            const std::string& msg) const {
    throw SyntaxError(kind, msg, t.line, t.column);
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what);
    return next();
  }
  void expect_keyword(std::string_view kw) {
    if (!peek_keyword(kw)) fail(peek(), "expected '" + std::string(kw) + "'");
    next();
  }
  void expect_end() {
    if (peek().kind != Tok::end) fail(peek(), "expected end of input");
  }
  std::string ident(const char* what) {
    return expect(Tok::ident, what).text;
  }
  std::vector<std::string> ident_list() {
    std::vector<std::string> out{ident("identifier")};
    while (accept(Tok::comma)) out.push_back(ident("identifier"));
    return out;
  }

  // System block.
  RawAtom raw_atom(bool schematic) {
    const Token& t = expect(Tok::ident, "atom");
    RawAtom a{t.text, std::nullopt, t.line, t.column};
    if (schematic) {
      expect(Tok::lparen, "'(' after predicate");
      a.var = ident("variable");
      expect(Tok::rparen, "')'");
    }
    return a;
  }

  RawConstraint raw_constraint(bool schematic) {
    RawConstraint rc;
    if (peek_keyword("true")) {
      next();
      return rc;
    }
    if (peek_keyword("false")) {
      next();
      rc.is_false = true;
      return rc;
    }
    rc.atoms.push_back(raw_atom(schematic));
    while (accept(Tok::amp)) rc.atoms.push_back(raw_atom(schematic));
    return rc;
  }

  ConstraintSystem system_block() {
    const Token& start = next();
    expect(Tok::lbrace, "'{'");
    ConstraintSystem::TableSpec table;
    ConstraintSystem::SchematicSpec schema;
    bool schematic = false;
    bool any_table = false;
    int fresh = -1;
    struct Pending {
      Token at;
      ConstraintSystem::ExistsEntry entry;
    };
    std::vector<Pending> exists;
    // imply/conflict before `schema` would be ambiguous; collect raw forms.
    std::vector<std::pair<RawAtom, RawAtom>> implies, conflicts;
    auto atom_ref = [&]() {
      const Token& t = expect(Tok::ident, "atom");
      RawAtom a{t.text, std::nullopt, t.line, t.column};
      return a;
    };
    while (!accept(Tok::rbrace)) {
      const Token& kw = peek();
      if (kw.kind != Tok::ident) fail(kw, "expected a declaration");
      next();
      if (kw.text == "atoms") {
        auto names = ident_list();
        table.atoms.insert(table.atoms.end(), names.begin(), names.end());
        any_table = true;
      } else if (kw.text == "schema") {
        auto names = ident_list();
        schema.predicates.insert(schema.predicates.end(), names.begin(),
                                 names.end());
        schematic = true;
      } else if (kw.text == "vars") {
        auto names = ident_list();
        schema.variables.insert(schema.variables.end(), names.begin(),
                                names.end());
      } else if (kw.text == "fresh") {
        const Token& n = expect(Tok::number, "pool size");
        fresh = std::stoi(n.text);
      } else if (kw.text == "imply") {
        RawAtom a = atom_ref();
        expect(Tok::arrow, "'->'");
        RawAtom b = atom_ref();
        implies.emplace_back(a, b);
      } else if (kw.text == "conflict") {
        RawAtom a = atom_ref();
        expect(Tok::comma, "','");
        RawAtom b = atom_ref();
        conflicts.emplace_back(a, b);
      } else if (kw.text == "exists") {
        Pending p{kw, {}};
        p.entry.variable = ident("variable");
        expect(Tok::colon, "':'");
        RawConstraint from = raw_constraint(false);
        expect(Tok::arrow, "'->'");
        RawConstraint to = raw_constraint(false);
        if (from.is_false || to.is_false) {
          fail_at(kw, ErrorKind::invalid_cylindrification,
                  "exists entries cannot mention false");
        }
        for (auto& a : from.atoms) p.entry.from.push_back(a.name);
        for (auto& a : to.atoms) p.entry.to.push_back(a.name);
        exists.push_back(std::move(p));
      } else {
        fail(kw, "unknown declaration");
      }
      expect(Tok::semi, "';'");
    }
    if (schematic && any_table) {
      fail_at(start, ErrorKind::syntax,
              "a system uses either `atoms` or `schema`, not both");
    }
    if (schematic && !exists.empty()) {
      fail_at(exists.front().at, ErrorKind::syntax,
              "schematic systems derive exists from the atom variables");
    }
    if (!schematic && (!schema.variables.empty() || fresh >= 0)) {
      fail_at(start, ErrorKind::syntax, "`vars` and `fresh` need `schema`");
    }
    try {
      if (schematic) {
        if (fresh >= 0) schema.fresh_pool = static_cast<std::size_t>(fresh);
        for (auto& [a, b] : implies) schema.implications.emplace_back(a.name, b.name);
        for (auto& [a, b] : conflicts) schema.conflicts.emplace_back(a.name, b.name);
        return ConstraintSystem::schematic(schema);
      }
      for (auto& [a, b] : implies) {
        check_declared(table.atoms, a);
        check_declared(table.atoms, b);
        table.implications.emplace_back(a.name, b.name);
      }
      for (auto& [a, b] : conflicts) {
        check_declared(table.atoms, a);
        check_declared(table.atoms, b);
        table.conflicts.emplace_back(a.name, b.name);
      }
      for (auto& p : exists) table.exists.push_back(p.entry);
      return ConstraintSystem::table(table);
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw SyntaxError(e.kind(), e.what(), start.line, start.column);
    }
  }

  void check_declared(const std::vector<std::string>& atoms, const RawAtom& a) {
    if (std::find(atoms.begin(), atoms.end(), a.name) == atoms.end()) {
      throw SyntaxError(ErrorKind::unknown_atom,
                        "unknown atom '" + a.name + "'", a.line, a.column);
    }
  }

  // Terms.
  Constraint constraint() {
    RawConstraint rc = raw_constraint(sys_->is_schematic());
    if (rc.is_false) return Constraint::inconsistent();
    std::vector<AtomId> ids;
    for (const auto& a : rc.atoms) {
      std::optional<AtomId> id =
          a.var ? sys_->instantiate(a.name, *a.var) : sys_->find_atom(a.name);
      if (!id) {
        std::string shown = a.var ? a.name + "(" + *a.var + ")" : a.name;
        throw SyntaxError(ErrorKind::unknown_atom,
                          "unknown atom '" + shown + "'", a.line, a.column);
      }
      ids.push_back(*id);
    }
    return sys_->canonicalize(ids);
  }

  Process process() {
    Process p = par();
    while (accept(Tok::plus)) p = Process::sum(p, par());
    return p;
  }

  Process par() {
    Process p = prefix();
    while (accept(Tok::parallel)) p = Process::par(p, prefix());
    return p;
  }

  Process prefix() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      if (t.text != "0") fail(t, "expected a process");
      next();
      return Process::stop();
    }
    if (accept(Tok::lparen)) {
      Process p = process();
      expect(Tok::rparen, "')'");
      return p;
    }
    if (t.kind != Tok::ident) fail(t, "expected a process");
    if (t.text == "tell") {
      next();
      expect(Tok::lparen, "'('");
      Constraint c = constraint();
      expect(Tok::rparen, "')'");
      return Process::tell(std::move(c));
    }
    if (t.text == "ask") {
      next();
      expect(Tok::lparen, "'('");
      Constraint c = constraint();
      expect(Tok::rparen, "')'");
      expect(Tok::arrow, "'->'");
      return Process::ask(std::move(c), prefix());
    }
    if (t.text == "local") {
      const Token& at = next();
      std::string var = ident("variable");
      Constraint info;
      if (accept(Tok::lparen)) {
        info = constraint();
        expect(Tok::rparen, "')'");
      }
      expect_keyword("in");
      if (!sys_->is_schematic()) {
        if (!info.is_true()) {
          fail_at(at, ErrorKind::unsupported_in_table_mode,
                  "table-mode systems do not support local information");
        }
        if (!sys_->has_cylindrification(var)) {
          fail_at(at, ErrorKind::no_cylindrification,
                  "no exists table for local variable '" + var + "'");
        }
      } else if (!sys_->has_variable(var)) {
        fail_at(at, ErrorKind::unbound_free_variable,
                "undeclared variable '" + var + "'");
      }
      return Process::local(std::move(var), std::move(info), prefix());
    }
    static const char* kReserved[] = {"true", "false", "in", "proc", "query",
                                      "init", "system"};
    for (const char* r : kReserved) {
      if (t.text == r) fail(t, "expected a process");
    }
    const Token& name = next();
    expect(Tok::lparen, "'(' after procedure name");
    std::vector<std::string> args;
    if (!accept(Tok::rparen)) {
      args = ident_list();
      expect(Tok::rparen, "')'");
    }
    call_sites_.emplace_back(name, args.size());
    return Process::call(name.text, std::move(args));
  }

  Configuration config() {
    expect(Tok::langle, "'<'");
    Process p = process();
    expect(Tok::comma, "','");
    Constraint c = constraint();
    expect(Tok::rangle, "'>'");
    return Configuration{std::move(p), std::move(c)};
  }

  Configuration config_checked() {
    const Token& at = peek();
    Configuration g = config();
    check_query_variables(g, at);
    return g;
  }

  void check_query_variables(const Configuration& g, const Token& at) const {
    for (const auto& v : free_variables(g.process, *sys_)) {
      if (!sys_->is_schematic() || !sys_->has_variable(v)) {
        fail_at(at, ErrorKind::unbound_free_variable,
                "undeclared variable '" + v + "'");
      }
    }
  }

  void query(Program& prog) {
    const Token& at = next();
    Query q;
    q.line = at.line;
    if (peek().kind == Tok::ident) {
      const std::string& k = peek().text;
      if (k == "sb") q.kind = QueryKind::sb;
      else if (k == "barbed") q.kind = QueryKind::barbed;
      else if (k == "syntactic") q.kind = QueryKind::syntactic;
      else if (k == "irredundant") q.kind = QueryKind::irredundant;
      else fail(peek(), "unknown query kind");
      next();
    }
    q.lhs = config_checked();
    expect(Tok::tilde, "'~'");
    q.rhs = config_checked();
    expect(Tok::semi, "';'");
    prog.queries.push_back(std::move(q));
  }

  void proc_def(Program& prog) {
    next();
    const Token& name = expect(Tok::ident, "procedure name");
    expect(Tok::lparen, "'('");
    std::vector<std::string> formals;
    if (!accept(Tok::rparen)) {
      formals = ident_list();
      expect(Tok::rparen, "')'");
    }
    expect(Tok::equals, "'='");
    Process body = process();
    expect(Tok::semi, "';'");
    if (prog.env.count(name.text)) {
      fail_at(name, ErrorKind::duplicate_procedure,
              "procedure '" + name.text + "' defined twice");
    }
    if (!formals.empty() && !sys_->is_schematic()) {
      fail_at(name, ErrorKind::unsupported_in_table_mode,
              "table-mode systems only allow parameterless procedures");
    }
    for (std::size_t i = 0; i < formals.size(); ++i) {
      if (!sys_->has_variable(formals[i])) {
        fail_at(name, ErrorKind::unbound_free_variable,
                "formal parameter '" + formals[i] + "' is not a declared variable");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (formals[i] == formals[j]) {
          fail_at(name, ErrorKind::syntax,
                  "formal parameter '" + formals[i] + "' repeated");
        }
      }
    }
    std::set<std::string> allowed(formals.begin(), formals.end());
    for (const auto& v : free_variables(body, *sys_)) {
      if (!allowed.count(v)) {
        fail_at(name, ErrorKind::unbound_free_variable,
                "free variable '" + v + "' of '" + name.text +
                    "' is not a formal parameter");
      }
    }
    sites_[name.text] = ProcSite{name.line, name.column};
    prog.env.emplace(name.text, ProcDef{std::move(formals), std::move(body)});
  }

  void check_calls_against(const Process& p, const ProcEnv& env,
                           const Token& at) const {
    for (const auto& [tok, arity] : call_sites_) {
      auto it = env.find(tok.text);
      if (it == env.end()) {
        fail_at(tok, ErrorKind::unknown_procedure,
                "undefined procedure '" + tok.text + "'");
      }
      if (it->second.formals.size() != arity) {
        fail_at(tok, ErrorKind::syntax,
                "procedure '" + tok.text + "' expects " +
                    std::to_string(it->second.formals.size()) + " arguments");
      }
    }
    (void)p;
    (void)at;
  }

  void validate(const Program& prog) const {
    check_calls_against(Process(), prog.env, toks_.front());
    // Calls reachable without passing an ask guard must not recurse.
    std::map<std::string, std::set<std::string>> unguarded;
    std::function<void(const Process&, std::set<std::string>&)> collect =
        [&](const Process& p, std::set<std::string>& out) {
          switch (p.kind()) {
            case ProcessKind::call:
              out.insert(p.name());
              break;
            case ProcessKind::par:
            case ProcessKind::sum:
              collect(p.left(), out);
              collect(p.right(), out);
              break;
            case ProcessKind::local:
              collect(p.body(), out);
              break;
            default:
              break;
          }
        };
    for (const auto& [name, def] : prog.env) collect(def.body, unguarded[name]);
    std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
    std::function<void(const std::string&)> visit = [&](const std::string& n) {
      state[n] = 1;
      for (const auto& m : unguarded[n]) {
        if (state[m] == 1) {
          const ProcSite& s = sites_.at(n);
          throw SyntaxError(ErrorKind::unguarded_recursion,
                            "procedure '" + n + "' reaches '" + m +
                                "' without an ask guard",
                            s.line, s.column);
        }
        if (state[m] == 0) visit(m);
      }
      state[n] = 2;
    };
    for (const auto& [name, def] : prog.env) {
      if (state[name] == 0) visit(name);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ConstraintSystem* sys_ = nullptr;
  std::vector<std::pair<Token, std::size_t>> call_sites_;
  std::map<std::string, ProcSite> sites_;
};

}  // namespace

Program parse_program(std::string_view text) {
  return Parser(text).program();
}

Process parse_process(std::string_view text, const Program& context) {
  return Parser(text).lone_process(context);
}

Configuration parse_configuration(std::string_view text,
                                  const Program& context) {
  return Parser(text).lone_configuration(context);
}

}  // namespace ccpbisim
