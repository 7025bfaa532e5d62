#pragma once

// Job files.
//
//   job        := { statement ';' }
//   statement  := 'field' field
//               | 'ring' [ field '[' names ']' | names ]
//               | 'order' name { ',' name }
//               | 'weights' integer { ',' integer }
//               | 'ideal' name '=' polys
//               | 'component' '=' polys
//               | 'command' name
//               | 'tvalues' integer { ',' integer }
//               | 'scalars' name '=' [ polys ]
//               | 'parameter' name
//               | 'lift_variable' name
//               | 'variable' name
//               | 'degree' integer
//               | 'seed' integer
//               | 'threads' integer
//   field      := 'Q' | 'GF(' integer ')'
//   names      := name { ',' name }
//   polys      := poly { ',' poly }      (text syntax, commas at depth 0 split)
//
// '#' starts a comment running to the end of the line. Polynomials are parsed
// later, once the field is known; Located keeps where each one started.

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liftings/core/field.hpp"
#include "liftings/error.hpp"

namespace liftings::cli {

struct Located {
  std::string text;
  int line = 0, column = 0;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"gb",      "lift_scheme", "stratum",  "isom",      "acm_lift",
                                                 "verify_lifting", "saturate", "truncate", "intersect", "discriminant"};
  return names;
}

struct JobSpec {
  std::string command;
  std::uint32_t characteristic = 0;  // 0 for Q
  std::vector<std::string> variables;
  std::vector<std::string> orders = {"degrevlex"};
  std::vector<long long> weights;
  std::vector<std::pair<std::string, std::vector<Located>>> ideals;  // declaration order
  std::vector<std::vector<Located>> components;
  std::vector<long long> t_values;
  std::map<std::string, std::vector<Located>> scalars;
  std::vector<std::string> parameters;  // symbolic scalars, e.g. chi
  std::string lift_variable;            // default x<n>
  std::string variable;
  std::optional<int> degree;
  unsigned seed = 1;
  std::size_t threads = 1;

  std::string field_name() const { return characteristic ? "GF(" + std::to_string(characteristic) + ")" : "Q"; }
  std::string xn_name() const {
    return lift_variable.empty() ? "x" + std::to_string(variables.size()) : lift_variable;
  }
  const std::vector<Located>* ideal(const std::string& name) const {
    for (const auto& [n, g] : ideals)
      if (n == name) return &g;
    return nullptr;
  }
  // the ideal a command works on: "H" if declared, else the first one
  const std::vector<Located>& main_ideal() const {
    if (auto* h = ideal("H")) return *h;
    if (ideals.empty()) fail(ErrorKind::Parse, "job declares no ideal");
    return ideals.front().second;
  }
};

[[noreturn]] inline void parse_error(int line, int column, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

namespace detail {

class JobLexer {
 public:
  explicit JobLexer(std::string text) : s_(std::move(text)) {}

  // next ';'-terminated statement with comments removed, or nullopt at the end
  std::optional<Located> statement() {
    std::string out;
    int line = 0, col = 0;
    bool started = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
        continue;
      }
      if (c == ';') {
        advance();
        if (!started) parse_error(line_, col_ - 1, "empty statement");
        return Located{trim(out), line, col};
      }
      if (!started && !std::isspace(static_cast<unsigned char>(c))) {
        started = true;
        line = line_;
        col = col_;
      }
      if (started) out += c;
      advance();
    }
    if (started) parse_error(line, col, "statement is not terminated by ';'");
    return std::nullopt;
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }

  std::string s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

// position of the character at offset k of a statement starting at (line, col)
inline std::pair<int, int> position(const Located& st, std::size_t k) {
  int line = st.line, col = st.column;
  for (std::size_t i = 0; i < k && i < st.text.size(); ++i) {
    if (st.text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline std::vector<Located> split_list(const Located& st, std::size_t from) {
  std::vector<Located> out;
  int depth = 0;
  std::size_t start = from;
  auto push = [&](std::size_t end) {
    std::size_t b = start;
    while (b < end && std::isspace(static_cast<unsigned char>(st.text[b]))) ++b;
    std::size_t e = end;
    while (e > b && std::isspace(static_cast<unsigned char>(st.text[e - 1]))) --e;
    auto [l, c] = position(st, b);
    if (b == e) parse_error(l, c, "empty list entry");
    out.push_back({st.text.substr(b, e - b), l, c});
  };
  for (std::size_t k = from; k < st.text.size(); ++k) {
    char c = st.text[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      push(k);
      start = k + 1;
    }
  }
  push(st.text.size());
  return out;
}

inline bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline long long integer(const Located& v) {
  try {
    std::size_t used = 0;
    long long x = std::stoll(v.text, &used);
    if (used == v.text.size()) return x;
  } catch (const std::exception&) {
  }
  parse_error(v.line, v.column, "expected an integer, got '" + v.text + "'");
}

inline std::uint32_t field_characteristic(const Located& v) {
  if (v.text == "Q" || v.text == "QQ") return 0;
  if (v.text.rfind("GF(", 0) == 0 && v.text.back() == ')') {
    Located inner{v.text.substr(3, v.text.size() - 4), v.line, v.column + 3};
    long long p = integer(inner);
    if (p < 2 || p > 2147483647 || !is_prime(static_cast<std::uint64_t>(p)))
      parse_error(v.line, v.column, "GF(p) needs a prime p below 2^31, got " + inner.text);
    return static_cast<std::uint32_t>(p);
  }
  parse_error(v.line, v.column, "unknown field '" + v.text + "' (use Q or GF(p))");
}

}  // namespace detail

inline JobSpec parse_job(const std::string& text) {
  using namespace detail;
  JobSpec job;
  JobLexer lex(text);
  bool have_ring = false;
  while (auto st = lex.statement()) {
    std::size_t k = 0;
    while (k < st->text.size() && (std::isalnum(static_cast<unsigned char>(st->text[k])) || st->text[k] == '_')) ++k;
    const std::string kw = st->text.substr(0, k);
    while (k < st->text.size() && std::isspace(static_cast<unsigned char>(st->text[k]))) ++k;
    auto rest = [&] {
      auto [l, c] = position(*st, k);
      if (k >= st->text.size()) parse_error(l, c, "'" + kw + "' needs an argument");
      return Located{st->text.substr(k), l, c};
    };
    auto name_arg = [&] {
      auto v = rest();
      if (!is_name(v.text)) parse_error(v.line, v.column, "expected a name, got '" + v.text + "'");
      return v.text;
    };
    auto integers = [&] {
      std::vector<long long> out;
      rest();
      for (const auto& v : split_list(*st, k)) out.push_back(integer(v));
      return out;
    };
    // `NAME = list` or `= list`; returns the name (maybe empty) and the list start
    auto assignment = [&](bool named, bool allow_empty) {
      std::string name;
      std::size_t e = st->text.find('=', k);
      auto [l, c] = position(*st, k);
      if (e == std::string::npos) parse_error(l, c, "expected '='");
      std::string lhs = st->text.substr(k, e - k);
      while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.pop_back();
      if (named && !is_name(lhs)) parse_error(l, c, "expected a name before '='");
      if (!named && !lhs.empty()) parse_error(l, c, "unexpected '" + lhs + "' before '='");
      std::size_t from = e + 1;
      while (from < st->text.size() && std::isspace(static_cast<unsigned char>(st->text[from]))) ++from;
      std::vector<Located> list;
      if (from < st->text.size()) list = split_list(*st, from);
      else if (!allow_empty) parse_error(l, c, "empty generator list");
      return std::pair{lhs, list};
    };

    if (kw == "field") {
      job.characteristic = field_characteristic(rest());
    } else if (kw == "ring") {
      auto v = rest();
      std::size_t from = k;
      auto br = v.text.find('[');
      if (br != std::string::npos) {
        if (v.text.back() != ']') parse_error(v.line, v.column, "expected ']' at the end of the ring");
        job.characteristic = field_characteristic(Located{v.text.substr(0, br), v.line, v.column});
        Located inner{st->text.substr(0, st->text.size() - 1), st->line, st->column};
        from = k + br + 1;
        job.variables.clear();
        for (const auto& n : split_list(inner, from)) {
          if (!is_name(n.text)) parse_error(n.line, n.column, "bad variable name '" + n.text + "'");
          job.variables.push_back(n.text);
        }
      } else {
        job.variables.clear();
        for (const auto& n : split_list(*st, from)) {
          if (!is_name(n.text)) parse_error(n.line, n.column, "bad variable name '" + n.text + "'");
          job.variables.push_back(n.text);
        }
      }
      for (std::size_t i = 0; i < job.variables.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (job.variables[i] == job.variables[j]) parse_error(v.line, v.column, "variable declared twice");
      have_ring = true;
    } else if (kw == "order") {
      rest();
      job.orders.clear();
      for (const auto& v : split_list(*st, k)) {
        if (v.text != "lex" && v.text != "deglex" && v.text != "degrevlex")
          parse_error(v.line, v.column, "unknown term order '" + v.text + "'");
        job.orders.push_back(v.text);
      }
    } else if (kw == "weights") {
      job.weights = integers();
    } else if (kw == "ideal") {
      auto [name, list] = assignment(true, false);
      if (job.ideal(name)) parse_error(st->line, st->column, "ideal " + name + " declared twice");
      job.ideals.emplace_back(name, std::move(list));
    } else if (kw == "component") {
      job.components.push_back(assignment(false, false).second);
    } else if (kw == "command") {
      auto v = rest();
      bool known = false;
      for (const auto& c : command_names()) known = known || c == v.text;
      if (!known) parse_error(v.line, v.column, "unknown command '" + v.text + "'");
      job.command = v.text;
    } else if (kw == "tvalues") {
      job.t_values = integers();
    } else if (kw == "scalars") {
      auto [name, list] = assignment(true, true);
      job.scalars[name] = std::move(list);
    } else if (kw == "parameter") {
      job.parameters.push_back(name_arg());
    } else if (kw == "lift_variable") {
      job.lift_variable = name_arg();
    } else if (kw == "variable") {
      job.variable = name_arg();
    } else if (kw == "degree") {
      job.degree = static_cast<int>(integer(rest()));
    } else if (kw == "seed") {
      job.seed = static_cast<unsigned>(integer(rest()));
    } else if (kw == "threads") {
      long long t = integer(rest());
      if (t < 1) parse_error(st->line, st->column, "threads must be positive");
      job.threads = static_cast<std::size_t>(t);
    } else {
      parse_error(st->line, st->column, "unknown statement '" + kw + "'");
    }
  }
  if (!have_ring) parse_error(1, 1, "job declares no ring");
  if (job.variables.empty()) parse_error(1, 1, "the ring has no variables");
  return job;
}

inline JobSpec parse_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str());
}

}  // namespace liftings::cli
