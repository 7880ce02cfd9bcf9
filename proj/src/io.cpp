// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.

#include "urlat/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace urlat {

namespace {

[[noreturn]] void syntax_fail(std::size_t line, std::size_t col,
                              const std::string& expected) {
  throw Error(Err::SyntaxError,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(col) + ": expected " + expected,
              {static_cast<int>(line), static_cast<int>(col)});
}

// -------------------------------------------------------------------------
// Line scanner for the textual format
// -------------------------------------------------------------------------

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

struct LineScanner {
  std::vector<std::string> lines;
  std::size_t next_index = 0;

  explicit LineScanner(const std::string& text) {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    lines.push_back(cur);
  }

  std::optional<Line> next() {
    while (next_index < lines.size()) {
      const std::string& raw = lines[next_index];
      ++next_index;
      Line out;
      out.number = next_index;
      std::size_t i = 0;
      while (i < raw.size()) {
        if (std::isspace(static_cast<unsigned char>(raw[i]))) {
          ++i;
          continue;
        }
        std::size_t start = i;
        while (i < raw.size() &&
               !std::isspace(static_cast<unsigned char>(raw[i]))) {
          ++i;
        }
        out.tokens.push_back({raw.substr(start, i - start), start + 1});
      }
      if (!out.tokens.empty()) return out;
    }
    return std::nullopt;
  }

  Line expect(const std::string& what) {
    auto l = next();
    if (!l) syntax_fail(lines.size(), 1, what);
    return *l;
  }
};

int token_int(const Token& t, std::size_t line, const std::string& what,
              long long lo, long long hi) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t.text, &used);
  } catch (...) {
    syntax_fail(line, t.col, what);
  }
  if (used != t.text.size() || v < lo || v > hi) {
    syntax_fail(line, t.col, what);
  }
  return static_cast<int>(v);
}

std::vector<int> parse_index_rows(LineScanner& sc, int n,
                                  const std::string& section) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    Line l = sc.expect("a row of the " + section + " section");
    if (static_cast<int>(l.tokens.size()) != n) {
      syntax_fail(l.number, l.tokens.empty() ? 1 : l.tokens.back().col,
                  std::to_string(n) + " indices in a " + section + " row");
    }
    for (const Token& t : l.tokens) {
      out.push_back(token_int(t, l.number, "an index in [0, size)", 0, n - 1));
    }
  }
  return out;
}

// -------------------------------------------------------------------------
// JSON mirror
// -------------------------------------------------------------------------

RawAlgebra parse_frl_json_raw(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    syntax_fail(line, col, "well-formed JSON");
  }
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) {
      syntax_fail(1, 1, std::string("JSON key \"") + key + "\"");
    }
    return j.at(key);
  };
  auto as_int = [&](const nlohmann::json& v, const char* what, long long lo,
                    long long hi) {
    if (!v.is_number_integer()) syntax_fail(1, 1, what);
    long long x = v.get<long long>();
    if (x < lo || x > hi) syntax_fail(1, 1, what);
    return static_cast<int>(x);
  };

  if (need("format") != "frl" || as_int(need("version"), "version 1", 1, 1) != 1) {
    syntax_fail(1, 1, "format \"frl\" version 1");
  }
  RawAlgebra raw;
  raw.n = as_int(need("size"), "size between 1 and 4096", 1, 4096);
  raw.unit = as_int(need("unit"), "unit index", 0, raw.n - 1);
  for (const char* key : {"bot", "top"}) {
    const auto& v = need(key);
    std::optional<int>& slot = key[0] == 'b' ? raw.bot : raw.top;
    if (v.is_null()) {
      slot = std::nullopt;
    } else {
      slot = as_int(v, "bound index or null", 0, raw.n - 1);
    }
  }
  if (j.contains("names")) {
    const auto& names = j.at("names");
    if (!names.is_array() || static_cast<int>(names.size()) != raw.n) {
      syntax_fail(1, 1, "names array of length size");
    }
    for (const auto& v : names) {
      if (!v.is_string()) syntax_fail(1, 1, "name strings");
      raw.names.push_back(v.get<std::string>());
    }
  }
  auto table = [&](const char* key, long long hi) {
    const auto& rows = need(key);
    std::vector<int> out;
    if (!rows.is_array() || static_cast<int>(rows.size()) != raw.n) {
      syntax_fail(1, 1, std::string(key) + " as a size x size array");
    }
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != raw.n) {
        syntax_fail(1, 1, std::string(key) + " rows of length size");
      }
      for (const auto& v : row) {
        out.push_back(as_int(v, "a table entry", 0, hi));
      }
    }
    return out;
  };
  std::vector<int> le = table("le", 1);
  raw.leq.assign(le.begin(), le.end());
  raw.mul = table("mul", raw.n - 1);
  if (j.contains("ldiv")) raw.ldiv = table("ldiv", raw.n - 1);
  if (j.contains("rdiv")) raw.rdiv = table("rdiv", raw.n - 1);
  return raw;
}

}  // namespace

RawAlgebra parse_frl_raw(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_frl_json_raw(text);
    break;
  }

  LineScanner sc(text);
  Line header = sc.expect("header 'frl 1'");
  if (header.tokens.size() != 2 || header.tokens[0].text != "frl" ||
      header.tokens[1].text != "1") {
    syntax_fail(header.number, header.tokens[0].col, "header 'frl 1'");
  }

  auto keyword_int = [&](const std::string& key, long long lo, long long hi,
                         const std::string& what) {
    Line l = sc.expect("'" + key + " <value>'");
    if (l.tokens.size() != 2 || l.tokens[0].text != key) {
      syntax_fail(l.number, l.tokens[0].col, "'" + key + " <value>'");
    }
    return std::pair<int, Line>(token_int(l.tokens[1], l.number, what, lo, hi),
                                l);
  };

  RawAlgebra raw;
  raw.n = keyword_int("size", 1, 4096, "size between 1 and 4096").first;
  raw.unit =
      keyword_int("unit", 0, raw.n - 1, "unit index in [0, size)").first;
  for (const char* key : {"bot", "top"}) {
    Line l = sc.expect(std::string("'") + key + " <index|none>'");
    if (l.tokens.size() != 2 || l.tokens[0].text != key) {
      syntax_fail(l.number, l.tokens[0].col,
                  std::string("'") + key + " <index|none>'");
    }
    std::optional<int> v;
    if (l.tokens[1].text != "none") {
      v = token_int(l.tokens[1], l.number, "bound index or 'none'", 0,
                    raw.n - 1);
    }
    (key[0] == 'b' ? raw.bot : raw.top) = v;
  }

  Line l = sc.expect("'names', or the 'le' section");
  if (l.tokens[0].text == "names") {
    if (static_cast<int>(l.tokens.size()) != raw.n + 1) {
      syntax_fail(l.number, l.tokens[0].col,
                  std::to_string(raw.n) + " names");
    }
    for (int i = 1; i <= raw.n; ++i) raw.names.push_back(l.tokens[i].text);
    l = sc.expect("the 'le' section");
  }
  if (l.tokens.size() != 1 || l.tokens[0].text != "le") {
    syntax_fail(l.number, l.tokens[0].col, "'le'");
  }
  for (int r = 0; r < raw.n; ++r) {
    Line row = sc.expect("a row of the le section");
    if (row.tokens.size() != 1 ||
        static_cast<int>(row.tokens[0].text.size()) != raw.n) {
      syntax_fail(row.number, row.tokens[0].col,
                  "a string of " + std::to_string(raw.n) + " order bits");
    }
    for (int c = 0; c < raw.n; ++c) {
      char ch = row.tokens[0].text[c];
      if (ch != '0' && ch != '1') {
        syntax_fail(row.number, row.tokens[0].col + c, "'0' or '1'");
      }
      raw.leq.push_back(ch == '1');
    }
  }

  l = sc.expect("the 'mul' section");
  if (l.tokens.size() != 1 || l.tokens[0].text != "mul") {
    syntax_fail(l.number, l.tokens[0].col, "'mul'");
  }
  raw.mul = parse_index_rows(sc, raw.n, "mul");

  l = sc.expect("'ldiv', 'rdiv', or 'end'");
  if (l.tokens.size() == 1 && l.tokens[0].text == "ldiv") {
    raw.ldiv = parse_index_rows(sc, raw.n, "ldiv");
    l = sc.expect("'rdiv' or 'end'");
  }
  if (l.tokens.size() == 1 && l.tokens[0].text == "rdiv") {
    raw.rdiv = parse_index_rows(sc, raw.n, "rdiv");
    l = sc.expect("'end'");
  }
  if (l.tokens.size() != 1 || l.tokens[0].text != "end") {
    syntax_fail(l.number, l.tokens[0].col, "'end'");
  }
  if (auto extra = sc.next()) {
    syntax_fail(extra->number, extra->tokens[0].col, "end of file");
  }
  return raw;
}

CheckedAlgebra check_raw_algebra(const RawAlgebra& raw) {
  CheckedAlgebra out;
  FinRL& R = out.algebra;
  const int n = raw.n;
  R.n = n;
  R.leq = raw.leq;
  R.mul = raw.mul;
  R.unit = raw.unit;
  R.bot = raw.bot;
  R.top = raw.top;
  R.names = raw.names;

  // Best-effort meet/join: running dominant candidate, falling back to the
  // row element; the law report flags any discrepancy.
  R.meet.assign(static_cast<std::size_t>(n) * n, 0);
  R.join.assign(static_cast<std::size_t>(n) * n, 0);
  auto le = [&](int x, int y) { return raw.leq[x * n + y] != 0; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int m = -1, j = -1;
      for (int c = 0; c < n; ++c) {
        if (le(c, x) && le(c, y) && (m < 0 || le(m, c))) m = c;
        if (le(x, c) && le(y, c) && (j < 0 || le(c, j))) j = c;
      }
      R.meet[x * n + y] = m < 0 ? x : m;
      R.join[x * n + y] = j < 0 ? x : j;
    }
  }

  if (raw.ldiv && raw.rdiv) {
    R.ldiv = *raw.ldiv;
    R.rdiv = *raw.rdiv;
  } else {
    std::vector<int> zero(static_cast<std::size_t>(n) * n, 0);
    try {
      Residuals res = derive_residuals(n, raw.leq, raw.mul);
      R.ldiv = raw.ldiv ? *raw.ldiv : std::move(res.ldiv);
      R.rdiv = raw.rdiv ? *raw.rdiv : std::move(res.rdiv);
    } catch (const Error&) {
      R.ldiv = raw.ldiv ? *raw.ldiv : zero;
      R.rdiv = raw.rdiv ? *raw.rdiv : zero;
    }
  }
  out.report = check_residuated_lattice(R);
  return out;
}

FinRL finalize_algebra(const RawAlgebra& raw) {
  CheckedAlgebra checked = check_raw_algebra(raw);
  if (!checked.report.all_pass()) {
    const LawCheck* f = checked.report.first_failure();
    throw Error(Err::SemanticError, f->law, f->witness);
  }
  return std::move(checked.algebra);
}

FinRL parse_frl(const std::string& text) {
  return finalize_algebra(parse_frl_raw(text));
}

std::string render_frl(const FinRL& A) {
  std::ostringstream os;
  os << "frl 1\n";
  os << "size " << A.n << "\n";
  os << "unit " << A.unit << "\n";
  os << "bot " << (A.bot ? std::to_string(*A.bot) : "none") << "\n";
  os << "top " << (A.top ? std::to_string(*A.top) : "none") << "\n";
  if (!A.names.empty()) {
    os << "names";
    for (const auto& s : A.names) os << " " << s;
    os << "\n";
  }
  os << "le\n";
  for (int x = 0; x < A.n; ++x) {
    for (int y = 0; y < A.n; ++y) os << (A.le(x, y) ? '1' : '0');
    os << "\n";
  }
  auto table = [&](const char* name, const std::vector<int>& t) {
    os << name << "\n";
    for (int x = 0; x < A.n; ++x) {
      for (int y = 0; y < A.n; ++y) {
        if (y) os << " ";
        os << t[x * A.n + y];
      }
      os << "\n";
    }
  };
  table("mul", A.mul);
  table("ldiv", A.ldiv);
  table("rdiv", A.rdiv);
  os << "end\n";
  return os.str();
}

std::string render_frl_json(const FinRL& A) {
  nlohmann::ordered_json j;
  j["format"] = "frl";
  j["version"] = 1;
  j["size"] = A.n;
  j["unit"] = A.unit;
  j["bot"] = A.bot ? nlohmann::ordered_json(*A.bot)
                   : nlohmann::ordered_json(nullptr);
  j["top"] = A.top ? nlohmann::ordered_json(*A.top)
                   : nlohmann::ordered_json(nullptr);
  if (!A.names.empty()) j["names"] = A.names;
  auto table = [&](const std::vector<int>& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int x = 0; x < A.n; ++x) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int y = 0; y < A.n; ++y) row.push_back(t[x * A.n + y]);
      rows.push_back(row);
    }
    return rows;
  };
  nlohmann::ordered_json le = nlohmann::ordered_json::array();
  for (int x = 0; x < A.n; ++x) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int y = 0; y < A.n; ++y) row.push_back(A.le(x, y) ? 1 : 0);
    le.push_back(row);
  }
  j["le"] = le;
  j["mul"] = table(A.mul);
  j["ldiv"] = table(A.ldiv);
  j["rdiv"] = table(A.rdiv);
  return j.dump(2) + "\n";
}

// -------------------------------------------------------------------------
// Signature and downset grammars
// -------------------------------------------------------------------------

namespace {

struct CharScanner {
  const std::string& s;
  std::size_t pos = 0;

  explicit CharScanner(const std::string& text) : s(text) {}

  void line_col(std::size_t at, std::size_t& line, std::size_t& col) const {
    line = 1;
    col = 1;
    for (std::size_t i = 0; i < at && i < s.size(); ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t line, col;
    line_col(pos, line, col);
    syntax_fail(line, col, expected);
  }

  void skip_ws() {
    while (pos < s.size() &&
           std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool eat(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect_char(char c, const std::string& what) {
    if (!eat(c)) fail(what);
  }

  long long integer(const std::string& what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (pos == start) fail(what);
    return std::stoll(s.substr(start, pos - start));
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           std::isalpha(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    return s.substr(start, pos - start);
  }

  void expect_end() {
    skip_ws();
    if (pos != s.size()) fail("end of input");
  }
};

int prime_to_index(long long value, const CharScanner& sc) {
  if (value < 2 || value > 100000) {
    sc.fail("a prime value between 2 and 100000");
  }
  for (int i = 1;; ++i) {
    long long p = nth_prime(i);
    if (p == value) return i;
    if (p > value) {
      throw Error(Err::SemanticError,
                  std::to_string(value) + " is not a prime",
                  {static_cast<int>(value)});
    }
  }
}

Partition parse_partition(CharScanner& sc) {
  sc.expect_char('[', "'['");
  Partition p;
  if (!sc.peek_is(']')) {
    while (true) {
      long long e = sc.integer("a partition entry");
      if (e < 1 || e > 1000000) {
        throw Error(Err::SemanticError, "partition entries must be >= 1",
                    {static_cast<int>(e)});
      }
      p.push_back(static_cast<int>(e));
      if (!sc.eat(',')) break;
    }
  }
  sc.expect_char(']', "']'");
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

GroupSig parse_sig_inner(CharScanner& sc) {
  sc.expect_char('(', "'('");
  GroupSig g;
  long long flag = sc.integer("a rank flag (0 or 1)");
  if (flag != 0 && flag != 1) sc.fail("a rank flag (0 or 1)");
  g.flag = static_cast<int>(flag);
  while (sc.eat(';')) {
    if (sc.peek_is(')')) break;
    sc.skip_ws();
    if (sc.pos >= sc.s.size() || sc.s[sc.pos] != 'p') {
      sc.fail("a prime tag 'p<prime>'");
    }
    ++sc.pos;
    long long prime = sc.integer("a prime value");
    int idx = prime_to_index(prime, sc);
    sc.expect_char(':', "':'");
    Partition p = parse_partition(sc);
    if (g.torsion.count(idx)) {
      throw Error(Err::SemanticError,
                  "duplicate prime tag p" + std::to_string(prime),
                  {static_cast<int>(prime)});
    }
    if (p.empty()) {
      throw Error(Err::SemanticError,
                  "empty partition for prime tag p" + std::to_string(prime),
                  {static_cast<int>(prime)});
    }
    g.torsion[idx] = std::move(p);
  }
  sc.expect_char(')', "')'");
  return g;
}

Downset parse_downset_inner(CharScanner& sc);

DownsetPart parse_part(CharScanner& sc) {
  sc.expect_char('(', "'('");
  std::string kind = sc.word();
  if (kind == "principal") {
    Principal p{parse_sig_inner(sc)};
    sc.expect_char(')', "')'");
    return p;
  }
  if (kind == "tower") {
    ExpTower t;
    t.base = parse_sig_inner(sc);
    t.prime_index = prime_to_index(sc.integer("a prime value"), sc);
    sc.expect_char(')', "')'");
    return t;
  }
  if (kind == "family") {
    PrimeFamily f;
    f.shape = parse_partition(sc);
    if (f.shape.empty()) {
      throw Error(Err::SemanticError, "family shape must be nonempty");
    }
    f.min_index = prime_to_index(sc.integer("a prime value"), sc);
    sc.expect_char(')', "')'");
    return f;
  }
  sc.fail("'principal', 'tower', or 'family'");
}

Downset parse_downset_inner(CharScanner& sc) {
  std::size_t mark = sc.pos;
  sc.expect_char('(', "'('");
  std::string kind = sc.word();
  Downset d;
  if (kind == "union") {
    while (!sc.peek_is(')')) d.parts.push_back(parse_part(sc));
    if (d.parts.empty()) sc.fail("at least one downset component");
    sc.expect_char(')', "')'");
    return d;
  }
  sc.pos = mark;
  d.parts.push_back(parse_part(sc));
  return d;
}

}  // namespace

GroupSig parse_sig(const std::string& text) {
  CharScanner sc(text);
  GroupSig g = parse_sig_inner(sc);
  sc.expect_end();
  return g;
}

std::string render_sig(const GroupSig& g) {
  std::ostringstream os;
  os << "(" << g.flag << ";";
  bool first = true;
  for (const auto& [n, p] : g.torsion) {
    if (p.empty()) continue;
    os << (first ? " " : " ") << "p" << nth_prime(n) << ":[";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) os << ",";
      os << p[i];
    }
    os << "]";
    first = false;
    os << ";";
  }
  std::string s = os.str();
  if (!first) s.pop_back();  // drop the trailing ';' after the last entry
  return s + ")";
}

Downset parse_downset(const std::string& text) {
  CharScanner sc(text);
  Downset d = parse_downset_inner(sc);
  sc.expect_end();
  return d;
}

std::string render_downset(const Downset& d) {
  std::ostringstream os;
  os << "(union";
  for (const auto& part : d.parts) {
    if (const auto* pr = std::get_if<Principal>(&part)) {
      os << " (principal " << render_sig(pr->g) << ")";
    } else if (const auto* tw = std::get_if<ExpTower>(&part)) {
      os << " (tower " << render_sig(tw->base) << " "
         << nth_prime(tw->prime_index) << ")";
    } else {
      const auto& fam = std::get<PrimeFamily>(part);
      os << " (family [";
      for (std::size_t i = 0; i < fam.shape.size(); ++i) {
        if (i) os << ",";
        os << fam.shape[i];
      }
      os << "] " << nth_prime(fam.min_index) << ")";
    }
  }
  os << ")";
  return os.str();
}

}  // namespace urlat
