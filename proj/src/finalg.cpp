// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.

#include "urlat/finalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace urlat {

namespace {

void require_square(int n, std::size_t got, const char* what) {
  if (n <= 0 || got != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw Error(Err::SemanticError,
                std::string(what) + " table has wrong size for the carrier");
  }
}

void require_entries_in_range(int n, const std::vector<int>& table,
                              const char* what) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= n) {
      std::ostringstream os;
      os << what << " table entry out of range at flat index " << i;
      throw Error(Err::SemanticError, os.str(),
                  {static_cast<int>(i / n), static_cast<int>(i % n)});
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// validate_order
// ---------------------------------------------------------------------------

LatticeTables validate_order(int n, const std::vector<std::uint8_t>& leq) {
  require_square(n, leq.size(), "order");
  auto le = [&](int x, int y) { return leq[x * n + y] != 0; };

  for (int x = 0; x < n; ++x) {
    if (!le(x, x)) {
      throw Error(Err::NotAPoset, "order is not reflexive", {x});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && le(x, y) && le(y, x)) {
        throw Error(Err::NotAPoset, "order is not antisymmetric", {x, y});
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!le(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (le(y, z) && !le(x, z)) {
          throw Error(Err::NotAPoset, "order is not transitive", {x, y, z});
        }
      }
    }
  }

  LatticeTables out;
  out.n = n;
  out.meet.assign(static_cast<std::size_t>(n) * n, 0);
  out.join.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int inf = -1;
      for (int c = 0; c < n; ++c) {
        if (!le(c, x) || !le(c, y)) continue;
        if (inf < 0 || le(inf, c)) inf = c;
      }
      // `inf` is a maximal common lower bound candidate; verify dominance.
      bool ok = inf >= 0;
      for (int c = 0; ok && c < n; ++c) {
        if (le(c, x) && le(c, y) && !le(c, inf)) ok = false;
      }
      if (!ok) {
        throw Error(Err::NotALattice, "pair has no infimum", {x, y});
      }
      int sup = -1;
      for (int c = 0; c < n; ++c) {
        if (!le(x, c) || !le(y, c)) continue;
        if (sup < 0 || le(c, sup)) sup = c;
      }
      bool ok2 = sup >= 0;
      for (int c = 0; ok2 && c < n; ++c) {
        if (le(x, c) && le(y, c) && !le(sup, c)) ok2 = false;
      }
      if (!ok2) {
        throw Error(Err::NotALattice, "pair has no supremum", {x, y});
      }
      out.meet[x * n + y] = inf;
      out.join[x * n + y] = sup;
    }
  }

  for (int c = 0; c < n; ++c) {
    bool least = true, greatest = true;
    for (int x = 0; x < n; ++x) {
      least = least && le(c, x);
      greatest = greatest && le(x, c);
    }
    if (least) out.bot = c;
    if (greatest) out.top = c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// check_monoid
// ---------------------------------------------------------------------------

void check_monoid(int n, const std::vector<int>& mul, int unit) {
  require_square(n, mul.size(), "multiplication");
  require_entries_in_range(n, mul, "multiplication");
  if (unit < 0 || unit >= n) {
    throw Error(Err::NotIdentity, "unit index out of range", {unit});
  }
  auto ml = [&](int x, int y) { return mul[x * n + y]; };
  for (int x = 0; x < n; ++x) {
    if (ml(unit, x) != x || ml(x, unit) != x) {
      throw Error(Err::NotIdentity, "designated unit does not fix element",
                  {x});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (ml(ml(x, y), z) != ml(x, ml(y, z))) {
          throw Error(Err::NotAssociative, "multiplication not associative",
                      {x, y, z});
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// derive_residuals
// ---------------------------------------------------------------------------

Residuals derive_residuals(int n, const std::vector<std::uint8_t>& leq,
                           const std::vector<int>& mul) {
  require_square(n, leq.size(), "order");
  require_square(n, mul.size(), "multiplication");
  require_entries_in_range(n, mul, "multiplication");
  auto le = [&](int x, int y) { return leq[x * n + y] != 0; };
  auto ml = [&](int x, int y) { return mul[x * n + y]; };

  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!le(x, y)) continue;
        if (!le(ml(z, x), ml(z, y))) {
          throw Error(Err::NotOrderPreserving,
                      "left multiplication not order-preserving", {z, x, y});
        }
        if (!le(ml(x, z), ml(y, z))) {
          throw Error(Err::NotOrderPreserving,
                      "right multiplication not order-preserving", {z, x, y});
        }
      }
    }
  }

  Residuals out;
  out.ldiv.assign(static_cast<std::size_t>(n) * n, 0);
  out.rdiv.assign(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> sols;
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      sols.clear();
      for (int y = 0; y < n; ++y) {
        if (le(ml(x, y), z)) sols.push_back(y);
      }
      int best = -1;
      for (int y : sols) {
        bool dominates = true;
        for (int y2 : sols) {
          if (!le(y2, y)) { dominates = false; break; }
        }
        if (dominates) { best = y; break; }
      }
      if (best < 0) {
        throw Error(Err::NoMaximum,
                    "left division undefined: solution set has no maximum",
                    {x, z});
      }
      out.ldiv[x * n + z] = best;
    }
  }
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      sols.clear();
      for (int y = 0; y < n; ++y) {
        if (le(ml(y, x), z)) sols.push_back(y);
      }
      int best = -1;
      for (int y : sols) {
        bool dominates = true;
        for (int y2 : sols) {
          if (!le(y2, y)) { dominates = false; break; }
        }
        if (dominates) { best = y; break; }
      }
      if (best < 0) {
        throw Error(Err::NoMaximum,
                    "right division undefined: solution set has no maximum",
                    {x, z});
      }
      out.rdiv[z * n + x] = best;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// check_residuated_lattice
// ---------------------------------------------------------------------------

bool LawReport::all_pass() const {
  for (const auto& l : laws) {
    if (!l.pass) return false;
  }
  return true;
}

const LawCheck* LawReport::first_failure() const {
  for (const auto& l : laws) {
    if (!l.pass) return &l;
  }
  return nullptr;
}

LawReport check_residuated_lattice(const FinRL& R) {
  LawReport rep;
  auto add = [&rep](const std::string& law, bool pass,
                    std::vector<int> witness = {}, std::string note = {}) {
    rep.laws.push_back({law, pass, std::move(witness), std::move(note)});
  };

  const int n = R.n;
  const std::size_t sq = static_cast<std::size_t>(n) * n;
  bool shape_ok = n > 0 && R.leq.size() == sq && R.meet.size() == sq &&
                  R.join.size() == sq && R.mul.size() == sq &&
                  R.ldiv.size() == sq && R.rdiv.size() == sq &&
                  R.unit >= 0 && R.unit < n &&
                  (R.names.empty() || R.names.size() == static_cast<std::size_t>(n)) &&
                  (!R.bot || (*R.bot >= 0 && *R.bot < n)) &&
                  (!R.top || (*R.top >= 0 && *R.top < n));
  if (shape_ok) {
    auto in_range = [&](const std::vector<int>& t) {
      for (int v : t) {
        if (v < 0 || v >= n) return false;
      }
      return true;
    };
    shape_ok = in_range(R.meet) && in_range(R.join) && in_range(R.mul) &&
               in_range(R.ldiv) && in_range(R.rdiv);
  }
  add("shape", shape_ok, {},
      shape_ok ? "" : "table sizes or index ranges are inconsistent");
  if (!shape_ok) return rep;

  // Order laws.
  {
    std::vector<int> w;
    for (int x = 0; x < n && w.empty(); ++x) {
      if (!R.le(x, x)) w = {x};
    }
    add("reflexive", w.empty(), w);
  }
  {
    std::vector<int> w;
    for (int x = 0; x < n && w.empty(); ++x) {
      for (int y = 0; y < n && w.empty(); ++y) {
        if (x != y && R.le(x, y) && R.le(y, x)) w = {x, y};
      }
    }
    add("antisymmetric", w.empty(), w);
  }
  {
    std::vector<int> w;
    for (int x = 0; x < n && w.empty(); ++x) {
      for (int y = 0; y < n && w.empty(); ++y) {
        if (!R.le(x, y)) continue;
        for (int z = 0; z < n && w.empty(); ++z) {
          if (R.le(y, z) && !R.le(x, z)) w = {x, y, z};
        }
      }
    }
    add("transitive", w.empty(), w);
  }
  {
    std::vector<int> w;
    for (int x = 0; x < n && w.empty(); ++x) {
      for (int y = 0; y < n && w.empty(); ++y) {
        int m = R.mt(x, y);
        if (!R.le(m, x) || !R.le(m, y)) { w = {x, y}; break; }
        for (int c = 0; c < n; ++c) {
          if (R.le(c, x) && R.le(c, y) && !R.le(c, m)) { w = {x, y, c}; break; }
        }
      }
    }
    add("meet_is_infimum", w.empty(), w);
  }
  {
    std::vector<int> w;
    for (int x = 0; x < n && w.empty(); ++x) {
      for (int y = 0; y < n && w.empty(); ++y) {
        int j = R.jn(x, y);
        if (!R.le(x, j) || !R.le(y, j)) { w = {x, y}; break; }
        for (int c = 0; c < n; ++c) {
          if (R.le(x, c) && R.le(y, c) && !R.le(j, c)) { w = {x, y, c}; break; }
        }
      }
    }
    add("join_is_supremum", w.empty(), w);
  }
  {
    // The declared bounds must agree with the actual least/greatest elements.
    int least = -1, greatest = -1;
    for (int c = 0; c < n; ++c) {
      bool l = true, g = true;
      for (int x = 0; x < n; ++x) {
        l = l && R.le(c, x);
        g = g && R.le(x, c);
      }
      if (l) least = c;
      if (g) greatest = c;
    }
    bool ok = true;
    std::string note;
    if (R.bot.has_value() != (least >= 0) || (R.bot && *R.bot != least)) {
      ok = false;
      note = "declared least element disagrees with the order";
    }
    if (R.top.has_value() != (greatest >= 0) || (R.top && *R.top != greatest)) {
      ok = false;
      note = note.empty() ? "declared greatest element disagrees with the order"
                          : note + "; greatest disagrees too";
    }
    std::vector<int> w;
    if (!ok) {
      w = {R.bot.value_or(-1), least, R.top.value_or(-1), greatest};
    }
    add("bounds", ok, w, note);
  }

  // Monoid laws.
  {
    std::vector<int> w;
    for (int x = 0; x < n && w.empty(); ++x) {
      if (R.prod(R.unit, x) != x || R.prod(x, R.unit) != x) w = {x};
    }
    add("identity", w.empty(), w);
  }
  {
    std::vector<int> w;
    for (int x = 0; x < n && w.empty(); ++x) {
      for (int y = 0; y < n && w.empty(); ++y) {
        for (int z = 0; z < n && w.empty(); ++z) {
          if (R.prod(R.prod(x, y), z) != R.prod(x, R.prod(y, z))) w = {x, y, z};
        }
      }
    }
    add("associative", w.empty(), w);
  }
  {
    std::vector<int> w;
    for (int z = 0; z < n && w.empty(); ++z) {
      for (int x = 0; x < n && w.empty(); ++x) {
        for (int y = 0; y < n && w.empty(); ++y) {
          if (!R.le(x, y)) continue;
          if (!R.le(R.prod(z, x), R.prod(z, y)) ||
              !R.le(R.prod(x, z), R.prod(y, z))) {
            w = {z, x, y};
          }
        }
      }
    }
    add("order_preserving", w.empty(), w);
  }

  // Residuation: mul(x,y) <= z iff y <= ldiv(x,z) iff x <= rdiv(z,y).
  {
    std::vector<int> w;
    for (int x = 0; x < n && w.empty(); ++x) {
      for (int y = 0; y < n && w.empty(); ++y) {
        for (int z = 0; z < n && w.empty(); ++z) {
          if (R.le(R.prod(x, y), z) != R.le(y, R.ld(x, z))) w = {x, y, z};
        }
      }
    }
    add("residuation_ldiv", w.empty(), w);
  }
  {
    std::vector<int> w;
    for (int x = 0; x < n && w.empty(); ++x) {
      for (int y = 0; y < n && w.empty(); ++y) {
        for (int z = 0; z < n && w.empty(); ++z) {
          if (R.le(R.prod(x, y), z) != R.le(x, R.rd(z, y))) w = {x, y, z};
        }
      }
    }
    add("residuation_rdiv", w.empty(), w);
  }

  // Consequences involving the bounds (redundant given the laws above, but
  // reported separately because constructions rely on them directly).
  if (R.bot) {
    std::vector<int> w;
    int b = *R.bot;
    for (int x = 0; x < n && w.empty(); ++x) {
      if (R.prod(b, x) != b || R.prod(x, b) != b) w = {x};
    }
    add("bottom_absorbing", w.empty(), w);
  }
  if (R.bot && R.top) {
    std::vector<int> w;
    int b = *R.bot, t = *R.top;
    for (int x = 0; x < n && w.empty(); ++x) {
      if (R.ld(b, x) != t || R.ld(x, t) != t || R.rd(x, b) != t ||
          R.rd(t, x) != t) {
        w = {x};
      }
    }
    add("bound_divisions", w.empty(), w);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

namespace {
Term make_node(Term::Kind k, Term a, Term b) {
  Term t;
  t.kind = k;
  t.lhs = std::make_shared<const Term>(std::move(a));
  t.rhs = std::make_shared<const Term>(std::move(b));
  return t;
}
}  // namespace

Term t_var(int id) {
  Term t;
  t.kind = Term::Kind::Var;
  t.var = id;
  return t;
}
Term t_one() { Term t; t.kind = Term::Kind::One; return t; }
Term t_bot() { Term t; t.kind = Term::Kind::Bot; return t; }
Term t_top() { Term t; t.kind = Term::Kind::Top; return t; }
Term t_meet(Term a, Term b) { return make_node(Term::Kind::Meet, std::move(a), std::move(b)); }
Term t_join(Term a, Term b) { return make_node(Term::Kind::Join, std::move(a), std::move(b)); }
Term t_mul(Term a, Term b) { return make_node(Term::Kind::Mul, std::move(a), std::move(b)); }
Term t_ldiv(Term a, Term b) { return make_node(Term::Kind::Ldiv, std::move(a), std::move(b)); }
Term t_rdiv(Term a, Term b) { return make_node(Term::Kind::Rdiv, std::move(a), std::move(b)); }

int eval_term(const FinRL& R, const Term& t, const std::vector<int>& assign) {
  switch (t.kind) {
    case Term::Kind::Var: {
      if (t.var < 0 || t.var >= static_cast<int>(assign.size()) ||
          assign[t.var] < 0 || assign[t.var] >= R.n) {
        throw Error(Err::UnboundVariable, "term variable has no assignment",
                    {t.var});
      }
      return assign[t.var];
    }
    case Term::Kind::One:
      return R.unit;
    case Term::Kind::Bot:
      if (!R.bot) {
        throw Error(Err::UnboundedConstant,
                    "term uses the least-element constant but the algebra "
                    "declares none");
      }
      return *R.bot;
    case Term::Kind::Top:
      if (!R.top) {
        throw Error(Err::UnboundedConstant,
                    "term uses the greatest-element constant but the algebra "
                    "declares none");
      }
      return *R.top;
    case Term::Kind::Meet:
      return R.mt(eval_term(R, *t.lhs, assign), eval_term(R, *t.rhs, assign));
    case Term::Kind::Join:
      return R.jn(eval_term(R, *t.lhs, assign), eval_term(R, *t.rhs, assign));
    case Term::Kind::Mul:
      return R.prod(eval_term(R, *t.lhs, assign), eval_term(R, *t.rhs, assign));
    case Term::Kind::Ldiv:
      return R.ld(eval_term(R, *t.lhs, assign), eval_term(R, *t.rhs, assign));
    case Term::Kind::Rdiv:
      return R.rd(eval_term(R, *t.lhs, assign), eval_term(R, *t.rhs, assign));
  }
  throw Error(Err::SemanticError, "corrupt term node");
}

// ---------------------------------------------------------------------------
// find_isomorphism
// ---------------------------------------------------------------------------

namespace {

/// Invariant fingerprint of an element: stable under isomorphism.
struct ElemSig {
  int down = 0;       ///< |{y : y <= x}|
  int up = 0;         ///< |{y : x <= y}|
  bool idem = false;  ///< x*x == x
  int cyc_index = 0;  ///< least i >= 0 with x^{i+1} in {x^1..x^i} repeated
  int cyc_period = 0;
  bool is_unit = false;
  bool is_bot = false;
  bool is_top = false;

  auto key() const {
    return std::tuple(down, up, idem, cyc_index, cyc_period, is_unit, is_bot,
                      is_top);
  }
};

std::vector<ElemSig> element_signatures(const FinRL& R) {
  std::vector<ElemSig> sigs(R.n);
  for (int x = 0; x < R.n; ++x) {
    ElemSig s;
    for (int y = 0; y < R.n; ++y) {
      if (R.le(y, x)) ++s.down;
      if (R.le(x, y)) ++s.up;
    }
    s.idem = R.prod(x, x) == x;
    // Cyclic structure of the subsemigroup generated by x: index/period of
    // the eventually periodic power sequence.
    std::vector<int> seen;
    int cur = x;
    while (std::find(seen.begin(), seen.end(), cur) == seen.end()) {
      seen.push_back(cur);
      cur = R.prod(cur, x);
    }
    auto it = std::find(seen.begin(), seen.end(), cur);
    s.cyc_index = static_cast<int>(it - seen.begin());
    s.cyc_period = static_cast<int>(seen.end() - it);
    s.is_unit = x == R.unit;
    s.is_bot = R.bot && *R.bot == x;
    s.is_top = R.top && *R.top == x;
    sigs[x] = s;
  }
  return sigs;
}

struct IsoSearch {
  const FinRL& A;
  const FinRL& B;
  std::vector<std::vector<int>> candidates;  // per A-element
  std::vector<int> order;                    // A-elements, rarest first
  std::vector<int> map;                      // A -> B or -1
  std::vector<std::uint8_t> used;            // B-side

  bool consistent(int a, int b) const {
    for (int a2 = 0; a2 < A.n; ++a2) {
      int b2 = map[a2];
      if (b2 < 0) continue;
      if (A.le(a, a2) != B.le(b, b2)) return false;
      if (A.le(a2, a) != B.le(b2, b)) return false;
      // Check products whenever all three participants are mapped.
      int p = A.prod(a, a2);
      if (map[p] >= 0 && B.prod(b, b2) != map[p]) return false;
      int q = A.prod(a2, a);
      if (map[q] >= 0 && B.prod(b2, b) != map[q]) return false;
    }
    int s = A.prod(a, a);
    if (map[s] >= 0 && B.prod(b, b) != map[s]) return false;
    return true;
  }

  bool full_check() const {
    for (int x = 0; x < A.n; ++x) {
      for (int y = 0; y < A.n; ++y) {
        if (map[A.prod(x, y)] != B.prod(map[x], map[y])) return false;
        if (A.le(x, y) != B.le(map[x], map[y])) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == order.size()) return full_check();
    int a = order[pos];
    for (int b : candidates[a]) {
      if (used[b]) continue;
      if (!consistent(a, b)) continue;
      map[a] = b;
      used[b] = 1;
      if (extend(pos + 1)) return true;
      map[a] = -1;
      used[b] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FinRL& A,
                                                 const FinRL& B) {
  if (A.n != B.n) return std::nullopt;
  if (A.bot.has_value() != B.bot.has_value()) return std::nullopt;
  if (A.top.has_value() != B.top.has_value()) return std::nullopt;
  auto sa = element_signatures(A);
  auto sb = element_signatures(B);

  // Multisets of signatures must agree.
  {
    std::multiset<decltype(sa[0].key())> ka, kb;
    for (const auto& s : sa) ka.insert(s.key());
    for (const auto& s : sb) kb.insert(s.key());
    if (ka != kb) return std::nullopt;
  }

  IsoSearch search{A, B, {}, {}, {}, {}};
  search.candidates.resize(A.n);
  for (int a = 0; a < A.n; ++a) {
    for (int b = 0; b < B.n; ++b) {
      if (sa[a].key() == sb[b].key()) search.candidates[a].push_back(b);
    }
    if (search.candidates[a].empty()) return std::nullopt;
  }
  search.order.resize(A.n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(), [&](int x, int y) {
    return search.candidates[x].size() < search.candidates[y].size();
  });
  search.map.assign(A.n, -1);
  search.used.assign(B.n, 0);
  if (search.extend(0)) return search.map;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// PartialAlgebra
// ---------------------------------------------------------------------------

bool PartialAlgebra::contains(int parent_elem) const {
  return std::binary_search(subset.begin(), subset.end(), parent_elem);
}

int PartialAlgebra::parent_value(Op op, int x, int y) const {
  switch (op) {
    case Op::Meet: return parent.mt(x, y);
    case Op::Join: return parent.jn(x, y);
    case Op::Mul: return parent.prod(x, y);
    case Op::Ldiv: return parent.ld(x, y);
    case Op::Rdiv: return parent.rd(x, y);
  }
  throw Error(Err::SemanticError, "corrupt partial-algebra operation tag");
}

bool PartialAlgebra::defined(Op op, int x, int y) const {
  return contains(x) && contains(y) && contains(parent_value(op, x, y));
}

PartialAlgebra induced_partial(const FinRL& A, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int v : subset) {
    if (v < 0 || v >= A.n) {
      throw Error(Err::SemanticError, "subset element out of range", {v});
    }
  }
  return PartialAlgebra{A, std::move(subset)};
}

// ---------------------------------------------------------------------------
// Assembly helpers
// ---------------------------------------------------------------------------

FinRL assemble_algebra(int n, std::vector<std::uint8_t> leq,
                       std::vector<int> mul, int unit,
                       std::vector<std::string> names) {
  LatticeTables lat = validate_order(n, leq);
  check_monoid(n, mul, unit);
  Residuals res = derive_residuals(n, leq, mul);
  FinRL R;
  R.n = n;
  R.leq = std::move(leq);
  R.meet = std::move(lat.meet);
  R.join = std::move(lat.join);
  R.mul = std::move(mul);
  R.ldiv = std::move(res.ldiv);
  R.rdiv = std::move(res.rdiv);
  R.unit = unit;
  R.bot = lat.bot;
  R.top = lat.top;
  R.names = std::move(names);
  return R;
}

FinRL assemble_algebra_with_divisions(int n, std::vector<std::uint8_t> leq,
                                      std::vector<int> mul, int unit,
                                      std::vector<int> ldiv,
                                      std::vector<int> rdiv,
                                      Err mismatch_code,
                                      std::vector<std::string> names) {
  FinRL R = assemble_algebra(n, std::move(leq), std::move(mul), unit,
                             std::move(names));
  require_square(n, ldiv.size(), "left-division");
  require_square(n, rdiv.size(), "right-division");
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      if (ldiv[x * n + z] != R.ldiv[x * n + z]) {
        throw Error(mismatch_code,
                    "closed-form left division disagrees with the derived "
                    "table",
                    {x, z, ldiv[x * n + z], R.ldiv[x * n + z]});
      }
      if (rdiv[x * n + z] != R.rdiv[x * n + z]) {
        throw Error(mismatch_code,
                    "closed-form right division disagrees with the derived "
                    "table",
                    {x, z, rdiv[x * n + z], R.rdiv[x * n + z]});
      }
    }
  }
  R.ldiv = std::move(ldiv);
  R.rdiv = std::move(rdiv);
  return R;
}

FinRL apply_permutation(const FinRL& R, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(R.n)) {
    throw Error(Err::SemanticError, "permutation has wrong length");
  }
  FinRL out;
  out.n = R.n;
  const int n = R.n;
  out.leq.assign(static_cast<std::size_t>(n) * n, 0);
  out.meet.assign(static_cast<std::size_t>(n) * n, 0);
  out.join.assign(static_cast<std::size_t>(n) * n, 0);
  out.mul.assign(static_cast<std::size_t>(n) * n, 0);
  out.ldiv.assign(static_cast<std::size_t>(n) * n, 0);
  out.rdiv.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      out.leq[perm[x] * n + perm[y]] = R.leq[x * n + y];
      out.meet[perm[x] * n + perm[y]] = perm[R.meet[x * n + y]];
      out.join[perm[x] * n + perm[y]] = perm[R.join[x * n + y]];
      out.mul[perm[x] * n + perm[y]] = perm[R.mul[x * n + y]];
      out.ldiv[perm[x] * n + perm[y]] = perm[R.ldiv[x * n + y]];
      out.rdiv[perm[x] * n + perm[y]] = perm[R.rdiv[x * n + y]];
    }
  }
  out.unit = perm[R.unit];
  if (R.bot) out.bot = perm[*R.bot];
  if (R.top) out.top = perm[*R.top];
  if (!R.names.empty()) {
    out.names.resize(n);
    for (int x = 0; x < n; ++x) out.names[perm[x]] = R.names[x];
  }
  return out;
}

FinRL direct_product(const FinRL& A, const FinRL& B) {
  FinRL R;
  const int n = A.n * B.n;
  R.n = n;
  auto id = [&](int a, int b) { return a * B.n + b; };
  R.leq.assign(static_cast<std::size_t>(n) * n, 0);
  R.meet.assign(static_cast<std::size_t>(n) * n, 0);
  R.join.assign(static_cast<std::size_t>(n) * n, 0);
  R.mul.assign(static_cast<std::size_t>(n) * n, 0);
  R.ldiv.assign(static_cast<std::size_t>(n) * n, 0);
  R.rdiv.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a1 = 0; a1 < A.n; ++a1) {
    for (int b1 = 0; b1 < B.n; ++b1) {
      for (int a2 = 0; a2 < A.n; ++a2) {
        for (int b2 = 0; b2 < B.n; ++b2) {
          int x = id(a1, b1), y = id(a2, b2);
          R.leq[x * n + y] = A.le(a1, a2) && B.le(b1, b2);
          R.meet[x * n + y] = id(A.mt(a1, a2), B.mt(b1, b2));
          R.join[x * n + y] = id(A.jn(a1, a2), B.jn(b1, b2));
          R.mul[x * n + y] = id(A.prod(a1, a2), B.prod(b1, b2));
          R.ldiv[x * n + y] = id(A.ld(a1, a2), B.ld(b1, b2));
          R.rdiv[x * n + y] = id(A.rd(a1, a2), B.rd(b1, b2));
        }
      }
    }
  }
  R.unit = id(A.unit, B.unit);
  if (A.bot && B.bot) R.bot = id(*A.bot, *B.bot);
  if (A.top && B.top) R.top = id(*A.top, *B.top);
  return R;
}

}  // namespace urlat
