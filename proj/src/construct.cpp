// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.

#include "urlat/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace urlat {

// ---------------------------------------------------------------------------
// make_mx_lattice
// ---------------------------------------------------------------------------

LatticeTables make_mx_lattice(int nX) {
  if (nX < 0) {
    throw Error(Err::SemanticError, "antichain size must be nonnegative");
  }
  const int n = nX + 2;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    leq[x * n + x] = 1;
    leq[0 * n + x] = 1;        // bottom below everything
    leq[x * n + (n - 1)] = 1;  // everything below top
  }
  return validate_order(n, leq);
}

// ---------------------------------------------------------------------------
// check_zero_cancellative
// ---------------------------------------------------------------------------

bool check_zero_cancellative(const Monoid& A, int zero) {
  if (zero < 0 || zero >= A.n) {
    throw Error(Err::ZeroNotAbsorbing, "zero index out of range", {zero});
  }
  for (int x = 0; x < A.n; ++x) {
    if (A.prod(x, zero) != zero || A.prod(zero, x) != zero) {
      throw Error(Err::ZeroNotAbsorbing,
                  "designated zero is not absorbing", {x});
    }
  }
  for (int x = 0; x < A.n; ++x) {
    for (int y = 0; y < A.n; ++y) {
      for (int z = 0; z < A.n; ++z) {
        if (A.prod(x, y) == A.prod(x, z) && A.prod(x, y) != zero && y != z) {
          return false;
        }
        if (A.prod(y, x) == A.prod(z, x) && A.prod(y, x) != zero && y != z) {
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// make_rab
// ---------------------------------------------------------------------------

namespace {

enum Cat : std::uint8_t { CatBot, CatA, CatB, CatTop };

}  // namespace

FinRL make_rab(const Monoid& A, int zero, ZKind kind) {
  check_monoid(A.n, A.mul, A.unit);
  if (!check_zero_cancellative(A, zero)) {
    throw Error(Err::NotTopCancellative,
                "monoid is not cancellative off its zero");
  }
  const int u = A.n - 1;  // middles contributed by A
  const int zc = kind == ZKind::BotOnly ? 0
               : kind == ZKind::TwoIdempotents ? 2
                                               : 1;
  const int n = 1 + u + zc + 1;
  const int bot = 0;
  const int top = n - 1;
  const int bstart = 1 + u;  // first glued element, when any

  // A's carrier embeds as: non-zero elements (input order) -> 1..u,
  // zero -> top.
  std::vector<int> amap(A.n, -1);
  {
    int next = 1;
    for (int i = 0; i < A.n; ++i) amap[i] = (i == zero) ? top : next++;
  }
  std::vector<Cat> cat(n, CatA);
  cat[bot] = CatBot;
  cat[top] = CatTop;
  for (int i = 0; i < zc; ++i) cat[bstart + i] = CatB;

  LatticeTables lat = make_mx_lattice(n - 2);

  std::vector<int> mul(static_cast<std::size_t>(n) * n, bot);
  {
    // Inverse of amap restricted to A.
    std::vector<int> back(n, -1);
    for (int i = 0; i < A.n; ++i) back[amap[i]] = i;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x == bot || y == bot) { mul[x * n + y] = bot; continue; }
        bool xa = cat[x] == CatA || cat[x] == CatTop;
        bool ya = cat[y] == CatA || cat[y] == CatTop;
        if (xa && ya) {
          mul[x * n + y] = amap[A.prod(back[x], back[y])];
        } else if (xa && !ya) {
          mul[x * n + y] = y;  // A acts as identity on the glued part
        } else if (!xa && ya) {
          mul[x * n + y] = x;
        } else {
          // both glued
          if (kind == ZKind::NilElement) {
            mul[x * n + y] = bot;
          } else if (kind == ZKind::IdemElement) {
            mul[x * n + y] = x;  // x == y here
          } else {               // TwoIdempotents
            mul[x * n + y] = (x == y) ? x : bot;
          }
        }
      }
    }
  }

  const int unit = amap[A.unit];

  // Closed-form divisions.  ldv(x, z) = x \ z; by commutativity of every
  // region except the A block, z / x uses the same values with the A block
  // solved on the other side.
  auto a_solve_left = [&](int x, int z) {
    // unique y in A's middle with x*y = z (both middles); bottom otherwise
    for (int i = 0; i < A.n; ++i) {
      if (i == zero) continue;
      int xa = -1;
      // find x's preimage
      for (int j = 0; j < A.n; ++j) {
        if (amap[j] == x) { xa = j; break; }
      }
      if (A.prod(xa, i) == zero) continue;
      if (amap[A.prod(xa, i)] == z) return amap[i];
    }
    return bot;
  };
  auto a_solve_right = [&](int x, int z) {
    for (int i = 0; i < A.n; ++i) {
      if (i == zero) continue;
      int xa = -1;
      for (int j = 0; j < A.n; ++j) {
        if (amap[j] == x) { xa = j; break; }
      }
      if (A.prod(i, xa) == zero) continue;
      if (amap[A.prod(i, xa)] == z) return amap[i];
    }
    return bot;
  };
  // Value of b \ bottom for a glued element b (equals b \ a for middles a
  // of the A part: in both cases only glued solutions survive).
  auto glued_div_bot = [&](int b) {
    switch (kind) {
      case ZKind::NilElement: return b;
      case ZKind::TwoIdempotents:
        return (b == bstart) ? bstart + 1 : bstart;
      case ZKind::IdemElement: return bot;
      case ZKind::BotOnly: break;
    }
    return bot;
  };
  auto divide = [&](int x, int z, bool left) {
    if (x == bot) return top;
    if (z == top) return top;
    if (cat[x] == CatTop) {
      return cat[z] == CatB ? z : bot;
    }
    if (cat[x] == CatA) {
      if (z == bot) return bot;
      if (cat[z] == CatB) return z;       // behaves like 1 \ b = b
      return left ? a_solve_left(x, z) : a_solve_right(x, z);
    }
    // x glued
    if (cat[z] == CatB) return (x == z) ? top : z;
    return glued_div_bot(x);  // z is bottom or an A middle
  };

  std::vector<int> ldiv(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> rdiv(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      ldiv[x * n + z] = divide(x, z, /*left=*/true);
      rdiv[z * n + x] = divide(x, z, /*left=*/false);
    }
  }

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    leq[x * n + x] = 1;
    leq[bot * n + x] = 1;
    leq[x * n + top] = 1;
  }
  return assemble_algebra_with_divisions(n, std::move(leq), std::move(mul),
                                         unit, std::move(ldiv),
                                         std::move(rdiv),
                                         Err::ClassificationViolation);
}

// ---------------------------------------------------------------------------
// make_mg
// ---------------------------------------------------------------------------

FinRL make_mg(const std::vector<int>& invariant_factors) {
  Monoid g = make_cyclic_group(1);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] < 2) {
      throw Error(Err::InvalidFactor, "cyclic factor must be at least 2",
                  {static_cast<int>(i), invariant_factors[i]});
    }
    g = monoid_product(g, make_cyclic_group(invariant_factors[i]));
  }
  Monoid a = adjoin_zero(g);
  return make_rab(a, a.n - 1, ZKind::BotOnly);
}

// ---------------------------------------------------------------------------
// Monogenic monoid and the two oriented algebras on it
// ---------------------------------------------------------------------------

int cyclic_index(long long n, int r, int s) {
  if (r < 0 || s < 1) {
    throw Error(Err::SemanticError, "index must be >= 0 and period >= 1");
  }
  if (n < r + s) return static_cast<int>(n);
  return r + static_cast<int>((n - r) % s);
}

Monoid make_cyclic_monoid(int r, int s) {
  const int m = r + s;
  Monoid M;
  M.n = m;
  M.unit = 0;
  M.mul.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      M.mul[i * m + j] = cyclic_index(static_cast<long long>(i) + j, r, s);
    }
  }
  return M;
}

FinRL make_cyclic_url(int r, int s, Orientation orient) {
  if (r < 0 || s < 1 || r + s < 2) {
    throw Error(Err::SemanticError,
                "require index >= 0, period >= 1, index + period >= 2");
  }
  const int m = r + s;
  const int n = m + 2;
  const int bot = 0;
  const int top = n - 1;
  auto el = [&](int i) { return i + 1; };  // power i -> carrier index

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    leq[x * n + x] = 1;
    leq[bot * n + x] = 1;
    leq[x * n + top] = 1;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      bool rel = orient == Orientation::Up
                     ? (j >= i && (j - i) % s == 0)
                     : (i >= j && (i - j) % s == 0);
      if (rel) leq[el(i) * n + el(j)] = 1;
    }
  }

  std::vector<int> mul(static_cast<std::size_t>(n) * n, bot);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == bot || y == bot) { mul[x * n + y] = bot; continue; }
      if (x == top || y == top) { mul[x * n + y] = top; continue; }
      int i = x - 1, j = y - 1;
      mul[x * n + y] = el(cyclic_index(static_cast<long long>(i) + j, r, s));
    }
  }

  auto mod = [](int a, int b) { return ((a % b) + b) % b; };
  auto mid_div_up = [&](int i, int j) {
    if ((j < i && i <= r) || (j < r && r <= i)) return bot;
    if (i <= j && j < r) return el(j - i);
    if (i < r && r <= j) return el(j - i + ((r + s - 1 + i - j) / s) * s);
    return el(r + mod(j - i - r, s));  // both in the periodic part
  };
  auto mid_div_down = [&](int i, int j) {
    if (i <= j) return el(j - i);
    return el(j - i + ((i - j + s - 1) / s) * s);
  };
  std::vector<int> ldiv(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> rdiv(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      int v;
      if (x == bot || z == top) {
        v = top;
      } else if (x == top || z == bot) {
        v = bot;
      } else {
        int i = x - 1, j = z - 1;
        v = orient == Orientation::Up ? mid_div_up(i, j) : mid_div_down(i, j);
      }
      ldiv[x * n + z] = v;
      rdiv[z * n + x] = v;  // multiplication is commutative
    }
  }

  return assemble_algebra_with_divisions(n, std::move(leq), std::move(mul),
                                         el(0), std::move(ldiv),
                                         std::move(rdiv),
                                         Err::ClassificationViolation);
}

// ---------------------------------------------------------------------------
// check_res_end
// ---------------------------------------------------------------------------

ResEndCheck check_res_end(const FinRL& A, const std::vector<int>& g) {
  ResEndCheck out;
  if (g.size() != static_cast<std::size_t>(A.n)) {
    out.reason = "shape";
    return out;
  }
  for (int x = 0; x < A.n; ++x) {
    if (g[x] < 0 || g[x] >= A.n) {
      out.reason = "shape";
      out.witness = {x};
      return out;
    }
  }
  if (g[A.unit] != A.unit) {
    out.reason = "unit_not_preserved";
    out.witness = {A.unit, g[A.unit]};
    return out;
  }
  for (int x = 0; x < A.n; ++x) {
    for (int y = 0; y < A.n; ++y) {
      if (A.le(x, y) && !A.le(g[x], g[y])) {
        out.reason = "not_order_preserving";
        out.witness = {x, y};
        return out;
      }
      if (g[A.prod(x, y)] != A.prod(g[x], g[y])) {
        out.reason = "not_multiplicative";
        out.witness = {x, y};
        return out;
      }
    }
  }
  out.residual.assign(A.n, -1);
  for (int y = 0; y < A.n; ++y) {
    int best = -1;
    for (int x = 0; x < A.n; ++x) {
      if (!A.le(g[x], y)) continue;
      if (best < 0 || A.le(best, x)) best = x;
    }
    // verify dominance (the solution set needs a true maximum)
    if (best >= 0) {
      for (int x = 0; x < A.n; ++x) {
        if (A.le(g[x], y) && !A.le(x, best)) { best = -1; break; }
      }
    }
    if (best < 0) {
      out.reason = "no_residual";
      out.witness = {y};
      out.residual.clear();
      return out;
    }
    out.residual[y] = best;
  }
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------------
// check_cocycle / make_cocycle_extension
// ---------------------------------------------------------------------------

namespace {

/// Two-sided inverse of `a` in A's monoid, or -1.
int invert_in(const FinRL& A, int a) {
  for (int b = 0; b < A.n; ++b) {
    if (A.prod(a, b) == A.unit && A.prod(b, a) == A.unit) return b;
  }
  return -1;
}

bool is_total_order(const FinRL& A) {
  for (int x = 0; x < A.n; ++x) {
    for (int y = 0; y < A.n; ++y) {
      if (!A.le(x, y) && !A.le(y, x)) return false;
    }
  }
  return true;
}

}  // namespace

LawReport check_cocycle(const CocycleData& data) {
  LawReport rep;
  auto add = [&rep](const std::string& law, bool pass,
                    std::vector<int> witness = {}, std::string note = {}) {
    rep.laws.push_back({law, pass, std::move(witness), std::move(note)});
  };
  const Monoid& K = data.K;
  const FinRL& A = data.A;
  const int nK = K.n, nA = A.n;

  bool k_monoid = true;
  {
    std::vector<int> w;
    std::string note;
    try {
      check_monoid(nK, K.mul, K.unit);
    } catch (const Error& e) {
      k_monoid = false;
      w = e.witness();
      note = e.detail();
    }
    add("k_monoid", k_monoid, w, note);
  }
  {
    std::vector<int> w;
    if (k_monoid) {
      for (int x = 0; x < nK && w.empty(); ++x) {
        for (int y = 0; y < nK && w.empty(); ++y) {
          for (int z = 0; z < nK && w.empty(); ++z) {
            if (y == z) continue;
            if (K.prod(x, y) == K.prod(x, z) || K.prod(y, x) == K.prod(z, x)) {
              w = {x, y, z};
            }
          }
        }
      }
      add("k_cancellative", w.empty(), w);
    } else {
      add("k_cancellative", false, {}, "not evaluated: k_monoid failed");
    }
  }
  bool a_ok;
  {
    LawReport a_rep = check_residuated_lattice(A);
    a_ok = a_rep.all_pass() && is_total_order(A);
    std::string note;
    if (!a_rep.all_pass()) {
      note = std::string("law failed: ") + a_rep.first_failure()->law;
    } else if (!a_ok) {
      note = "order is not total";
    }
    add("a_residuated_chain", a_ok, {}, note);
  }
  bool phi_shape = data.phi.size() == static_cast<std::size_t>(nK);
  if (phi_shape) {
    for (const auto& t : data.phi) {
      if (t.size() != static_cast<std::size_t>(nA)) { phi_shape = false; break; }
      for (int v : t) {
        if (v < 0 || v >= nA) { phi_shape = false; break; }
      }
    }
  }
  add("phi_shape", phi_shape);
  bool f_shape = data.f.size() == static_cast<std::size_t>(nK) * nK;
  if (f_shape) {
    for (int v : data.f) {
      if (v < 0 || v >= nA) { f_shape = false; break; }
    }
  }
  add("f_shape", f_shape);
  if (!phi_shape || !f_shape) {
    add("phi_unit_identity", false, {}, "not evaluated: shape failed");
    add("phi_res_end", false, {}, "not evaluated: shape failed");
    add("f_invertible", false, {}, "not evaluated: shape failed");
    add("f_normalized", false, {}, "not evaluated: shape failed");
    add("phi_twisted_composition", false, {}, "not evaluated: shape failed");
    add("cocycle_equation", false, {}, "not evaluated: shape failed");
    return rep;
  }
  auto fat = [&](int k1, int k2) { return data.f[k1 * nK + k2]; };
  {
    std::vector<int> w;
    for (int a = 0; a < nA && w.empty(); ++a) {
      if (data.phi[K.unit][a] != a) w = {a, data.phi[K.unit][a]};
    }
    add("phi_unit_identity", w.empty(), w);
  }
  {
    std::vector<int> w;
    std::string note;
    for (int k = 0; k < nK && note.empty(); ++k) {
      ResEndCheck c = check_res_end(A, data.phi[k]);
      if (!c.ok) {
        note = "phi[" + std::to_string(k) + "]: " + c.reason;
        w = c.witness;
        w.insert(w.begin(), k);
      }
    }
    add("phi_res_end", note.empty(), w, note);
  }
  bool f_inv = true;
  {
    std::vector<int> w;
    for (int k1 = 0; k1 < nK && w.empty(); ++k1) {
      for (int k2 = 0; k2 < nK && w.empty(); ++k2) {
        if (invert_in(A, fat(k1, k2)) < 0) w = {k1, k2};
      }
    }
    f_inv = w.empty();
    add("f_invertible", f_inv, w);
  }
  {
    std::vector<int> w;
    for (int k = 0; k < nK && w.empty(); ++k) {
      if (fat(k, K.unit) != A.unit || fat(K.unit, k) != A.unit) w = {k};
    }
    add("f_normalized", w.empty(), w);
  }
  if (f_inv) {
    std::vector<int> w;
    for (int k1 = 0; k1 < nK && w.empty(); ++k1) {
      for (int k2 = 0; k2 < nK && w.empty(); ++k2) {
        int fv = fat(k1, k2);
        int fi = invert_in(A, fv);
        for (int a = 0; a < nA && w.empty(); ++a) {
          int lhs = data.phi[K.prod(k1, k2)][a];
          int rhs = A.prod(A.prod(fv, data.phi[k1][data.phi[k2][a]]), fi);
          if (lhs != rhs) w = {k1, k2, a};
        }
      }
    }
    add("phi_twisted_composition", w.empty(), w);
    std::vector<int> w2;
    for (int k1 = 0; k1 < nK && w2.empty(); ++k1) {
      for (int k2 = 0; k2 < nK && w2.empty(); ++k2) {
        for (int k3 = 0; k3 < nK && w2.empty(); ++k3) {
          int lhs = A.prod(fat(k1, K.prod(k2, k3)), data.phi[k1][fat(k2, k3)]);
          int rhs = A.prod(fat(K.prod(k1, k2), k3), fat(k1, k2));
          if (lhs != rhs) w2 = {k1, k2, k3};
        }
      }
    }
    add("cocycle_equation", w2.empty(), w2);
  } else {
    add("phi_twisted_composition", false, {},
        "not evaluated: f_invertible failed");
    add("cocycle_equation", false, {}, "not evaluated: f_invertible failed");
  }
  return rep;
}

FinRL make_cocycle_extension(const CocycleData& data) {
  LawReport rep = check_cocycle(data);
  for (const auto& law : rep.laws) {
    if (law.pass) continue;
    if (law.law == "k_cancellative") {
      throw Error(Err::NotCancellative,
                  "acting monoid is not cancellative", law.witness);
    }
    throw Error(Err::CocycleInvalid, "condition failed: " + law.law,
                law.witness);
  }
  const Monoid& K = data.K;
  const FinRL& A = data.A;
  const int nA = A.n, nK = K.n;
  const int n = nA * nK + 2;
  const int bot = 0, top = n - 1;
  auto id = [&](int a, int k) { return 1 + k * nA + a; };
  auto fat = [&](int k1, int k2) { return data.f[k1 * nK + k2]; };

  std::vector<int> finv(static_cast<std::size_t>(nK) * nK);
  for (int k1 = 0; k1 < nK; ++k1) {
    for (int k2 = 0; k2 < nK; ++k2) {
      finv[k1 * nK + k2] = invert_in(A, fat(k1, k2));
    }
  }
  std::vector<std::vector<int>> phi_star(nK);
  for (int k = 0; k < nK; ++k) {
    phi_star[k] = check_res_end(A, data.phi[k]).residual;
  }

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    leq[x * n + x] = 1;
    leq[bot * n + x] = 1;
    leq[x * n + top] = 1;
  }
  for (int k = 0; k < nK; ++k) {
    for (int a1 = 0; a1 < nA; ++a1) {
      for (int a2 = 0; a2 < nA; ++a2) {
        if (A.le(a1, a2)) leq[id(a1, k) * n + id(a2, k)] = 1;
      }
    }
  }

  std::vector<int> mul(static_cast<std::size_t>(n) * n, bot);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == bot || y == bot) { mul[x * n + y] = bot; continue; }
      if (x == top || y == top) { mul[x * n + y] = top; continue; }
      int a1 = (x - 1) % nA, k1 = (x - 1) / nA;
      int a2 = (y - 1) % nA, k2 = (y - 1) / nA;
      int a = A.prod(A.prod(a1, data.phi[k1][a2]), finv[k1 * nK + k2]);
      mul[x * n + y] = id(a, K.prod(k1, k2));
    }
  }

  std::vector<int> ldiv(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> rdiv(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      int lv, rv;
      if (x == bot || z == top) {
        lv = rv = top;
      } else if (x == top || z == bot) {
        lv = rv = bot;
      } else {
        int a1 = (x - 1) % nA, k1 = (x - 1) / nA;
        int a2 = (z - 1) % nA, k2 = (z - 1) / nA;
        lv = bot;
        rv = bot;
        for (int k = 0; k < nK; ++k) {
          if (K.prod(k1, k) == k2) {
            int val = phi_star[k1][A.ld(a1, A.prod(a2, fat(k1, k)))];
            lv = id(val, k);
            break;  // unique by cancellativity
          }
        }
        for (int k = 0; k < nK; ++k) {
          if (K.prod(k, k1) == k2) {
            int val = A.rd(A.prod(a2, fat(k, k1)), data.phi[k][a1]);
            rv = id(val, k);
            break;
          }
        }
      }
      ldiv[x * n + z] = lv;
      rdiv[z * n + x] = rv;
    }
  }

  return assemble_algebra_with_divisions(
      n, std::move(leq), std::move(mul), id(A.unit, K.unit), std::move(ldiv),
      std::move(rdiv), Err::ClassificationViolation);
}

// ---------------------------------------------------------------------------
// Small monoid helpers
// ---------------------------------------------------------------------------

Monoid make_cyclic_group(int n) {
  if (n < 1) {
    throw Error(Err::InvalidFactor, "group order must be positive", {n});
  }
  Monoid M;
  M.n = n;
  M.unit = 0;
  M.mul.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M.mul[i * n + j] = (i + j) % n;
  }
  return M;
}

Monoid monoid_product(const Monoid& A, const Monoid& B) {
  Monoid M;
  M.n = A.n * B.n;
  M.unit = A.unit * B.n + B.unit;
  M.mul.assign(static_cast<std::size_t>(M.n) * M.n, 0);
  for (int a1 = 0; a1 < A.n; ++a1) {
    for (int b1 = 0; b1 < B.n; ++b1) {
      for (int a2 = 0; a2 < A.n; ++a2) {
        for (int b2 = 0; b2 < B.n; ++b2) {
          int x = a1 * B.n + b1, y = a2 * B.n + b2;
          M.mul[x * M.n + y] = A.prod(a1, a2) * B.n + B.prod(b1, b2);
        }
      }
    }
  }
  return M;
}

Monoid adjoin_zero(const Monoid& A) {
  Monoid M;
  M.n = A.n + 1;
  M.unit = A.unit;
  const int zero = A.n;
  M.mul.assign(static_cast<std::size_t>(M.n) * M.n, zero);
  for (int x = 0; x < A.n; ++x) {
    for (int y = 0; y < A.n; ++y) M.mul[x * M.n + y] = A.prod(x, y);
  }
  return M;
}

namespace {

bool monoid_iso_extend(const Monoid& A, const Monoid& B, std::vector<int>& map,
                       std::vector<std::uint8_t>& used, int pos) {
  if (pos == A.n) {
    for (int x = 0; x < A.n; ++x) {
      for (int y = 0; y < A.n; ++y) {
        if (map[A.prod(x, y)] != B.prod(map[x], map[y])) return false;
      }
    }
    return true;
  }
  if (map[pos] >= 0) return monoid_iso_extend(A, B, map, used, pos + 1);
  for (int b = 0; b < B.n; ++b) {
    if (used[b]) continue;
    map[pos] = b;
    used[b] = 1;
    bool ok = true;
    for (int x = 0; x < A.n && ok; ++x) {
      if (map[x] < 0) continue;
      int p = A.prod(pos, x);
      if (map[p] >= 0 && B.prod(b, map[x]) != map[p]) ok = false;
      int q = A.prod(x, pos);
      if (ok && map[q] >= 0 && B.prod(map[x], b) != map[q]) ok = false;
    }
    if (ok && monoid_iso_extend(A, B, map, used, pos + 1)) return true;
    map[pos] = -1;
    used[b] = 0;
  }
  return false;
}

}  // namespace

bool monoids_isomorphic(const Monoid& A, const Monoid& B,
                        std::optional<int> zeroA, std::optional<int> zeroB) {
  if (A.n != B.n) return false;
  if (zeroA.has_value() != zeroB.has_value()) return false;
  std::vector<int> map(A.n, -1);
  std::vector<std::uint8_t> used(B.n, 0);
  map[A.unit] = B.unit;
  used[B.unit] = 1;
  if (zeroA) {
    if (*zeroA != A.unit) {
      if (used[*zeroB] && map[*zeroA] != *zeroB) return false;
      map[*zeroA] = *zeroB;
      used[*zeroB] = 1;
    } else if (*zeroB != B.unit) {
      return false;
    }
  }
  return monoid_iso_extend(A, B, map, used, 0);
}

}  // namespace urlat
