// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.

#include "urlat/analyze.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace urlat {

// ---------------------------------------------------------------------------
// compute_uz / decompose_mx
// ---------------------------------------------------------------------------

UZPartition compute_uz(const FinRL& R) {
  if (!R.bot || !R.top) {
    throw Error(Err::NotMxShaped, "algebra declares no bounds");
  }
  const int bot = *R.bot, top = *R.top;
  if (R.n >= 2 && bot == top) {
    throw Error(Err::NotMxShaped, "bounds coincide");
  }
  std::vector<int> middle;
  for (int x = 0; x < R.n; ++x) {
    if (x != bot && x != top) middle.push_back(x);
  }
  for (std::size_t i = 0; i < middle.size(); ++i) {
    for (std::size_t j = i + 1; j < middle.size(); ++j) {
      if (R.le(middle[i], middle[j]) || R.le(middle[j], middle[i])) {
        throw Error(Err::NotMxShaped, "middle elements are not an antichain",
                    {middle[i], middle[j]});
      }
    }
  }

  for (int x = 0; x < R.n; ++x) {
    if (R.prod(top, x) != R.prod(x, top)) {
      throw Error(Err::ClassificationViolation, "top is not central", {x});
    }
  }

  UZPartition out;
  for (int x : middle) {
    int t = R.prod(x, top);
    if (t == top) {
      out.U.push_back(x);
    } else if (t == x) {
      out.Z.push_back(x);
    } else {
      throw Error(Err::ClassificationViolation,
                  "top action is neither absorbing nor fixing", {x, t});
    }
  }

  // The unit must lie in U or be top itself.
  if (R.unit != top &&
      !std::binary_search(out.U.begin(), out.U.end(), R.unit)) {
    throw Error(Err::ClassificationViolation,
                "unit is not in the absorbing part", {R.unit});
  }

  // U with top is closed and cancellative off top.
  {
    std::vector<int> ut = out.U;
    ut.push_back(top);
    auto in_ut = [&](int v) {
      return std::find(ut.begin(), ut.end(), v) != ut.end();
    };
    for (int x : ut) {
      for (int y : ut) {
        if (!in_ut(R.prod(x, y))) {
          throw Error(Err::ClassificationViolation,
                      "absorbing part is not closed under multiplication",
                      {x, y});
        }
      }
    }
    Monoid A;
    A.n = static_cast<int>(ut.size());
    A.mul.assign(static_cast<std::size_t>(A.n) * A.n, 0);
    auto pos = [&](int v) {
      return static_cast<int>(std::find(ut.begin(), ut.end(), v) - ut.begin());
    };
    for (int i = 0; i < A.n; ++i) {
      for (int j = 0; j < A.n; ++j) {
        A.mul[i * A.n + j] = pos(R.prod(ut[i], ut[j]));
      }
    }
    A.unit = pos(R.unit);
    if (!check_zero_cancellative(A, pos(top))) {
      throw Error(Err::ClassificationViolation,
                  "absorbing part is not cancellative off top");
    }
  }

  // Z with bottom is one of the four glued kinds.
  if (out.Z.empty()) {
    out.kind = ZKind::BotOnly;
  } else if (out.Z.size() == 1) {
    int b = out.Z[0];
    int sq = R.prod(b, b);
    if (sq == bot) {
      out.kind = ZKind::NilElement;
    } else if (sq == b) {
      out.kind = ZKind::IdemElement;
    } else {
      throw Error(Err::ClassificationViolation,
                  "fixed element squares outside {bottom, itself}", {b, sq});
    }
  } else if (out.Z.size() == 2) {
    int b1 = out.Z[0], b2 = out.Z[1];
    if (R.prod(b1, b1) != b1 || R.prod(b2, b2) != b2 ||
        R.prod(b1, b2) != bot || R.prod(b2, b1) != bot) {
      throw Error(Err::ClassificationViolation,
                  "two fixed elements do not form the Boolean block",
                  {b1, b2});
    }
    out.kind = ZKind::TwoIdempotents;
  } else {
    throw Error(Err::ClassificationViolation,
                "more than two elements fixed by top",
                {static_cast<int>(out.Z.size())});
  }

  // Mixed products collapse to the fixed factor.
  for (int a : out.U) {
    for (int b : out.Z) {
      if (R.prod(a, b) != b || R.prod(b, a) != b) {
        throw Error(Err::ClassificationViolation,
                    "mixed product does not collapse", {a, b});
      }
    }
  }
  return out;
}

ABDecomposition decompose_mx(const FinRL& R) {
  UZPartition uz = compute_uz(R);
  const int bot = *R.bot, top = *R.top;

  ABDecomposition out;
  out.kind = uz.kind;
  std::vector<int> carrier = uz.U;  // sorted
  carrier.push_back(top);
  out.A.n = static_cast<int>(carrier.size());
  out.zero = out.A.n - 1;
  out.A.mul.assign(static_cast<std::size_t>(out.A.n) * out.A.n, 0);
  auto pos = [&](int v) {
    return static_cast<int>(std::find(carrier.begin(), carrier.end(), v) -
                            carrier.begin());
  };
  for (int i = 0; i < out.A.n; ++i) {
    for (int j = 0; j < out.A.n; ++j) {
      out.A.mul[i * out.A.n + j] = pos(R.prod(carrier[i], carrier[j]));
    }
  }
  out.A.unit = pos(R.unit);

  out.witness.clear();
  out.witness.push_back(bot);
  for (int u : uz.U) out.witness.push_back(u);
  for (int z : uz.Z) out.witness.push_back(z);
  out.witness.push_back(top);

  // Verify the witness maps the rebuilt algebra isomorphically onto R.
  FinRL rebuilt = make_rab(out.A, out.zero, out.kind);
  if (rebuilt.n != R.n) {
    throw Error(Err::ClassificationViolation,
                "rebuilt algebra has the wrong size");
  }
  const auto& w = out.witness;
  for (int i = 0; i < R.n; ++i) {
    for (int j = 0; j < R.n; ++j) {
      if (rebuilt.le(i, j) != R.le(w[i], w[j]) ||
          w[rebuilt.prod(i, j)] != R.prod(w[i], w[j])) {
        throw Error(Err::ClassificationViolation,
                    "decomposition witness is not an isomorphism", {i, j});
      }
    }
  }
  if (w[rebuilt.unit] != R.unit) {
    throw Error(Err::ClassificationViolation,
                "decomposition witness moves the unit");
  }
  return out;
}

// ---------------------------------------------------------------------------
// url_flags
// ---------------------------------------------------------------------------

URLFlags url_flags(const FinRL& R) {
  URLFlags f;
  const int n = R.n;
  int bot = -1, top = -1;
  for (int c = 0; c < n; ++c) {
    bool l = true, g = true;
    for (int x = 0; x < n; ++x) {
      l = l && R.le(c, x);
      g = g && R.le(x, c);
    }
    if (l) bot = c;
    if (g) top = c;
  }
  const bool bounded = bot >= 0 && top >= 0;

  std::vector<std::pair<int, int>> incomparable;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!R.le(u, v) && !R.le(v, u)) incomparable.push_back({u, v});
    }
  }
  f.is_linear = incomparable.empty();
  f.is_unilinear = bounded;
  for (auto [u, v] : incomparable) {
    if (R.mt(u, v) != bot || R.jn(u, v) != top) {
      f.is_unilinear = false;
      break;
    }
  }
  f.top_central = true;
  f.top_unital = true;
  for (auto [u, v] : incomparable) {
    int j = R.jn(u, v);
    int m = R.mt(u, v);
    for (int x = 0; x < n; ++x) {
      if (R.prod(x, j) != R.prod(j, x)) f.top_central = false;
      if (x != m && (R.prod(x, j) != j || R.prod(j, x) != j)) {
        f.top_unital = false;
      }
    }
    if (!f.top_central && !f.top_unital) break;
  }
  f.rigorously_compact = bounded;
  if (bounded) {
    for (int x = 0; x < n; ++x) {
      if (x == bot) continue;
      if (R.prod(top, x) != top || R.prod(x, top) != top) {
        f.rigorously_compact = false;
        break;
      }
    }
  }
  f.compact = f.is_unilinear && f.top_unital && bounded;
  if (f.compact) {
    for (int x = 0; x < n && f.compact; ++x) {
      if (x == bot || x == top) continue;
      for (int y = 0; y < n; ++y) {
        if (y == bot || y == top) continue;
        int p = R.prod(x, y);
        if (p == bot || p == top) {
          f.compact = false;
          break;
        }
      }
    }
  }

  // Height: longest chain by dynamic programming in order of ideal size.
  {
    std::vector<int> order(n), down(n, 0), h(n, 1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (y != x && R.le(y, x)) ++down[x];
      }
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return down[a] < down[b]; });
    for (int x : order) {
      for (int y = 0; y < n; ++y) {
        if (y != x && R.le(y, x)) h[x] = std::max(h[x], h[y] + 1);
      }
    }
    f.height = *std::max_element(h.begin(), h.end());
  }

  // Width: size of a largest antichain = n - maximum matching over the
  // strict comparability relation (minimum chain cover).
  {
    std::vector<int> match_right(n, -1);
    std::vector<std::uint8_t> visited(n, 0);
    auto strict_lt = [&](int x, int y) { return x != y && R.le(x, y); };
    std::function<bool(int)> try_augment = [&](int x) -> bool {
      for (int y = 0; y < n; ++y) {
        if (!strict_lt(x, y) || visited[y]) continue;
        visited[y] = 1;
        if (match_right[y] < 0 || try_augment(match_right[y])) {
          match_right[y] = x;
          return true;
        }
      }
      return false;
    };
    int matched = 0;
    for (int x = 0; x < n; ++x) {
      std::fill(visited.begin(), visited.end(), 0);
      if (try_augment(x)) ++matched;
    }
    f.width = n - matched;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Discriminator
// ---------------------------------------------------------------------------

namespace {

/// r(w) = (1 v w)(1 ^ w) ^ (1 v 1/w)(1 ^ 1/w): switches 1 -> 1, bottom ->
/// bottom, and collapses mixed values on the antichain-based algebras.
Term switching_term(Term w) {
  Term inv = t_rdiv(t_one(), w);
  Term left = t_mul(t_join(t_one(), w), t_meet(t_one(), w));
  Term right = t_mul(t_join(t_one(), inv), t_meet(t_one(), inv));
  return t_meet(left, right);
}

Term discriminator_term() {
  Term x = t_var(0), y = t_var(1), z = t_var(2);
  Term biimp = t_meet(t_meet(t_ldiv(x, y), t_ldiv(y, x)), t_one());
  Term sw = switching_term(biimp);
  Term neg = t_meet(t_ldiv(sw, t_bot()), t_one());
  return t_join(t_mul(sw, z), t_mul(neg, x));
}

}  // namespace

int eval_discriminator(const FinRL& R, int x, int y, int z) {
  if (!R.bot || !R.top) {
    throw Error(Err::NotBounded,
                "discriminator term needs both bound constants");
  }
  static const Term term = discriminator_term();
  return eval_term(R, term, {x, y, z});
}

DiscriminatorReport check_discriminator(const FinRL& R) {
  DiscriminatorReport rep;
  for (int x = 0; x < R.n; ++x) {
    for (int y = 0; y < R.n; ++y) {
      for (int z = 0; z < R.n; ++z) {
        int got = eval_discriminator(R, x, y, z);
        int expect = (x == y) ? z : x;
        if (got != expect) {
          rep.is_discriminator = false;
          rep.witness = {x, y, z};
          rep.value = got;
          return rep;
        }
      }
    }
  }
  rep.is_discriminator = true;
  return rep;
}

// ---------------------------------------------------------------------------
// comparability_quotient
// ---------------------------------------------------------------------------

ComparabilityQuotient comparability_quotient(const FinRL& R) {
  URLFlags flags = url_flags(R);
  if (!flags.compact) {
    throw Error(Err::NotCompact, "algebra is not compact");
  }
  if (!R.bot || !R.top) {
    throw Error(Err::NotCompact, "algebra declares no bounds");
  }
  const int bot = *R.bot, top = *R.top;
  if (R.unit == bot || R.unit == top) {
    throw Error(Err::NotCompact, "unit is a bound, middle is not a monoid");
  }

  std::vector<int> middle;
  for (int x = 0; x < R.n; ++x) {
    if (x != bot && x != top) middle.push_back(x);
  }

  // Union-find over comparability.
  std::vector<int> parent(R.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (int x : middle) {
    for (int y : middle) {
      if (x != y && (R.le(x, y) || R.le(y, x))) parent[find(x)] = find(y);
    }
  }

  ComparabilityQuotient out;
  out.class_of.assign(R.n, -1);
  std::map<int, int> root_to_class;
  for (int x : middle) {
    int r = find(x);
    auto it = root_to_class.find(r);
    if (it == root_to_class.end()) {
      it = root_to_class.emplace(r, static_cast<int>(out.classes.size())).first;
      out.classes.push_back({});
    }
    out.class_of[x] = it->second;
    out.classes[it->second].push_back(x);
  }
  for (auto& cls : out.classes) {
    std::sort(cls.begin(), cls.end(),
              [&](int a, int b) { return a != b && R.le(a, b); });
    for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
      if (!R.le(cls[i], cls[i + 1])) {
        throw Error(Err::ClassificationViolation,
                    "comparability class is not a chain",
                    {cls[i], cls[i + 1]});
      }
    }
  }

  // Multiplication must respect the classes.
  out.congruence = true;
  const int nc = static_cast<int>(out.classes.size());
  for (int x : middle) {
    for (int y : middle) {
      int cxy = out.class_of[R.prod(x, y)];
      if (cxy < 0) out.congruence = false;
    }
  }
  if (out.congruence) {
    for (int c = 0; c < nc && out.congruence; ++c) {
      for (std::size_t i = 1; i < out.classes[c].size() && out.congruence;
           ++i) {
        int x0 = out.classes[c][0], xi = out.classes[c][i];
        for (int y : middle) {
          if (out.class_of[R.prod(x0, y)] != out.class_of[R.prod(xi, y)] ||
              out.class_of[R.prod(y, x0)] != out.class_of[R.prod(y, xi)]) {
            out.congruence = false;
            break;
          }
        }
      }
    }
  }
  if (!out.congruence) {
    throw Error(Err::ClassificationViolation,
                "comparability is not a multiplication congruence");
  }

  out.K.n = nc;
  out.K.mul.assign(static_cast<std::size_t>(nc) * nc, 0);
  for (int c1 = 0; c1 < nc; ++c1) {
    for (int c2 = 0; c2 < nc; ++c2) {
      out.K.mul[c1 * nc + c2] =
          out.class_of[R.prod(out.classes[c1][0], out.classes[c2][0])];
    }
  }
  out.unit_class = out.class_of[R.unit];
  out.K.unit = out.unit_class;

  out.cancellative = true;
  for (int x = 0; x < nc && out.cancellative; ++x) {
    for (int y = 0; y < nc && out.cancellative; ++y) {
      for (int z = 0; z < nc; ++z) {
        if (y == z) continue;
        if (out.K.prod(x, y) == out.K.prod(x, z) ||
            out.K.prod(y, x) == out.K.prod(z, x)) {
          out.cancellative = false;
          break;
        }
      }
    }
  }

  const auto& H = out.classes[out.unit_class];
  auto acts_ok = [&](int v, int cls, bool check_onto, bool check_inj) {
    std::set<int> left, right;
    for (int h : H) {
      left.insert(R.prod(v, h));
      right.insert(R.prod(h, v));
    }
    if (check_inj && (left.size() != H.size() || right.size() != H.size())) {
      return false;
    }
    if (check_onto) {
      std::set<int> cls_set(out.classes[cls].begin(),
                            out.classes[cls].end());
      if (left != cls_set || right != cls_set) return false;
    }
    return true;
  };
  out.admissible = true;
  out.k_cancellative = true;
  for (int c = 0; c < nc; ++c) {
    bool adm = false, canc = false;
    for (int v : out.classes[c]) {
      if (!adm && acts_ok(v, c, true, false)) adm = true;
      if (!canc && acts_ok(v, c, false, true)) canc = true;
      if (adm && canc) break;
    }
    out.admissible = out.admissible && adm;
    out.k_cancellative = out.k_cancellative && canc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// reconstruct_cocycle
// ---------------------------------------------------------------------------

Reconstruction reconstruct_cocycle(const FinRL& R) {
  ComparabilityQuotient cq;
  try {
    cq = comparability_quotient(R);
  } catch (const Error& e) {
    if (e.code() == Err::NotCompact) {
      throw Error(Err::HypothesesFail, "compact: " + e.detail());
    }
    throw;
  }
  if (!cq.cancellative) {
    throw Error(Err::HypothesesFail, "cancellative");
  }
  if (!cq.admissible) {
    throw Error(Err::HypothesesFail, "admissible");
  }
  if (!cq.k_cancellative) {
    throw Error(Err::HypothesesFail, "k_cancellative");
  }

  const auto& H = cq.classes[cq.unit_class];
  const int nh = static_cast<int>(H.size());
  auto hpos = [&](int v) {
    return static_cast<int>(std::find(H.begin(), H.end(), v) - H.begin());
  };

  // The unit class as a standalone algebra (a residuated chain if the
  // reconstruction can work at all).
  FinRL AH;
  {
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(nh) * nh, 0);
    std::vector<int> mul(static_cast<std::size_t>(nh) * nh, 0);
    for (int i = 0; i < nh; ++i) {
      for (int j = 0; j < nh; ++j) {
        leq[i * nh + j] = R.le(H[i], H[j]);
        int p = R.prod(H[i], H[j]);
        int pp = hpos(p);
        if (pp >= nh) {
          throw Error(Err::HypothesesFail,
                      "unit class is not closed under multiplication",
                      {H[i], H[j]});
        }
        mul[i * nh + j] = pp;
      }
    }
    try {
      AH = assemble_algebra(nh, std::move(leq), std::move(mul),
                            hpos(R.unit));
    } catch (const Error& e) {
      throw Error(Err::HypothesesFail,
                  "unit class is not a residuated chain: " + e.detail(),
                  e.witness());
    }
  }

  const Monoid& K = cq.K;
  const int nk = K.n;

  // Candidate representatives per class: act bijectively from both sides
  // and hit the whole class (unit class pinned to the unit).
  std::vector<std::vector<int>> cands(nk);
  for (int c = 0; c < nk; ++c) {
    if (c == cq.unit_class) {
      cands[c] = {R.unit};
      continue;
    }
    for (int v : cq.classes[c]) {
      std::set<int> left, right;
      for (int h : H) {
        left.insert(R.prod(v, h));
        right.insert(R.prod(h, v));
      }
      std::set<int> cls_set(cq.classes[c].begin(), cq.classes[c].end());
      if (left == cls_set && right == cls_set &&
          left.size() == H.size() && right.size() == H.size()) {
        cands[c].push_back(v);
      }
    }
    if (cands[c].empty()) {
      throw Error(Err::HypothesesFail,
                  "no representative acts bijectively onto its class", {c});
    }
  }

  // Iterate selections in lexicographic order over class ids.
  std::vector<std::size_t> pick(nk, 0);
  std::vector<int> sel(nk, -1);
  while (true) {
    for (int c = 0; c < nk; ++c) sel[c] = cands[c][pick[c]];

    bool viable = true;
    CocycleData data;
    data.K = K;
    data.A = AH;
    data.phi.assign(nk, std::vector<int>(nh, -1));
    // phi_c = (right translation by sel[c])^{-1} o (left translation).
    for (int c = 0; c < nk && viable; ++c) {
      for (int p = 0; p < nh && viable; ++p) {
        int target = R.prod(sel[c], H[p]);
        int w = -1;
        for (int q = 0; q < nh; ++q) {
          if (R.prod(H[q], sel[c]) == target) { w = q; break; }
        }
        if (w < 0) { viable = false; break; }
        data.phi[c][p] = w;
      }
    }
    if (viable) {
      data.f.assign(static_cast<std::size_t>(nk) * nk, -1);
      for (int c1 = 0; c1 < nk && viable; ++c1) {
        for (int c2 = 0; c2 < nk && viable; ++c2) {
          int base = R.prod(sel[c1], sel[c2]);
          int target = sel[K.prod(c1, c2)];
          int fval = -1;
          for (int q = 0; q < nh; ++q) {
            if (R.prod(H[q], base) == target) { fval = q; break; }
          }
          if (fval < 0) { viable = false; break; }
          data.f[c1 * nk + c2] = fval;
        }
      }
    }
    if (viable) {
      viable = check_cocycle(data).all_pass();
    }
    if (viable) {
      FinRL rebuilt = make_cocycle_extension(data);
      // psi: bounds to bounds; x -> (h, class) with h * sel[class] = x.
      std::vector<int> psi(R.n, -1);
      psi[*R.bot] = *rebuilt.bot;
      psi[*R.top] = *rebuilt.top;
      bool iso = true;
      for (int x = 0; x < R.n && iso; ++x) {
        int c = cq.class_of[x];
        if (c < 0) continue;
        int w = -1;
        for (int q = 0; q < nh; ++q) {
          if (R.prod(H[q], sel[c]) == x) { w = q; break; }
        }
        if (w < 0) { iso = false; break; }
        psi[x] = 1 + c * nh + w;
      }
      if (iso) {
        std::vector<std::uint8_t> seen(R.n, 0);
        for (int x = 0; x < R.n && iso; ++x) {
          if (psi[x] < 0 || seen[psi[x]]) iso = false;
          else seen[psi[x]] = 1;
        }
      }
      for (int x = 0; x < R.n && iso; ++x) {
        for (int y = 0; y < R.n && iso; ++y) {
          if (R.le(x, y) != rebuilt.le(psi[x], psi[y]) ||
              psi[R.prod(x, y)] != rebuilt.prod(psi[x], psi[y])) {
            iso = false;
          }
        }
      }
      if (iso && psi[R.unit] == rebuilt.unit) {
        Reconstruction out;
        out.data = std::move(data);
        out.rebuilt = std::move(rebuilt);
        out.iso = std::move(psi);
        return out;
      }
    }

    // next selection
    int c = nk - 1;
    while (c >= 0) {
      if (++pick[c] < cands[c].size()) break;
      pick[c] = 0;
      --c;
    }
    if (c < 0) break;
  }
  throw Error(Err::HypothesesFail,
              "no representative selection yields valid twisting data");
}

// ---------------------------------------------------------------------------
// Identities
// ---------------------------------------------------------------------------

namespace {
int power(const FinRL& R, int x, int e) {
  int acc = R.unit;
  for (int i = 0; i < e; ++i) acc = R.prod(acc, x);
  return acc;
}
}  // namespace

bool check_knotted(const FinRL& R, int m, int n) {
  if (m == n || m < 0 || n < 0) {
    throw Error(Err::BadPartition, "exponents must be distinct and >= 0",
                {m, n});
  }
  for (int x = 0; x < R.n; ++x) {
    if (!R.le(power(R, x, m), power(R, x, n))) return false;
  }
  return true;
}

bool check_weak_commutativity(const FinRL& R, const std::vector<int>& a) {
  if (a.size() < 2) {
    throw Error(Err::BadPartition, "need at least two exponents");
  }
  const int k = static_cast<int>(a.size()) - 1;
  int sum = 0;
  bool all_one = true;
  for (int v : a) {
    if (v < 0) throw Error(Err::BadPartition, "exponents must be >= 0", {v});
    sum += v;
    all_one = all_one && v == 1;
  }
  if (sum != k + 1 || all_one) {
    throw Error(Err::BadPartition,
                "exponents must sum to their count with some entry != 1");
  }
  std::vector<int> ys(k, 0);
  for (int x = 0; x < R.n; ++x) {
    std::fill(ys.begin(), ys.end(), 0);
    while (true) {
      int lhs = x;
      for (int i = 0; i < k; ++i) lhs = R.prod(R.prod(lhs, ys[i]), x);
      int rhs = power(R, x, a[0]);
      for (int i = 0; i < k; ++i) {
        rhs = R.prod(R.prod(rhs, ys[i]), power(R, x, a[i + 1]));
      }
      if (lhs != rhs) return false;
      int i = k - 1;
      while (i >= 0 && ++ys[i] == R.n) ys[i--] = 0;
      if (i < 0) break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Conjugate equation schemes
// ---------------------------------------------------------------------------

namespace {

/// All conjugation maps up to `depth` compositions (depth 0 is a -> a ^ 1),
/// as value tables, deduplicated.
std::vector<std::vector<int>> conjugate_maps(const FinRL& R, int depth) {
  const int n = R.n;
  std::vector<int> meet1(n);
  for (int a = 0; a < n; ++a) meet1[a] = R.mt(a, R.unit);

  std::vector<std::vector<int>> basics;
  for (int c = 0; c < n; ++c) {
    std::vector<int> lam(n), rho(n);
    for (int a = 0; a < n; ++a) {
      lam[a] = R.mt(R.ld(c, R.prod(a, c)), R.unit);
      rho[a] = R.mt(R.rd(R.prod(c, a), c), R.unit);
    }
    basics.push_back(std::move(lam));
    basics.push_back(std::move(rho));
  }

  std::set<std::vector<int>> all;
  all.insert(meet1);
  std::vector<std::vector<int>> layer = {};
  if (depth >= 1) {
    for (const auto& b : basics) all.insert(b);
    layer.assign(basics.begin(), basics.end());
  }
  for (int d = 2; d <= depth; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& outer : basics) {
      for (const auto& inner : layer) {
        std::vector<int> comp(n);
        for (int a = 0; a < n; ++a) comp[a] = outer[inner[a]];
        if (all.insert(comp).second) next.push_back(comp);
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return {all.begin(), all.end()};
}

struct SchemeEquation {
  std::string name;
  int num_vars = 0;
  // Computes the disjunct argument values for one assignment.
  std::vector<int> (*args)(const FinRL&, const std::vector<int>&);
};

std::vector<int> srl_eq1_args(const FinRL& R, const std::vector<int>& v) {
  int x = v[0], y = v[1], z = v[2];
  return {R.ld(x, y), R.ld(y, x), R.ld(R.mt(x, y), z)};
}
std::vector<int> srl_eq2_args(const FinRL& R, const std::vector<int>& v) {
  int x = v[0], y = v[1], w = v[2];
  return {R.ld(x, y), R.ld(y, x), R.ld(w, R.jn(x, y))};
}
std::vector<int> m_eq_args(const FinRL& R, const std::vector<int>& v) {
  int j2 = R.jn(v[0], v[1]);
  int j3 = R.jn(j2, v[2]);
  int j4 = R.jn(j3, v[3]);
  return {R.ld(j2, v[0]), R.ld(j3, j2), R.ld(j4, j3)};
}
std::vector<int> mg_eq_args(const FinRL& R, const std::vector<int>& v) {
  int u = v[0], w = v[1], x = v[2];
  return {R.ld(u, w), R.ld(w, u), R.ld(x, R.mt(u, w)),
          R.ld(R.jn(u, w), x), R.prod(x, R.ld(x, R.unit))};
}

}  // namespace

ConjugateCheck check_conjugate_equations(const FinRL& R, EqScheme scheme,
                                         int depth) {
  if (depth < 0) {
    throw Error(Err::SemanticError, "conjugation depth must be >= 0");
  }
  std::vector<SchemeEquation> eqs;
  switch (scheme) {
    case EqScheme::Srl:
      eqs = {{"left_divisions_or_meet_below", 3, srl_eq1_args},
             {"left_divisions_or_join_above", 3, srl_eq2_args}};
      break;
    case EqScheme::M:
      eqs = {{"nested_join_divisions", 4, m_eq_args}};
      break;
    case EqScheme::Mg:
      eqs = {{"divisions_meet_join_or_inverse", 3, mg_eq_args}};
      break;
  }

  auto maps = conjugate_maps(R, depth);
  // Per-value choice sets: S[v] = { gamma(v) : gamma in maps }.
  std::vector<std::vector<int>> choice(R.n);
  for (int v = 0; v < R.n; ++v) {
    std::set<int> s;
    for (const auto& g : maps) s.insert(g[v]);
    choice[v].assign(s.begin(), s.end());
  }

  ConjugateCheck out;
  out.ok = true;
  out.depth = depth;

  for (const auto& eq : eqs) {
    std::vector<int> assign(eq.num_vars, 0);
    while (true) {
      std::vector<int> args = eq.args(R, assign);
      // Look for a choice of conjugates whose join is not the unit.
      std::vector<int> chosen(args.size(), 0);
      std::function<bool(std::size_t, int)> dfs = [&](std::size_t i,
                                                      int join) -> bool {
        if (join == R.unit) return false;  // joins only grow toward the unit
        if (i == args.size()) {
          return join != R.unit;
        }
        for (int val : choice[args[i]]) {
          chosen[i] = val;
          if (dfs(i + 1, i == 0 ? val : R.jn(join, val))) return true;
        }
        return false;
      };
      bool fails = dfs(0, -1);
      if (fails) {
        // Re-run to collect the witness values (dfs left them in `chosen`).
        out.ok = false;
        out.equation = eq.name;
        out.assignment = assign;
        out.values = chosen;
        return out;
      }
      int i = eq.num_vars - 1;
      while (i >= 0 && ++assign[i] == R.n) assign[i--] = 0;
      if (i < 0) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// enumerate_mx
// ---------------------------------------------------------------------------

namespace {

struct MxSearchSpace {
  int n = 0;
  int unit = 0;
  std::vector<std::pair<int, int>> slots;        // free cells
  std::vector<std::vector<int>> domains;         // candidate values per cell
  std::vector<int> base;                          // pinned table (-1 = free)
};

std::vector<MxSearchSpace> mx_search_spaces(int nX) {
  const int n = nX + 2;
  const int bot = 0, top = n - 1;
  std::vector<MxSearchSpace> spaces;
  std::vector<int> units;
  for (int x = 1; x < n; ++x) units.push_back(x);  // middles and top
  for (int unit : units) {
    MxSearchSpace sp;
    sp.n = n;
    sp.unit = unit;
    sp.base.assign(static_cast<std::size_t>(n) * n, -1);
    auto set = [&](int x, int y, int v) { sp.base[x * n + y] = v; };
    for (int x = 0; x < n; ++x) {
      set(bot, x, bot);
      set(x, bot, bot);
      set(unit, x, x);
      set(x, unit, x);
    }
    if (unit != top) set(top, top, top);
    for (int x = 1; x < top; ++x) {
      if (x == unit) continue;
      for (int y = 1; y < top; ++y) {
        if (y == unit) continue;
        sp.slots.push_back({x, y});
        std::vector<int> dom(n);
        std::iota(dom.begin(), dom.end(), 0);
        sp.domains.push_back(dom);
      }
      if (unit != top) {
        // Top action on a middle is fixing or absorbing (forced by
        // order preservation), both sides.
        sp.slots.push_back({top, x});
        sp.domains.push_back({x, top});
        sp.slots.push_back({x, top});
        sp.domains.push_back({x, top});
      }
    }
    spaces.push_back(std::move(sp));
  }
  return spaces;
}

/// Validity of a filled table as a residuated-lattice multiplication on the
/// bounded antichain lattice: associativity, order preservation by the top
/// row/column, and existence of division maxima.
bool mx_table_valid(int n, const std::vector<int>& mul) {
  const int top = n - 1;
  auto ml = [&](int x, int y) { return mul[x * n + y]; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = ml(x, y);
      for (int z = 0; z < n; ++z) {
        if (ml(xy, z) != ml(x, ml(y, z))) return false;
      }
    }
  }
  auto le = [&](int x, int y) {
    return x == y || x == 0 || y == top;
  };
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      if (!le(ml(z, x), ml(z, top)) || !le(ml(x, z), ml(top, z))) return false;
    }
  }
  // Division maxima: solution sets are downward closed (given the
  // monotonicity above); a maximum exists iff top solves it or the middle
  // solutions are unique.
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      bool top_left = le(ml(x, top), z), top_right = le(ml(top, x), z);
      int mid_left = 0, mid_right = 0;
      for (int y = 1; y < top; ++y) {
        if (le(ml(x, y), z)) ++mid_left;
        if (le(ml(y, x), z)) ++mid_right;
      }
      if (!top_left && mid_left > 1) return false;
      if (!top_right && mid_right > 1) return false;
    }
  }
  return true;
}

/// Lexicographically least (unit, table) encoding over relabellings of the
/// middle elements (bounds fixed).
std::vector<int> mx_canonical_key(int n, int unit,
                                  const std::vector<int>& mul) {
  const int top = n - 1;
  std::vector<int> mids;
  for (int x = 1; x < top; ++x) mids.push_back(x);
  std::vector<int> best;
  std::vector<int> perm(n);
  std::sort(mids.begin(), mids.end());
  std::vector<int> image = mids;
  do {
    perm[0] = 0;
    perm[top] = top;
    for (std::size_t i = 0; i < mids.size(); ++i) perm[mids[i]] = image[i];
    std::vector<int> key;
    key.reserve(1 + mul.size());
    key.push_back(perm[unit]);
    std::vector<int> table(mul.size());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        table[perm[x] * n + perm[y]] = perm[mul[x * n + y]];
      }
    }
    key.insert(key.end(), table.begin(), table.end());
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

}  // namespace

std::vector<FinRL> enumerate_mx(int nX, std::optional<long long> cap,
                                int jobs) {
  if (nX < 0) {
    throw Error(Err::SemanticError, "antichain size must be nonnegative");
  }
  if (jobs < 1) jobs = 1;
  const int n = nX + 2;
  auto spaces = mx_search_spaces(nX);

  // Flatten the candidate space: (space, odometer index).
  std::vector<long long> counts;
  long long total = 0;
  for (const auto& sp : spaces) {
    long long c = 1;
    for (const auto& d : sp.domains) c *= static_cast<long long>(d.size());
    counts.push_back(c);
    total += c;
  }

  auto run_range = [&](int tid, std::set<std::vector<int>>* found) {
    std::vector<int> mul;
    long long global = 0;
    for (std::size_t si = 0; si < spaces.size(); ++si) {
      const auto& sp = spaces[si];
      for (long long idx = 0; idx < counts[si]; ++idx, ++global) {
        if (global % jobs != tid) continue;
        mul = sp.base;
        long long rem = idx;
        for (std::size_t s = 0; s < sp.slots.size(); ++s) {
          const auto& dom = sp.domains[s];
          mul[sp.slots[s].first * n + sp.slots[s].second] =
              dom[rem % dom.size()];
          rem /= dom.size();
        }
        if (!mx_table_valid(n, mul)) continue;
        found->insert(mx_canonical_key(n, sp.unit, mul));
      }
    }
  };

  std::set<std::vector<int>> keys;
  if (jobs == 1) {
    run_range(0, &keys);
  } else {
    std::vector<std::set<std::vector<int>>> parts(jobs);
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
      threads.emplace_back(run_range, t, &parts[t]);
    }
    for (auto& th : threads) th.join();
    for (auto& p : parts) keys.merge(p);
  }
  if (cap && static_cast<long long>(keys.size()) > *cap) {
    throw Error(Err::CapExceeded, "class count exceeds the cap",
                {static_cast<int>(keys.size())});
  }

  std::vector<FinRL> out;
  LatticeTables lat = make_mx_lattice(nX);
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    leq[x * n + x] = 1;
    leq[0 * n + x] = 1;
    leq[x * n + (n - 1)] = 1;
  }
  for (const auto& key : keys) {
    int unit = key[0];
    std::vector<int> mul(key.begin() + 1, key.end());
    out.push_back(assemble_algebra(n, leq, std::move(mul), unit));
  }
  return out;
}

bool is_integral(const FinRL& R) {
  for (int x = 0; x < R.n; ++x) {
    if (!R.le(x, R.unit)) return false;
  }
  return true;
}

}  // namespace urlat
