// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.

#include "urlat/varieties.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace urlat {

namespace {

void canon_partition(Partition& p) {
  for (int v : p) {
    if (v < 1) {
      throw Error(Err::BadPartition, "partition entries must be >= 1", {v});
    }
  }
  std::sort(p.begin(), p.end(), std::greater<int>());
}

/// a <= b pointwise on descending entries padded with zeros.
bool part_leq(const Partition& a, const Partition& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > (i < b.size() ? b[i] : 0)) return false;
  }
  return true;
}

Partition part_meet(const Partition& a, const Partition& b) {
  Partition out;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int v = std::min(a[i], b[i]);
    if (v > 0) out.push_back(v);
  }
  return out;
}

Partition part_join(const Partition& a, const Partition& b) {
  Partition out;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    out.push_back(std::max(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0));
  }
  return out;
}

Partition part_insert(Partition p, int k) {
  p.insert(std::upper_bound(p.begin(), p.end(), k, std::greater<int>()), k);
  return p;
}

void drop_empty(GroupSig& g) {
  for (auto it = g.torsion.begin(); it != g.torsion.end();) {
    if (it->second.empty()) {
      it = g.torsion.erase(it);
    } else {
      ++it;
    }
  }
}

const Partition& torsion_at(const GroupSig& g, int n) {
  static const Partition empty;
  auto it = g.torsion.find(n);
  return it == g.torsion.end() ? empty : it->second;
}

int max_entry_of(const GroupSig& g) {
  int m = 0;
  for (const auto& [n, p] : g.torsion) {
    if (!p.empty()) m = std::max(m, p.front());
  }
  return m;
}

/// Largest partition entry appearing anywhere in a downset description.
int desc_max_entry(const Downset& d) {
  int m = 0;
  for (const auto& part : d.parts) {
    if (const auto* pr = std::get_if<Principal>(&part)) {
      m = std::max(m, max_entry_of(pr->g));
    } else if (const auto* tw = std::get_if<ExpTower>(&part)) {
      m = std::max(m, max_entry_of(tw->base));
    } else {
      const auto& fam = std::get<PrimeFamily>(part);
      if (!fam.shape.empty()) m = std::max(m, fam.shape.front());
    }
  }
  return m;
}

/// Largest prime index mentioned anywhere in a downset description.
int desc_max_prime_index(const Downset& d) {
  int m = 0;
  auto from_sig = [&](const GroupSig& g) {
    if (!g.torsion.empty()) m = std::max(m, g.torsion.rbegin()->first);
  };
  for (const auto& part : d.parts) {
    if (const auto* pr = std::get_if<Principal>(&part)) {
      from_sig(pr->g);
    } else if (const auto* tw = std::get_if<ExpTower>(&part)) {
      from_sig(tw->base);
      m = std::max(m, tw->prime_index);
    } else {
      m = std::max(m, std::get<PrimeFamily>(part).min_index);
    }
  }
  return m;
}

GroupSig with_flag(GroupSig g) {
  g.flag = 1;
  return g;
}

}  // namespace

long long nth_prime(int n) {
  if (n < 1) {
    throw Error(Err::SemanticError, "prime index must be >= 1", {n});
  }
  static std::vector<long long> primes = {2, 3};
  while (static_cast<int>(primes.size()) < n) {
    long long c = primes.back() + 2;
    while (true) {
      bool is_prime = true;
      for (long long p : primes) {
        if (p * p > c) break;
        if (c % p == 0) {
          is_prime = false;
          break;
        }
      }
      if (is_prime) break;
      c += 2;
    }
    primes.push_back(c);
  }
  return primes[n - 1];
}

int exp_of(const GroupSig& a) { return max_entry_of(a); }

std::vector<int> primes_of(const GroupSig& a) {
  std::vector<int> out;
  for (const auto& [n, p] : a.torsion) {
    if (!p.empty()) out.push_back(n);
  }
  return out;
}

bool sig_leq(const GroupSig& a, const GroupSig& b) {
  if (a.flag > b.flag) return false;
  for (const auto& [n, p] : a.torsion) {
    if (!part_leq(p, torsion_at(b, n))) return false;
  }
  return true;
}

GroupSig sig_join(const GroupSig& a, const GroupSig& b) {
  GroupSig out;
  out.flag = std::max(a.flag, b.flag);
  out.torsion = a.torsion;
  for (const auto& [n, p] : b.torsion) {
    out.torsion[n] = part_join(torsion_at(out, n), p);
  }
  drop_empty(out);
  return out;
}

GroupSig sig_meet(const GroupSig& a, const GroupSig& b) {
  GroupSig out;
  out.flag = std::min(a.flag, b.flag);
  for (const auto& [n, p] : a.torsion) {
    Partition m = part_meet(p, torsion_at(b, n));
    if (!m.empty()) out.torsion[n] = std::move(m);
  }
  return out;
}

SigFromFactors sig_of_invariant_factors(const std::vector<long long>& factors,
                                        int rank) {
  if (rank < 0) {
    throw Error(Err::SemanticError, "rank must be >= 0", {rank});
  }
  SigFromFactors out;
  out.sig.flag = rank > 0 ? 1 : 0;
  out.rank_collapsed = rank > 1;
  for (long long f : factors) {
    if (f < 2) {
      throw Error(Err::InvalidFactor, "invariant factors must be >= 2",
                  {static_cast<int>(f)});
    }
    long long rest = f;
    for (int idx = 1; rest > 1; ++idx) {
      long long p = nth_prime(idx);
      if (p > 100000) {
        throw Error(Err::CapExceeded,
                    "prime divisor too large to index: " +
                        std::to_string(rest));
      }
      if (rest % p != 0) continue;
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      out.sig.torsion[idx] = part_insert(
          out.sig.torsion.count(idx) ? out.sig.torsion[idx] : Partition{}, e);
    }
  }
  drop_empty(out.sig);
  return out;
}

GroupSig tower_extension(const GroupSig& base, int prime_index, int k) {
  if (prime_index < 1) {
    throw Error(Err::SemanticError, "prime index must be >= 1", {prime_index});
  }
  if (k < 1) {
    throw Error(Err::SemanticError, "tower exponent must be >= 1", {k});
  }
  GroupSig out = base;
  out.torsion[prime_index] = part_insert(torsion_at(base, prime_index), k);
  return out;
}

bool downset_contains(const Downset& d, const GroupSig& a) {
  for (const auto& part : d.parts) {
    if (const auto* pr = std::get_if<Principal>(&part)) {
      if (sig_leq(a, pr->g)) return true;
    } else if (const auto* tw = std::get_if<ExpTower>(&part)) {
      int k = std::max(1, exp_of(a));
      if (sig_leq(a, tower_extension(tw->base, tw->prime_index, k))) {
        return true;
      }
    } else {
      const auto& fam = std::get<PrimeFamily>(part);
      if (a.flag != 0) continue;
      auto ps = primes_of(a);
      if (ps.empty()) return true;
      if (ps.size() == 1 && ps[0] >= fam.min_index &&
          part_leq(torsion_at(a, ps[0]), fam.shape)) {
        return true;
      }
    }
  }
  return false;
}

ZClosureReport is_z_closed(const Downset& d) {
  ZClosureReport rep;
  const int big = 1 + std::max(desc_max_entry(d), 1);
  for (const auto& part : d.parts) {
    if (std::holds_alternative<Principal>(part)) {
      continue;  // finitely many members above any point
    }
    if (const auto* tw = std::get_if<ExpTower>(&part)) {
      GroupSig probe = tower_extension(tw->base, tw->prime_index, big);
      GroupSig lifted = with_flag(probe);
      if (!downset_contains(d, lifted)) {
        rep.closed = false;
        rep.violating = probe;
        rep.missing = lifted;
        return rep;
      }
    } else {
      GroupSig trivial;
      GroupSig lifted = with_flag(trivial);
      if (!downset_contains(d, lifted)) {
        rep.closed = false;
        rep.violating = trivial;
        rep.missing = lifted;
        return rep;
      }
    }
  }
  rep.closed = true;
  return rep;
}

Downset downset_union(const Downset& a, const Downset& b) {
  Downset out = a;
  out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
  return out;
}

namespace {

std::vector<DownsetPart> intersect_parts(const DownsetPart& x,
                                         const DownsetPart& y) {
  const auto* px = std::get_if<Principal>(&x);
  const auto* py = std::get_if<Principal>(&y);
  const auto* tx = std::get_if<ExpTower>(&x);
  const auto* ty = std::get_if<ExpTower>(&y);
  const auto* fx = std::get_if<PrimeFamily>(&x);
  const auto* fy = std::get_if<PrimeFamily>(&y);

  if (px && py) {
    return {Principal{sig_meet(px->g, py->g)}};
  }
  if ((px && ty) || (py && tx)) {
    const Principal& p = px ? *px : *py;
    const ExpTower& t = px ? *ty : *tx;
    int k = std::max(1, exp_of(p.g));
    return {Principal{
        sig_meet(p.g, tower_extension(t.base, t.prime_index, k))}};
  }
  if ((px && fy) || (py && fx)) {
    const Principal& p = px ? *px : *py;
    const PrimeFamily& f = px ? *fy : *fx;
    std::vector<DownsetPart> out;
    for (int m : primes_of(p.g)) {
      if (m < f.min_index) continue;
      Partition meet = part_meet(torsion_at(p.g, m), f.shape);
      GroupSig g;
      if (!meet.empty()) g.torsion[m] = std::move(meet);
      out.push_back(Principal{std::move(g)});
    }
    if (out.empty()) out.push_back(Principal{GroupSig{}});
    return out;
  }
  if (tx && ty) {
    if (tx->prime_index == ty->prime_index) {
      return {ExpTower{sig_meet(tx->base, ty->base), tx->prime_index}};
    }
    int kx = 1 + std::max(exp_of(ty->base), 0);
    int ky = 1 + std::max(exp_of(tx->base), 0);
    return {Principal{
        sig_meet(tower_extension(tx->base, tx->prime_index, kx),
                 tower_extension(ty->base, ty->prime_index, ky))}};
  }
  if ((tx && fy) || (ty && fx)) {
    const ExpTower& t = tx ? *tx : *ty;
    const PrimeFamily& f = tx ? *fy : *fx;
    std::vector<DownsetPart> out;
    const std::vector<int> base_primes = primes_of(t.base);
    std::set<int> candidates(base_primes.begin(), base_primes.end());
    candidates.insert(t.prime_index);
    for (int m : candidates) {
      if (m < f.min_index) continue;
      Partition cap;
      if (m == t.prime_index) {
        int k = f.shape.empty() ? 1 : 1 + f.shape.front();
        cap = part_meet(part_insert(torsion_at(t.base, m), k), f.shape);
      } else {
        cap = part_meet(torsion_at(t.base, m), f.shape);
      }
      GroupSig g;
      if (!cap.empty()) g.torsion[m] = std::move(cap);
      out.push_back(Principal{std::move(g)});
    }
    if (out.empty()) out.push_back(Principal{GroupSig{}});
    return out;
  }
  // family / family
  Partition shape = part_meet(fx->shape, fy->shape);
  int min_index = std::max(fx->min_index, fy->min_index);
  if (shape.empty()) return {Principal{GroupSig{}}};
  return {PrimeFamily{std::move(shape), min_index}};
}

}  // namespace

Downset downset_intersect(const Downset& a, const Downset& b) {
  Downset out;
  for (const auto& x : a.parts) {
    for (const auto& y : b.parts) {
      auto pieces = intersect_parts(x, y);
      out.parts.insert(out.parts.end(), pieces.begin(), pieces.end());
    }
  }
  return out;
}

bool downset_subseteq(const Downset& a, const Downset& b) {
  for (const auto& part : a.parts) {
    if (const auto* pr = std::get_if<Principal>(&part)) {
      if (!downset_contains(b, pr->g)) return false;
    } else if (const auto* tw = std::get_if<ExpTower>(&part)) {
      int k = 1 + std::max({desc_max_entry(b), exp_of(tw->base), 1});
      if (!downset_contains(
              b, tower_extension(tw->base, tw->prime_index, k))) {
        return false;
      }
    } else {
      const auto& fam = std::get<PrimeFamily>(part);
      bool tail_covered = false;
      for (const auto& bp : b.parts) {
        if (const auto* bf = std::get_if<PrimeFamily>(&bp)) {
          if (part_leq(fam.shape, bf->shape)) tail_covered = true;
        }
      }
      if (!tail_covered) return false;
      int last = 1 + std::max(desc_max_prime_index(b), fam.min_index);
      for (int m = fam.min_index; m <= last; ++m) {
        GroupSig g;
        g.torsion[m] = fam.shape;
        if (!downset_contains(b, g)) return false;
      }
    }
  }
  return true;
}

bool pf_is_z_closed(const PFDownset& d) {
  const Downset* branches[] = {&d.d1, &d.d2, &d.d3};
  for (int i = 0; i < 3; ++i) {
    if (!downset_subseteq(*branches[i], d.d0)) {
      throw Error(Err::ContainmentViolation,
                  "branch " + std::to_string(i + 1) +
                      " is not contained in the root branch");
    }
  }
  return is_z_closed(d.d0).closed && is_z_closed(d.d1).closed &&
         is_z_closed(d.d2).closed && is_z_closed(d.d3).closed;
}

long long sig_group_order(const GroupSig& a) {
  long long order = 1;
  for (const auto& [n, p] : a.torsion) {
    long long prime = nth_prime(n);
    for (int e : p) {
      for (int i = 0; i < e; ++i) {
        if (order > (1LL << 40)) {
          throw Error(Err::CapExceeded, "group order overflows the cap");
        }
        order *= prime;
      }
    }
  }
  return order;
}

FinRL sig_to_algebra(const GroupSig& a, ZKind kind) {
  if (a.flag != 0) {
    throw Error(Err::InfiniteGroup,
                "signature names an infinite group; no finite table exists");
  }
  if (sig_group_order(a) > 4096) {
    throw Error(Err::CapExceeded, "group too large to materialize");
  }
  Monoid g = make_cyclic_group(1);
  for (const auto& [n, p] : a.torsion) {
    long long prime = nth_prime(n);
    for (int e : p) {
      long long q = 1;
      for (int i = 0; i < e; ++i) q *= prime;
      g = monoid_product(g, make_cyclic_group(static_cast<int>(q)));
    }
  }
  Monoid withzero = adjoin_zero(g);
  return make_rab(withzero, withzero.n - 1, kind);
}

namespace {

/// Mixed-radix abelian group from a signature: list of cyclic factor sizes.
std::vector<int> cyclic_factors(const GroupSig& a) {
  std::vector<int> out;
  for (const auto& [n, p] : a.torsion) {
    long long prime = nth_prime(n);
    for (int e : p) {
      long long q = 1;
      for (int i = 0; i < e; ++i) q *= prime;
      out.push_back(static_cast<int>(q));
    }
  }
  return out;
}

}  // namespace

bool embeds_brute(const GroupSig& a, const GroupSig& b) {
  long long na = sig_group_order(a);
  long long nb = sig_group_order(b);
  if (na > 64 || nb > 64) {
    throw Error(Err::CapExceeded, "oracle restricted to order <= 64");
  }
  if (a.flag > b.flag) return false;
  std::vector<int> fa = cyclic_factors(a);
  std::vector<int> fb = cyclic_factors(b);
  const int nh = static_cast<int>(nb);

  // Element encoding of the target group and its addition table.
  std::vector<std::vector<int>> elems;
  {
    std::vector<int> v(fb.size(), 0);
    while (true) {
      elems.push_back(v);
      std::size_t i = 0;
      while (i < fb.size() && ++v[i] == fb[i]) v[i++] = 0;
      if (i == fb.size()) break;
    }
  }
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < nh; ++i) index[elems[i]] = i;
  std::vector<int> add(static_cast<std::size_t>(nh) * nh);
  for (int i = 0; i < nh; ++i) {
    for (int j = 0; j < nh; ++j) {
      std::vector<int> s(fb.size());
      for (std::size_t c = 0; c < fb.size(); ++c) {
        s[c] = (elems[i][c] + elems[j][c]) % fb[c];
      }
      add[i * nh + j] = index[s];
    }
  }
  std::vector<int> order(nh, 1);
  for (int i = 0; i < nh; ++i) {
    int acc = i;
    int k = 1;
    while (acc != 0) {
      acc = add[acc * nh + i];
      ++k;
    }
    order[i] = k;
  }

  // Close a subgroup bitset under addition with a new element.
  auto span_with = [&](std::uint64_t span, int g) {
    std::vector<int> queue = {g};
    span |= std::uint64_t{1} << g;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (int y = 0; y < nh; ++y) {
        if (!((span >> y) & 1)) continue;
        int s = add[x * nh + y];
        if (!((span >> s) & 1)) {
          span |= std::uint64_t{1} << s;
          queue.push_back(s);
        }
      }
    }
    return span;
  };

  std::set<std::pair<std::size_t, std::uint64_t>> failed;
  std::function<bool(std::size_t, std::uint64_t, long long)> dfs =
      [&](std::size_t level, std::uint64_t span, long long size) -> bool {
    if (level == fa.size()) return true;
    if (failed.count({level, span})) return false;
    long long want = size * fa[level];
    for (int g = 0; g < nh; ++g) {
      if (fa[level] % order[g] != 0) continue;  // image order must divide
      std::uint64_t next = span_with(span, g);
      if (std::popcount(next) != want) continue;  // injectivity forces this
      if (dfs(level + 1, next, want)) return true;
    }
    failed.insert({level, span});
    return false;
  };
  std::uint64_t unit_span = 1;  // the zero element has index 0
  return dfs(0, unit_span, 1);
}

std::vector<GroupSig> all_sigs_with_order_leq(long long bound) {
  if (bound < 1) {
    throw Error(Err::SemanticError, "order bound must be >= 1");
  }
  std::vector<GroupSig> out;
  // Choose, prime index by prime index, a (possibly empty) partition whose
  // prime-power cost fits the remaining multiplicative budget.
  std::function<void(int, long long, GroupSig)> per_prime =
      [&](int idx, long long budget, GroupSig current) {
        long long p = nth_prime(idx);
        if (p > budget) {
          out.push_back(std::move(current));
          return;
        }
        per_prime(idx + 1, budget, current);  // no torsion at this prime
        std::function<void(Partition, long long)> grow =
            [&](Partition entries, long long room) {
              int maxe = entries.empty() ? 1 << 20 : entries.back();
              for (int e = 1; e <= maxe; ++e) {
                long long q = 1;
                bool fits = true;
                for (int i = 0; i < e; ++i) {
                  if (q > room / p) {
                    fits = false;
                    break;
                  }
                  q *= p;
                }
                if (!fits) break;
                Partition next = entries;
                next.push_back(e);  // entries stay weakly decreasing
                GroupSig sig = current;
                sig.torsion[idx] = next;
                per_prime(idx + 1, room / q, sig);
                grow(next, room / q);
              }
            };
        grow({}, budget);
      };
  per_prime(1, bound, GroupSig{});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace urlat
