// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Shared fixtures and independent oracles for the test suites and the
// acceptance runner:
//  * naive_residuals: a second, deliberately simple-minded division scan
//    used to cross-check both derive_residuals and every closed form.
//  * zc_monoids: exhaustive search for all zero-cancellative monoid tables
//    of a given size, up to isomorphism.
//  * all_residuated_chains: exhaustive search for all residuated lattices
//    whose order is a single chain.
//  * chain_decomposition_orders: every partition of a set into disjoint
//    chains, as an order matrix with bounds adjoined.
//  * small named algebras used across suites.

#ifndef URLAT_TESTS_CATALOG_HPP
#define URLAT_TESTS_CATALOG_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "urlat/analyze.hpp"
#include "urlat/construct.hpp"
#include "urlat/finalg.hpp"

namespace urlat_tests {

/// Division tables by brute scan: collect the whole solution set, then look
/// for a member above all others.  Returns nullopt when some set has no
/// greatest element (or is empty).
inline std::optional<urlat::Residuals> naive_residuals(
    int n, const std::vector<std::uint8_t>& leq, const std::vector<int>& mul) {
  auto le = [&](int x, int y) { return leq[x * n + y] != 0; };
  urlat::Residuals r;
  r.ldiv.assign(static_cast<std::size_t>(n) * n, 0);
  r.rdiv.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      std::vector<int> ls, rs;
      for (int y = 0; y < n; ++y) {
        if (le(mul[x * n + y], z)) ls.push_back(y);
        if (le(mul[y * n + x], z)) rs.push_back(y);
      }
      auto greatest = [&](const std::vector<int>& s) -> std::optional<int> {
        for (int cand : s) {
          bool above_all = true;
          for (int other : s) above_all = above_all && le(other, cand);
          if (above_all) return cand;
        }
        return std::nullopt;
      };
      auto lmax = greatest(ls);
      auto rmax = greatest(rs);
      if (!lmax || !rmax) return std::nullopt;
      r.ldiv[x * n + z] = *lmax;
      r.rdiv[z * n + x] = *rmax;
    }
  }
  return r;
}

/// All monoids on {0..n-1} with unit 0, absorbing zero n-1, cancellative off
/// the zero, up to isomorphism (the unit and the zero are pinned; the other
/// elements may be permuted).  For n = 1 the unit and the zero coincide.
inline std::vector<urlat::Monoid> zc_monoids(int n) {
  std::vector<urlat::Monoid> out;
  if (n <= 0) return out;
  const int unit = 0, zero = n - 1;
  if (n == 1) {
    out.push_back(urlat::Monoid{1, {0}, 0});
    return out;
  }
  std::vector<int> mul(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    mul[unit * n + i] = i;
    mul[i * n + unit] = i;
    mul[zero * n + i] = zero;
    mul[i * n + zero] = zero;
  }
  std::vector<std::pair<int, int>> free_cells;
  for (int i = 1; i < zero; ++i) {
    for (int j = 1; j < zero; ++j) free_cells.emplace_back(i, j);
  }
  std::set<std::vector<int>> canon_seen;
  std::vector<int> middle(std::max(0, n - 2));
  std::iota(middle.begin(), middle.end(), 1);

  auto accept = [&]() {
    urlat::Monoid a{n, mul, unit};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (a.prod(a.prod(i, j), k) != a.prod(i, a.prod(j, k))) return;
        }
      }
    }
    if (!urlat::check_zero_cancellative(a, zero)) return;
    // Canonical form: least relabelled table over middle permutations.
    std::vector<int> best;
    std::vector<int> perm(n);
    std::vector<int> arrangement = middle;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (std::size_t i = 0; i < arrangement.size(); ++i) {
        perm[middle[i]] = arrangement[i];
      }
      std::vector<int> relab(static_cast<std::size_t>(n) * n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          relab[perm[i] * n + perm[j]] = perm[a.prod(i, j)];
        }
      }
      if (best.empty() || relab < best) best = relab;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    if (canon_seen.insert(best).second) out.push_back(a);
  };

  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == free_cells.size()) {
      accept();
      return;
    }
    auto [i, j] = free_cells[idx];
    for (int v = 0; v < n; ++v) {
      mul[i * n + j] = v;
      fill(idx + 1);
    }
    mul[i * n + j] = -1;
  };
  fill(0);
  return out;
}

/// All zero-cancellative monoids of size <= max_n, up to isomorphism.
inline std::vector<urlat::Monoid> zc_monoids_up_to(int max_n) {
  std::vector<urlat::Monoid> out;
  for (int n = 1; n <= max_n; ++n) {
    auto batch = zc_monoids(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

/// All residuated lattices whose order is the chain 0 < 1 < ... < n-1.
/// Chains are order-rigid, so distinct tables are distinct isomorphism
/// classes.
inline std::vector<urlat::FinRL> all_residuated_chains(int n) {
  std::vector<urlat::FinRL> out;
  if (n <= 0) return out;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) leq[i * n + j] = 1;
  }
  for (int unit = 0; unit < n; ++unit) {
    std::vector<int> mul(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
      mul[unit * n + i] = i;
      mul[i * n + unit] = i;
      mul[0 * n + i] = 0;  // bottom absorbs in any finite residuated lattice
      mul[i * n + 0] = 0;
    }
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (i != unit && j != unit) cells.emplace_back(i, j);
      }
    }
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
      if (idx == cells.size()) {
        try {
          out.push_back(urlat::assemble_algebra(n, leq, mul, unit));
        } catch (const urlat::Error&) {
        }
        return;
      }
      auto [i, j] = cells[idx];
      for (int v = 0; v < n; ++v) {
        mul[i * n + j] = v;
        fill(idx + 1);
      }
      mul[i * n + j] = -1;
    };
    fill(0);
  }
  return out;
}

/// Every partition of {0..m-1} into disjoint nonempty chains, returned as
/// the order matrix of the bounded extension on m+2 points: new bottom at 0,
/// middle element i at index i+1, new top at m+1.  Along each chain the
/// listed order is ascending; elements of different chains are incomparable.
inline std::vector<std::vector<std::uint8_t>> chain_decomposition_orders(
    int m) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::vector<int>> chains;
  std::function<void(int)> place = [&](int elem) {
    if (elem == m) {
      const int n = m + 2;
      std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i) {
        leq[i * n + i] = 1;
        leq[0 * n + i] = 1;
        leq[i * n + (n - 1)] = 1;
      }
      for (const auto& chain : chains) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
          for (std::size_t j = i + 1; j < chain.size(); ++j) {
            leq[(chain[i] + 1) * n + (chain[j] + 1)] = 1;
          }
        }
      }
      out.push_back(std::move(leq));
      return;
    }
    // Index-based loop: the recursive call pushes and pops a chain, which
    // may reallocate the outer vector and would invalidate references.
    for (std::size_t ci = 0; ci < chains.size(); ++ci) {
      for (std::size_t pos = 0; pos <= chains[ci].size(); ++pos) {
        chains[ci].insert(chains[ci].begin() + pos, elem);
        place(elem + 1);
        chains[ci].erase(chains[ci].begin() + pos);
      }
    }
    chains.push_back({elem});
    place(elem + 1);
    chains.pop_back();
  };
  place(0);
  return out;
}

// ---------------------------------------------------------------------------
// Named small algebras.
// ---------------------------------------------------------------------------

/// Chain 0 < ... < n-1 with multiplication = meet and unit = top.
inline urlat::FinRL chain_heyting(int n) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> mul(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i <= j) leq[i * n + j] = 1;
      mul[i * n + j] = std::min(i, j);
    }
  }
  return urlat::assemble_algebra(n, leq, mul, n - 1);
}

/// Three-element chain 0 < 1 < 2 with 1*1 = 0 and unit = top.
inline urlat::FinRL mv3() {
  std::vector<std::uint8_t> leq = {1, 1, 1, 0, 1, 1, 0, 0, 1};
  std::vector<int> mul = {0, 0, 0, 0, 0, 1, 0, 1, 2};
  return urlat::assemble_algebra(3, leq, mul, 2);
}

/// Two-element Boolean algebra (also the two-element chain).
inline urlat::FinRL bool2() { return chain_heyting(2); }

/// Four-element Boolean algebra as a product of two-element ones.
inline urlat::FinRL bool4() {
  return urlat::direct_product(bool2(), bool2());
}

/// Five-element subdirectly irreducible Heyting algebra: bottom < a, b < c
/// < top with multiplication = meet.  (Indices: 0 < 1,2 < 3 < 4.)
inline urlat::FinRL heyting5() {
  const int n = 5;
  std::vector<std::uint8_t> leq(25, 0);
  auto set_le = [&](int x, int y) { leq[x * n + y] = 1; };
  for (int i = 0; i < n; ++i) {
    set_le(i, i);
    set_le(0, i);
    set_le(i, 4);
  }
  set_le(1, 3);
  set_le(2, 3);
  std::vector<int> mul(25, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int m = -1;
      for (int c = 0; c < n; ++c) {
        if (leq[c * n + x] && leq[c * n + y] &&
            (m < 0 || leq[m * n + c])) {
          m = c;
        }
      }
      mul[x * n + y] = m;
    }
  }
  return urlat::assemble_algebra(n, leq, mul, 4);
}

/// The bounded algebra of the abelian group with the given invariant
/// factors (empty list = trivial group).
inline urlat::FinRL mg(const std::vector<int>& factors) {
  return urlat::make_mg(factors);
}

/// All subsets of {0..n-1} that contain `pinned` and have at most max_size
/// elements, each returned sorted.
inline std::vector<std::vector<int>> subsets_containing(
    int n, const std::vector<int>& pinned, int max_size) {
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (std::find(pinned.begin(), pinned.end(), i) == pinned.end()) {
      rest.push_back(i);
    }
  }
  std::vector<std::vector<int>> out;
  const std::size_t limit = std::size_t{1} << rest.size();
  for (std::size_t mask = 0; mask < limit; ++mask) {
    std::vector<int> b = pinned;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (mask >> i & 1) b.push_back(rest[i]);
    }
    if (static_cast<int>(b.size()) > max_size) continue;
    std::sort(b.begin(), b.end());
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Glued-construction classes of antichain width nX: make_rab over every
/// zero-cancellative monoid and kind of fitting size, deduplicated up to
/// isomorphism.
inline std::vector<urlat::FinRL> rab_classes(int nX) {
  using urlat::ZKind;
  const ZKind kinds[] = {ZKind::BotOnly, ZKind::NilElement,
                         ZKind::TwoIdempotents, ZKind::IdemElement};
  const int glued_size[] = {0, 1, 2, 1};
  std::vector<urlat::FinRL> classes;
  for (const auto& a : zc_monoids_up_to(nX + 1)) {
    for (int k = 0; k < 4; ++k) {
      if ((a.n - 1) + glued_size[k] != nX) continue;
      urlat::FinRL r = urlat::make_rab(a, a.n - 1, kinds[k]);
      bool fresh = true;
      for (const auto& seen : classes) {
        if (urlat::find_isomorphism(seen, r)) {
          fresh = false;
          break;
        }
      }
      if (fresh) classes.push_back(std::move(r));
    }
  }
  return classes;
}

}  // namespace urlat_tests

#endif  // URLAT_TESTS_CATALOG_HPP
