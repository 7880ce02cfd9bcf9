// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Signature combinatorics for finitely generated abelian groups: signatures
// ordered by embeddability, the exp/primes statistics, finitely
// representable downsets of the signature order with a decidable closure
// condition, and materialization of finite signatures as glued algebras.

#ifndef URLAT_VARIETIES_HPP
#define URLAT_VARIETIES_HPP

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "urlat/construct.hpp"

namespace urlat {

/// A partition: weakly decreasing positive integers.
using Partition = std::vector<int>;

/// Signature of a finitely generated abelian group, rank collapsed to a
/// one-bit flag.  `torsion` maps 1-based prime indices (1 -> 2, 2 -> 3, ...)
/// to the partition of p-power exponents; absent indices mean no p-torsion.
struct GroupSig {
  int flag = 0;
  std::map<int, Partition> torsion;

  friend bool operator==(const GroupSig& a, const GroupSig& b) {
    return a.flag == b.flag && a.torsion == b.torsion;
  }
  friend bool operator<(const GroupSig& a, const GroupSig& b) {
    if (a.flag != b.flag) return a.flag < b.flag;
    return a.torsion < b.torsion;
  }
};

/// n-th prime, 1-based (1 -> 2).  Throws SemanticError for n < 1.
long long nth_prime(int n);

/// Largest partition entry appearing anywhere in the torsion part (0 when
/// there is none); the rank flag is ignored.
int exp_of(const GroupSig& a);

/// Sorted prime indices carrying torsion.
std::vector<int> primes_of(const GroupSig& a);

/// Embeddability order: flag by <=, partitions pointwise on descending
/// entries padded with zeros, prime by prime.
bool sig_leq(const GroupSig& a, const GroupSig& b);
GroupSig sig_join(const GroupSig& a, const GroupSig& b);
GroupSig sig_meet(const GroupSig& a, const GroupSig& b);

/// Signature of the group with the given invariant factors (each >= 2,
/// InvalidFactor otherwise) times `rank` infinite cyclic factors; ranks
/// above 1 collapse to the flag, reported via `rank_collapsed`.
struct SigFromFactors {
  GroupSig sig;
  bool rank_collapsed = false;
};
SigFromFactors sig_of_invariant_factors(const std::vector<long long>& factors,
                                        int rank);

/// Downset components.  Member sets are downward closed by definition:
///  - Principal(g): all signatures <= g.
///  - ExpTower(base, n): all signatures <= base extended at prime index n
///    by one extra cyclic factor of exponent k, for any k >= 1.
///  - PrimeFamily(shape, min_index): all signatures <= (flag 0; p_m: shape)
///    for a single prime index m >= min_index.
struct Principal {
  GroupSig g;
};
struct ExpTower {
  GroupSig base;
  int prime_index = 1;
};
struct PrimeFamily {
  Partition shape;
  int min_index = 1;
};
using DownsetPart = std::variant<Principal, ExpTower, PrimeFamily>;

struct Downset {
  std::vector<DownsetPart> parts;
};

/// `base` with one extra exponent-k cyclic factor at prime index n
/// (multiset insertion into the partition).
GroupSig tower_extension(const GroupSig& base, int prime_index, int k);

bool downset_contains(const Downset& d, const GroupSig& a);

/// Closure under adjoining an infinite cyclic factor wherever the downset
/// is unbounded (in exponent or in primes) above a point: every such point
/// must also appear with the rank flag set.
struct ZClosureReport {
  bool closed = false;
  /// On failure: a point above which the downset is unbounded ...
  std::optional<GroupSig> violating;
  /// ... whose flag-lifted join is missing from the downset.
  std::optional<GroupSig> missing;
};
ZClosureReport is_z_closed(const Downset& d);

Downset downset_union(const Downset& a, const Downset& b);
/// Intersection, re-expressed inside the representable class (every case
/// reduces to principals, a tower, or a family).
Downset downset_intersect(const Downset& a, const Downset& b);
bool downset_subseteq(const Downset& a, const Downset& b);

/// A downset of the four-branch extension order (0 below 1, 2, 3; branches
/// incomparable): one component downset per branch, branches 1-3 contained
/// in branch 0.
struct PFDownset {
  Downset d0, d1, d2, d3;
};
/// ContainmentViolation when a branch escapes d0; otherwise the conjunction
/// of the four closure checks.
bool pf_is_z_closed(const PFDownset& d);

/// Materializes a finite signature (flag 0, InfiniteGroup otherwise) as the
/// glued algebra of the corresponding abelian group with block kind
/// 0..3 (CapExceeded above 4096 group elements).
FinRL sig_to_algebra(const GroupSig& a, ZKind kind);

/// Order of the group named by a finite signature (flag ignored).
long long sig_group_order(const GroupSig& a);

/// Brute-force embedding oracle on the actual groups: tries every
/// generator-image assignment of the group of `a` into the group of `b`.
bool embeds_brute(const GroupSig& a, const GroupSig& b);

/// All flag-0 signatures of groups with order <= bound, sorted.
std::vector<GroupSig> all_sigs_with_order_leq(long long bound);

}  // namespace urlat

#endif  // URLAT_VARIETIES_HPP
