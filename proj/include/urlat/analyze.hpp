// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Analysis of finite residuated lattices:
//  * compute_uz / decompose_mx: recognise algebras living on a bounded
//    antichain lattice and recover the construction data (a cancellative
//    monoid with zero plus a glued kind) they came from.
//  * url_flags: order-shape flags (unilinearity and friends) and size stats.
//  * eval_discriminator / check_discriminator: the ternary discriminator
//    term on bounded algebras.
//  * comparability_quotient / reconstruct_cocycle: factor the middle of a
//    compact algebra by comparability and try to rebuild it as a twisted
//    product over a residuated chain.
//  * check_knotted / check_weak_commutativity: power and exchange identities.
//  * check_conjugate_equations: the join-of-conjugates equation schemes that
//    axiomatise the generated classes, checked up to a conjugation depth.
//  * enumerate_mx: exhaustive enumeration of all algebras on the bounded
//    antichain lattice of a given width, up to isomorphism.

#ifndef URLAT_ANALYZE_HPP
#define URLAT_ANALYZE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "urlat/construct.hpp"
#include "urlat/finalg.hpp"

namespace urlat {

/// Partition of the middle of an antichain-based algebra by the action of
/// top: U = {x : x*top = top}, Z = {x : x*top = x}.
struct UZPartition {
  std::vector<int> U;  ///< sorted carrier indices
  std::vector<int> Z;  ///< sorted carrier indices
  ZKind kind = ZKind::BotOnly;
};

/// Computes the U/Z partition and verifies the structural facts that hold
/// in every algebra of this shape:
/// top is central; U with top is a submonoid, cancellative off top; Z with
/// bottom is one of the four glued kinds; mixed products collapse to the
/// glued factor.  Raises NotMxShaped (the carrier is not a bounded antichain
/// lattice) or ClassificationViolation (a verified clause fails — for valid
/// residuated lattices this indicates an implementation bug).
UZPartition compute_uz(const FinRL& R);

/// Construction data recovered from an antichain-based algebra.
struct ABDecomposition {
  Monoid A;           ///< U plus top, with top relabelled last
  int zero = 0;       ///< index of the zero inside A (always A.n - 1)
  ZKind kind = ZKind::BotOnly;
  /// witness[i] = source index of element i of make_rab(A, zero, kind);
  /// verified to be an isomorphism before returning.
  std::vector<int> witness;
};

ABDecomposition decompose_mx(const FinRL& R);

/// Order-shape flags and size statistics.
struct URLFlags {
  bool is_unilinear = false;   ///< incomparable pairs meet at bottom, join at top
  bool is_linear = false;      ///< the order is total
  bool top_central = false;    ///< x*(u v v) = (u v v)*x for incomparable u, v
  bool top_unital = false;     ///< x*(u v v) = u v v = (u v v)*x or x = u ^ v
  bool rigorously_compact = false;  ///< bounded and top absorbs off bottom
  bool compact = false;  ///< unilinear, top-unital, middle closed under *
  int height = 0;        ///< elements in a longest chain
  int width = 0;         ///< elements in a largest antichain
};

URLFlags url_flags(const FinRL& R);

/// The candidate ternary discriminator term evaluated at (x, y, z); built
/// from the switching term r and the bi-division equality test.  Raises
/// NotBounded when the algebra lacks a bound constant the term needs.
int eval_discriminator(const FinRL& R, int x, int y, int z);

/// Outcome of testing the discriminator behaviour on all triples.
struct DiscriminatorReport {
  bool is_discriminator = false;
  std::array<int, 3> witness{};  ///< first failing triple when not
  int value = -1;                ///< term value at the witness
};

DiscriminatorReport check_discriminator(const FinRL& R);

/// The middle of a compact algebra factored by comparability.
struct ComparabilityQuotient {
  std::vector<std::vector<int>> classes;  ///< chains of carrier indices, sorted
  std::vector<int> class_of;              ///< carrier index -> class id (-1 for bounds)
  Monoid K;                               ///< quotient monoid on class ids
  int unit_class = 0;                     ///< class of the unit (= K.unit)
  bool congruence = false;     ///< comparability is a multiplication congruence
  bool cancellative = false;   ///< quotient monoid is cancellative
  bool admissible = false;     ///< every class has a representative v with vH = class = Hv
  bool k_cancellative = false; ///< every class has a representative acting injectively on H
};

/// Raises NotCompact when the algebra is not compact or its unit is a bound.
ComparabilityQuotient comparability_quotient(const FinRL& R);

/// A successful rebuild of R as a twisted product.
struct Reconstruction {
  CocycleData data;
  FinRL rebuilt;
  std::vector<int> iso;  ///< carrier map R -> rebuilt, verified
};

/// Searches representative selections (lexicographically least valid one
/// wins) for twisting data whose extension is isomorphic to R.  Raises
/// HypothesesFail naming the failing hypothesis (quotient flags, the unit
/// class failing to be a residuated chain, or no selection admitting a
/// factor table).
Reconstruction reconstruct_cocycle(const FinRL& R);

/// Checks x^m <= x^n for all x.  Raises BadPartition when m = n or either
/// exponent is negative.
bool check_knotted(const FinRL& R, int m, int n);

/// Checks the exchange identity determined by exponents a = (a0, ..., ak):
/// x y1 x y2 ... yk x  =  x^{a0} y1 x^{a1} ... yk x^{ak} for all values.
/// Requires sum(a) = k + 1 with not every entry 1; raises BadPartition.
bool check_weak_commutativity(const FinRL& R, const std::vector<int>& a);

enum class EqScheme { Srl, M, Mg };

/// Result of checking a join-of-conjugates equation scheme up to depth d.
struct ConjugateCheck {
  bool ok = false;
  int depth = 0;
  std::string equation;      ///< which equation of the scheme failed
  std::vector<int> assignment;  ///< failing variable assignment
  std::vector<int> values;      ///< chosen conjugate values whose join misses 1
};

/// Checks the chosen scheme with conjugation maps up to depth `depth`
/// (depth 0 contributes the map a -> a ^ 1; each further level composes a
/// one-step conjugation by an arbitrary element).  "ok" means: for every
/// assignment and every choice of conjugates the join equals 1.
ConjugateCheck check_conjugate_equations(const FinRL& R, EqScheme scheme,
                                         int depth = 2);

/// Enumerates all residuated lattices on the bounded antichain lattice with
/// nX middles, up to isomorphism, deterministically (independent of `jobs`).
/// Raises CapExceeded when more than `cap` classes are found.
std::vector<FinRL> enumerate_mx(int nX,
                                std::optional<long long> cap = std::nullopt,
                                int jobs = 1);

/// True iff every element satisfies x <= unit.
bool is_integral(const FinRL& R);

}  // namespace urlat

#endif  // URLAT_ANALYZE_HPP
