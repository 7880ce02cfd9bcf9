// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Constructions of finite residuated lattices whose carrier is a bounded
// antichain lattice (a set X of pairwise incomparable elements plus bottom
// and top) or a bounded union of chains:
//
//  * make_mx_lattice:     the bounded antichain lattice itself.
//  * make_rab:            the algebra determined by a cancellative-off-zero
//                         monoid A (zero playing top) plus one of four small
//                         semigroups glued in below top (ZKind).
//  * make_mg:             the special case where A is an abelian group with
//                         a zero adjoined and the glued part is empty.
//  * make_cyclic_url:     the family built on the monogenic monoid with
//                         index r and period s, in its two orientations.
//  * make_cocycle_extension: the twisted product of a residuated chain A by
//                         a cancellative monoid K along (phi, f) data.
//
// Every constructor computes its division tables in closed form and
// cross-checks them entrywise against the independent maximum-scan
// derivation before returning; a mismatch raises a structured error (this
// would indicate an implementation bug, not bad input).

#ifndef URLAT_CONSTRUCT_HPP
#define URLAT_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "urlat/finalg.hpp"

namespace urlat {

/// Plain finite monoid given by a flattened table.
struct Monoid {
  int n = 0;
  std::vector<int> mul;  ///< row-major n x n
  int unit = 0;

  int prod(int x, int y) const { return mul[x * n + y]; }
};

/// Shape of the part glued in strictly below top (the "Z part"):
///   BotOnly        — nothing glued (two-element Boolean block),
///   NilElement     — one element b with b*b = bottom (three-element MV block),
///   TwoIdempotents — b1, b2 idempotent with b1*b2 = b2*b1 = bottom
///                    (four-element Boolean block),
///   IdemElement    — one element b with b*b = b (three-element Heyting block).
enum class ZKind : int {
  BotOnly = 0,
  NilElement = 1,
  TwoIdempotents = 2,
  IdemElement = 3,
};

/// Bounded antichain lattice on nX middle elements (carrier size nX + 2;
/// bottom = 0, top = nX + 1; distinct middles meet to bottom, join to top).
LatticeTables make_mx_lattice(int nX);

/// True iff `zero` is absorbing in A and A is cancellative off zero
/// (x*y = x*z != zero implies y = z, and symmetrically).  Raises
/// ZeroNotAbsorbing (witness: the element not absorbed) if `zero` is not
/// absorbing; returns false with no throw when only cancellation fails.
bool check_zero_cancellative(const Monoid& A, int zero);

/// Builds the residuated lattice determined by (A, zero, kind):
/// carrier = bottom + (A minus zero) + glued part + top, with A's zero
/// relabelled to top.  Multiplication: A acts as itself (zero = top); the
/// glued part multiplies by its kind table; mixed products x*b = b*x = b for
/// x in A, b in the glued part; bottom absorbing.  Divisions installed in
/// closed form.  Raises NotTopCancellative when A fails
/// check_zero_cancellative (or ZeroNotAbsorbing passes through), and
/// NotIdentity/NotAssociative for a malformed A.
FinRL make_rab(const Monoid& A, int zero, ZKind kind);

/// make_rab specialised to A = (abelian group with zero adjoined) and
/// kind = BotOnly.  `invariant_factors` lists cyclic factor sizes (each
/// >= 2; empty list = trivial group, giving the three-element chain).
/// Raises InvalidFactor (witness: position) on a factor < 2.
FinRL make_mg(const std::vector<int>& invariant_factors);

/// Index normal form of the monogenic monoid with index r and period s:
/// n for n < r + s, else r + ((n - r) mod s).
int cyclic_index(long long n, int r, int s);

/// Monogenic monoid a^0, ..., a^{r+s-1} with a^i * a^j = a^{cyclic_index(i+j)}.
Monoid make_cyclic_monoid(int r, int s);

enum class Orientation { Up, Down };

/// The two algebras on the monogenic monoid plus bounds (r >= 0, s >= 1,
/// r + s >= 2; carrier size r + s + 2).  Middle order: a^i <= a^j iff
/// j = i + ms (Up) or i = j + ms (Down), m >= 0.  Top is absorbing off
/// bottom.  Divisions installed in closed form for each orientation.
FinRL make_cyclic_url(int r, int s, Orientation orient);

/// Result of checking a unary map as a residuated monoid endomorphism.
struct ResEndCheck {
  bool ok = false;
  std::string reason;        ///< first failing condition when !ok
  std::vector<int> witness;
  std::vector<int> residual;  ///< residual table g*(y) = max{x : g(x) <= y}
};

/// Checks that `g` (table over A's carrier) preserves the unit, the order
/// and multiplication, and that every set {x : g(x) <= y} has a maximum;
/// returns the residual table on success.  The residual is reported as-is
/// (it need not be an endomorphism itself).
ResEndCheck check_res_end(const FinRL& A, const std::vector<int>& g);

/// Twisting data for a cocycle extension: a cancellative monoid K, a
/// residuated chain A, endomorphism tables phi[k] and a factor table
/// f[k1*K.n + k2] of invertible elements of A.
struct CocycleData {
  Monoid K;
  FinRL A;
  std::vector<std::vector<int>> phi;
  std::vector<int> f;
};

/// Validates the data against the defining conditions; one report line per
/// condition, first lexicographic witness on failure.  Law names:
/// k_monoid, k_cancellative, a_residuated_chain, phi_shape, f_shape,
/// phi_unit_identity, phi_res_end, f_invertible, f_normalized,
/// phi_twisted_composition, cocycle_equation.
LawReport check_cocycle(const CocycleData& data);

/// The twisted product: carrier = bottom + A x K pairs + top; pairs ordered
/// within equal K-component by A's order; multiplication
/// (a1,k1)*(a2,k2) = (a1 * phi[k1](a2) * f(k1,k2)^{-1}, k1 k2); top
/// absorbing off bottom.  Divisions installed in closed form.  Raises
/// CocycleInvalid (detail: first failing condition) or NotCancellative.
FinRL make_cocycle_extension(const CocycleData& data);

// ---------------------------------------------------------------------------
// Small monoid helpers used by constructions, analysis and the test catalog.
// ---------------------------------------------------------------------------

/// Cyclic group of order n (n >= 1).
Monoid make_cyclic_group(int n);

/// Direct product of two monoids (indices a*B.n + b).
Monoid monoid_product(const Monoid& A, const Monoid& B);

/// Adjoins a fresh absorbing zero as the last element.
Monoid adjoin_zero(const Monoid& A);

/// Isomorphism search between monoids with designated elements pinned
/// (unit -> unit; when given, zero -> zero).
bool monoids_isomorphic(const Monoid& A, const Monoid& B,
                        std::optional<int> zeroA = std::nullopt,
                        std::optional<int> zeroB = std::nullopt);

}  // namespace urlat

#endif  // URLAT_CONSTRUCT_HPP
