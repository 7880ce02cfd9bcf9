// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Core representation of finite residuated lattices and the validators that
// establish one from raw tables.
//
// A finite residuated lattice is a finite set {0, ..., n-1} carrying
//   * a lattice order (leq matrix with meet/join tables),
//   * a monoid multiplication with unit, and
//   * two division tables adjoint to multiplication:
//       mul(x,y) <= z   iff   y <= ldiv(x,z)   iff   x <= rdiv(z,y).
// ldiv(x,z) is the largest y with x*y <= z; rdiv(z,x) is the largest y with
// y*x <= z.  A finite lattice always has a least and a greatest element; the
// optional bounds are kept for format compatibility and checked by the law
// report.
//
// It is possible to:
//  * validate an order matrix into meet/join tables (validate_order),
//  * validate a multiplication table (check_monoid),
//  * derive the division tables by maximum scan (derive_residuals),
//  * run the complete ordered law report (check_residuated_lattice),
//  * evaluate terms over the signature (eval_term),
//  * search for an isomorphism between two algebras (find_isomorphism),
//  * restrict to a subset as a partial algebra (induced_partial).

#ifndef URLAT_FINALG_HPP
#define URLAT_FINALG_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "urlat/error.hpp"

namespace urlat {

/// Finite residuated lattice over indices 0..n-1.  All binary tables are
/// flattened row-major (entry for (x, y) at index x*n + y).
struct FinRL {
  int n = 0;
  std::vector<std::uint8_t> leq;  ///< leq[x*n+y] == 1 iff x <= y
  std::vector<int> meet;          ///< meet[x*n+y] = x AND y
  std::vector<int> join;          ///< join[x*n+y] = x OR y
  std::vector<int> mul;           ///< mul[x*n+y] = x * y
  std::vector<int> ldiv;          ///< ldiv[x*n+z] = x \ z (largest y, x*y <= z)
  std::vector<int> rdiv;          ///< rdiv[z*n+x] = z / x (largest y, y*x <= z)
  int unit = 0;
  std::optional<int> bot;  ///< least element when present
  std::optional<int> top;  ///< greatest element when present
  std::vector<std::string> names;  ///< optional display labels (empty or n)

  bool le(int x, int y) const { return leq[x * n + y] != 0; }
  int mt(int x, int y) const { return meet[x * n + y]; }
  int jn(int x, int y) const { return join[x * n + y]; }
  int prod(int x, int y) const { return mul[x * n + y]; }
  int ld(int x, int z) const { return ldiv[x * n + z]; }
  int rd(int z, int x) const { return rdiv[z * n + x]; }
};

/// Lattice data recovered from a bare order matrix.
struct LatticeTables {
  int n = 0;
  std::vector<int> meet;
  std::vector<int> join;
  std::optional<int> bot;
  std::optional<int> top;
};

/// Checks that `leq` (n x n, row-major) is a lattice order and returns the
/// meet/join tables and the bounds.  Raises NotAPoset (witness: offending
/// element or pair/triple) or NotALattice (witness: the pair without an
/// infimum or supremum).
LatticeTables validate_order(int n, const std::vector<std::uint8_t>& leq);

/// Checks that `mul` with `unit` is a monoid table.  Raises NotIdentity
/// (witness: the element moved by the unit) or NotAssociative (witness: the
/// first offending triple).
void check_monoid(int n, const std::vector<int>& mul, int unit);

/// Division tables computed from order and multiplication.
struct Residuals {
  std::vector<int> ldiv;
  std::vector<int> rdiv;
};

/// Computes both division tables by scanning for maxima of the solution sets
/// {y : x*y <= z} and {y : y*x <= z}.  Raises NotOrderPreserving (witness:
/// (z, x, y) with x <= y but z*x !<= z*y or x*z !<= y*z) or NoMaximum
/// (witness: (x, z) whose solution set is empty or has no greatest element).
Residuals derive_residuals(int n, const std::vector<std::uint8_t>& leq,
                           const std::vector<int>& mul);

/// One line of the law report.
struct LawCheck {
  std::string law;           ///< stable law name
  bool pass = false;
  std::vector<int> witness;  ///< first lexicographic counterexample if !pass
  std::string note;          ///< short human-readable detail
};

/// Ordered law report for a candidate algebra.
struct LawReport {
  std::vector<LawCheck> laws;
  bool all_pass() const;
  const LawCheck* first_failure() const;
};

/// Runs the complete ordered list of defining laws against the tables of
/// `R` and reports each with the first lexicographic witness on failure.
/// Never throws on law failures; malformed table shapes fail the leading
/// "shape" law.
LawReport check_residuated_lattice(const FinRL& R);

/// Terms over the residuated-lattice signature with integer variables.
struct Term {
  enum class Kind { Var, One, Bot, Top, Meet, Join, Mul, Ldiv, Rdiv };
  Kind kind = Kind::One;
  int var = -1;  ///< variable id when kind == Var
  std::shared_ptr<const Term> lhs, rhs;
};

Term t_var(int id);
Term t_one();
Term t_bot();
Term t_top();
Term t_meet(Term a, Term b);
Term t_join(Term a, Term b);
Term t_mul(Term a, Term b);
Term t_ldiv(Term a, Term b);  ///< a \ b
Term t_rdiv(Term a, Term b);  ///< a / b

/// Evaluates `t` in `R` under `assign` (assign[id] = element; id out of
/// range or negative entry means unbound).  Raises UnboundVariable (witness:
/// variable id) or UnboundedConstant when the term uses a bound constant the
/// algebra does not carry.
int eval_term(const FinRL& R, const Term& t, const std::vector<int>& assign);

/// Searches for an isomorphism A -> B preserving order, multiplication,
/// unit and bounds (divisions and lattice operations follow).  Candidate
/// maps are pruned by per-element invariants (ideal/filter sizes,
/// idempotency, cyclic index/period).  Returns the mapping as a vector over
/// A's indices, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const FinRL& A,
                                                 const FinRL& B);

/// Subset of a parent algebra with every operation restricted; an operation
/// instance is defined exactly when the parent result lies in the subset.
struct PartialAlgebra {
  FinRL parent;
  std::vector<int> subset;  ///< sorted parent indices

  enum class Op { Meet, Join, Mul, Ldiv, Rdiv };

  bool contains(int parent_elem) const;
  /// Parent-level result of `op` on parent elements x, y.
  int parent_value(Op op, int x, int y) const;
  /// Defined iff the parent value lies in the subset (x, y must be members).
  bool defined(Op op, int x, int y) const;
};

/// Restriction of `A` to `subset` (deduplicated, sorted; every entry must be
/// a valid index).
PartialAlgebra induced_partial(const FinRL& A, std::vector<int> subset);

// ---------------------------------------------------------------------------
// Assembly helpers shared by constructions, search and file loading.
// ---------------------------------------------------------------------------

/// Builds a FinRL from order + multiplication: validates both, derives the
/// divisions, fills meet/join/bounds.  Raises the validator errors.
FinRL assemble_algebra(int n, std::vector<std::uint8_t> leq,
                       std::vector<int> mul, int unit,
                       std::vector<std::string> names = {});

/// Same, but installs the caller's closed-form division tables after
/// verifying they agree entrywise with derive_residuals.  `mismatch_code`
/// is raised (witness: (x, z) plus both values) if they differ.
FinRL assemble_algebra_with_divisions(int n, std::vector<std::uint8_t> leq,
                                      std::vector<int> mul, int unit,
                                      std::vector<int> ldiv,
                                      std::vector<int> rdiv,
                                      Err mismatch_code,
                                      std::vector<std::string> names = {});

/// Relabels the algebra by permutation `perm` (element i becomes perm[i]).
FinRL apply_permutation(const FinRL& R, const std::vector<int>& perm);

/// Componentwise direct product (order, operations and bounds pairwise).
FinRL direct_product(const FinRL& A, const FinRL& B);

}  // namespace urlat

#endif  // URLAT_FINALG_HPP
