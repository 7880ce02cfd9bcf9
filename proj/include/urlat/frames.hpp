// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Residuated-frame engine: from a finite residuated lattice A and a subset B
// of its carrier, build the frame (W, W x B x W, N) over the submonoid W
// generated by B, compute Galois-closed subsets of W, assemble the Galois
// algebra W+, and verify that the partial subalgebra induced by B embeds
// into W+ (the finite-embeddability construction at finite scale).

#ifndef URLAT_FRAMES_HPP
#define URLAT_FRAMES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "urlat/finalg.hpp"

namespace urlat {

/// A residuated frame over a finite residuated lattice.
///
/// `W` lists the carrier of the submonoid generated by `B` (ascending A
/// indices); subsets of W are dense bit rows (`std::uint64_t`, bit i =
/// W[i]), so |W| is capped at 64.  `traces` holds the distinct basic closed
/// sets {x in W : y x z <= b}, one bit row per distinct value over all
/// triples (y, b, z) in W x B x W.
struct Frame {
  FinRL A;
  std::vector<int> B;
  std::vector<int> W;
  std::vector<std::uint64_t> traces;
  /// W-position multiplication: wmul[i * |W| + j] = position of W[i]*W[j].
  std::vector<int> wmul;
  int unit_pos = 0;  ///< position of the unit of A inside W

  std::uint64_t full_mask() const {
    return W.size() == 64 ? ~std::uint64_t{0}
                          : ((std::uint64_t{1} << W.size()) - 1);
  }
};

/// Builds the frame for `A` over the subset `B` of carrier indices.
///
/// `B` must be duplicate-free, in range, and contain the bottom, the unit,
/// and the top of `A` (SemanticError otherwise; NotBounded if `A` declares
/// no bounds).  Throws CapExceeded when the generated submonoid has more
/// than 64 elements.
Frame build_frame(const FinRL& A, std::vector<int> B);

/// Galois closure of a subset of W (given as a bit row): the intersection
/// of all traces containing it, or all of W when no trace does.
std::uint64_t galois_closure(const Frame& fr, std::uint64_t X);

/// The Galois algebra of a frame together with its closed-set carrier.
struct GaloisAlgebra {
  Frame frame;
  /// All Galois-closed subsets of W in index-lexicographic order (by
  /// ascending member lists); positions in this vector are the carrier
  /// indices of `algebra`.
  std::vector<std::uint64_t> closed;
  FinRL algebra;
  /// image[i] = carrier index of the closure of {B[i]} in `algebra`.
  std::vector<int> image;
};

/// Enumerates the closed sets, assembles the Galois algebra, and
/// cross-checks the set-level division tables against derived residuals
/// (ClassificationViolation on mismatch; CapExceeded if more than 4096
/// closed sets arise).
GaloisAlgebra build_galois_algebra(const Frame& fr);

/// Result of checking that b -> closure({b}) embeds the partial subalgebra
/// induced by B into the Galois algebra.
struct EmbeddingReport {
  bool injective = false;
  bool unit_ok = false;
  bool bot_ok = false;
  bool top_ok = false;
  /// Number of defined partial-operation instances verified, indexed by
  /// PartialAlgebra::Op order (meet, join, mul, ldiv, rdiv).
  std::vector<int> checked = std::vector<int>(5, 0);
  bool ok = false;
};

/// Verifies the embedding; throws EmbeddingFailure with a witness on any
/// violated instance (the closure algebra is built so that every defined
/// instance is preserved, so a throw indicates a defect).  Witness layout:
/// {op, b1, b2} with op in meet=0,
/// join=1, mul=2, ldiv=3, rdiv=4, or {-1, b1, b2} for an injectivity
/// collision.
EmbeddingReport check_fep_embedding(const GaloisAlgebra& G);

/// Convenience: build frame and algebra, then check the embedding.
EmbeddingReport check_fep_embedding(const FinRL& A, std::vector<int> B);

/// Conditional identity transfer between an algebra and an extension.
struct PreservationCheck {
  bool holds_in_source = false;
  bool holds_in_extension = false;
  /// True when the identity either fails in the source or holds in the
  /// extension (the implication the construction promises).
  bool conditional_ok = false;
};

PreservationCheck check_preservation_knotted(const FinRL& A, const FinRL& ext,
                                             int m, int n);
PreservationCheck check_preservation_weak_comm(const FinRL& A,
                                               const FinRL& ext,
                                               const std::vector<int>& exps);
PreservationCheck check_preservation_commutative(const FinRL& A,
                                                 const FinRL& ext);

bool is_commutative(const FinRL& R);

}  // namespace urlat

#endif  // URLAT_FRAMES_HPP
