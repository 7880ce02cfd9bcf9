// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Structured error type shared by every module.  Each failure mode carries a
// stable symbolic code, a human-readable detail string and, when meaningful,
// a small integer witness tuple (element indices into the offending table).

#ifndef URLAT_ERROR_HPP
#define URLAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace urlat {

enum class Err {
  // order / lattice validation
  NotAPoset,
  NotALattice,
  // monoid validation
  NotAssociative,
  NotIdentity,
  // residual derivation
  NotOrderPreserving,
  NoMaximum,
  // term evaluation
  UnboundVariable,
  UnboundedConstant,
  // constructions
  ZeroNotAbsorbing,
  NotTopCancellative,
  InvalidFactor,
  CocycleInvalid,
  NotCancellative,
  // analysis
  NotMxShaped,
  ClassificationViolation,
  NotBounded,
  NotCompact,
  HypothesesFail,
  BadPartition,
  CapExceeded,
  // frames
  EmbeddingFailure,
  // varieties
  InfiniteGroup,
  ContainmentViolation,
  NotRepresentable,
  // text formats
  SyntaxError,
  SemanticError,
};

/// Stable symbolic name of an error code (used in CLI output and tests).
const char* err_name(Err code);

/// Exception carrying a structured error.  `witness` holds element indices
/// whose meaning depends on the code (documented at each raising site).
class Error : public std::runtime_error {
 public:
  Error(Err code, std::string detail, std::vector<int> witness = {});

  Err code() const { return code_; }
  const std::string& detail() const { return detail_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  Err code_;
  std::string detail_;
  std::vector<int> witness_;
};

}  // namespace urlat

#endif  // URLAT_ERROR_HPP
