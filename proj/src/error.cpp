// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.

#include "urlat/error.hpp"

#include <sstream>

namespace urlat {

const char* err_name(Err code) {
  switch (code) {
    case Err::NotAPoset: return "NotAPoset";
    case Err::NotALattice: return "NotALattice";
    case Err::NotAssociative: return "NotAssociative";
    case Err::NotIdentity: return "NotIdentity";
    case Err::NotOrderPreserving: return "NotOrderPreserving";
    case Err::NoMaximum: return "NoMaximum";
    case Err::UnboundVariable: return "UnboundVariable";
    case Err::UnboundedConstant: return "UnboundedConstant";
    case Err::ZeroNotAbsorbing: return "ZeroNotAbsorbing";
    case Err::NotTopCancellative: return "NotTopCancellative";
    case Err::InvalidFactor: return "InvalidFactor";
    case Err::CocycleInvalid: return "CocycleInvalid";
    case Err::NotCancellative: return "NotCancellative";
    case Err::NotMxShaped: return "NotMxShaped";
    case Err::ClassificationViolation: return "ClassificationViolation";
    case Err::NotBounded: return "NotBounded";
    case Err::NotCompact: return "NotCompact";
    case Err::HypothesesFail: return "HypothesesFail";
    case Err::BadPartition: return "BadPartition";
    case Err::CapExceeded: return "CapExceeded";
    case Err::EmbeddingFailure: return "EmbeddingFailure";
    case Err::InfiniteGroup: return "InfiniteGroup";
    case Err::ContainmentViolation: return "ContainmentViolation";
    case Err::NotRepresentable: return "NotRepresentable";
    case Err::SyntaxError: return "SyntaxError";
    case Err::SemanticError: return "SemanticError";
  }
  return "UnknownError";
}

namespace {
std::string format_message(Err code, const std::string& detail,
                           const std::vector<int>& witness) {
  std::ostringstream os;
  os << err_name(code) << ": " << detail;
  if (!witness.empty()) {
    os << " [witness:";
    for (int w : witness) os << ' ' << w;
    os << ']';
  }
  return os.str();
}
}  // namespace

Error::Error(Err code, std::string detail, std::vector<int> witness)
    : std::runtime_error(format_message(code, detail, witness)),
      code_(code),
      detail_(std::move(detail)),
      witness_(std::move(witness)) {}

}  // namespace urlat
