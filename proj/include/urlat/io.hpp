// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Textual and JSON serialization: the `frl` algebra file format, the group
// signature grammar, and the downset-description grammar.  Parsing errors
// are structured: SyntaxError carries (line, column, expected), and
// SemanticError names the violated law together with its witness.

#ifndef URLAT_IO_HPP
#define URLAT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "urlat/finalg.hpp"
#include "urlat/varieties.hpp"

namespace urlat {

/// Syntactically parsed algebra file, before any law checking.
struct RawAlgebra {
  int n = 0;
  std::vector<std::uint8_t> leq;
  std::vector<int> mul;
  int unit = 0;
  std::optional<int> bot, top;
  std::vector<std::string> names;
  std::optional<std::vector<int>> ldiv, rdiv;
};

/// Parses the textual `frl` format or its JSON mirror (detected by a
/// leading '{').  Throws SyntaxError only.
RawAlgebra parse_frl_raw(const std::string& text);

/// Builds a full algebra from a raw file, deriving divisions when absent,
/// and verifies every law; the first violated law is thrown as
/// SemanticError (detail = law name, witness preserved).
FinRL finalize_algebra(const RawAlgebra& raw);

/// Lenient assembly for reporting: builds best-effort tables (never throws
/// on law violations) and returns the full law report alongside them.
struct CheckedAlgebra {
  FinRL algebra;
  LawReport report;
};
CheckedAlgebra check_raw_algebra(const RawAlgebra& raw);

/// parse_frl = finalize_algebra(parse_frl_raw(text)).
FinRL parse_frl(const std::string& text);

/// Deterministic renderers; parse(render(A)) == A field-for-field.
std::string render_frl(const FinRL& A);
std::string render_frl_json(const FinRL& A);

/// Group signature grammar: `(flag; p2:[2,1]; p3:[3,1,1])`, prime-tagged
/// partitions after the rank flag; `(1;)` and `(0)` denote empty torsion.
GroupSig parse_sig(const std::string& text);
std::string render_sig(const GroupSig& g);

/// Downset grammar: `(union PART*)` or a bare PART, with
/// PART = `(principal SIG)` | `(tower SIG p)` | `(family [k,...] p)`
/// where p is a prime value naming the tower prime / least family prime.
Downset parse_downset(const std::string& text);
std::string render_downset(const Downset& d);

}  // namespace urlat

#endif  // URLAT_IO_HPP
