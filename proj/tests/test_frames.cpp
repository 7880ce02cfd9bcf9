// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Frame suite: submonoid generation, trace-generated closure, the algebra
// of closed sets, the partial-subalgebra embedding check, and identity
// preservation into the closed-set algebra.

#include <doctest.h>

#include <algorithm>
#include <bit>

#include "catalog.hpp"
#include "urlat/analyze.hpp"
#include "urlat/construct.hpp"
#include "urlat/finalg.hpp"
#include "urlat/frames.hpp"

using namespace urlat;
using namespace urlat_tests;

TEST_SUITE("frames") {

TEST_CASE("the frame over the full carrier uses the whole monoid") {
  FinRL a = mg({2});
  Frame fr = build_frame(a, {0, 1, 2, 3});
  CHECK(fr.W == std::vector<int>{0, 1, 2, 3});
  CHECK(fr.B == std::vector<int>{0, 1, 2, 3});
  CHECK(fr.unit_pos >= 0);
  CHECK(fr.W[fr.unit_pos] == a.unit);
}

TEST_CASE("the generated submonoid is closed and minimal") {
  FinRL a = make_cyclic_url(2, 2, Orientation::Up);
  // Bounds and unit only: nothing new is generated.
  Frame f0 = build_frame(a, {0, 1, 5});
  CHECK(f0.W == std::vector<int>{0, 1, 5});
  // Adding the generator pulls in all its powers.
  Frame f1 = build_frame(a, {0, 1, 2, 5});
  CHECK(f1.W == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("build_frame validates its subset") {
  FinRL a = mg({2});
  try {
    build_frame(a, {0, 2, 3});  // missing the unit
    FAIL("expected SemanticError");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SemanticError);
  }
  try {
    build_frame(a, {0, 1, 3, 9});
    FAIL("expected SemanticError");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SemanticError);
  }
}

TEST_CASE("closure is a closure operator on every subset at desk scale") {
  FinRL a = make_cyclic_url(1, 2, Orientation::Up);
  Frame fr = build_frame(a, {0, 1, 2, 3, 4});
  const std::uint64_t full = fr.full_mask();
  for (std::uint64_t x = 0; x <= full; ++x) {
    std::uint64_t cx = galois_closure(fr, x);
    CHECK((x & ~cx) == 0);                       // extensive
    CHECK(galois_closure(fr, cx) == cx);         // idempotent
    for (std::uint64_t y = x; y <= full; y = (y + 1) | x) {
      // every y with x subseteq y
      CHECK((galois_closure(fr, x) & ~galois_closure(fr, y)) == 0);
      if (y == full) break;
    }
  }
}

TEST_CASE("the closed-set algebra over the full carrier of a group algebra") {
  FinRL a = mg({2});
  GaloisAlgebra g = build_galois_algebra(build_frame(a, {0, 1, 2, 3}));
  CHECK(g.closed.size() == 4);
  CHECK(check_residuated_lattice(g.algebra).all_pass());
  CHECK(find_isomorphism(g.algebra, a).has_value());
}

TEST_CASE("closed-set algebras satisfy all laws across a subset sweep") {
  FinRL a = make_cyclic_url(1, 2, Orientation::Up);  // six-element? no: 1+2+2 = 5
  std::vector<int> pinned = {*a.bot, a.unit, *a.top};
  std::sort(pinned.begin(), pinned.end());
  for (const auto& b : subsets_containing(a.n, pinned, a.n)) {
    GaloisAlgebra g = build_galois_algebra(build_frame(a, b));
    CAPTURE(b.size());
    CHECK(check_residuated_lattice(g.algebra).all_pass());
    CHECK(url_flags(g.algebra).is_unilinear);
    EmbeddingReport rep = check_fep_embedding(g);
    CHECK(rep.ok);
    CHECK(rep.injective);
    CHECK(rep.unit_ok);
    CHECK(rep.bot_ok);
    CHECK(rep.top_ok);
  }
}

TEST_CASE("the embedding preserves exactly the defined partial instances") {
  FinRL a = mg({3});
  std::vector<int> b = {0, 1, 2, 4};  // bottom, unit, one generator, top
  GaloisAlgebra g = build_galois_algebra(build_frame(a, b));
  EmbeddingReport rep = check_fep_embedding(g);
  CHECK(rep.ok);
  // Count the defined instances directly from the partial algebra.
  PartialAlgebra p = induced_partial(a, b);
  using Op = PartialAlgebra::Op;
  const Op ops[] = {Op::Meet, Op::Join, Op::Mul, Op::Ldiv, Op::Rdiv};
  for (int oi = 0; oi < 5; ++oi) {
    int defined = 0;
    for (int x : b) {
      for (int y : b) {
        if (p.defined(ops[oi], x, y)) ++defined;
      }
    }
    CHECK(rep.checked[oi] == defined);
  }
}

TEST_CASE("the convenience overload agrees with the staged pipeline") {
  FinRL a = mg({2});
  EmbeddingReport direct = check_fep_embedding(a, {0, 1, 3});
  EmbeddingReport staged =
      check_fep_embedding(build_galois_algebra(build_frame(a, {0, 1, 3})));
  CHECK(direct.ok == staged.ok);
  CHECK(direct.checked == staged.checked);
}

TEST_CASE("closed sets are ordered with the bottom image least") {
  FinRL a = make_cyclic_url(2, 2, Orientation::Down);
  std::vector<int> b = {0, 1, 2, 5};
  GaloisAlgebra g = build_galois_algebra(build_frame(a, b));
  // Position of the embedded bottom equals the algebra's bottom.
  REQUIRE(g.algebra.bot.has_value());
  CHECK(g.image.front() == *g.algebra.bot);
}

TEST_CASE("identity preservation into the closed-set algebra") {
  // Every catalog member here is commutative, and whenever the source
  // satisfies x^3 <= x^5 the closed-set algebra does too.
  std::vector<FinRL> sources = {mg({2}), mg({3}),
                                make_cyclic_url(1, 2, Orientation::Up)};
  for (const auto& a : sources) {
    std::vector<int> pinned = {*a.bot, a.unit, *a.top};
    std::sort(pinned.begin(), pinned.end());
    for (const auto& b : subsets_containing(a.n, pinned, 5)) {
      GaloisAlgebra g = build_galois_algebra(build_frame(a, b));
      PreservationCheck knotted =
          check_preservation_knotted(a, g.algebra, 3, 5);
      CHECK(knotted.conditional_ok);
      PreservationCheck comm = check_preservation_commutative(a, g.algebra);
      CHECK(comm.holds_in_source);
      CHECK(comm.conditional_ok);
      PreservationCheck weak =
          check_preservation_weak_comm(a, g.algebra, {2, 0});
      CHECK(weak.conditional_ok);
    }
  }
}

TEST_CASE("is_commutative distinguishes fixtures") {
  CHECK(is_commutative(mg({2, 2})));
  CHECK(is_commutative(chain_heyting(4)));
}

}  // TEST_SUITE
