// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Analysis suite: classification round trips, order-shape flags, the
// discriminator term, the comparability quotient and twisted-product
// reconstruction, power/exchange identities, conjugate equation schemes,
// and the exhaustive antichain enumeration.

#include <doctest.h>

#include <algorithm>

#include "catalog.hpp"
#include "urlat/analyze.hpp"
#include "urlat/construct.hpp"
#include "urlat/finalg.hpp"

using namespace urlat;
using namespace urlat_tests;

TEST_SUITE("analyze") {

TEST_CASE("the top action splits the middle into the two stated parts") {
  Monoid a = adjoin_zero(make_cyclic_group(2));
  FinRL r = make_rab(a, 2, ZKind::NilElement);
  UZPartition uz = compute_uz(r);
  CHECK(uz.U == std::vector<int>{1, 2});
  CHECK(uz.Z == std::vector<int>{3});
  CHECK(uz.kind == ZKind::NilElement);
}

TEST_CASE("compute_uz rejects algebras off the antichain lattice") {
  try {
    compute_uz(chain_heyting(4));
    FAIL("expected NotMxShaped");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotMxShaped);
  }
}

TEST_CASE("decomposition round-trips every glued construction") {
  const ZKind kinds[] = {ZKind::BotOnly, ZKind::NilElement,
                         ZKind::TwoIdempotents, ZKind::IdemElement};
  for (const auto& a : zc_monoids_up_to(4)) {
    for (ZKind kind : kinds) {
      FinRL r = make_rab(a, a.n - 1, kind);
      ABDecomposition d = decompose_mx(r);
      CAPTURE(a.n);
      CAPTURE(static_cast<int>(kind));
      CHECK(d.kind == kind);
      CHECK(d.zero == d.A.n - 1);
      CHECK(monoids_isomorphic(d.A, a, d.zero, a.n - 1));
      FinRL rebuilt = make_rab(d.A, d.zero, d.kind);
      CHECK(find_isomorphism(rebuilt, r).has_value());
      // The witness is a permutation of the carrier.
      std::vector<int> sorted = d.witness;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < r.n; ++i) CHECK(sorted[i] == i);
    }
  }
}

TEST_CASE("order flags on the frozen monogenic example") {
  URLFlags f = url_flags(make_cyclic_url(2, 2, Orientation::Up));
  CHECK(f.is_unilinear);
  CHECK_FALSE(f.is_linear);
  CHECK(f.top_central);
  CHECK(f.top_unital);
  CHECK(f.rigorously_compact);
  CHECK(f.compact);
  CHECK(f.height == 4);
  CHECK(f.width == 2);
}

TEST_CASE("order flags on chains and products") {
  URLFlags c = url_flags(chain_heyting(3));
  CHECK(c.is_linear);
  CHECK(c.is_unilinear);  // a single chain is a one-chain union
  CHECK(c.height == 3);
  CHECK(c.width == 1);
  // On chains the incomparable-pair conditions hold vacuously, and the sole
  // interior element is idempotent, so the compact flag is set; the stronger
  // flag fails because the top acts as the unit rather than absorbing.
  CHECK(c.compact);
  CHECK_FALSE(c.rigorously_compact);

  URLFlags p = url_flags(direct_product(bool2(), bool2()));
  CHECK_FALSE(p.is_linear);
  CHECK(p.is_unilinear);  // width-two antichain with bounds
  CHECK(p.height == 3);
  CHECK(p.width == 2);

  URLFlags q = url_flags(direct_product(mg({2}), mg({2})));
  CHECK_FALSE(q.is_unilinear);
  // The widest antichain of the product of two diamonds is the middle rank:
  // the four interior pairs plus (top, bot) and (bot, top).
  CHECK(q.width == 6);
}

TEST_CASE("the discriminator holds on group algebras and glued kinds") {
  for (const auto& factors :
       std::vector<std::vector<int>>{{}, {2}, {3}, {4}, {2, 2}, {6}}) {
    DiscriminatorReport rep = check_discriminator(mg(factors));
    CAPTURE(factors.size());
    CHECK(rep.is_discriminator);
  }
  Monoid trivial_with_zero = adjoin_zero(make_cyclic_group(1));
  for (ZKind kind : {ZKind::BotOnly, ZKind::NilElement,
                     ZKind::TwoIdempotents, ZKind::IdemElement}) {
    DiscriminatorReport rep =
        check_discriminator(make_rab(trivial_with_zero, 1, kind));
    CAPTURE(static_cast<int>(kind));
    CHECK(rep.is_discriminator);
  }
}

TEST_CASE("the discriminator fails on a product, with a checked witness") {
  FinRL prod = direct_product(mg({2}), mg({2}));
  DiscriminatorReport rep = check_discriminator(prod);
  REQUIRE_FALSE(rep.is_discriminator);
  auto [x, y, z] = rep.witness;
  int expected = (x == y) ? z : x;
  CHECK(eval_discriminator(prod, x, y, z) == rep.value);
  CHECK(rep.value != expected);
}

TEST_CASE("the discriminator fails on a chain with a non-boolean middle") {
  CHECK_FALSE(check_discriminator(chain_heyting(3)).is_discriminator);
}

TEST_CASE("comparability quotient of the frozen monogenic example") {
  ComparabilityQuotient q =
      comparability_quotient(make_cyclic_url(2, 2, Orientation::Up));
  REQUIRE(q.classes.size() == 2);
  CHECK(q.classes[0] == std::vector<int>{1, 3});  // unit chain 1 < a^2
  CHECK(q.classes[1] == std::vector<int>{2, 4});  // a < a^3
  CHECK(q.unit_class == 0);
  CHECK(q.congruence);
  CHECK(q.cancellative);
  CHECK(q.admissible);
  CHECK(q.k_cancellative);
  CHECK(q.K.n == 2);
  CHECK(q.K.prod(1, 1) == 0);  // quotient is the two-element group
}

TEST_CASE("comparability quotient requires compactness") {
  try {
    comparability_quotient(chain_heyting(3));
    FAIL("expected NotCompact");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotCompact);
  }
}

TEST_CASE("reconstruction round-trips trivially twisted extensions") {
  for (int k : {2, 3}) {
    for (const FinRL& a : {chain_heyting(2), chain_heyting(3)}) {
      CocycleData d;
      d.A = a;
      d.K = make_cyclic_group(k);
      d.phi.assign(k, std::vector<int>(a.n));
      for (auto& row : d.phi) {
        for (int i = 0; i < a.n; ++i) row[i] = i;
      }
      d.f.assign(static_cast<std::size_t>(k) * k, a.unit);
      FinRL ext = make_cocycle_extension(d);
      Reconstruction rec = reconstruct_cocycle(ext);
      CAPTURE(k);
      CAPTURE(a.n);
      CHECK(rec.data.K.n == k);
      CHECK(rec.data.A.n == a.n);
      CHECK(check_cocycle(rec.data).all_pass());
      CHECK(find_isomorphism(ext, rec.rebuilt).has_value());
      // The returned map is itself a verified isomorphism onto the rebuild.
      for (int x = 0; x < ext.n; ++x) {
        for (int y = 0; y < ext.n; ++y) {
          CHECK(rec.rebuilt.prod(rec.iso[x], rec.iso[y]) ==
                rec.iso[ext.prod(x, y)]);
        }
      }
    }
  }
}

TEST_CASE("reconstruction reports failed hypotheses honestly") {
  // The unit class of this algebra is a two-element chain that is not
  // residuated on its own: division inside the class has no greatest
  // solution, so the chain hypothesis fails.
  try {
    reconstruct_cocycle(make_cyclic_url(2, 2, Orientation::Up));
    FAIL("expected HypothesesFail");
  } catch (const Error& e) {
    CHECK(e.code() == Err::HypothesesFail);
  }
  // Non-compact input is reported the same way.
  try {
    reconstruct_cocycle(chain_heyting(3));
    FAIL("expected HypothesesFail");
  } catch (const Error& e) {
    CHECK(e.code() == Err::HypothesesFail);
  }
}

TEST_CASE("power identities") {
  CHECK(check_knotted(chain_heyting(4), 3, 5));
  CHECK(check_knotted(mg({2}), 3, 5));
  // In the downward orientation higher powers sink strictly.
  CHECK_FALSE(check_knotted(make_cyclic_url(4, 1, Orientation::Down), 3, 5));
  CHECK(check_knotted(make_cyclic_url(4, 1, Orientation::Up), 3, 5));
  try {
    check_knotted(bool2(), 2, 2);
    FAIL("expected BadPartition");
  } catch (const Error& e) {
    CHECK(e.code() == Err::BadPartition);
  }
}

TEST_CASE("exchange identities hold in commutative fixtures") {
  // x y1 x = x^2 y1: exponents (2, 0); valid since 2 + 0 = 2 = k + 1.
  CHECK(check_weak_commutativity(mg({2}), {2, 0}));
  CHECK(check_weak_commutativity(make_cyclic_url(1, 2, Orientation::Up),
                                 {0, 2}));
  try {
    check_weak_commutativity(mg({2}), {1, 1});
    FAIL("expected BadPartition");
  } catch (const Error& e) {
    CHECK(e.code() == Err::BadPartition);
  }
}

TEST_CASE("conjugate equation schemes on group algebras") {
  for (const auto& factors : std::vector<std::vector<int>>{{}, {2}, {3}}) {
    FinRL m = mg(factors);
    CHECK(check_conjugate_equations(m, EqScheme::Srl).ok);
    CHECK(check_conjugate_equations(m, EqScheme::M).ok);
    CHECK(check_conjugate_equations(m, EqScheme::Mg).ok);
  }
}

TEST_CASE("the first scheme fails on a subdirectly irreducible Heyting algebra") {
  ConjugateCheck c = check_conjugate_equations(heyting5(), EqScheme::Srl, 2);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.equation.empty());
  CHECK_FALSE(c.values.empty());
}

TEST_CASE("deeper conjugation never flips a holding scheme on these fixtures") {
  for (int depth : {0, 1, 2, 3}) {
    CHECK(check_conjugate_equations(mg({2}), EqScheme::Srl, depth).ok);
  }
}

TEST_CASE("antichain enumeration counts and class distinctness") {
  auto e0 = enumerate_mx(0);
  auto e1 = enumerate_mx(1);
  auto e2 = enumerate_mx(2);
  CHECK(e0.size() == 1);
  CHECK(e1.size() == 3);
  CHECK(e2.size() == 5);
  for (const auto& batch : {e0, e1, e2}) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      CHECK(check_residuated_lattice(batch[i]).all_pass());
      for (std::size_t j = i + 1; j < batch.size(); ++j) {
        CHECK_FALSE(find_isomorphism(batch[i], batch[j]).has_value());
      }
    }
  }
}

TEST_CASE("enumeration is deterministic across job counts") {
  auto serial = enumerate_mx(2, std::nullopt, 1);
  auto parallel = enumerate_mx(2, std::nullopt, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].mul == parallel[i].mul);
    CHECK(serial[i].unit == parallel[i].unit);
  }
}

TEST_CASE("enumeration honours the class cap") {
  try {
    enumerate_mx(2, 2);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Err::CapExceeded);
  }
}

TEST_CASE("integral members of the small enumerations") {
  auto e0 = enumerate_mx(0);
  auto e1 = enumerate_mx(1);
  auto e2 = enumerate_mx(2);
  auto count_integral = [](const std::vector<FinRL>& v) {
    int c = 0;
    for (const auto& r : v) c += is_integral(r) ? 1 : 0;
    return c;
  };
  CHECK(count_integral(e0) == 1);
  CHECK(count_integral(e1) == 2);
  CHECK(count_integral(e2) == 1);
  // And they are the named algebras.
  std::vector<FinRL> named = {bool2(), chain_heyting(3), mv3(), bool4()};
  for (const auto& fixture : named) {
    bool found = false;
    for (const auto& batch : {e0, e1, e2}) {
      for (const auto& r : batch) {
        if (is_integral(r) && find_isomorphism(fixture, r)) found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("is_integral basics") {
  CHECK(is_integral(chain_heyting(3)));
  CHECK_FALSE(is_integral(mg({2})));
  CHECK_FALSE(is_integral(make_cyclic_url(2, 2, Orientation::Up)));
}

}  // TEST_SUITE
