// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Format suite: text and JSON algebra files (round trips, syntax errors
// with positions, semantic errors naming the law), and the signature and
// downset grammars.

#include <doctest.h>

#include <algorithm>

#include "catalog.hpp"
#include "urlat/construct.hpp"
#include "urlat/finalg.hpp"
#include "urlat/io.hpp"
#include "urlat/varieties.hpp"

using namespace urlat;
using namespace urlat_tests;

namespace {

bool same_tables(const FinRL& a, const FinRL& b) {
  return a.n == b.n && a.leq == b.leq && a.mul == b.mul && a.unit == b.unit &&
         a.ldiv == b.ldiv && a.rdiv == b.rdiv && a.bot == b.bot &&
         a.top == b.top && a.names == b.names;
}

Err code_of(const std::string& text) {
  try {
    parse_frl(text);
    return Err::SyntaxError;  // placeholder; callers expect a throw
  } catch (const Error& e) {
    return e.code();
  }
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("text round trip over the fixture catalog") {
  std::vector<FinRL> fixtures = {bool2(),     mv3(),
                                 heyting5(),  mg({2}),
                                 mg({2, 2}),  make_cyclic_url(2, 2,
                                                              Orientation::Up)};
  for (const auto& r : fixtures) {
    FinRL back = parse_frl(render_frl(r));
    CHECK(same_tables(r, back));
    CHECK(render_frl(back) == render_frl(r));
  }
}

TEST_CASE("json round trip mirrors the text format") {
  FinRL r = mg({3});
  FinRL back = parse_frl(render_frl_json(r));
  CHECK(same_tables(r, back));
  CHECK(render_frl_json(back) == render_frl_json(r));
}

TEST_CASE("names survive the round trip in both formats") {
  FinRL r = bool2();
  r.names = {"bottom", "top"};
  CHECK(parse_frl(render_frl(r)).names == r.names);
  CHECK(parse_frl(render_frl_json(r)).names == r.names);
}

TEST_CASE("missing division sections are derived on load") {
  FinRL r = mv3();
  std::string text = render_frl(r);
  // Drop everything from the ldiv section to just before "end".
  auto pos = text.find("ldiv");
  REQUIRE(pos != std::string::npos);
  text = text.substr(0, pos) + "end\n";
  FinRL back = parse_frl(text);
  CHECK(back.ldiv == r.ldiv);
  CHECK(back.rdiv == r.rdiv);
}

TEST_CASE("syntax errors carry line and column") {
  // Bad header.
  try {
    parse_frl("frl 2\nsize 1\n");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SyntaxError);
    REQUIRE(e.witness().size() == 2);
    CHECK(e.witness()[0] == 1);
  }
  // Non-binary character inside the order block.
  std::string text = render_frl(bool2());
  auto pos = text.find("11");  // first le row
  text[pos] = '7';
  CHECK(code_of(text) == Err::SyntaxError);
}

TEST_CASE("a non-square order block is a syntax error") {
  std::string text =
      "frl 1\nsize 2\nunit 1\nbot 0\ntop 1\nle\n11\n1\nmul\n0 0\n0 1\nend\n";
  CHECK(code_of(text) == Err::SyntaxError);
}

TEST_CASE("trailing garbage is a syntax error") {
  std::string text = render_frl(bool2()) + "extra\n";
  CHECK(code_of(text) == Err::SyntaxError);
}

TEST_CASE("semantic errors name the violated law") {
  FinRL r = mg({2});
  r.mul[2 * r.n + 3] = 2;  // break associativity (and residuation)
  std::string text = render_frl(r);
  try {
    parse_frl(text);
    FAIL("expected SemanticError");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SemanticError);
    CHECK_FALSE(e.detail().empty());
  }
}

TEST_CASE("the lenient checker reports the full law table instead of throwing") {
  FinRL r = mg({2});
  r.mul[2 * r.n + 3] = 2;
  RawAlgebra raw = parse_frl_raw(render_frl(r));
  CheckedAlgebra checked = check_raw_algebra(raw);
  CHECK_FALSE(checked.report.all_pass());
  const LawCheck* f = checked.report.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->law == "associative");
}

TEST_CASE("json parsing validates the envelope") {
  CHECK(code_of("{") == Err::SyntaxError);
  CHECK(code_of("{\"format\":\"frl\",\"version\":2}") == Err::SyntaxError);
  CHECK(code_of("{\"format\":\"nope\"}") == Err::SyntaxError);
}

TEST_CASE("signature grammar round trips") {
  std::vector<std::string> texts = {
      "(0;)", "(1;)", "(0; p2:[1])", "(1; p2:[2,1]; p3:[3,1,1]; p7:[2,1,1])",
      "(0; p13:[4])"};
  for (const auto& t : texts) {
    GroupSig g = parse_sig(t);
    CHECK(parse_sig(render_sig(g)) == g);
  }
  CHECK(render_sig(parse_sig(" ( 1 ; p2 : [ 2 , 1 ] ) ")) == "(1; p2:[2,1])");
}

TEST_CASE("signature grammar rejections") {
  for (const char* bad :
       {"", "(2;)", "(0; p4:[1])", "(0; p2:[])", "(0; p2:[0])",
        "(0; p2:[1]; p2:[2])", "(0; p2:[1]", "(0; p2:[1]) tail"}) {
    CAPTURE(bad);
    try {
      parse_sig(bad);
      FAIL_CHECK("expected a structured error");
    } catch (const Error& e) {
      CHECK((e.code() == Err::SyntaxError || e.code() == Err::SemanticError));
    }
  }
}

TEST_CASE("partitions are normalised to descending order") {
  CHECK(parse_sig("(0; p2:[1,3,2])") == parse_sig("(0; p2:[3,2,1])"));
}

TEST_CASE("downset grammar round trips") {
  std::vector<std::string> texts = {
      "(principal (0; p2:[1]))",
      "(tower (1; p3:[2]) 3)",
      "(family [2,1] 5)",
      "(union (principal (1;)) (family [1] 2))",
      "(union (tower (0;) 2) (principal (0; p2:[4])) (family [3,1] 7))",
  };
  for (const auto& t : texts) {
    Downset d = parse_downset(t);
    Downset back = parse_downset(render_downset(d));
    CHECK(render_downset(back) == render_downset(d));
    REQUIRE(back.parts.size() == d.parts.size());
  }
}

TEST_CASE("downset grammar rejections") {
  for (const char* bad :
       {"", "()", "(union)", "(principal)", "(tower (0;) 4)",
        "(family [] 2)", "(family [1] 9)", "(union (principal (0;))"}) {
    CAPTURE(bad);
    try {
      parse_downset(bad);
      FAIL_CHECK("expected a structured error");
    } catch (const Error& e) {
      CHECK((e.code() == Err::SyntaxError || e.code() == Err::SemanticError));
    }
  }
}

TEST_CASE("downset semantics survive the round trip") {
  Downset d = parse_downset("(union (tower (0; p2:[1]) 3) (family [2] 2))");
  Downset back = parse_downset(render_downset(d));
  for (const auto& s :
       {"(0;)", "(0; p2:[1])", "(0; p2:[1]; p3:[5])", "(0; p5:[2])",
        "(1; p2:[1])", "(0; p2:[2]; p3:[1])"}) {
    GroupSig g = parse_sig(s);
    CHECK(downset_contains(d, g) == downset_contains(back, g));
  }
}

}  // TEST_SUITE
