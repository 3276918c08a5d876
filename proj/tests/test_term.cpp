#include "doctest.h"
#include "od/order.hpp"
#include "od/term.hpp"
#include "od/textio.hpp"

using namespace od;

namespace {

Term t(const std::string& s) { return parse_term({s}); }

}  // namespace

TEST_CASE("classification") {
  auto none = classify(zero());
  CHECK_FALSE(none.in_p);
  CHECK_FALSE(none.in_sc);
  CHECK_FALSE(none.in_r);

  auto d = classify(t("d[p](f(0,0))"));
  CHECK(d.in_p);
  CHECK(d.in_sc);
  CHECK(d.in_r);

  auto s = classify(mk_sum({pi(), omega()}));
  CHECK_FALSE(s.in_p);
  CHECK_FALSE(s.in_sc);
  CHECK_FALSE(s.in_r);

  auto f = classify(t("f(0,0)"));
  CHECK(f.in_p);
  CHECK_FALSE(f.in_sc);

  // nesting R inside SC inside P over a spread of shapes
  for (const char* s2 : {"0", "W", "p", "f(0,0)", "W^+", "d[p](f(0,0))", "W+f(0,0)"}) {
    auto c = classify(t(s2));
    if (c.in_r) CHECK(c.in_sc);
    if (c.in_sc) CHECK(c.in_p);
  }
}

TEST_CASE("body projection") {
  CHECK(body(t("d[p](f(0,0))")).same(t("f(0,0)")));
  CHECK_THROWS_AS(body(omega()), error);
  CHECK(body(t("d[W](f(0,0)+f(0,0))")).same(t("f(0,0)+f(0,0)")));
}

TEST_CASE("csupport") {
  auto c1 = csupport(t("d[p](f(0,0))"));
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].same(pi()));
  CHECK(c1[1].same(t("f(0,0)")));

  // duplicates collapse in a set
  auto c2 = csupport(t("d[p;(f(0,0),p,p,3)](f(0,0))"));
  CHECK(c2.size() == 2);

  CHECK_THROWS_AS(csupport(omega()), error);
}

TEST_CASE("mk_sum canonicalization") {
  CHECK(mk_sum({zero()}).same(zero()));
  CHECK(mk_sum({}).same(zero()));
  Term s = mk_sum({t("f(0,0)"), omega()});
  REQUIRE(s.is(Kind::Sum));
  CHECK(s.parts()[0].same(omega()));
  CHECK(s.parts()[1].same(t("f(0,0)")));

  // idempotence: resumming the parts changes nothing
  Term again = mk_sum(s.parts());
  CHECK(again.same(s));

  // flattening
  Term nested = mk_sum({s, s});
  REQUIRE(nested.is(Kind::Sum));
  CHECK(nested.parts().size() == 4);
}

TEST_CASE("phi normal form") {
  // f(0, f(W,0)) collapses to f(W,0)
  Term inner = mk_phi(omega(), zero());
  CHECK(mk_phi(zero(), inner).same(inner));
  // f(W, f(0,0)) stays
  Term kept = mk_phi(omega(), mk_phi(zero(), zero()));
  CHECK(kept.is(Kind::Phi));
  CHECK(kept.phi_first().same(omega()));
}

TEST_CASE("subscript path") {
  Term d1 = t("d[p](f(0,0))");
  auto p1 = subscript_path(d1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0].same(d1));
  CHECK(p1[1].same(pi()));

  Term d2 = mk_d(d1, {}, t("f(0,0)"));
  auto p2 = subscript_path(d2);
  REQUIRE(p2.size() == 3);
  CHECK(p2[1].same(d1));
  CHECK(p2[2].same(pi()));
  // strictly size-decreasing along the walk
  for (std::size_t i = 0; i + 1 < p2.size(); ++i)
    CHECK(term_size(p2[i]) > term_size(p2[i + 1]));

  CHECK_THROWS_AS(subscript_path(omega()), error);
}

TEST_CASE("constructor guards") {
  CHECK_THROWS_AS(mk_rsucc(pi()), error);
  CHECK_THROWS_AS(mk_rsucc(zero()), error);
  CHECK_THROWS_AS(mk_d(zero(), {}, zero()), error);
  CHECK_THROWS_AS(mk_d(pi(), {{Term(), pi(), pi(), 3}}, zero()), error);
  CHECK_THROWS_AS(mk_d(pi(), {{zero(), pi(), pi(), 1}}, zero()), error);
}
