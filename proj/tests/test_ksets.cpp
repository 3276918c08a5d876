#include "doctest.h"
#include "od/enumerate.hpp"
#include "od/ksets.hpp"
#include "od/term.hpp"
#include "od/textio.hpp"

using namespace od;

namespace {

Term t(const std::string& s) { return parse_term({s}); }

bool holds(const KSet& s, const Term& x) {
  for (const Term& y : s)
    if (y.same(x)) return true;
  return false;
}

}  // namespace

TEST_CASE("k_all") {
  CHECK(k_all(zero()).empty());
  auto k1 = k_all(t("f(W,0)"));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].same(omega()));
  auto k2 = k_all(mk_sum({pi(), t("f(0,0)")}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].same(pi()));
}

TEST_CASE("d_set") {
  Term sigma1 = t("d[p;(f(0,0),p,p,3)](f(0,0))");
  CHECK(d_set(pi(), omega()).empty());
  auto ds = d_set(pi(), sigma1);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].same(sigma1));
  CHECK(d_set(omega(), sigma1).empty());
  CHECK_THROWS_AS(d_set(zero(), omega()), error);
}

TEST_CASE("b_at") {
  Term sigma1 = t("d[p;(f(0,0),p,p,3)](f(0,0))");
  CHECK(b_at(pi(), omega()).same(zero()));
  CHECK(b_at(pi(), sigma1).same(t("f(0,0)")));
  CHECK(b_at(omega(), sigma1).same(zero()));
}

TEST_CASE("b_above") {
  Term sigma1 = t("d[p;(f(0,0),p,p,3)](f(0,0))");
  CHECK(b_above(pi(), sigma1).same(zero()));
  CHECK(b_above(pi(), t("f(0,p)")).same(zero()));
  CHECK(b_above(omega(), sigma1).same(t("f(0,0)")));
  CHECK(b_above(sigma1, mk_sum({sigma1, sigma1})).same(t("f(0,0)")));
}

TEST_CASE("k_at") {
  Term sigma1 = t("d[p;(f(0,0),p,p,3)](f(0,0))");
  CHECK(k_at(omega(), sigma1).empty());
  auto kp = k_at(pi(), sigma1);
  REQUIRE(kp.size() == 1);
  CHECK(kp[0].same(sigma1));
  CHECK(k_at(pi(), zero()).empty());
  CHECK_THROWS_AS(k_at(t("f(0,0)"), zero()), error);
}

TEST_CASE("k_max") {
  Term sigma1 = t("d[p;(f(0,0),p,p,3)](f(0,0))");
  CHECK(k_max(pi(), zero()).same(zero()));
  CHECK(k_max(pi(), sigma1).same(sigma1));
  CHECK(k_max(omega(), sigma1).same(zero()));
}

TEST_CASE("k_all distributes over sums") {
  EnumConfig cfg;
  cfg.max_size = 4;
  auto terms = enumerate_valid(cfg).terms;
  int sums = 0;
  for (const Term& s : terms) {
    if (!s.is(Kind::Sum)) continue;
    ++sums;
    KSet direct = k_all(s);
    KSet unioned;
    for (const Term& p : s.parts()) kset_union(unioned, k_all(p));
    CHECK(direct.size() == unioned.size());
    for (const Term& x : unioned) CHECK(holds(direct, x));
  }
  CHECK(sums > 0);
}

TEST_CASE("b_above vanishes without larger subscripts") {
  EnumConfig cfg;
  cfg.max_size = 4;
  for (const Term& s : enumerate_valid(cfg).terms) {
    bool has_bigger = false;
    for (const Term& sub : d_subscripts(s))
      if (gt(sub, pi())) has_bigger = true;
    if (!has_bigger) CHECK(b_above(pi(), s).same(zero()));
  }
}

TEST_CASE("d_set restricted to matching subscripts") {
  EnumConfig cfg;
  cfg.max_size = 4;
  auto terms = enumerate_valid(cfg).terms;
  for (const Term& s : terms) {
    for (const Term& d : d_set(pi(), s)) {
      CHECK(d.is(Kind::D));
      CHECK(d.sub().same(pi()));
    }
    for (const Term& d : d_set(omega(), s)) CHECK(d.sub().same(omega()));
  }
}
