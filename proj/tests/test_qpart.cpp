#include "doctest.h"
#include "od/enumerate.hpp"
#include "od/qpart.hpp"
#include "od/selftest.hpp"
#include "od/term.hpp"
#include "od/textio.hpp"

using namespace od;

namespace {

Term t(const std::string& s) { return parse_term({s}); }

bool check_label(const ValidityReport& rep, const std::string& label) {
  for (const auto& c : rep.checks)
    if (c.label == label && !c.passed) return false;
  return true;
}

}  // namespace

TEST_CASE("shape_check basics") {
  Term one = t("f(0,0)");
  // all conditions pass
  auto ok = shape_check(pi(), {{one, pi(), pi(), 3}}, one, 4);
  CHECK(ok.valid);

  // j_l must be N-1
  auto bad_j = shape_check(pi(), {{one, pi(), pi(), 2}}, one, 4);
  CHECK_FALSE(bad_j.valid);
  CHECK_FALSE(check_label(bad_j, "shape.1"));

  // guard on nu_l <= alpha only fires for the root subscript
  Term sigma1 = t("d[p;(f(0,0),p,p,3)](f(0,0))");
  auto guarded = shape_check(sigma1, {{t("f(0,0)+f(0,0)"), pi(), sigma1, 3}}, one, 4);
  CHECK(check_label(guarded, "shape.3"));
  CHECK(guarded.valid);

  // but with sigma = pi the bound is live
  auto live = shape_check(pi(), {{t("f(0,0)+f(0,0)"), pi(), pi(), 3}}, one, 4);
  CHECK_FALSE(check_label(live, "shape.3"));
}

TEST_CASE("shape_check rejects stray large elements") {
  // an element above pi that is not nu_l
  Term big = t("f(0,p)");
  auto rep = shape_check(pi(), {{t("f(0,0)"), pi(), pi(), 3}}, big, 4);
  CHECK(rep.valid);  // body is not part of q
  auto rep2 = shape_check(pi(), {{big, pi(), pi(), 3}}, big, 4);
  CHECK(rep2.valid);  // nu_l itself may exceed pi
}

TEST_CASE("only pi-reachable subscripts carry a Q part") {
  // kappa_l = pi must be reachable from the subscript
  auto rep = shape_check(omega(), {{zero(), pi(), omega(), 3}}, t("f(0,0)"), 4);
  CHECK_FALSE(rep.valid);
  CHECK_FALSE(check_label(rep, "shape.2"));
  // a successor subscript fails the tau conditions as well
  auto rep2 = shape_check(t("W^+"), {{zero(), pi(), t("W^+"), 3}}, t("f(0,0)"), 4);
  CHECK_FALSE(rep2.valid);
}

TEST_CASE("derive") {
  Term sigma1 = t("d[p;(f(0,0),p,p,3)](f(0,0))");
  auto v3 = derive(sigma1, 3);
  CHECK(v3.pd.same(pi()));
  REQUIRE(v3.st);
  CHECK(v3.st->same(t("f(0,0)")));
  CHECK(v3.rg->same(pi()));
  CHECK(v3.defined_in);

  auto v2 = derive(sigma1, 2);
  CHECK(v2.pd.same(pi()));
  CHECK_FALSE(v2.st.has_value());
  CHECK_FALSE(v2.rg.has_value());
  CHECK_FALSE(v2.defined_in);

  // pd_2 is the subscript for any diagram with a Q part
  Term tau1 = t("d[d[p;(f(0,0),p,p,3)](f(0,0));(0,p,d[p;(f(0,0),p,p,3)](f(0,0)),3)](f(0,0)+f(0,0))");
  CHECK(derive(tau1, 2).pd.same(sigma1));

  CHECK_THROWS_AS(derive(t("d[p](f(0,0))"), 3), error);
  CHECK_THROWS_AS(derive(sigma1, 1), error);
  CHECK_THROWS_AS(derive(sigma1, 4), error);
}

TEST_CASE("in_set") {
  CHECK(in_set(t("d[p;(f(0,0),p,p,3)](f(0,0))")) == std::set<int>{3});
  CHECK(in_set(t("d[p](f(0,0))")).empty());
  CHECK_THROWS_AS(in_set(omega()), error);
}

TEST_CASE("derive agrees with in_set") {
  Term sigma1 = t("d[p;(f(0,0),p,p,3)](f(0,0))");
  for (int j = 2; j <= 3; ++j) {
    bool active = in_set(sigma1).count(j) > 0;
    CHECK(derive(sigma1, j).defined_in == active);
  }
}

TEST_CASE("in_pair on terms without a Q part") {
  CHECK_FALSE(in_pair(pi(), 2).has_value());
  CHECK_FALSE(in_pair(t("d[p](f(0,0))"), 2).has_value());
  CHECK(in_pair(t("d[p;(f(0,0),p,p,3)](f(0,0))"), 3).has_value());
}

TEST_CASE("top-level invariants of every valid Q part") {
  std::vector<Term> pool;
  EnumConfig cfg;
  cfg.max_size = 5;
  for (const Term& x : enumerate_valid(cfg).terms) pool.push_back(x);
  for (const auto& step : gen_spine(47, 5, 10)) pool.push_back(step.rho);
  int carrying = 0;
  for (const Term& x : pool) {
    if (!x.is(Kind::D) || x.quads().empty()) continue;
    ++carrying;
    int top = x.quads().back().level;
    CHECK(in_set(x).count(top) == 1);
    auto v = derive(x, top);
    REQUIRE(v.rg);
    CHECK(v.rg->same(pi()));
    // the 2-predecessor is always the subscript
    CHECK(derive(x, 2).pd.same(x.sub()));
    // derive and in_set agree at every level
    for (int j = 2; j <= top; ++j) CHECK(derive(x, j).defined_in == (in_set(x).count(j) == 1));
  }
  CHECK(carrying > 20);
}
