#include "doctest.h"
#include "od/enumerate.hpp"
#include "od/term.hpp"
#include "od/textio.hpp"

using namespace od;

TEST_CASE("parse basics") {
  Term d = parse_term({"d[p](f(0,0))"});
  REQUIRE(d.is(Kind::D));
  CHECK(d.sub().same(pi()));
  CHECK(d.quads().empty());

  Term sigma1 = parse_term({"d[p;(f(0,0),p,p,3)](f(0,0))"});
  REQUIRE(sigma1.quads().size() == 1);
  CHECK(sigma1.quads()[0].level == 3);

  // normalization of non-canonical spellings
  CHECK(parse_term({"f(0,0)+0"}).same(parse_term({"f(0,0)"})));
  CHECK(parse_term({"0+W"}).same(omega()));
  CHECK(parse_term({"f(0,0)+W"}).is(Kind::Sum));
  CHECK(parse_term({"  W ^ + "}).same(mk_rsucc(omega())));
}

TEST_CASE("parse errors carry positions") {
  auto needs_error = [](const std::string& s) {
    try {
      parse_term({s});
      return false;
    } catch (const parse_error&) {
      return true;
    }
  };
  CHECK(needs_error(""));
  CHECK(needs_error("f(0"));
  CHECK(needs_error("q"));
  CHECK(needs_error("W+"));
  CHECK(needs_error("p^+"));        // no successor above the top regular
  CHECK(needs_error("d[0](W)"));    // subscript must be regular
  CHECK(needs_error("f(0,0)xyz"));  // trailing input
  CHECK(needs_error("d[p;(0,p,p,1)](W)"));  // quad level too small
  try {
    parse_term({"f(0,\n  q)"});
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
  }
  // pathological nesting is rejected, not crashed on
  std::string deep;
  for (int i = 0; i < 100000; ++i) deep += "f(0,";
  CHECK(needs_error(deep));
}

TEST_CASE("print round trip") {
  CHECK(print_term(pi()) == "p");
  CHECK(print_term(parse_term({"d[p;(f(0,0),p,p,3)](f(0,0))"})) ==
        "d[p;(f(0,0),p,p,3)](f(0,0))");
  EnumConfig cfg;
  cfg.max_size = 4;
  for (const Term& t : enumerate_valid(cfg).terms) {
    CHECK(parse_term({print_term(t)}).same(t));
  }
}

TEST_CASE("descriptor parsing") {
  const char* minimal =
      "N: 4\n"
      "sigmas: p ; d[p;(f(0,0),p,p,3)](f(0,f(0,0)))\n"
      "knots: 0\n"
      "indices:\n"
      "body: f(0,f(0,f(0,0)))\n"
      "st_top: f(0,0)\n";
  DescriptorFile file = parse_descriptor({minimal, "<test>"});
  CHECK(file.desc.n_levels == 4);
  CHECK(file.desc.sigmas.size() == 2);
  CHECK(file.desc.knot_numbers == std::vector<int>{0});
  CHECK(file.desc.knot_indices.empty());
  CHECK(file.inputs.st_lower.empty());

  auto needs_error = [](const std::string& s) {
    try {
      parse_descriptor({s, "<test>"});
      return false;
    } catch (const parse_error&) {
      return true;
    }
  };
  // index out of range for N=4
  CHECK(needs_error(
      "N: 4\nsigmas: p\nknots:\nindices: 3\nbody: f(0,0)\nst_top: 0\n"));
  // missing field
  CHECK(needs_error("N: 4\nsigmas: p\nknots:\nindices:\nbody: f(0,0)\n"));
  // knot numbers must increase
  CHECK(needs_error(
      "N: 4\nsigmas: p ; d[p;(f(0,0),p,p,3)](f(0,f(0,0)))\nknots: 0,0\nindices: 2\n"
      "body: f(0,0)\nst_top: 0\n"));
}
