#include <doctest.h>

#include "jetclosure/corpus.hpp"
#include "jetclosure/errors.hpp"
#include "jetclosure/properties.hpp"
#include "support.hpp"

using namespace jetclosure;
using testing::I;
using testing::P;
using testing::ring;
using testing::strs;

using Strings = std::vector<std::string>;

TEST_CASE("jet rings") {
  auto r = ring({"x", "y"});
  JetRing global(r, 2, false);
  CHECK(global.ring()->names() == Strings{"x@0", "x@1", "x@2", "y@0", "y@1", "y@2"});
  CHECK(global.index(1, 0) == 3u);
  JetRing local(r, 2, true);
  CHECK(local.ring()->names() == Strings{"x@1", "x@2", "y@1", "y@2"});
  CHECK(local.index(1, 2) == 3u);
  CHECK(JetRing::jet_name("x", 3) == "x@3");
}

TEST_CASE("expansion examples") {
  auto r = ring({"x", "y"});
  JetRing global(r, 2, false);
  auto d = hasse_schmidt_expand(P(r, "y"), global);
  CHECK(strs(d) == Strings{"y@0", "y@1", "y@2"});

  JetRing local(r, 4, true);
  auto jr = local.ring();
  auto cusp = hasse_schmidt_expand(P(r, "x^2+y^3"), local);
  REQUIRE(cusp.size() == 5);
  CHECK(cusp[0].is_zero());
  CHECK(cusp[1].is_zero());
  CHECK(cusp[2] == P(jr, "x@1^2"));
  CHECK(cusp[3] == P(jr, "2*x@1*x@2+y@1^3"));
  CHECK(cusp[4] == P(jr, "2*x@1*x@3+x@2^2+3*y@1^2*y@2"));
  CHECK(brute_force_expand(P(r, "x^2+y^3"), local) == cusp);

  auto c = hasse_schmidt_expand(P(r, "5"), local);
  CHECK(c[0] == P(jr, "5"));
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i].is_zero());

  CHECK(hasse_schmidt_expand(P(r, "x"), JetRing(r, 0, false)) == std::vector<Polynomial>{P(JetRing(r, 0, false).ring(), "x@0")});
}

TEST_CASE("expansion is additive and satisfies Leibniz") {
  CorpusRng rng(31);
  auto r = ring({"x", "y", "z"});
  RandomPolynomialSpec spec;
  spec.min_degree = 0;
  spec.max_degree = 3;
  for (bool local : {false, true}) {
    JetRing jets(r, 3, local);
    for (int k = 0; k < 30; ++k) {
      auto f = random_polynomial(rng, r, spec);
      auto g = random_polynomial(rng, r, spec);
      auto df = hasse_schmidt_expand(f, jets);
      auto dg = hasse_schmidt_expand(g, jets);
      auto dsum = hasse_schmidt_expand(f + g, jets);
      auto dprod = hasse_schmidt_expand(f * g, jets);
      for (unsigned i = 0; i <= 3; ++i) {
        CHECK(dsum[i] == df[i] + dg[i]);
        Polynomial leibniz(jets.ring());
        for (unsigned j = 0; j <= i; ++j) leibniz += df[j] * dg[i - j];
        CHECK(dprod[i] == leibniz);
      }
    }
  }
}

TEST_CASE("truncation and localization are compatible") {
  CorpusRng rng(37);
  auto r = ring({"x", "y"});
  RandomPolynomialSpec spec;
  spec.max_degree = 4;
  JetRing high(r, 4, false), low(r, 2, false), local(r, 4, true);
  for (int k = 0; k < 30; ++k) {
    auto f = random_polynomial(rng, r, spec);
    auto dh = hasse_schmidt_expand(f, high);
    auto dl = hasse_schmidt_expand(f, low);
    for (unsigned i = 0; i <= 2; ++i) CHECK(transport(dl[i], low, high) == dh[i]);
    auto dloc = hasse_schmidt_expand(f, local);
    for (unsigned i = 0; i <= 4; ++i) CHECK(transport(dh[i], high, local) == dloc[i]);
  }
}

TEST_CASE("jet ideals") {
  auto r = ring({"x", "y"});
  auto cusp = jet_ideal(I(r, {"x^2+y^3"}), 4, true);
  auto jr = cusp.jets.ring();
  CHECK(ideal_equal(cusp.ideal, I(jr, {"x@1^2", "2*x@1*x@2+y@1^3", "2*x@1*x@3+x@2^2+3*y@1^2*y@2"})));
  CHECK(cusp.ideal.generators().size() == 3);

  CHECK(jet_ideal(I(r, {}), 3, true).ideal.is_zero());
  CHECK(jet_ideal(I(r, {"0"}), 2, false).ideal.is_zero());

  auto r3 = ring({"x", "y", "z"});
  auto cone = jet_ideal(I(r3, {"x", "y", "x^2+y^2+z^2"}), 2, true);
  CHECK(strs(groebner_basis(cone.ideal)) == Strings{"x@1", "x@2", "y@1", "y@2", "z@1^2"});

  CHECK_THROWS_AS(jet_ideal(I(r, {"x+1"}), 2, true), OriginNotOnVariety);
  CHECK_NOTHROW(jet_ideal(I(r, {"x+1"}), 2, false));
}

TEST_CASE("truncated expansion agrees with full expansion") {
  auto result = hasse_schmidt_sweep();
  INFO(result.detail);
  CHECK(result.pass);
  CHECK(result.cases == 100);
}
