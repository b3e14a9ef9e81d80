#include <doctest.h>

#include "jetclosure/closures.hpp"
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

namespace {

ClosureProblem cusp() {
  auto r = ring({"x", "y"});
  return ClosureProblem(I(r, {"x^2+y^3"}));
}

ClosureProblem quadric_cone() {
  auto r = ring({"x", "y", "z"});
  return ClosureProblem(I(r, {"x^2+y^2+z^2"}), I(r, {"x", "y"}));
}

}  // namespace

TEST_CASE("problems must pass through the origin") {
  auto r = ring({"x", "y"});
  CHECK_THROWS_AS(ClosureProblem(I(r, {"x-1"})), OriginNotOnVariety);
  CHECK_THROWS_AS(ClosureProblem(I(r, {"x"}), I(ring({"x", "z"}), {"x"})), RingMismatch);
  auto p = ClosureProblem(I(r, {"x^2"}), I(r, {"y"}));
  CHECK(p.combined().generators().size() == 2);
}

TEST_CASE("membership examples on the cusp") {
  auto p = cusp();
  auto r = p.ring();
  auto m = jet_closure_member(P(r, "x*y^3"), p, 4);
  CHECK(m.member);
  CHECK(!m.first_failing_order);
  REQUIRE(m.coefficients.size() == 5);
  for (const auto& c : m.coefficients) {
    CHECK(c.member);
    if (!c.coefficient.is_zero()) {
      REQUIRE(c.certificate);
      CHECK(verify_certificate(*c.certificate));
    }
  }
  // The coefficient at t^4 is x@1*y@1^3.
  CHECK(m.coefficients[4].coefficient.to_string() == "x@1*y@1^3");

  auto x = jet_closure_member(P(r, "x"), p, 4);
  CHECK(!x.member);
  CHECK(x.first_failing_order == 1u);

  CHECK(jet_closure_member(P(r, "x^2+y^3"), p, 4).member);
  CHECK(jet_closure_member(P(r, "x^2*y^2"), p, 4).member);
  CHECK(!jet_closure_member(P(r, "x^2*y"), p, 4).member);
}

TEST_CASE("combined ideal lies in its closure") {
  for (const auto& problem : random_corpus(testing::kCorpusTestSeed, 8)) {
    for (unsigned m = 0; m <= 3; ++m) {
      for (const auto& g : problem.combined().generators()) CHECK(jet_closure_member(g, problem, m).member);
    }
  }
}

TEST_CASE("level 0 closure is the maximal ideal") {
  auto p = cusp();
  CHECK(strs(jet_closure(p, 0).generators()) == Strings{"x", "y"});
  CHECK(strs(jet_closure(quadric_cone(), 0).generators()) == Strings{"x", "y", "z"});
}

TEST_CASE("closures of the zero ideal in one variable") {
  auto r = ring({"x"});
  ClosureProblem zero(I(r, {}));
  for (unsigned m = 0; m <= 6; ++m) {
    auto c = jet_closure(zero, m);
    CHECK(strs(c.generators()) == Strings{P(r, "x").pow(m + 1).to_string()});
    // Brute-force expansion of x^m and x^(m+1) decides the boundary directly.
    JetRing local(r, m, true);
    auto below = brute_force_expand(P(r, "x").pow(m), local);
    auto at = brute_force_expand(P(r, "x").pow(m + 1), local);
    CHECK(!below[m].is_zero());
    for (const auto& d : at) CHECK(d.is_zero());
  }
  for (unsigned m = 0; m <= 3; ++m) {
    CHECK(ideal_equal(jet_closure(zero, m, {}, ClosureMethod::Elimination), jet_closure(zero, m)));
  }
}

TEST_CASE("cusp closures by level") {
  // Pinned from the tool; levels <= 4 also agree with the elimination method below.
  const std::vector<Strings> expected{
      {"x", "y"},
      {"x^2", "x*y", "y^2"},
      {"x^2", "x*y^2", "y^3"},
      {"x^3", "x^2*y", "y^3+x^2"},
      {"x^3", "y^3+x^2", "x^2*y^2"},
      {"y^3+x^2", "x^4", "x^3*y"},
  };
  auto p = cusp();
  for (unsigned m = 0; m < expected.size(); ++m) {
    CAPTURE(m);
    CHECK(strs(jet_closure(p, m).generators()) == expected[m]);
  }
}

TEST_CASE("linear and elimination methods agree") {
  auto p = cusp();
  for (unsigned m = 0; m <= 4; ++m) {
    CHECK(ideal_equal(jet_closure(p, m, {}, ClosureMethod::Elimination), jet_closure(p, m)));
  }
  for (const auto& problem : random_corpus(testing::kCorpusTestSeed + 3, 6)) {
    for (unsigned m = 1; m <= 2; ++m) {
      CHECK(ideal_equal(jet_closure(problem, m, {}, ClosureMethod::Elimination), jet_closure(problem, m)));
    }
  }
  CHECK(to_string(ClosureMethod::Linear) == "linear");
  CHECK(to_string(ClosureMethod::Elimination) == "elimination");
}

TEST_CASE("closure does not depend on the generating set") {
  auto r = ring({"x", "y"});
  auto a = ClosureProblem(I(r, {"x^2+y^3"}));
  auto b = ClosureProblem(I(r, {"x^2+y^3", "x^3+x*y^3", "2*x^2+2*y^3"}));
  auto c = ClosureProblem(I(r, {"y^3"}), I(r, {"x^2+y^3"}));
  for (unsigned m = 1; m <= 4; ++m) {
    CHECK(ideal_equal(jet_closure(a, m), jet_closure(b, m)));
    CHECK(ideal_equal(jet_closure(c, m), jet_closure(ClosureProblem(I(r, {"x^2", "y^3"})), m)));
  }
}

TEST_CASE("corpus closure properties") {
  auto result = corpus_closure_properties();
  INFO(result.detail);
  CHECK(result.pass);
  CHECK(result.cases == 20);
}

TEST_CASE("coefficient and elimination routes agree") {
  auto result = dual_route_sweep();
  INFO(result.detail);
  CHECK(result.pass);
  CHECK(result.cases == 50);
  CHECK(result.certificates_checked > 0);
}

TEST_CASE("support closure on the quadric cone") {
  auto p = quadric_cone();
  auto z = P(p.ring(), "z");
  CHECK(jet_support_closure_member(z, p, 0).verdict == Verdict::Member);
  auto l1 = jet_support_closure_member(z, p, 1);
  CHECK(l1.verdict == Verdict::NonMember);
  CHECK(l1.first_failing_order == 1u);
  auto report = jsc_member_up_to(z, p, 4);
  CHECK(report.verdict == Verdict::NonMember);
  CHECK(report.first_failing_level == 1u);
  CHECK(report.levels.size() == 2);
  CHECK(jet_support_closure_member(z, p, 1, {}, SupportReading::Literal).verdict == Verdict::NonMember);
  CHECK(jet_support_closure_member(P(p.ring(), "z^2"), p, 1).verdict == Verdict::Member);
}

TEST_CASE("support closure on (x^3, y^3)") {
  auto r = ring({"x", "y"});
  ClosureProblem p(I(r, {"x^3", "y^3"}));
  auto inside = jsc_member_up_to(P(r, "x^2*y"), p, 5);
  CHECK(inside.verdict == Verdict::Member);
  CHECK(inside.levels.size() == 6);
  for (const auto& level : inside.levels) {
    for (const auto& c : level.coefficients) {
      if (c.verdict == Verdict::Member && !c.coefficient.is_zero()) {
        REQUIRE(c.certificate);
        CHECK(verify_certificate(*c.certificate));
      }
    }
  }
  auto outside = jsc_member_up_to(P(r, "x*y"), p, 6);
  CHECK(outside.verdict == Verdict::NonMember);
  CHECK(outside.first_failing_level == 2u);
}

TEST_CASE("jet closure is contained in the support closure") {
  auto p = cusp();
  for (unsigned m = 1; m <= 4; ++m) {
    const auto closure = jet_closure(p, m);
    for (const auto& g : closure.generators()) {
      CHECK(jet_support_closure_member(g, p, m).verdict == Verdict::Member);
      // The literal reading needs radicals of the global jet ideal; keep it to small levels.
      if (m <= 2) CHECK(jet_support_closure_member(g, p, m, {}, SupportReading::Literal).verdict != Verdict::NonMember);
    }
  }
  for (const auto& problem : random_corpus(testing::kCorpusTestSeed + 4, 6)) {
    const auto closure = jet_closure(problem, 2);
    for (const auto& g : closure.generators()) {
      CHECK(jet_support_closure_member(g, problem, 2).verdict == Verdict::Member);
    }
  }
}

TEST_CASE("both printings of the cusp fiber ideal contain x1*y1^3") {
  auto r = ring({"x1", "x2", "x3", "y1", "y2"});
  auto derived = ideal_member(P(r, "x1*y1^3"), I(r, {"x1^2", "2*x1*x2+y1^3", "2*x1*x3+x2^2+3*y1^2*y2"}));
  REQUIRE(derived.member);
  CHECK(verify_certificate(*derived.certificate));
  auto printed = ideal_member(P(r, "x1*y1^3"), I(r, {"x1^2", "2*x1*x2+y1^2", "2*x1*x3+x2^2+3*y1^2*y2"}));
  REQUIRE(printed.member);
  CHECK(verify_certificate(*printed.certificate));

  MembershipCertificate by_hand{P(r, "x1*y1^3"),
                                {P(r, "x1^2"), P(r, "2*x1*x2+y1^3")},
                                {{P(r, "-2*x2"), 0}, {P(r, "x1"), 1}}};
  CHECK(verify_certificate(by_hand));
  MembershipCertificate by_hand_printed{P(r, "x1*y1^3"),
                                        {P(r, "x1^2"), P(r, "2*x1*x2+y1^2")},
                                        {{P(r, "-2*x2*y1"), 0}, {P(r, "x1*y1"), 1}}};
  CHECK(verify_certificate(by_hand_printed));
}

TEST_CASE("arc closure approximations") {
  auto r = ring({"x", "y"});
  auto maximal = arc_closure_approx(ClosureProblem(I(r, {"x", "y"})), 3);
  REQUIRE(maximal.levels.size() == 4);
  for (const auto& level : maximal.levels) CHECK(strs(level.cumulative.generators()) == Strings{"x", "y"});
  CHECK(maximal.stabilized_at == 0u);

  auto chain = arc_closure_approx(cusp(), 6);
  REQUIRE(chain.levels.size() == 7);
  CHECK(chain.stabilized_at == 5u);
  CHECK(chain.non_monotone_levels.empty());
  CHECK(!chain.inconclusive);
  for (std::size_t m = 1; m < chain.levels.size(); ++m) {
    CHECK(ideal_contains(chain.levels[m - 1].cumulative, chain.levels[m].cumulative));
    CHECK(ideal_contains(chain.levels[m].cumulative, cusp().combined()));
  }
  CHECK(!arc_closure_approx(cusp(), 4).stabilized_at);
}

TEST_CASE("shadow of the counterexample") {
  auto r = ring({"x1", "x2", "x3", "x4"});
  ClosureProblem p(I(r, {"x1-x2^2", "x1-x3^3", "x1-x4^4"}));
  for (unsigned m = 0; m <= 3; ++m) CHECK(jet_closure_member(P(r, "x1"), p, m).member);
  CHECK(!jet_closure_member(P(r, "x1"), p, 4).member);
}
