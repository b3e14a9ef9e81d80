#include <doctest.h>

#include <algorithm>

#include "jetclosure/closures.hpp"
#include "jetclosure/corpus.hpp"
#include "jetclosure/errors.hpp"
#include "support.hpp"

using namespace jetclosure;
using testing::I;
using testing::kCorpusTestSeed;
using testing::P;
using testing::ring;
using testing::strs;

using Strings = std::vector<std::string>;

TEST_CASE("reduced bases of small ideals") {
  auto r = ring({"x", "y"});
  CHECK(strs(groebner_basis(I(r, {"x", "y"}))) == Strings{"x", "y"});
  CHECK(strs(groebner_basis(I(r, {"x-y", "y"}))) == Strings{"x", "y"});
  CHECK(strs(groebner_basis(I(r, {"x^2-1", "x-1"}))) == Strings{"x-1"});
  CHECK(strs(groebner_basis(I(r, {"2*x+2", "x*y"}))) == Strings{"x+1", "y"});
  CHECK(groebner_basis(I(r, {})).empty());
  CHECK(strs(groebner_basis(I(r, {"x", "x+1"}))) == Strings{"1"});
  CHECK(strs(groebner_basis(I(r, {"x^2+y^3", "x*y^3"}))) == Strings{"x^3", "y^3+x^2"});
  CHECK(strs(groebner_basis(I(r, {"x^2+y^3", "x*y^3"}), MonomialOrder::lex())) ==
        Strings{"x^2+y^3", "x*y^3", "y^6"});
}

TEST_CASE("normal forms and membership") {
  auto r = ring({"x", "y"});
  auto nf = normal_form(P(r, "x+1"), I(r, {"x"}));
  CHECK(nf.remainder == P(r, "1"));
  CHECK(verify_certificate(nf.certificate));
  CHECK(nf.certificate.target == P(r, "x"));

  CHECK(ideal_member(P(r, "x"), I(r, {"x", "y"})).member);
  CHECK(!ideal_member(P(r, "1"), I(r, {"x", "y"})).member);
  CHECK(!ideal_member(P(r, "1"), I(r, {"x", "y"})).certificate);
  auto m = ideal_member(P(r, "x*y^3"), I(r, {"x^2+y^3", "x*y^3"}));
  REQUIRE(m.member);
  CHECK(verify_certificate(*m.certificate));
  CHECK(ideal_member(P(r, "0"), I(r, {"x"})).member);
  CHECK(ideal_member(P(r, "0"), I(r, {})).member);
  CHECK(!ideal_member(P(r, "x"), I(r, {})).member);
  CHECK(!ideal_member(P(r, "x^2*y^2"), I(r, {"x^2+y^3", "x*y^3"})).member);
  CHECK_THROWS_AS(ideal_member(P(ring({"x", "z"}), "x"), I(r, {"x"})), RingMismatch);
}

TEST_CASE("radical membership") {
  auto r = ring({"x1", "x2", "y1", "y2", "z1", "z2"});
  auto sq = radical_member(P(r, "z1"), I(r, {"z1^2"}));
  REQUIRE(sq.member);
  CHECK(verify_certificate(*sq.rabinowitsch));
  CHECK(sq.exponent == 2u);
  CHECK(verify_certificate(*sq.power_certificate));
  CHECK(!radical_member(P(r, "z2"), I(r, {"x1", "x2", "y1", "y2", "z1^2"})).member);
  CHECK(radical_member(P(r, "x1+y1"), I(r, {"x1^3", "y1^5"})).member);
  CHECK(!radical_member(P(r, "x1"), I(r, {"x1*y1"})).member);
  CHECK(radical_member(P(r, "7"), I(r, {"1"})).member);
}

TEST_CASE("an ideal is contained in its radical") {
  auto corpus = random_corpus(kCorpusTestSeed, 10);
  for (const auto& problem : corpus) {
    for (const auto& g : problem.combined().generators()) {
      auto rm = radical_member(g, problem.combined());
      CHECK(rm.member);
      REQUIRE(rm.rabinowitsch);
      CHECK(verify_certificate(*rm.rabinowitsch));
      CHECK(rm.exponent == 1u);
    }
  }
}

TEST_CASE("elimination") {
  auto r = ring({"t", "x", "y"});
  auto e = eliminate(I(r, {"x-t", "y-t^2"}), {"x", "y"});
  CHECK(e.ring()->names() == Strings{"x", "y"});
  CHECK(strs(e.generators()) == Strings{"x^2-y"});
  CHECK(strs(eliminate(I(r, {"x"}), {"x"}).generators()) == Strings{"x"});
  CHECK(eliminate(I(r, {"t"}), {"x"}).is_zero());
  CHECK(strs(eliminate(I(r, {"t*x-1", "t*y-1"}), {"x", "y"}).generators()) == Strings{"x-y"});
  CHECK_THROWS_AS(eliminate(I(r, {"x"}), {"w"}), InvalidArgument);
}

TEST_CASE("intersection") {
  auto r = ring({"x", "y"});
  CHECK(strs(ideal_intersect(I(r, {"x"}), I(r, {"y"})).generators()) == Strings{"x*y"});
  CHECK(ideal_equal(ideal_intersect(I(r, {"x"}), I(r, {"x"})), I(r, {"x"})));
  CHECK(ideal_equal(ideal_intersect(I(r, {"x^2", "x*y"}), I(r, {"y"})), I(r, {"x*y"})));
  CHECK(ideal_intersect(I(r, {"x"}), I(r, {})).is_zero());
}

TEST_CASE("equality and containment") {
  auto r = ring({"x", "y"});
  CHECK(ideal_equal(I(r, {"x", "y"}), I(r, {"x+y", "x-y"})));
  CHECK(!ideal_equal(I(r, {"x"}), I(r, {"x", "y"})));
  CHECK(ideal_contains(I(r, {"x", "y"}), I(r, {"x*y", "x^2"})));
  CHECK(!ideal_contains(I(r, {"x^2"}), I(r, {"x"})));
  CHECK(ideal_equal(I(r, {}), I(r, {"0"})));

  // The closure of the cusp at level 4 is strictly larger than (x^2+y^3, x*y^3).
  auto cusp = ClosureProblem(I(r, {"x^2+y^3"}));
  auto c4 = jet_closure(cusp, 4);
  CHECK(strs(c4.generators()) == Strings{"x^3", "y^3+x^2", "x^2*y^2"});
  CHECK(!ideal_equal(I(r, {"x^2+y^3", "x*y^3"}), c4));
  CHECK(ideal_contains(c4, I(r, {"x^2+y^3", "x*y^3"})));
}

TEST_CASE("certificates") {
  auto r = ring({"x", "y"});
  auto m = ideal_member(P(r, "x^3*y+y^4"), I(r, {"x^2+y^3", "x*y"}));
  REQUIRE(m.member);
  CHECK(verify_certificate(*m.certificate));
  auto tampered = *m.certificate;
  tampered.cofactors.front().cofactor += P(r, "1");
  CHECK(!verify_certificate(tampered));
  auto wrong_target = *m.certificate;
  wrong_target.target = P(r, "x");
  CHECK(!verify_certificate(wrong_target));

  MembershipCertificate zero{P(r, "0"), {P(r, "x")}, {}};
  CHECK(verify_certificate(zero));
}

TEST_CASE("S-polynomials of a reduced basis reduce to zero") {
  auto corpus = random_corpus(kCorpusTestSeed, 20);
  for (const auto& problem : corpus) {
    for (const auto& order : {MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
      auto data = buchberger(problem.combined().generators(), order);
      const auto& g = data.basis;
      for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g[i].leading_coeff().is_one());
        for (std::size_t j = 0; j < g.size(); ++j) {
          if (i != j) CHECK(!g[j].leading_monomial().divides(g[i].leading_monomial()));
          if (i < j) CHECK(reduce(s_polynomial(g[i], g[j]), g).is_zero());
        }
      }
      // Every input generator reduces to zero.
      for (const auto& f : problem.combined().generators()) CHECK(reduce(f.in_order(order), g).is_zero());
    }
  }
}

TEST_CASE("tracked lift expresses each basis element") {
  auto corpus = random_corpus(kCorpusTestSeed + 1, 10);
  for (const auto& problem : corpus) {
    const auto& gens = problem.combined().generators();
    auto data = buchberger(gens, MonomialOrder::degrevlex(), {}, true);
    REQUIRE(data.lift.size() == data.basis.size());
    for (std::size_t k = 0; k < data.basis.size(); ++k) {
      Polynomial sum(problem.ring());
      for (std::size_t j = 0; j < gens.size(); ++j) sum += data.lift[k][j] * gens[j];
      CHECK(sum == data.basis[k]);
    }
  }
}

TEST_CASE("reduced basis is independent of generator order") {
  auto corpus = random_corpus(kCorpusTestSeed + 2, 15);
  for (const auto& problem : corpus) {
    auto gens = problem.combined().generators();
    auto base = strs(buchberger(gens, MonomialOrder::degrevlex()).basis);
    std::reverse(gens.begin(), gens.end());
    gens.push_back(gens.front() + gens.back());
    CHECK(strs(buchberger(gens, MonomialOrder::degrevlex()).basis) == base);
  }
}

TEST_CASE("linear ideals agree with Gaussian elimination") {
  // Over lex, the reduced basis of a linear ideal is its reduced row echelon form.
  auto r = ring({"x", "y", "z", "w"});
  auto g = buchberger(I(r, {"x+2*y-z", "2*x+4*y+w", "y+z+w"}).generators(), MonomialOrder::lex()).basis;
  CHECK(strs(g) == Strings{"x-1/2*w", "y+1/2*w", "z+1/2*w"});
  auto r7 = ring({"x", "y", "z"}, FieldSpec::prime(7));
  g = buchberger(I(r7, {"x+y+z", "x+2*y+3*z", "x+4*y+2*z"}).generators(), MonomialOrder::lex()).basis;
  CHECK(strs(g) == Strings{"x", "y", "z"});
}

TEST_CASE("resource guards") {
  auto r = ring({"x", "y", "z"});
  GroebnerOptions tight;
  tight.max_pair_degree = 3;
  CHECK_THROWS_AS(groebner_basis(I(r, {"x^3*y-z^2", "y^3*z-x^2", "z^3*x-y^2"}), MonomialOrder::degrevlex(), tight),
                  ResourceGuardExceeded);
  GroebnerOptions instant;
  instant.timeout = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(groebner_basis(I(r, {"x^3*y-z^2", "y^3*z-x^2", "z^3*x-y^2"}), MonomialOrder::degrevlex(), instant),
                  ResourceGuardExceeded);
}
