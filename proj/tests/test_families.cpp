#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace octic;
using testing_util::q;

namespace {

const QuadField& gauss() { return make_field(1, BasisKind::Sqrt); }

// Concrete J of a2 mu2 + eps * alpha0 in the family order.
BigInt concrete_j(const FamilySpec& spec, const Candidate& c, const QuadInt& eps, const BigInt& a2) {
  const auto& f = spec.field();
  return j_value(spec.order(), c.element(f.zero()).scaled(eps).translated(QuadInt(f, 0, a2)));
}

}  // namespace

TEST_CASE("candidate lists") {
  const auto& g = gauss();
  auto d4 = FamilySpec::d4(12);
  auto cs = candidates(d4);
  REQUIRE(cs.size() == 6);
  CHECK(cs[0].X == g.one());
  CHECK(cs[1].X == q(g, 0, -288));
  CHECK(cs[1].Z == g.one());
  std::set<std::string> seen;
  for (const auto& c : cs) seen.insert(c.X.to_string() + c.Y.to_string() + c.Z.to_string());
  CHECK(seen.size() == 6);

  auto p1 = FamilySpec::param_i(2, 246, 0);
  auto c1 = candidates(p1);
  REQUIRE(c1.size() == 6);
  auto t = p1.t();
  CHECK(c1[1].X == -(t * t));
  auto p2 = FamilySpec::param_ii(1, 1544804, 0);
  auto c2 = candidates(p2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[1].X == q(p2.field(), 6) * p2.t() + q(p2.field(), 2));
  CHECK(c2[1].Y == q(p2.field(), -4) * p2.t());
  CHECK_THROWS_AS(candidates(FamilySpec::composite(3, 2)), Error);
}

TEST_CASE("printed candidates have relative index one") {
  std::vector<FamilySpec> specs = {FamilySpec::d4(2),           FamilySpec::d4(12),           FamilySpec::d4(-15),
                                   FamilySpec::param_i(1, 3, 2), FamilySpec::param_i(2, 246, 0), FamilySpec::param_i(5, 7, -1),
                                   FamilySpec::param_ii(1, 3, 0), FamilySpec::param_ii(2, 5, 3), FamilySpec::param_ii(6, -4, 1)};
  for (const auto& spec : specs) {
    for (const auto& c : candidates(spec)) CHECK(rel_index(spec.order(), c.element(spec.field().zero())) == 1);
  }
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(FamilySpec::param_i(3, 2, 0), Error);
  CHECK_THROWS_AS(FamilySpec::param_ii(4, 2, 0), Error);
  CHECK_THROWS_AS(FamilySpec::param_i(1, 0, 0), Error);
  CHECK_THROWS_AS(FamilySpec::composite(5, 2), Error);
  CHECK_THROWS_AS(FamilySpec::composite(3, 4), Error);
  CHECK_THROWS_AS(FamilySpec::d4(0), Error);
  CHECK(FamilySpec::d4(12).hypothesis_holds());
  CHECK(FamilySpec::d4(-12).hypothesis_holds());
  CHECK_FALSE(FamilySpec::d4(11).hypothesis_holds());
  CHECK(FamilySpec::param_i(2, 246, 0).hypothesis_holds());
  CHECK_FALSE(FamilySpec::param_i(2, 245, 0).hypothesis_holds());
}

TEST_CASE("jpoly examples") {
  const auto& g = gauss();
  auto d4 = FamilySpec::d4(2);
  auto jp = jpoly(d4, candidates(d4)[0], g.one());
  CHECK(jp.poly.degree() == 16);
  CHECK(abs(evaluate(jp.poly, BigInt(1))) == 1644032);
  CHECK(abs(evaluate(jp.poly, BigInt(0))) == 4096);
  auto p1 = FamilySpec::param_i(2, 246, 0);
  CHECK(jpoly(p1, candidates(p1)[0], p1.field().one()).poly.degree() == 16);
  CHECK(jp.poly.lead() > 0);
}

TEST_CASE("symbolic and concrete J agree") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::vector<FamilySpec> specs = {FamilySpec::d4(12), FamilySpec::param_i(2, 246, 0), FamilySpec::param_ii(1, 7, 0),
                                   FamilySpec::param_i(5, 3, 1)};
  for (const auto& spec : specs) {
    auto cs = candidates(spec);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const auto& eps = spec.field().units()[k % spec.field().units().size()];
      auto jp = jpoly(spec, cs[k], eps);
      for (int s = 0; s < 5; ++s) {
        BigInt a2 = dist(rng);
        CHECK(abs(evaluate(jp.poly, a2)) == concrete_j(spec, cs[k], eps, a2));
      }
    }
  }
}

TEST_CASE("J invariant under a1 and under eps -> -eps") {
  const auto& g = gauss();
  auto d4 = FamilySpec::d4(12);
  auto c = candidates(d4)[2];
  auto plus = jpoly(d4, c, g.w());
  auto minus = jpoly(d4, c, -g.w());
  for (long a2 = -5; a2 <= 5; ++a2) {
    BigInt base = concrete_j(d4, c, g.w(), a2);
    CHECK(j_value(d4.order(), c.element(q(g, 17, a2)).scaled(g.one()).translated(g.zero())) ==
          j_value(d4.order(), c.element(q(g, 0, a2))));
    CHECK(abs(evaluate(plus.poly, BigInt(a2))) == base);
    CHECK(abs(evaluate(minus.poly, BigInt(-a2))) == base);
  }
}

TEST_CASE("divisibility and gcd") {
  CHECK(divisibility_verdict(zpoly({32, 0, 16}), 16));
  CHECK_FALSE(divisibility_verdict(zpoly({15, 0, 1}), 16));
  // x(x+1) is always even, gcd 2
  CHECK(divisibility_verdict(zpoly({0, 1, 1}), 2));
  CHECK(value_gcd(zpoly({0, 1, 1})) == 2);
  CHECK(value_gcd(zpoly({32, 0, 16})) == 16);
  const auto& g = gauss();
  auto d4 = FamilySpec::d4(12);
  CHECK(divisibility_verdict(jpoly(d4, candidates(d4)[0], g.one()).poly, 16));
}

TEST_CASE("pib_search") {
  const auto& g = gauss();
  auto d4 = FamilySpec::d4(12);
  CHECK(pib_search(jpoly(d4, candidates(d4)[0], g.one())).empty());
  JPoly synthetic = jpoly(d4, candidates(d4)[0], g.one());
  synthetic.poly = zpoly({16, -8, 1});
  CHECK(pib_search(synthetic) == std::vector<BigInt>{3, 5});
  synthetic.poly = zpoly({-2, 0, 1});
  // x^2 - 2 = -1 at x = +-1
  CHECK(pib_search(synthetic) == std::vector<BigInt>{-1, 1});
  auto comp = FamilySpec::composite(3, 2);
  Candidate one{comp.field().one(), comp.field().zero(), comp.field().zero(), "xi"};
  for (const auto& eps : comp.field().units()) CHECK(pib_search(jpoly(comp, one, eps)).empty());
}

TEST_CASE("verify_theorem") {
  auto d4 = verify_theorem(FamilySpec::d4(12));
  CHECK(d4.status == VerdictStatus::NoPib);
  CHECK(d4.hypothesis_holds);
  CHECK(d4.verdicts.size() == 12);
  for (const auto& v : d4.verdicts) {
    CHECK(v.degree == 16);
    CHECK(v.divisibility == 16);
    CHECK(v.rel_index == 1);
    CHECK(v.pib_solutions.empty());
  }
  auto all = verify_theorem(FamilySpec::d4(12), {1, UnitChoice::All, std::nullopt});
  CHECK(all.verdicts.size() == 24);

  auto p2 = verify_theorem(FamilySpec::param_ii(2, 1544804, 0));
  CHECK(p2.status == VerdictStatus::NoPib);
  CHECK(p2.verdicts.size() == 4);

  auto small = verify_theorem(FamilySpec::d4(3));
  CHECK(small.status == VerdictStatus::HypothesisUnmet);
  CHECK(small.verdicts.size() == 12);

  auto comp = FamilySpec::composite(7, 3);
  std::vector<Candidate> cs = {{comp.field().one(), comp.field().zero(), comp.field().zero(), "xi"}};
  auto cr = verify_theorem(comp, {1, UnitChoice::Default, cs});
  CHECK(cr.verdicts.size() == 2);
  CHECK(cr.status == VerdictStatus::NoPib);
  CHECK_THROWS_AS(verify_theorem(comp), Error);
}

TEST_CASE("verify_grid is deterministic across worker counts") {
  std::vector<FamilySpec> specs = {FamilySpec::d4(12), FamilySpec::d4(13), FamilySpec::param_i(1, 300, 0)};
  auto one = verify_grid(specs, {1, UnitChoice::Default, std::nullopt});
  auto four = verify_grid(specs, {4, UnitChoice::Default, std::nullopt});
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    REQUIRE(one[i].verdicts.size() == four[i].verdicts.size());
    for (std::size_t k = 0; k < one[i].verdicts.size(); ++k) {
      CHECK(one[i].verdicts[k].eps == four[i].verdicts[k].eps);
      CHECK(one[i].verdicts[k].value_gcd == four[i].verdicts[k].value_gcd);
      CHECK(one[i].verdicts[k].candidate.label == four[i].verdicts[k].candidate.label);
    }
  }
}

TEST_CASE("relative pipeline") {
  auto rep = relative_pipeline(FamilySpec::d4(12), 30);
  CHECK(rep.matches);
  CHECK(rep.missing.empty());
  CHECK(rep.extra.empty());
  CHECK(rep.classes.size() == 6);
  CHECK(rep.theorem.status == VerdictStatus::NoPib);
  for (const auto& r : rep.parametrized_rel_index) CHECK(r == 1);

  auto small = relative_pipeline(FamilySpec::d4(2), 20);
  CHECK(small.missing.empty());
  CHECK(small.theorem.status == VerdictStatus::HypothesisUnmet);
  CHECK_THROWS_AS(relative_pipeline(FamilySpec::param_i(2, 3, 0), 5), Error);
}
