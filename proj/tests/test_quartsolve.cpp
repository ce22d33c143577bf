#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace octic;
using testing_util::q;

namespace {

const QuadField& gauss() { return make_field(1, BasisKind::Sqrt); }

QPoly d4_poly(long T) {
  const auto& g = gauss();
  return QPoly(g.zero(), {g.one(), g.zero(), q(g, 0, -2 * T * T), g.zero(), g.one()});
}

// Every (P, Q) in the box with unit form value, reduced to canonical classes.
std::set<std::pair<QuadInt, QuadInt>> brute_thue(long T, long bound) {
  const auto& g = gauss();
  std::set<std::pair<QuadInt, QuadInt>> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d) {
          QuadInt P(g, a, b), Q(g, c, d);
          if (d4_thue_form(P, Q, T).is_unit()) out.insert(canonical_pair(P, Q));
        }
  return out;
}

}  // namespace

TEST_CASE("D4 resolvent forms") {
  const auto& g = gauss();
  for (long T : {1L, 3L, 12L}) {
    auto forms = resolvent_forms(d4_poly(T));
    QuadInt iT2 = q(g, 0, 2 * T * T);
    CHECK(forms.Q1.xx == g.one());
    CHECK(forms.Q1.yy == -iT2);
    CHECK(forms.Q1.xz == q(g, 0, 4 * T * T));
    CHECK(forms.Q1.zz == q(g, 1 - 4 * T * T * T * T));
    CHECK(forms.Q1.xy.is_zero());
    CHECK(forms.Q1.yz.is_zero());
    CHECK(forms.Q2.yy == g.one());
    CHECK(forms.Q2.xz == q(g, -1));
    CHECK(forms.Q2.zz == -iT2);
    // F = (U + 2iT^2 V)(U - 2V)(U + 2V)
    std::mt19937_64 rng(T);
    for (int k = 0; k < 20; ++k) {
      auto u = testing_util::random_quad(g, rng, 9);
      auto v = testing_util::random_quad(g, rng, 9);
      CHECK(forms.F(u, v) == (u + iT2 * v) * (u - q(g, 2) * v) * (u + q(g, 2) * v));
    }
  }
}

TEST_CASE("binomial resolvent forms") {
  const auto& f = natural_field(7);
  auto a4 = q(f, 3, 1);
  auto forms = resolvent_forms(QPoly(f.zero(), {a4, f.zero(), f.zero(), f.zero(), f.one()}));
  CHECK(forms.F.c[0] == f.one());
  CHECK(forms.F.c[1].is_zero());
  CHECK(forms.F.c[2] == q(f, -4) * a4);
  CHECK(forms.F.c[3].is_zero());
  CHECK(forms.Q1.xx == f.one());
  CHECK(forms.Q1.zz == a4);
  CHECK(forms.Q2.yy == f.one());
  CHECK(forms.Q2.xz == q(f, -1));
}

TEST_CASE("index form examples") {
  const auto& g = gauss();
  long T = 5;
  auto forms = resolvent_forms(d4_poly(T));
  CHECK(index_form_eval(forms, g.one(), g.zero(), g.zero()) == g.one());
  CHECK(index_form_eval(forms, q(g, 0, -2 * T * T), g.zero(), g.one()) == g.one());
  CHECK(index_form_eval(forms, g.zero(), g.one(), g.zero()).is_zero());
}

TEST_CASE("index form identity on random orders") {
  std::mt19937_64 rng(99);
  std::vector<FamilySpec> specs = {FamilySpec::d4(2), FamilySpec::d4(12), FamilySpec::param_i(2, 3, 0),
                                   FamilySpec::param_ii(1, 3, 0), FamilySpec::composite(3, 2)};
  for (const auto& spec : specs) {
    const auto& f = spec.field();
    auto forms = resolvent_forms(spec.order().g());
    for (int k = 0; k < 60; ++k) {
      auto X = testing_util::random_quad(f, rng, 3);
      auto Y = testing_util::random_quad(f, rng, 3);
      auto Z = testing_util::random_quad(f, rng, 3);
      BigInt n = index_form_eval(forms, X, Y, Z).norm();
      OcticElement e{f.zero(), X, Y, Z};
      if (n == 0) {
        CHECK_THROWS_AS(rel_index(spec.order(), e), Error);
      } else {
        CHECK(rel_index(spec.order(), e) == n);
      }
    }
  }
}

TEST_CASE("index form is homogeneous of degree 6") {
  const auto& g = gauss();
  auto forms = resolvent_forms(d4_poly(4));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    auto X = testing_util::random_quad(g, rng, 4);
    auto Y = testing_util::random_quad(g, rng, 4);
    auto Z = testing_util::random_quad(g, rng, 4);
    auto s = testing_util::random_quad(g, rng, 3);
    CHECK(index_form_eval(forms, s * X, s * Y, s * Z) == pow(s, 6) * index_form_eval(forms, X, Y, Z));
  }
}

TEST_CASE("split cubic and U,V solutions") {
  const auto& g = gauss();
  auto gp = d4_poly(12);
  auto forms = resolvent_forms(gp);
  auto split = split_biquadratic(gp);
  auto sols = solve_uv_split(forms, split, g);
  std::set<QuadInt> us;
  for (const auto& s : sols) {
    CHECK(s.V.is_zero());
    CHECK(s.U.is_unit());
    us.insert(s.U);
  }
  CHECK(us.size() == 4);

  auto p1 = FamilySpec::param_i(2, 3, 0);
  auto forms1 = resolvent_forms(p1.order().g());
  auto sols1 = solve_uv_split(forms1, split_biquadratic(p1.order().g()), p1.field());
  std::set<QuadInt> us1;
  for (const auto& s : sols1) {
    CHECK(s.V.is_zero());
    us1.insert(s.U);
  }
  CHECK(us1.size() == 2);

  // a4 not a square
  const auto& f2 = make_field(2, BasisKind::Sqrt);
  QPoly ns(f2.zero(), {q(f2, 3), f2.zero(), q(f2, 1), f2.zero(), f2.one()});
  CHECK_THROWS_AS(split_biquadratic(ns), Error);
}

TEST_CASE("unit differences never divisible by 4 in Z[i]") {
  const auto& g = gauss();
  for (const auto& a : g.units())
    for (const auto& b : g.units())
      if (a != b) CHECK_THROWS_AS(exact_div(a - b, q(g, 4)), Error);
}

TEST_CASE("parametrization") {
  const auto& g = gauss();
  BigInt T = 7;
  auto c1 = parametrize_d4(g.one(), g.zero(), T);
  CHECK(c1[0] == g.one());
  CHECK(c1[1].is_zero());
  CHECK(c1[2].is_zero());
  auto c2 = parametrize_d4(g.zero(), g.one(), T);
  CHECK(c2[0] == q(g, 0, -98));
  CHECK(c2[2] == g.one());
  auto c3 = parametrize_d4(g.one(), q(g, 7, 7), T);
  CHECK(c3[0] == q(g, 1 + 4 * 2401));
  CHECK(c3[1] == q(g, 7, 7));
  CHECK(c3[2] == q(g, 0, 98));
  for (long t : {1L, 2L, 12L, 100L}) CHECK(d4_thue_form(g.one(), q(g, t, t), t) == g.one());
}

TEST_CASE("thue search examples") {
  const auto& g = gauss();
  auto sols = thue_bounded_search(12, 30);
  std::set<std::pair<QuadInt, QuadInt>> got;
  for (const auto& s : sols) got.insert({s.P, s.Q});
  std::set<std::pair<QuadInt, QuadInt>> want = {
      canonical_pair(g.one(), g.zero()),          canonical_pair(g.zero(), g.one()),
      canonical_pair(g.one(), q(g, 12, 12)),      canonical_pair(g.one(), q(g, -12, -12)),
      canonical_pair(q(g, 12, 12), g.one()),      canonical_pair(q(g, 12, 12), q(g, -1)),
  };
  CHECK(got == want);
  CHECK(got.size() == 6);

  auto small = thue_bounded_search(12, 5);
  CHECK(small.size() == 2);
  CHECK(thue_bounded_search(12, 30, 3).size() == sols.size());
}

TEST_CASE("thue search matches brute force on small boxes") {
  for (long T : {1L, 2L, 3L}) {
    for (long bound : {2L, 4L}) {
      auto fast = thue_bounded_search(T, bound);
      std::set<std::pair<QuadInt, QuadInt>> got;
      for (const auto& s : fast) {
        CHECK(d4_thue_form(s.P, s.Q, T) == s.unit);
        got.insert({s.P, s.Q});
      }
      CHECK(got.size() == fast.size());
      CHECK(got == brute_thue(T, bound));
    }
  }
}
