#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace nroots;
using testing::C;
using testing::D;
using testing::R;
using testing::V;

namespace {

OrderedScene scene_of(std::initializer_list<unsigned> placement) {
  const std::vector<unsigned> p(placement);
  return scene_from_placement(static_cast<unsigned>(p.size()), p);
}

GapPolynomial g(std::size_t count, std::size_t index) { return GapPolynomial::variable(count, index - 1); }

GapPolynomial random_poly(std::mt19937_64& rng, std::size_t gaps, int terms, int max_exp, long coeff) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Term t;
    for (std::size_t v = 0; v < gaps; ++v) t.exponents[v] = static_cast<std::uint8_t>(rng() % (max_exp + 1));
    t.coefficient = static_cast<long>(rng() % (2 * coeff + 1)) - coeff;
    ts.push_back(t);
  }
  return GapPolynomial::from_terms(gaps, std::move(ts));
}

std::vector<Rational> random_gaps(std::mt19937_64& rng, std::size_t count) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < count; ++k)
    out.emplace_back(Integer(static_cast<long>(1 + rng() % 200)), Integer(static_cast<long>(1 + rng() % 40)));
  return out;
}

}  // namespace

TEST_CASE("scene_from_placement") {
  CHECK(scene_of({0, 0}).str() == "l1 < l2 < a1 < a2 < a3");
  CHECK(scene_of({1, 2}).str() == "a1 < l1 < a2 < l2 < a3");
  CHECK(scene_of({2}).str() == "a1 < a2 < l1");
  CHECK(scene_of({3, 3}).str() == "a1 < a2 < a3 < l1 < l2");
  CHECK(scene_of({1, 2}).gap_count() == 4);
}

TEST_CASE("scene validation") {
  using S = Symbol;
  const auto A = SymbolKind::A;
  const auto L = SymbolKind::Lambda;
  CHECK(testing::error_code_of([&] { OrderedScene(1, {S{A, 2}, S{A, 1}, S{L, 1}}); }) == ErrorCode::InvalidArgument);
  CHECK(testing::error_code_of([&] { OrderedScene(1, {S{A, 1}, S{A, 2}}); }) == ErrorCode::InvalidArgument);
  CHECK(testing::error_code_of([&] { OrderedScene(1, {S{A, 1}, S{A, 1}, S{L, 1}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("value polynomials are prefix sums from base 0") {
  const auto s1 = scene_of({0, 0});
  CHECK(V(s1, "l1").is_zero());
  CHECK(V(s1, "a1") == g(4, 1) + g(4, 2));
  const auto s2 = scene_of({1, 2});
  CHECK(V(s2, "l2") == g(4, 1) + g(4, 2) + g(4, 3));
  CHECK(D(s1, "a3", "l1") == GapPolynomial::span_sum(4, 0, 4));
  CHECK(D(s1, "a3", "a1") == g(4, 3) + g(4, 4));
  const auto all = value_polynomials(s2);
  REQUIRE(all.size() == 5);
  CHECK(all[0].is_zero());
  CHECK(all[4] == GapPolynomial::span_sum(4, 0, 4));
}

TEST_CASE("gap polynomial arithmetic") {
  CHECK(g(4, 1) * g(4, 2) == GapPolynomial::from_terms(4, {Term{{1, 1}, 1}}));
  CHECK(((g(4, 1) + g(4, 2)) - (g(4, 1) + g(4, 2))).is_zero());

  // (l1-a1)(a3-a2) + (a3-l2)(a2-l1) under a1 < l1 < l2 < a2 < a3.
  const auto s = scene_of({1, 1});
  const auto lhs = D(s, "l1", "a1") * D(s, "a3", "a2") + D(s, "a3", "l2") * D(s, "a2", "l1");
  const auto g1 = g(4, 1), g2 = g(4, 2), g3 = g(4, 3), g4 = g(4, 4);
  CHECK(lhs == g1 * g4 + (g3 + g4) * (g2 + g3));
  CHECK(lhs == g1 * g4 + g2 * g3 + g2 * g4 + g3 * g3 + g3 * g4);
  CHECK(lhs.terms().size() == 5);
  CHECK(lhs.str() == "g1*g4 + g2*g3 + g2*g4 + g3^2 + g3*g4");
}

TEST_CASE("gap polynomial ring laws") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 60; ++k) {
    const auto x = random_poly(rng, 4, 4, 2, 5), y = random_poly(rng, 4, 3, 2, 5), z = random_poly(rng, 4, 3, 2, 5);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x - x).is_zero());
    CHECK(x.pow(2) == x * x);
    for (const auto& t : x.terms()) CHECK(t.coefficient != 0);
  }
}

TEST_CASE("divide_exact") {
  const auto a = g(3, 1) + g(3, 2), b = g(3, 2) + g(3, 3) * g(3, 1);
  const auto q = divide_exact(a * b, a);
  REQUIRE(q.has_value());
  CHECK(*q == b);
  CHECK(!divide_exact(a * b + g(3, 3), a).has_value());
}

TEST_CASE("gp_evaluate") {
  const std::vector<Rational> ones(4, Rational(1));
  CHECK((g(4, 1) * g(4, 4)).evaluate(ones) == R("1"));
  CHECK(GapPolynomial(4).evaluate(ones).is_zero());

  // a1a2 - a1a3 + a2a3 - a2l1 - a2l2 + l1l2 with a1=0, l1=1, l2=2, a2=3, a3=4.
  const auto s = scene_of({1, 1});
  const auto e = V(s, "a1") * V(s, "a2") - V(s, "a1") * V(s, "a3") + V(s, "a2") * V(s, "a3") - V(s, "a2") * V(s, "l1") -
                 V(s, "a2") * V(s, "l2") + V(s, "l1") * V(s, "l2");
  CHECK(e.evaluate(ones) == R("5"));
  CHECK(R("0") * R("3") - R("0") * R("4") + R("3") * R("4") - R("3") * R("1") - R("3") * R("2") + R("1") * R("2") == R("5"));

  const std::vector<Rational> bad{1, 1, 0, 1};
  CHECK(testing::error_code_of([&] { (void)e.evaluate(bad); }) == ErrorCode::NonPositiveGap);
}

TEST_CASE("evaluate_scaled matches evaluate") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto p = random_poly(rng, 3, 4, 3, 9);
    std::vector<Integer> num;
    std::vector<Rational> pt;
    for (int v = 0; v < 3; ++v) {
      num.emplace_back(static_cast<long>(1 + rng() % 50));
      pt.emplace_back(num.back(), Integer(7));
    }
    Integer den_pow = 1;
    for (unsigned d = 0; d < p.total_degree(); ++d) den_pow *= 7;
    CHECK(Rational(p.evaluate_scaled(num, 7), den_pow) == p.evaluate(pt));
  }
}

TEST_CASE("sign_of examples") {
  const auto g1 = g(4, 1), g2 = g(4, 2), g3 = g(4, 3), g4 = g(4, 4);
  const auto pos = sign_of(g1 * g4 + g2 * g3 + g2 * g4 + g3 * g3 + g3 * g4);
  CHECK(pos.sign == Sign::Positive);
  CHECK(pos.polya_level == 0);

  CHECK(sign_of(GapPolynomial(4)).sign == Sign::Zero);

  const auto h1 = g(2, 1), h2 = g(2, 2);
  const auto p = h1 * h1 - h1 * h2 + h2 * h2;
  CHECK((h1 + h2) * p == h1.pow(3) + h2.pow(3));
  const auto v = sign_of(p, 4);
  CHECK(v.sign == Sign::Positive);
  CHECK(v.polya_level == 1);
  CHECK(sign_of(-p, 4).sign == Sign::Negative);
  CHECK(sign_of(p, 0).sign == Sign::Indeterminate);
}

TEST_CASE("indeterminate carries an expression and a sampling summary") {
  const auto p = g(2, 1) - g(2, 2);
  const auto v = sign_of(p, 4);
  CHECK(v.sign == Sign::Indeterminate);
  REQUIRE(v.expression.has_value());
  CHECK(*v.expression == p);
  REQUIRE(v.sampling.has_value());
  CHECK(v.sampling->samples >= kSignSamples);
  CHECK(v.sampling->positive + v.sampling->negative + v.sampling->zero == v.sampling->samples);
  CHECK(v.sampling->class_dependent());

  // Nonnegative, zero on g1 = g2: never certified, and sampling stays uniform.
  const auto sq = p * p;
  const auto w = sign_of(sq, 4);
  CHECK(w.sign == Sign::Indeterminate);
  CHECK(w.sampling->negative == 0);
}

TEST_CASE("sign_of is sound on seeded samples") {
  std::mt19937_64 rng(13);
  int decided = 0;
  for (int k = 0; k < 80; ++k) {
    GapPolynomial p = random_poly(rng, 4, 5, 2, 6);
    if (k % 3 == 0) p = p * p + g(4, 1 + k % 4);  // often positive, rarely with uniform coefficients
    if (k % 3 == 1) p = -(GapPolynomial::span_sum(4, 0, 2) * GapPolynomial::span_sum(4, 1, 4)) + p * C(scene_of({0, 0}), 0);
    const auto v = sign_of(p, 3);
    if (!v.decided() || v.sign == Sign::Zero) continue;
    ++decided;
    std::mt19937_64 pts(1000 + k);
    for (int s = 0; s < 1000; ++s) {
      const int sign = p.evaluate(random_gaps(pts, 4)).sign();
      if (sign != static_cast<int>(v.sign)) {
        FAIL_CHECK("sign_of decided " << sign_name(v.sign) << " but the sample has sign " << sign << " for " << p.str());
        break;
      }
    }
  }
  CHECK(decided > 20);
}

TEST_CASE("sign_of is monotone in polya_max") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    GapPolynomial p = random_poly(rng, 3, 4, 2, 4);
    if (k % 2) p = p * p + g(3, 1) * g(3, 2);
    std::optional<Sign> first;
    for (unsigned m = 0; m <= 4; ++m) {
      const auto v = sign_of(p, m);
      if (!v.decided()) {
        CHECK(!first.has_value());
        continue;
      }
      if (!first) first = v.sign;
      CHECK(v.sign == *first);
    }
  }
}

TEST_CASE("factor_differences strips scene differences") {
  const auto s = scene_of({0, 0});
  const auto p = D(s, "a2", "a1") * D(s, "a3", "a1") * D(s, "a3", "a2") * D(s, "l2", "l1");
  const auto f = factor_differences(p, s);
  CHECK(f.plain());
  CHECK(f.content == 1);
  CHECK(f.factors.size() == 4);

  const auto q = C(s, -3) * D(s, "a1", "l2") * D(s, "a1", "l2") * (D(s, "a1", "l1") + D(s, "a3", "a2") * D(s, "a2", "l1"));
  const auto fq = factor_differences(q, s);
  CHECK(!fq.plain());
  CHECK(fq.content == -3);
  REQUIRE(fq.factors.size() == 1);
  CHECK(fq.factors[0].multiplicity == 2);
  CHECK(fq.str().rfind("-3*(a1-l2)^2*[", 0) == 0);
}
