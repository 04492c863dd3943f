#include <doctest.h>

#include "leinartas/errors.hpp"
#include "leinartas/groebner.hpp"
#include "util.hpp"

using namespace leinartas;
using namespace leinartas::testing;

namespace {

Polynomial s_polynomial(const Polynomial &f, const Polynomial &g, const MonomialOrder &order) {
  const auto &lf = leading_term(f, order);
  const auto &lg = leading_term(g, order);
  Monomial l = lcm(lf.monomial, lg.monomial);
  return f.mul_term(l / lf.monomial, 1 / lf.coefficient) -
         g.mul_term(l / lg.monomial, 1 / lg.coefficient);
}

void check_division(const Polynomial &dividend, const std::vector<Polynomial> &divisors,
                    const MonomialOrder &order) {
  auto r = divide(dividend, divisors, order);
  REQUIRE(r.quotients.size() == divisors.size());
  Polynomial sum = r.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i)
    sum += r.quotients[i] * divisors[i];
  CHECK(poly_equal(sum, dividend));
  for (const auto &t : r.remainder.terms())
    for (const auto &d : divisors)
      CHECK(!leading_term(d, order).monomial.divides(t.monomial));
}

void check_reduced_basis(const TrackedBasis &tb) {
  const auto &order = tb.order;
  for (const auto &g : tb.basis) {
    CHECK(leading_term(g, order).coefficient == 1);
    for (const auto &h : tb.basis) {
      if (&g == &h)
        continue;
      for (const auto &t : g.terms())
        CHECK(!leading_term(h, order).monomial.divides(t.monomial));
    }
  }
  for (std::size_t i = 0; i < tb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < tb.basis.size(); ++j)
      CHECK(divide(s_polynomial(tb.basis[i], tb.basis[j], order), tb.basis, order)
                .remainder.is_zero());
  if (tb.tracked) {
    REQUIRE(tb.representation.size() == tb.basis.size());
    for (std::size_t k = 0; k < tb.basis.size(); ++k) {
      Polynomial sum(tb.basis[k].context());
      for (std::size_t i = 0; i < tb.generators.size(); ++i)
        sum += tb.representation[k][i] * tb.generators[i];
      CHECK(poly_equal(sum, tb.basis[k]));
    }
  }
}

} // namespace

TEST_CASE("compare examples") {
  Monomial x{1, 0}, y{0, 1};
  CHECK(compare(MonomialOrder::lex(), x, y) > 0);
  CHECK(compare(MonomialOrder::degrevlex(), Monomial{2, 1}, Monomial{1, 2}) > 0);
  for (const auto &order : {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                            MonomialOrder::block({false, true})})
    CHECK(compare(order, Monomial{3, 1}, Monomial{3, 1}) == 0);
  // Block order: Y in the leading block dominates any power of X.
  auto block = MonomialOrder::block({false, true});
  CHECK(block(Monomial{0, 1}, Monomial{9, 0}) > 0);
  CHECK(block(Monomial{2, 1}, Monomial{1, 1}) > 0);
}

TEST_CASE("monomial orders are multiplicative well-orders") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<unsigned> e(0, 4);
  auto rand_mono = [&] { return Monomial{e(rng), e(rng), e(rng)}; };
  for (const auto &order : {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                            MonomialOrder::block({true, false, true})})
    for (int i = 0; i < 300; ++i) {
      auto a = rand_mono(), b = rand_mono(), c = rand_mono();
      auto ab = order(a, b);
      CHECK(order(a * c, b * c) == ab);
      CHECK(std::is_lt(ab) == std::is_gt(order(b, a)));
      CHECK(order(a, Monomial(3)) >= 0);
      if (ab < 0 && order(b, c) < 0)
        CHECK(order(a, c) < 0);
    }
}

TEST_CASE("divide examples") {
  auto ctx = make_context({"X", "Y"});
  auto p = P(ctx, "X^2*Y + X*Y^2 + X*Y + X + Y");
  auto r1 = divide(-p, {P(ctx, "X*Y+1")});
  CHECK(r1.quotients[0] == P(ctx, "-X-Y-1"));
  CHECK(r1.remainder == P(ctx, "1"));
  auto r2 = divide(p, {P(ctx, "X*Y")});
  CHECK(r2.quotients[0] == P(ctx, "X+Y+1"));
  CHECK(r2.remainder == P(ctx, "X+Y"));
  auto r3 = divide(p, {P(ctx, "1")});
  CHECK(r3.quotients[0] == p);
  CHECK(r3.remainder.is_zero());
  CHECK_THROWS_AS(divide(p, {Polynomial(ctx)}), UsageError);
  CHECK_THROWS_AS(divide(p, {}), UsageError);
}

TEST_CASE("division identity on random input") {
  std::mt19937 rng(17);
  auto ctx = make_context({"X", "Y", "Z"});
  for (const auto &order : {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                            MonomialOrder::block({true, false, false})})
    for (int iter = 0; iter < 60; ++iter) {
      auto dividend = random_polynomial(ctx, 4, 8, 5, rng);
      std::vector<Polynomial> divisors;
      for (int k = 0; k < 3; ++k)
        divisors.push_back(random_nonconstant(ctx, 2, 3, 3, rng));
      check_division(dividend, divisors, order);
    }
}

TEST_CASE("exact_divide") {
  auto ctx = make_context({"X", "Y"});
  CHECK(exact_divide(P(ctx, "X^2-Y^2"), P(ctx, "X+Y")) == P(ctx, "X-Y"));
  CHECK_THROWS_AS(exact_divide(P(ctx, "X^2+1"), P(ctx, "X+1")), InternalError);
}

TEST_CASE("buchberger examples") {
  auto ctx = make_context({"X", "Y"});
  auto tb = buchberger(Ps(ctx, {"X", "Y"}));
  REQUIRE(tb.basis.size() == 2);
  CHECK(tb.basis[0] == P(ctx, "Y"));
  CHECK(tb.basis[1] == P(ctx, "X"));
  CHECK(buchberger(Ps(ctx, {"X", "Y", "X*Y+1"})).is_unit_ideal());
  CHECK(buchberger(Ps(ctx, {"X-1", "X-2"})).is_unit_ideal());
  auto tracked = buchberger(Ps(ctx, {"X", "Y", "X*Y+1"}), MonomialOrder::degrevlex(), true);
  check_reduced_basis(tracked);
}

TEST_CASE("ideal_contains_one examples") {
  auto ctx = make_context({"X", "Y", "Z"});
  CHECK(ideal_contains_one(Ps(ctx, {"X", "Y", "X*Y+1"})));
  CHECK(!ideal_contains_one(Ps(ctx, {"X", "Y"})));
  CHECK(!ideal_contains_one(Ps(ctx, {"X", "Y", "Z", "X*Y+Z"})));
}

TEST_CASE("reduced basis, S-polynomials, representation, membership") {
  std::mt19937 rng(23);
  for (std::size_t d : {2u, 3u}) {
    std::vector<std::string> names{"X", "Y", "Z"};
    names.resize(d);
    auto ctx = make_context(names);
    for (const auto &order : {MonomialOrder::lex(), MonomialOrder::degrevlex()})
      for (int iter = 0; iter < 40; ++iter) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k)
          gens.push_back(random_nonconstant(ctx, 2, 3, 3, rng));
        auto tb = buchberger(gens, order, true);
        check_reduced_basis(tb);

        Polynomial member(ctx);
        for (const auto &g : gens)
          member += random_polynomial(ctx, 2, 3, 4, rng) * g;
        CHECK(divide(member, tb.basis, order).remainder.is_zero());
        for (const auto &g : gens)
          CHECK(divide(g, tb.basis, order).remainder.is_zero());
      }
  }
}

TEST_CASE("eliminate examples") {
  auto ctx = make_context({"X", "Y", "Y1", "Y2", "Y3"});
  auto out = eliminate(Ps(ctx, {"Y1-X", "Y2-Y", "Y3-(X+Y)"}), {false, false, true, true, true});
  REQUIRE(out.size() == 1);
  CHECK((out[0] == P(ctx, "Y1+Y2-Y3") || out[0] == P(ctx, "-Y1-Y2+Y3")));

  auto c1 = make_context({"X", "Y1"});
  CHECK(eliminate(Ps(c1, {"Y1-X"}), {false, true}).empty());

  auto c2 = make_context({"X", "Y", "Z", "Y1", "Y2", "Y3", "Y4"});
  auto out2 = eliminate(Ps(c2, {"Y1-X", "Y2-Y", "Y3-Z", "Y4-(X*Y+Z)"}),
                        {false, false, false, true, true, true, true});
  REQUIRE(out2.size() == 1);
  CHECK(out2[0] == P(c2, "Y1*Y2+Y3-Y4").monic());
}

TEST_CASE("elimination soundness") {
  std::mt19937 rng(31);
  auto ctx = make_context({"X", "Y", "Z"});
  std::vector<bool> keep{false, true, true};
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(random_nonconstant(ctx, 2, 3, 3, rng));
    auto full = buchberger(gens, MonomialOrder::block({true, false, false}));
    for (const auto &g : eliminate(gens, keep)) {
      CHECK(!g.involves(0));
      CHECK(divide(g, full.basis, full.order).remainder.is_zero());
    }
  }
}

TEST_CASE("gcd examples") {
  auto ctx = make_context({"X", "Y", "Z"});
  CHECK(gcd(P(ctx, "X*Y"), P(ctx, "X*Z")) == P(ctx, "X"));
  CHECK(gcd(P(ctx, "X"), P(ctx, "Y")).is_one());
  auto a = P(ctx, "(X*Y+1)*X"), b = P(ctx, "(X*Y+1)*Y");
  auto g = gcd(a, b);
  CHECK(g == P(ctx, "X*Y+1"));
  CHECK(exact_divide(a, g) == P(ctx, "X"));
  CHECK(exact_divide(b, g) == P(ctx, "Y"));
  CHECK(gcd(P(ctx, "2*X+2"), Polynomial(ctx)) == P(ctx, "X+1"));
  CHECK_THROWS_AS(gcd(Polynomial(ctx), Polynomial(ctx)), UsageError);
}

TEST_CASE("gcd properties") {
  std::mt19937 rng(41);
  auto ctx = make_context({"X", "Y"});
  for (int iter = 0; iter < 40; ++iter) {
    auto c = random_nonconstant(ctx, 2, 3, 3, rng);
    auto a = c * random_nonconstant(ctx, 2, 3, 3, rng);
    auto b = c * random_nonconstant(ctx, 2, 3, 3, rng);
    auto g = gcd(a, b);
    CHECK(g.leading_coefficient() == 1);
    auto ca = exact_divide(a, g);
    auto cb = exact_divide(b, g);
    CHECK(gcd(ca, cb).is_one());
    CHECK_NOTHROW(exact_divide(g, c));
  }
}
