#include "ivp/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace ivp;

namespace {

Polynomial P(std::string_view s) { return parse_polynomial(s); }

Polynomial random_poly(std::mt19937_64& rng, int deg, long h) {
  std::uniform_int_distribution<long> d(-h, h);
  std::vector<Rational> c;
  for (int k = 0; k <= deg; ++k) c.emplace_back(d(rng));
  return Polynomial(c);
}

}  // namespace

TEST_CASE("parsing and printing round-trip") {
  const Polynomial f = P("-3/2*X^5 + X - 7");
  CHECK(f.degree() == 5);
  CHECK(f.coeff(5) == Rational(-3, 2));
  CHECK(f.coeff(0) == -7);
  CHECK(f.to_string() == "-3/2*X^5 + X - 7");
  CHECK(P(f.to_string()) == f);
  CHECK(P("X*(X-1)/2") == P("1/2*X^2 - 1/2*X"));
  CHECK(P("(X+1)^3") == P("X^3 + 3X^2 + 3X + 1"));
  CHECK(P("0").is_zero());
  CHECK(P("0").to_string() == "0");
  CHECK_THROWS_AS(P("X/(X+1)"), ParseError);
  CHECK_THROWS_AS(P("X +"), ParseError);
  CHECK_THROWS_AS(P("Y"), ParseError);
  CHECK_THROWS_AS(P("X/0"), ParseError);
}

TEST_CASE("arithmetic and division") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng, 5, 20), g = random_poly(rng, 3, 20);
    if (g.is_zero()) continue;
    auto qr = divmod(f, g);
    CHECK(qr.quotient * g + qr.remainder == f);
    CHECK(qr.remainder.degree() < g.degree());
    for (long x = -3; x <= 3; ++x) CHECK((f * g)(Rational(x)) == f(Rational(x)) * g(Rational(x)));
  }
  CHECK(divides(P("X-1"), P("X^2-1")));
  CHECK_FALSE(divides(P("X-2"), P("X^2-1")));
  CHECK(pow(P("X+1"), 2) == P("X^2+2X+1"));
}

TEST_CASE("binomial basis") {
  CHECK(to_binomial_basis(P("X^2")).coeffs == std::vector<Rational>{0, 1, 2});
  CHECK(to_binomial_basis(P("5")).coeffs == std::vector<Rational>{5});
  CHECK(to_binomial_basis(P("X(X-1)(X-2)/6")).coeffs == std::vector<Rational>{0, 0, 0, 1});
  CHECK(binomial_polynomial(3) == P("X(X-1)(X-2)/6"));
  CHECK(binomial_polynomial(0) == Polynomial(1));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Polynomial f = random_poly(rng, 6, 50) / Rational(std::uniform_int_distribution<long>(1, 30)(rng));
    CHECK(to_binomial_basis(f).to_polynomial() == f);
  }
}

TEST_CASE("integer-valued membership") {
  CHECK(is_int_valued(P("X(X-1)/2")).int_valued);
  CHECK_FALSE(is_int_valued(P("X/2")).int_valued);
  const auto r = is_int_valued(P("(X^2+X)/2"));
  CHECK(r.int_valued);
  CHECK(r.denom_exponent == std::map<long, long>{{2, 1}});
  CHECK(P("X^5/30 - X/30 + X^5/5 - X^5/5") == P("(X^5 - X)/30"));
  CHECK(is_int_valued(P("(X^5 - X)/30")).int_valued);
  CHECK(is_p_int_valued(P("X/3"), Prime(2)));
  CHECK_FALSE(is_p_int_valued(P("X/3"), Prime(3)));
}

TEST_CASE("int-valuedness agrees with sampling on 0..deg") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng, 4, 6) / Rational(std::uniform_int_distribution<long>(1, 12)(rng));
    bool sampled = true;
    for (long x = 0; x <= std::max(f.degree(), 0); ++x) sampled = sampled && f(Rational(x)).get_den() == 1;
    CHECK(is_int_valued(f).int_valued == sampled);
  }
}

TEST_CASE("residue images") {
  CHECK(residue_image(P("X(X-1)/2"), Prime(2)) == std::set<long>{0, 1});
  CHECK(residue_image(P("X"), Prime(3)) == std::set<long>{0, 1, 2});
  CHECK(residue_image(P("7"), Prime(5)) == std::set<long>{2});
  CHECK(residue_image(P("X^2+X"), Prime(2)) == std::set<long>{0});
  CHECK(residue_image(P("X^2"), Prime(5)) == std::set<long>{0, 1, 4});
  CHECK(continuity_exponent(P("X(X-1)/2"), Prime(2)) == 2);
  CHECK_THROWS_AS(residue_image(P("X/2"), Prime(2)), DomainError);
}

TEST_CASE("gcd over Q[X]") {
  auto check = [](const Polynomial& f, const Polynomial& g, const Polynomial& h) {
    auto b = bezout_gcd_qx(f, g);
    CHECK(b.h == h);
    CHECK(b.u * f + b.v * g == b.h);
  };
  check(P("X"), P("X-1"), Polynomial(1));
  check(P("X^2-1"), P("X-1"), P("X-1"));
  check(P("(X^2+X)/2"), P("X"), P("X"));
  check(P("0"), P("3X+6"), P("X+2"));
  CHECK_THROWS_AS(bezout_gcd_qx(Polynomial(), Polynomial()), DomainError);
}

TEST_CASE("polynomial square roots") {
  CHECK(poly_sqrt(P("X^2+2X+1")) == P("X+1"));
  CHECK_FALSE(poly_sqrt(P("X^2+1")));
  CHECK(poly_sqrt(pow(P("2X^2-3"), 2)) == P("2X^2-3"));
  CHECK(poly_sqrt(P("1/4")) == Polynomial(Rational(1, 2)));
  CHECK_FALSE(poly_sqrt(P("-X^2")));
  CHECK(poly_sqrt(Polynomial()) == Polynomial());
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Polynomial g = random_poly(rng, 6, 30);
    if (g.is_zero()) continue;
    if (g.leading() < 0) g = -g;
    CHECK(poly_sqrt(g * g) == g);
  }
}

TEST_CASE("enumeration order") {
  auto all = enumerate_int_polynomials(1, 1);
  CHECK(all.size() == 9);
  CHECK(all.front().is_zero());
  CHECK(enumerate_int_polynomials(2, 2).size() == 125);
}
