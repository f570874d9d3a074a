#include "ivp/example_lab.hpp"

#include <doctest.h>

#include <random>

using namespace ivp;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

}  // namespace

TEST_CASE("reduction examples") {
  auto r = reduce_relation(Polynomial(), Polynomial());
  CHECK(r.f == Polynomial(-1));
  CHECK(r.discriminant == Polynomial(1));
  r = reduce_relation(Polynomial(1), Polynomial());
  CHECK(r.f == P("X"));
  CHECK(r.discriminant == P("X^2"));
  CHECK_THROWS_AS(reduce_relation(P("X/2"), Polynomial()), DomainError);
}

TEST_CASE("degenerate recoveries fail") {
  for (int sign : {1, -1}) {
    auto rec = recover_solution(Polynomial(), Polynomial(), Polynomial(1), sign);
    REQUIRE(std::holds_alternative<RecoveryFailure>(rec));
    CHECK(std::get<RecoveryFailure>(rec).check == "u_in_int_z");
    rec = recover_solution(Polynomial(1), Polynomial(), P("X"), sign);
    REQUIRE(std::holds_alternative<RecoveryFailure>(rec));
    CHECK(std::get<RecoveryFailure>(rec).check == "u_in_int_z");
  }
  auto rec = recover_solution(Polynomial(1), Polynomial(), P("X+1"), 1);
  REQUIRE(std::holds_alternative<RecoveryFailure>(rec));
  CHECK(std::get<RecoveryFailure>(rec).check == "square_identity");
  CHECK_THROWS_AS(recover_solution(Polynomial(), Polynomial(), Polynomial(1), 0), DomainError);
}

TEST_CASE("the 2x2 example") {
  const auto r = verify_reference_example();
  CHECK(r.f == P("-X^6 - 6X^5 - 6X^4 + 22X^3 + 55X^2 + 44X + 12"));
  CHECK(r.recomputed_g * r.recomputed_g == r.discriminant);
  CHECK(r.matches_reference);
  CHECK(r.mismatched_degrees.empty());
  CHECK(r.derived_x3_coefficient == 22);
  const auto& c = r.certificate;
  CHECK(c.valid());
  CHECK(c.checks.size() == 13);
  CHECK(Polynomial(2) * c.alpha + P("X+1") * c.beta + P("X") * c.gamma + Polynomial(3) * c.delta == Polynomial(1));
  CHECK(c.alpha * c.delta == c.beta * c.gamma);
  CHECK(det2(c.c).is_zero());
  CHECK(trace(c.bc) == Polynomial(1));
  CHECK(MatIP(c.bc * c.bc) == c.bc);
  CHECK(c.content.is_unit());
  CHECK(verify_content_verdict(entries_of(c.bc), c.content).empty());
  auto again = reverify(c);
  REQUIRE(std::holds_alternative<ExampleCertificate>(again));
  CHECK(std::get<ExampleCertificate>(again).alpha == c.alpha);
}

TEST_CASE("quadratic identity for u") {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<long> d(-5, 5);
  auto rp = [&] { return Polynomial{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))}; };
  for (int i = 0; i < 100; ++i) {
    const Polynomial u = rp(), f = rp(), beta = rp(), gamma = rp();
    const Polynomial lhs = Polynomial(6) * u * u + Polynomial(5) * f * u + f * f + beta * gamma;
    const Polynomial sq = Polynomial(12) * u + Polynomial(5) * f;
    const Polynomial rhs = sq * sq - (f * f - Polynomial(24) * beta * gamma);
    CHECK(rhs == Polynomial(24) * lhs);
  }
}

TEST_CASE("bounded search") {
  CHECK(bounded_search(2, 5, 0).empty());
  for (const auto& c : bounded_search(1, 2, 5000)) {
    CHECK(c.valid());
    auto again = reverify(c);
    CHECK(std::holds_alternative<ExampleCertificate>(again));
  }
  CHECK_THROWS_AS(bounded_search(-1, 2, 10), DomainError);
}
