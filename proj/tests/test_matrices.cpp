#include "ivp/matrices.hpp"

#include <doctest.h>

#include <random>

using namespace ivp;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

MatZ random_matz(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c, long h) {
  std::uniform_int_distribution<long> d(-h, h);
  MatZ m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Laplace expansion, independent of the Bareiss routine.
Integer cofactor_det(const MatZ& a) {
  const Eigen::Index n = a.rows();
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    MatZ minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index k = 0, col = 0; k < n; ++k)
        if (k != j) minor(i - 1, col++) = a(i, k);
    const Integer term = a(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void check_snf(const MatZ& a) {
  const auto r = snf_with_transforms(a);
  CHECK(r.u * a * r.w == r.s);
  CHECK(abs(cofactor_det(r.u)) == 1);
  CHECK(abs(cofactor_det(r.w)) == 1);
  const Eigen::Index k = std::min(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < r.s.rows(); ++i)
    for (Eigen::Index j = 0; j < r.s.cols(); ++j)
      if (i != j) CHECK(r.s(i, j) == 0);
  for (Eigen::Index i = 0; i < k; ++i) {
    CHECK(r.s(i, i) >= 0);
    if (i + 1 < k) {
      if (r.s(i, i) == 0) CHECK(r.s(i + 1, i + 1) == 0);
      else CHECK(mpz_divisible_p(r.s(i + 1, i + 1).get_mpz_t(), r.s(i, i).get_mpz_t()) != 0);
    }
  }
  if (k > 0) CHECK(r.s(0, 0) == entry_gcd(a));
}

}  // namespace

TEST_CASE("Eigen algebra over polynomial scalars") {
  const MatIP b = parse_matip("2,X;X+1,3");
  CHECK(det2(b) == P("6 - X - X^2"));
  CHECK(trace(b) == Polynomial(5));
  const MatIP id = MatIP::Identity(2, 2);
  CHECK(b * id == b);
  CHECK(format_matrix(b) == "2,X;X + 1,3");
}

TEST_CASE("Smith normal form examples") {
  auto r = snf_with_transforms(MatZ::Identity(2, 2));
  CHECK(r.s == MatZ::Identity(2, 2));
  CHECK(r.u == MatZ::Identity(2, 2));
  CHECK(r.w == MatZ::Identity(2, 2));
  r = snf_with_transforms(parse_matz("2,0;0,3"));
  CHECK(r.s == parse_matz("1,0;0,6"));
  r = snf_with_transforms(parse_matz("2,4;6,8"));
  CHECK(r.s == parse_matz("2,0;0,4"));
  const MatZ zero = MatZ::Zero(2, 3);
  r = snf_with_transforms(zero);
  CHECK(r.s == zero);
  CHECK(r.u == MatZ::Identity(2, 2));
  CHECK(r.w == MatZ::Identity(3, 3));
  check_snf(parse_matz("2,4;6,8"));
}

TEST_CASE("Smith normal form on random matrices") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> dim(1, 4);
  for (int i = 0; i < 100; ++i) check_snf(random_matz(rng, dim(rng), dim(rng), 100));
}

TEST_CASE("determinants agree") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 50; ++i) {
    const MatZ a = random_matz(rng, 4, 4, 50);
    CHECK(determinant(a) == cofactor_det(a));
  }
}

TEST_CASE("strong Bezout over Z") {
  auto check = [](long a, long b, long c, long d) {
    const auto s = strong_bezout_z(a, b, c, d);
    CHECK(a * s.alpha + b * s.beta + c * s.gamma + d * s.delta == 1);
    CHECK(s.alpha * s.delta == s.beta * s.gamma);
  };
  check(2, 3, 4, 5);
  check(6, 10, 15, 0);
  check(1, 0, 0, 0);
  check(0, 0, 0, -1);
  CHECK_THROWS_AS(strong_bezout_z(2, 4, 6, 8), NotCoprimeError);
  try {
    strong_bezout_z(6, 9, 0, 3);
  } catch (const NotCoprimeError& e) {
    CHECK(e.gcd() == 3);
  }
}

TEST_CASE("unit content examples") {
  auto v = unit_content_decide({P("2"), P("X^2+X")});
  REQUIRE_FALSE(v.is_unit());
  REQUIRE(v.non_unit().point);
  CHECK(v.non_unit().point->prime().value() == 2);
  CHECK(verify_content_verdict({P("2"), P("X^2+X")}, v).empty());

  v = unit_content_decide({P("2"), P("X"), P("X+1"), P("3")});
  CHECK(v.is_unit());
  CHECK(verify_content_verdict({P("2"), P("X"), P("X+1"), P("3")}, v).empty());

  v = unit_content_decide({P("X"), P("X-1")});
  CHECK(v.is_unit());

  v = unit_content_decide({P("X^2-1"), P("X-1")});
  REQUIRE_FALSE(v.is_unit());
  CHECK(v.non_unit().common_factor == P("X-1"));

  // 2 and C(X,2) + 1: C(x,2) is even exactly when x = 0, 1 mod 4
  v = unit_content_decide({P("2"), P("X(X-1)/2 + 1")});
  REQUIRE_FALSE(v.is_unit());
  CHECK(v.non_unit().point->precision() == 2);

  v = unit_content_decide({P("2"), P("X(X-1)/2")});
  REQUIRE_FALSE(v.is_unit());
  CHECK(verify_content_verdict({P("2"), P("X(X-1)/2")}, v).empty());

  v = unit_content_decide({P("4"), P("X^2+X+1")});
  CHECK(v.is_unit());
  CHECK(verify_content_verdict({P("4"), P("X^2+X+1")}, v).empty());

  CHECK_THROWS_AS(unit_content_decide({P("X/2")}), DomainError);
}

TEST_CASE("tampered content verdicts are rejected") {
  const std::vector<Polynomial> entries{P("2"), P("X^2+X")};
  NonUnitWitness w;
  w.point = PAdicResidue(Prime(3), 1, 1);
  CHECK_FALSE(verify_content_verdict(entries, ContentVerdict{w}).empty());
  UnitCertificate c;
  c.c = 1;
  c.multipliers = {P("1"), P("0")};
  CHECK_FALSE(verify_content_verdict(entries, ContentVerdict{c}).empty());
}

TEST_CASE("ucs side conditions") {
  const MatIP b = parse_matip("2,X;X+1,3");
  auto r = ucs_pair_check(b, MatIP::Identity(2, 2));
  CHECK(r.a_nonunit_integer);
  CHECK(r.acd_unit);
  CHECK(r.det_b_not_integer);
  CHECK(r.qualifies());

  r = ucs_pair_check(MatIP::Identity(2, 2), parse_matip("1,1;0,0"));
  CHECK(r.content_unit);
  CHECK(r.det_zero);
  CHECK(r.known_suitable_c);

  r = ucs_pair_check(parse_matip("2,0;0,2"), MatIP::Identity(2, 2));
  CHECK_FALSE(r.content_unit);
}

TEST_CASE("trace normalization") {
  const MatIP id = MatIP::Identity(2, 2);
  const MatIP c = parse_matip("1,0;0,0");
  const Combination<Polynomial> comb{Polynomial(1), Polynomial(0), Polynomial(0), Polynomial(0)};
  const MatIP c0 = trace_normalize(id, c, comb);
  CHECK(c0 == c);
  const auto idem = idempotent_check(MatIP(id * c0));
  CHECK(idem.idempotent);
  CHECK(idem.nontrivial);

  const Combination<Polynomial> bad{Polynomial(2), Polynomial(0), Polynomial(0), Polynomial(0)};
  try {
    trace_normalize(id, c, bad);
    FAIL("expected a CombinationError");
  } catch (const CombinationError<Polynomial>& e) {
    CHECK(e.residual() == Polynomial(1));
  }
  CHECK_THROWS_AS(trace_normalize(id, id, comb), DomainError);
}

TEST_CASE("trace normalization over Z from ext_gcd") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> d(-9, 9);
  int done = 0;
  while (done < 50) {
    const MatZ b = random_matz(rng, 2, 2, 9);
    if (determinant(b) == 0) continue;
    const MatZ v = random_matz(rng, 2, 1, 9), w = random_matz(rng, 1, 2, 9);
    const MatZ c = v * w;
    const MatZ bc = b * c;
    if (entry_gcd(bc) != 1) continue;
    const auto comb = integer_trace_combination(bc);
    const MatZ c0 = trace_normalize(b, c, comb);
    const MatZ bc0 = b * c0;
    CHECK(det2(c0) == 0);
    CHECK(trace(bc0) == 1);
    const auto idem = idempotent_check(bc0);
    CHECK(idem.idempotent);
    CHECK(idem.nontrivial);
    ++done;
  }
}

TEST_CASE("idempotent check") {
  auto r = idempotent_check(parse_matip("1,0;0,0"));
  CHECK(r.idempotent);
  CHECK(r.nontrivial);
  r = idempotent_check(MatIP(MatIP::Identity(2, 2)));
  CHECK(r.idempotent);
  CHECK_FALSE(r.nontrivial);
  // det 0 and trace 1 forces M^2 = M
  const MatIP m = parse_matip("X+1,X^2+X;-1,-X");
  CHECK(det2(m).is_zero());
  CHECK(trace(m) == Polynomial(1));
  CHECK(idempotent_check(m).idempotent);
}

TEST_CASE("search for a trace combination over Int(Z)") {
  const MatIP b = MatIP::Identity(2, 2);
  const MatIP c = parse_matip("2,0;X^2+X+1,0");
  const auto comb = search_trace_combination(b, c, 1, 2, 100000);
  REQUIRE(comb);
  for (const auto& e : *comb) CHECK(is_int_valued(e).int_valued);
  const MatIP c0 = trace_normalize(b, c, *comb);
  const MatIP bc0 = b * c0;
  CHECK(trace(bc0) == Polynomial(1));
  CHECK(idempotent_check(bc0).idempotent);
  CHECK_FALSE(search_trace_combination(b, parse_matip("2,0;X,0"), 1, 1, 5000));
}

TEST_CASE("matrix text format") {
  CHECK(parse_matz("1,2;3,4") == make2<Integer>(1, 2, 3, 4));
  CHECK_THROWS_AS(parse_matz("1,2;3"), ParseError);
  CHECK_THROWS_AS(parse_matz("1,x;3,4"), ParseError);
  CHECK_THROWS_AS(parse_matip("1,X/(X+1)"), ParseError);
}
