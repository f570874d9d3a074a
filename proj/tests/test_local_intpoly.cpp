#include "ivp/local_intpoly.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace ivp;

namespace {

std::vector<Rational> Q(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Valuation> W(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

// Walks every ordering of E, keeps those where each point attains the step minimum
// min_{x in E} v(prod_{j<k} (x - a_j)), and returns their w lists.
std::set<std::vector<Valuation>> brute_w(const std::vector<Rational>& e, Prime p) {
  std::vector<std::size_t> perm(e.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::set<std::vector<Valuation>> out;
  do {
    std::vector<Valuation> w{Valuation(0)};
    bool greedy = true;
    for (std::size_t k = 1; k < perm.size() && greedy; ++k) {
      auto step = [&](const Rational& x) {
        Rational prod = 1;
        for (std::size_t j = 0; j < k; ++j) prod *= x - e[perm[j]];
        return vp(prod, p);
      };
      Valuation m = Valuation::infinity();
      for (const auto& x : e) m = std::min(m, step(x));
      const Valuation here = step(e[perm[k]]);
      greedy = here == m;
      w.push_back(here);
    }
    if (greedy) out.insert(w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("v-ordering examples") {
  auto v = v_ordering(SubsetDescriptor::finite(Q({0, 1, 2, 4})), 3, Prime(2));
  CHECK(v.points == Q({0, 1, 2, 4}));
  CHECK(v.w == W({0, 0, 1, 3}));
  v = v_ordering(SubsetDescriptor::all_integers(), 4, Prime(2));
  CHECK(v.points == Q({0, 1, 2, 3, 4}));
  CHECK(v.w == W({0, 0, 1, 1, 3}));
  v = v_ordering(SubsetDescriptor::finite(Q({5})), 0, Prime(7));
  CHECK(v.points == Q({5}));
  CHECK(v.w == W({0}));
  CHECK_THROWS_AS(v_ordering(SubsetDescriptor::finite(Q({0, 1})), 2, Prime(2)), DomainError);
  CHECK_THROWS_AS(SubsetDescriptor::finite(Q({1, 1})), DomainError);
  CHECK_THROWS_AS(v_ordering(SubsetDescriptor::finite({Rational(1, 2), Rational(0)}), 1, Prime(2)), DomainError);
}

TEST_CASE("greedy w matches brute force and is tie-break independent") {
  std::mt19937_64 rng(23);
  for (long pv : {2L, 3L, 5L}) {
    const Prime p(pv);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long> pool(13);
      for (long i = 0; i < 13; ++i) pool[static_cast<std::size_t>(i)] = i;
      std::shuffle(pool.begin(), pool.end(), rng);
      const std::size_t m = 2 + static_cast<std::size_t>(trial % 5);
      std::vector<Rational> e;
      for (std::size_t i = 0; i < m; ++i) e.emplace_back(pool[i]);
      const auto set = SubsetDescriptor::finite(e);
      const auto a = v_ordering(set, m - 1, p, TieBreak::Smallest);
      const auto b = v_ordering(set, m - 1, p, TieBreak::Largest);
      CHECK(a.w == b.w);
      const auto all = brute_w(e, p);
      REQUIRE(all.size() == 1);
      CHECK(*all.begin() == a.w);
    }
  }
}

TEST_CASE("regular basis examples") {
  const auto z = v_ordering(SubsetDescriptor::all_integers(), 3, Prime(3));
  CHECK(regular_basis(z, 2) == parse_polynomial("X(X-1)/2"));
  CHECK(regular_basis(z, 0) == Polynomial(1));
  const auto e = v_ordering(SubsetDescriptor::finite(Q({0, 1, 2, 4})), 3, Prime(2));
  CHECK(regular_basis(e, 3) == parse_polynomial("X(X-1)(X-2)/24"));
  CHECK(int_membership(regular_basis(e, 3), e.set, Prime(2), MembershipTarget::V));
}

TEST_CASE("expansion in the regular basis") {
  const auto z = v_ordering(SubsetDescriptor::all_integers(), 2, Prime(2));
  CHECK(expand_in_basis(parse_polynomial("X^2"), z) == std::vector<Rational>{0, 1, 2});
  const auto e = v_ordering(SubsetDescriptor::finite(Q({0, 1, 2, 4})), 3, Prime(2));
  CHECK(expand_in_basis(regular_basis(e, 3), e) == std::vector<Rational>{0, 0, 0, 1});
  const Polynomial f = parse_polynomial("2 + X(X-1)");
  const auto c = expand_in_basis(f, e);
  CHECK(c[0] == 2);
  Polynomial back;
  for (std::size_t k = 0; k < c.size(); ++k) back += Polynomial(c[k]) * regular_basis(e, k);
  CHECK(back == f);
}

TEST_CASE("membership") {
  const auto z = SubsetDescriptor::all_integers();
  const Prime two(2);
  CHECK(int_membership(parse_polynomial("X(X-1)/2"), z, two, MembershipTarget::V));
  CHECK_FALSE(int_membership(parse_polynomial("X(X-1)/2"), z, two, MembershipTarget::MaximalIdeal));
  CHECK(int_membership(parse_polynomial("X^2+X"), z, two, MembershipTarget::MaximalIdeal));
  CHECK_FALSE(int_membership(parse_polynomial("X/2"), z, two, MembershipTarget::V));
  const auto e = SubsetDescriptor::finite(Q({0, 2, 4}));
  CHECK(int_membership(parse_polynomial("X/2"), e, two, MembershipTarget::V));
  CHECK(int_membership(parse_polynomial("X"), e, two, MembershipTarget::MaximalIdeal));
}

TEST_CASE("membership agrees with expansion coefficients") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> c(-20, 20);
  for (int i = 0; i < 100; ++i) {
    const auto e = SubsetDescriptor::finite(Q({0, 1, 3, 4, 6, 9}));
    std::vector<Rational> cs;
    for (int k = 0; k <= 3; ++k) cs.emplace_back(c(rng), 4);
    const Polynomial f(cs);
    const auto vord = v_ordering(e, 5, Prime(2));
    const bool by_coeffs = min_valuation(expand_in_basis(f, vord), Prime(2)) >= Valuation(0);
    CHECK(int_membership(f, e, Prime(2), MembershipTarget::V) == by_coeffs);
  }
}
