#include "ivp/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace ivp {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Prime::Prime(long p) : p_(p) {
  if (!is_prime(Integer(p))) throw DomainError(std::to_string(p) + " is not prime");
}

Integer Prime::pow(unsigned long n) const {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_), n);
  return r;
}

long Valuation::value() const {
  if (infinite_) throw DomainError("valuation is infinite");
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

namespace {

long count_factor(const Integer& n, Prime p) {
  if (n == 0) return 0;
  Integer t = abs(n);
  const Integer pz = p.integer();
  long k = 0;
  while (mpz_divisible_p(t.get_mpz_t(), pz.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
    ++k;
  }
  return k;
}

}  // namespace

Valuation vp(const Integer& x, Prime p) {
  if (x == 0) return Valuation::infinity();
  return Valuation(count_factor(x, p));
}

Valuation vp(const Rational& x, Prime p) {
  if (x == 0) return Valuation::infinity();
  return Valuation(count_factor(x.get_num(), p) - count_factor(x.get_den(), p));
}

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw DomainError("ext_gcd: both arguments are zero");
  Integer r0 = a, r1 = b;
  Integer s0 = 1, s1 = 0;
  Integer t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (r0 < 0) {
    r0 = -r0, s0 = -s0, t0 = -t0;
  }
  return {r0, s0, t0};
}

PAdicResidue::PAdicResidue(Prime p, Integer value, unsigned precision)
    : p_(p), value_(std::move(value)), precision_(precision) {
  if (precision_ < 1) throw DomainError("p-adic precision must be at least 1");
  const Integer m = modulus();
  if (value_ < 0 || value_ >= m) throw DomainError("p-adic residue out of range [0, p^N)");
}

PAdicResidue PAdicResidue::truncate(unsigned precision) const {
  if (precision > precision_) throw DomainError("cannot raise precision of a residue");
  Integer m = p_.pow(precision);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value_.get_mpz_t(), m.get_mpz_t());
  return PAdicResidue(p_, r, precision);
}

bool PAdicResidue::refines(const PAdicResidue& coarser) const {
  return p_ == coarser.p_ && precision_ >= coarser.precision_ &&
         truncate(coarser.precision_) == coarser;
}

std::string PAdicResidue::to_string() const {
  std::ostringstream os;
  os << value_.get_str() << " mod " << p_.value() << "^" << precision_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PAdicResidue& r) { return os << r.to_string(); }

Integer mod_rational(const Rational& x, const Integer& n) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), n.get_mpz_t()) == 0) {
    if (n == 1) return 0;
    throw DomainError("denominator not invertible modulo " + n.get_str());
  }
  Integer r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  return r;
}

PAdicResidue padic_residue(const Rational& x, Prime p, unsigned precision) {
  if (vp(x, p) < Valuation(0))
    throw DomainError("padic_residue: " + to_string(x) + " has negative " +
                      std::to_string(p.value()) + "-adic valuation");
  if (precision < 1) throw DomainError("p-adic precision must be at least 1");
  return PAdicResidue(p, mod_rational(x, p.pow(precision)), precision);
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& z) {
      z = z * z + c;
      mpz_mod(z.get_mpz_t(), z.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Integer, unsigned long> factor_integer(const Integer& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::map<Integer, unsigned long> out;
  Integer m = abs(n);
  for (unsigned long q = 2; q < 10000 && Integer(q) * q <= m; ++q) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
      ++out[Integer(q)];
    }
  }
  factor_into(m, out);
  return out;
}

bool exact_sqrt(const Integer& n, Integer& root) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

bool exact_sqrt(const Rational& q, Rational& root) {
  Integer a, b;
  if (!exact_sqrt(q.get_num(), a) || !exact_sqrt(q.get_den(), b)) return false;
  root = Rational(a, b);
  root.canonicalize();
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(text) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

bool num_den_less(const Rational& a, const Rational& b) {
  if (a.get_num() != b.get_num()) return a.get_num() < b.get_num();
  return a.get_den() < b.get_den();
}

}  // namespace ivp
