// Exact integers, rationals and p-adic valuations.
#ifndef IVP_ARITH_HPP
#define IVP_ARITH_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ivp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation's precondition does not hold for the given data.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed textual input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational prime. Construction rejects non-primes.
class Prime {
 public:
  explicit Prime(long p);

  long value() const { return p_; }
  Integer integer() const { return Integer(p_); }
  /// p^n as an exact integer.
  Integer pow(unsigned long n) const;

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  long p_;
};

bool is_prime(const Integer& n);

/// Value of a discrete valuation: an integer, or +infinity (valuation of 0).
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr Valuation(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Throws DomainError when infinite.
  long value() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }
  Valuation& operator+=(const Valuation& o) { return *this = *this + o; }

  std::string to_string() const;

 private:
  long value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Exponent of p in x; infinity iff x == 0.
Valuation vp(const Rational& x, Prime p);
Valuation vp(const Integer& x, Prime p);

struct ExtGcd {
  Integer g;
  Integer u;
  Integer v;
};

/// g = gcd(a, b) > 0 with u*a + v*b = g. Both-zero input is rejected.
ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// Lowest-terms image of x in Z/p^N, for x with vp(x) >= 0.
class PAdicResidue {
 public:
  PAdicResidue(Prime p, Integer value, unsigned precision);

  Prime prime() const { return p_; }
  const Integer& value() const { return value_; }
  unsigned precision() const { return precision_; }
  Integer modulus() const { return p_.pow(precision_); }

  /// Reduction to a smaller precision.
  PAdicResidue truncate(unsigned precision) const;
  /// True if this residue reduces to `coarser`.
  bool refines(const PAdicResidue& coarser) const;

  friend bool operator==(const PAdicResidue&, const PAdicResidue&) = default;

  std::string to_string() const;

 private:
  Prime p_;
  Integer value_;
  unsigned precision_;
};

std::ostream& operator<<(std::ostream& os, const PAdicResidue& r);

PAdicResidue padic_residue(const Rational& x, Prime p, unsigned precision);

/// x mod n in [0, n) for a p-integral rational whose denominator is coprime to n.
Integer mod_rational(const Rational& x, const Integer& n);

/// Prime factorisation of |n| (n != 0) as prime -> exponent.
std::map<Integer, unsigned long> factor_integer(const Integer& n);

/// Exact non-negative integer square root, when n is a perfect square.
bool exact_sqrt(const Integer& n, Integer& root);
bool exact_sqrt(const Rational& q, Rational& root);

Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Ordering used for deterministic tie-breaking: numerator first, then denominator.
bool num_den_less(const Rational& a, const Rational& b);

}  // namespace ivp

#endif  // IVP_ARITH_HPP
