// Dense univariate polynomials over Q and the binomial-basis toolkit for Int(Z).
#ifndef IVP_POLYNOMIAL_HPP
#define IVP_POLYNOMIAL_HPP

#include "ivp/arith.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ivp {

/// Polynomial in X with rational coefficients; coeffs()[k] multiplies X^k.
/// The coefficient vector never has a trailing zero, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial x();
  static Polynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of X^k (zero past the degree).
  Rational coeff(std::size_t k) const;
  Rational leading() const;
  /// Constant term as an integer if this is an integer constant.
  std::optional<Integer> as_integer() const;

  Rational operator()(const Rational& x) const;
  Polynomial monic() const;
  /// Least common multiple of coefficient denominators (1 for zero).
  Integer common_denominator() const;
  /// True if every coefficient is an integer.
  bool has_integer_coeffs() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator/=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& f, const Polynomial& g);
/// True if g divides f in Q[X] (0 divides only 0).
bool divides(const Polynomial& g, const Polynomial& f);
Polynomial pow(Polynomial f, unsigned n);

/// Parses the X-polynomial grammar: sums of terms such as "-3/2*X^5 + X - 7".
/// Products, parentheses and division by nonzero constants are accepted too.
Polynomial parse_polynomial(std::string_view text);

/// The binomial polynomial C(X, k) = X(X-1)...(X-k+1)/k!.
Polynomial binomial_polynomial(std::size_t k);

/// f = sum_k c_k C(X, k).
struct BinomialForm {
  std::vector<Rational> coeffs;

  Polynomial to_polynomial() const;
};

/// Coefficients by iterated finite differences at 0, 1, ..., deg f.
BinomialForm to_binomial_basis(const Polynomial& f);

struct IntValuedReport {
  bool int_valued = false;
  /// For each prime p | m, m the common denominator of f: v_p(m).
  std::map<long, long> denom_exponent;
};

IntValuedReport is_int_valued(const Polynomial& f);
/// f(Z) contained in Z_(p): every binomial coefficient is p-integral.
bool is_p_int_valued(const Polynomial& f, Prime p);

/// N(f, p) = 1 + v_p(m): f(x) mod p only depends on x mod p^N.
unsigned continuity_exponent(const Polynomial& f, Prime p);

/// { f(x) mod p : x in Z }, by exhaustion over x mod p^N(f, p).
/// Requires f to be p-integrally valued on Z.
std::set<long> residue_image(const Polynomial& f, Prime p);

struct PolyBezout {
  Polynomial h;  ///< monic gcd
  Polynomial u;
  Polynomial v;
};

/// Monic gcd h with u*f + v*g = h. Both-zero input is rejected.
PolyBezout bezout_gcd_qx(const Polynomial& f, const Polynomial& g);

/// Every f in Z[X] with deg f <= max_deg and coefficients in [-height, height], ordered by
/// height max|c_k| first, then lexicographically on (c_0, ..., c_max_deg).
std::vector<Polynomial> enumerate_int_polynomials(int max_deg, int height);

/// g with g*g == h and non-negative leading coefficient, if one exists in Q[X].
std::optional<Polynomial> poly_sqrt(const Polynomial& h);

}  // namespace ivp

#endif  // IVP_POLYNOMIAL_HPP
