// Int(E, V) for V = Z_(p): v-orderings, Bhargava factorials and regular bases.
#ifndef IVP_LOCAL_INTPOLY_HPP
#define IVP_LOCAL_INTPOLY_HPP

#include "ivp/arith.hpp"
#include "ivp/polynomial.hpp"

#include <variant>
#include <vector>

namespace ivp {

/// The subset E of V: an explicit finite set of rationals, or all of Z.
class SubsetDescriptor {
 public:
  struct Finite {
    std::vector<Rational> points;
  };
  struct AllIntegers {};

  /// Points must be pairwise distinct.
  static SubsetDescriptor finite(std::vector<Rational> points);
  static SubsetDescriptor all_integers() { return SubsetDescriptor(AllIntegers{}); }

  bool is_all_integers() const { return std::holds_alternative<AllIntegers>(data_); }
  /// Throws DomainError for ALL_INTEGERS.
  const std::vector<Rational>& points() const;
  bool contains(const Rational& a) const;
  /// Throws DomainError unless every point has non-negative p-adic valuation.
  void require_p_integral(Prime p) const;

  std::string to_string() const;

 private:
  explicit SubsetDescriptor(std::variant<Finite, AllIntegers> d) : data_(std::move(d)) {}
  std::variant<Finite, AllIntegers> data_;
};

enum class TieBreak {
  Smallest,  ///< smallest in (numerator, denominator) lexicographic order
  Largest,
};

/// a_0, ..., a_n with w[k] = v_p(prod_{j<k} (a_k - a_j)); w[0] = 0.
struct VOrdering {
  SubsetDescriptor set;
  Prime p;
  std::vector<Rational> points;
  std::vector<Valuation> w;

  std::size_t length() const { return points.size(); }
};

/// Greedy v-ordering of length n + 1. Over ALL_INTEGERS this is 0, 1, ..., n.
VOrdering v_ordering(const SubsetDescriptor& set, std::size_t n, Prime p,
                     TieBreak tie = TieBreak::Smallest);

/// f_k = prod_{j<k} (X - a_j) / (a_k - a_j).
Polynomial regular_basis(const VOrdering& vord, std::size_t k);

/// Coefficients c with f = sum_k c_k f_k, by c_k = f(a_k) - sum_{h<k} c_h f_h(a_k).
std::vector<Rational> expand_in_basis(const Polynomial& f, const VOrdering& vord);

/// min_k v_p(c_k); infinity when every c_k vanishes.
Valuation min_valuation(const std::vector<Rational>& values, Prime p);

enum class MembershipTarget {
  V,             ///< Int(E, V): v_p(f(a)) >= 0 on E
  MaximalIdeal,  ///< Int(E, m): v_p(f(a)) >= 1 on E
};

bool int_membership(const Polynomial& f, const SubsetDescriptor& set, Prime p, MembershipTarget target);

}  // namespace ivp

#endif  // IVP_LOCAL_INTPOLY_HPP
