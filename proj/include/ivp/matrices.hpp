// Matrices over Z and Int(Z): Smith normal form, content ideals, strong Bezout
// relations and the trace/idempotent reformulation for 2x2 matrices.
#ifndef IVP_MATRICES_HPP
#define IVP_MATRICES_HPP

#include "ivp/arith.hpp"
#include "ivp/polynomial.hpp"

#include <Eigen/Core>

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<ivp::Integer> : GenericNumTraits<ivp::Integer> {
  using Real = ivp::Integer;
  using NonInteger = ivp::Rational;
  using Nested = ivp::Integer;
  using Literal = ivp::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<ivp::Polynomial> : GenericNumTraits<ivp::Polynomial> {
  using Real = ivp::Polynomial;
  using NonInteger = ivp::Polynomial;
  using Nested = ivp::Polynomial;
  using Literal = ivp::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 400,
    MulCost = 2000
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace ivp {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using MatZ = Mat<Integer>;
/// Matrix over Int(Z); see require_int_valued.
using MatIP = Mat<Polynomial>;

// ---------------------------------------------------------------------------
// generic helpers

template <class Scalar>
Scalar det2(const Mat<Scalar>& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("det2: matrix is not 2x2");
  Scalar d = m(0, 0) * m(1, 1);
  d -= m(0, 1) * m(1, 0);
  return d;
}

template <class Scalar>
Scalar trace(const Mat<Scalar>& m) {
  Scalar t(0);
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

template <class Scalar>
bool is_zero(const Mat<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <class Scalar>
bool is_identity(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

template <class Scalar>
Mat<Scalar> make2(Scalar a, Scalar b, Scalar c, Scalar d) {
  Mat<Scalar> m(2, 2);
  m(0, 0) = std::move(a);
  m(0, 1) = std::move(b);
  m(1, 0) = std::move(c);
  m(1, 1) = std::move(d);
  return m;
}

struct IdempotentReport {
  bool idempotent = false;
  bool nontrivial = false;
};

/// M^2 == M exactly; nontrivial means M is neither 0 nor the identity.
template <class Scalar>
IdempotentReport idempotent_check(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw DomainError("idempotent_check: matrix is not square");
  const Mat<Scalar> sq = m * m;
  return {sq == m, !is_zero(m) && !is_identity(m)};
}

/// (r, s, t, u) forming D = [[r, s], [t, u]].
template <class Scalar>
using Combination = std::array<Scalar, 4>;

/// Thrown when Tr(B C D) != 1; carries the residual Tr(B C D) - 1.
template <class Scalar>
class CombinationError : public DomainError {
 public:
  CombinationError(const std::string& what, Scalar residual) : DomainError(what), residual_(std::move(residual)) {}
  const Scalar& residual() const { return residual_; }

 private:
  Scalar residual_;
};

/// C0 = C D for D = [[r, s], [t, u]], requiring det C = 0 and Tr(B C D) = 1.
/// Then det C0 = 0, Tr(B C0) = 1 and B C0 is a nontrivial idempotent.
template <class Scalar>
Mat<Scalar> trace_normalize(const Mat<Scalar>& b, const Mat<Scalar>& c, const Combination<Scalar>& comb) {
  if (det2(c) != Scalar(0)) throw DomainError("trace_normalize: det C is not zero");
  if (b.rows() != 2 || b.cols() != 2) throw DomainError("trace_normalize: B is not 2x2");
  const Mat<Scalar> d = make2(comb[0], comb[1], comb[2], comb[3]);
  Mat<Scalar> c0 = c * d;
  const Mat<Scalar> bc0 = b * c0;
  Scalar residual = trace(bc0);
  residual -= Scalar(1);
  if (residual != Scalar(0)) {
    std::ostringstream os;
    os << "trace_normalize: Tr(B C D) - 1 = " << residual << " is not zero";
    throw CombinationError<Scalar>(os.str(), residual);
  }
  return c0;
}

// ---------------------------------------------------------------------------
// integer matrices

/// S = U * A * W with U, W unimodular and S diagonal, s_1 | s_2 | ... , zeros last.
struct SNFResult {
  MatZ u;
  MatZ s;
  MatZ w;
};

/// Smallest-|pivot| elimination, rows before columns; diagonal made non-negative.
SNFResult snf_with_transforms(const MatZ& a);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const MatZ& a);

Integer entry_gcd(const MatZ& a);

class NotCoprimeError : public DomainError {
 public:
  explicit NotCoprimeError(Integer g);
  const Integer& gcd() const { return gcd_; }

 private:
  Integer gcd_;
};

struct StrongBezout {
  Integer alpha, beta, gamma, delta;
};

/// a*alpha + b*beta + c*gamma + d*delta = 1 and alpha*delta = beta*gamma.
/// Throws NotCoprimeError when gcd(a, b, c, d) != 1.
StrongBezout strong_bezout_z(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

/// g = gcd(values) >= 0 with sum coeffs[i] * values[i] = g.
struct BezoutCombination {
  Integer g;
  std::vector<Integer> coeffs;
};
BezoutCombination bezout_combination(const std::vector<Integer>& values);

/// (r, s, t, u) with Tr(M D) = 1, from the entries of M = B C; throws NotCoprimeError.
Combination<Integer> integer_trace_combination(const MatZ& bc);

// ---------------------------------------------------------------------------
// matrices over Int(Z)

/// Throws DomainError unless every entry lies in Int(Z).
void require_int_valued(const MatIP& m);

MatIP to_poly_matrix(const MatZ& m);
/// Integer matrix if every entry is an integer constant.
std::optional<MatZ> to_integer_matrix(const MatIP& m);

struct ResidueCoverage {
  long p = 0;
  unsigned precision = 0;
  /// unit_entry[alpha]: index of an entry with v_p(f(alpha)) = 0, alpha in [0, p^precision).
  std::vector<std::size_t> unit_entry;
};

struct UnitCertificate {
  Integer c;                             ///< positive integer in the ideal
  std::vector<Polynomial> multipliers;  ///< in Z[X], sum multipliers[i] * entries[i] == c
  std::vector<ResidueCoverage> coverage;  ///< one table per prime dividing c
};

struct NonUnitWitness {
  /// Nonconstant monic gcd over Q[X] (every entry lies in P_q for each factor q).
  std::optional<Polynomial> common_factor;
  /// Every entry has v_p(f(alpha)) >= 1 for alpha in this residue class.
  std::optional<PAdicResidue> point;
};

struct ContentVerdict {
  std::variant<UnitCertificate, NonUnitWitness> data;

  bool is_unit() const { return std::holds_alternative<UnitCertificate>(data); }
  const UnitCertificate& unit() const { return std::get<UnitCertificate>(data); }
  const NonUnitWitness& non_unit() const { return std::get<NonUnitWitness>(data); }
};

/// Decides whether the entries generate Int(Z).
ContentVerdict unit_content_decide(const std::vector<Polynomial>& entries);

/// Re-checks a verdict by arithmetic alone (no search). Returns an empty string on
/// success, otherwise the first failing check.
std::string verify_content_verdict(const std::vector<Polynomial>& entries, const ContentVerdict& verdict);

std::vector<Polynomial> entries_of(const MatIP& m);

struct UcsReport {
  MatIP bc;
  bool content_unit = false;
  bool det_zero = false;
  // Side conditions on B = [[a, c], [b, d]].
  bool a_nonunit_integer = false;  ///< a in Z \ {0, 1, -1}
  bool acd_unit = false;           ///< cont(a, c, d) = Int(Z)
  bool det_b_not_integer = false;  ///< det B not in Z
  /// A C known to work in the degenerate cases (a = +-1, or det B in Z).
  std::optional<MatIP> known_suitable_c;
  bool qualifies() const { return a_nonunit_integer && acd_unit && det_b_not_integer; }
};

/// Content and determinant of B C, plus the reduction side conditions on B.
UcsReport ucs_pair_check(const MatIP& b, const MatIP& c);

/// Bounded search for (r, s, t, u) over Z[X] with Tr(B C D) = 1; entries of degree <= max_deg
/// with coefficients in [-height, height]. Returns nothing if the budget runs out.
std::optional<Combination<Polynomial>> search_trace_combination(const MatIP& b, const MatIP& c, int max_deg,
                                                                int height, std::size_t budget);

// ---------------------------------------------------------------------------
// text format: rows separated by ';', entries by ','

MatZ parse_matz(std::string_view text);
MatIP parse_matip(std::string_view text);
template <class Scalar>
std::string format_matrix(const Mat<Scalar>& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ";";
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
  }
  return os.str();
}

}  // namespace ivp

#endif  // IVP_MATRICES_HPP
