// Strong Bezout relations for B = [[2, X], [X + 1, 3]] over Int(Z).
//
// Writing f = (X+1) beta + X gamma - 1, every solution of
//   2 alpha + (X+1) beta + X gamma + 3 delta = 1
// is alpha = 3u + f, delta = -2u - f with u in Int(Z), and alpha delta = beta gamma
// becomes (12u + 5f)^2 = f^2 - 24 beta gamma.
#ifndef IVP_EXAMPLE_LAB_HPP
#define IVP_EXAMPLE_LAB_HPP

#include "ivp/matrices.hpp"
#include "ivp/polynomial.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ivp {

/// The matrix [[2, X], [X + 1, 3]].
MatIP example_matrix();

struct ExampleCertificate {
  Polynomial beta, gamma, f, g, u, alpha, delta;
  int sign = 1;
  MatIP c;   ///< [[alpha, beta], [gamma, delta]]
  MatIP bc;  ///< B * C
  ContentVerdict content;
  /// Named checks in a fixed order; all true for a valid certificate.
  std::vector<std::pair<std::string, bool>> checks;

  bool valid() const;
};

struct RecoveryFailure {
  std::string check;  ///< first failing check
  std::string detail;
};

using Recovery = std::variant<ExampleCertificate, RecoveryFailure>;

struct Reduction {
  Polynomial f;
  Polynomial discriminant;  ///< f^2 - 24 beta gamma
};

/// Throws DomainError unless beta, gamma lie in Int(Z).
Reduction reduce_relation(const Polynomial& beta, const Polynomial& gamma);

/// u = (sign * g - 5 f) / 12, then alpha, delta and every check.
Recovery recover_solution(const Polynomial& beta, const Polynomial& gamma, const Polynomial& g, int sign);

/// Re-runs every check of a certificate from its (beta, gamma, g, sign).
Recovery reverify(const ExampleCertificate& cert);

struct ReferenceExampleReport {
  Polynomial beta, gamma, f, discriminant;
  Polynomial reference_g;   ///< known solution; its X^3 coefficient is not trusted
  Polynomial recomputed_g;  ///< square root oriented to the sign of reference_g
  /// Recomputed and reference g agree on every coefficient other than X^3.
  bool matches_reference = false;
  std::vector<int> mismatched_degrees;
  Rational derived_x3_coefficient;
  ExampleCertificate certificate;
  std::vector<std::pair<int, std::string>> sign_outcomes;  ///< per sign: "ok" or the failure
};

/// Recomputes g from the embedded beta, gamma and returns the passing certificate.
/// Throws DomainError (carrying the discriminant) if f^2 - 24 beta gamma is not a square.
ReferenceExampleReport verify_reference_example();

/// Candidates beta, gamma in Z[X] in the order (deg beta, deg gamma, height), each
/// height level lexicographic in the coefficients; at most `budget` candidates are examined.
std::vector<ExampleCertificate> bounded_search(int max_deg, int max_height, std::size_t budget);

}  // namespace ivp

#endif  // IVP_EXAMPLE_LAB_HPP
