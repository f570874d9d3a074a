#include "ivp/example_lab.hpp"

#include <algorithm>
#include <map>

namespace ivp {

MatIP example_matrix() { return make2<Polynomial>(2, Polynomial::x(), Polynomial{Rational(1), Rational(1)}, 3); }

bool ExampleCertificate::valid() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

namespace {

bool in_int_z(const Polynomial& f) { return is_int_valued(f).int_valued; }

Polynomial x_plus_1() { return Polynomial{Rational(1), Rational(1)}; }

}  // namespace

Reduction reduce_relation(const Polynomial& beta, const Polynomial& gamma) {
  if (!in_int_z(beta)) throw DomainError("beta = " + beta.to_string() + " is not in Int(Z)");
  if (!in_int_z(gamma)) throw DomainError("gamma = " + gamma.to_string() + " is not in Int(Z)");
  Polynomial f = x_plus_1() * beta + Polynomial::x() * gamma - Polynomial(1);
  Polynomial disc = f * f - Polynomial(24) * beta * gamma;
  return {std::move(f), std::move(disc)};
}

Recovery recover_solution(const Polynomial& beta, const Polynomial& gamma, const Polynomial& g, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (!in_int_z(beta)) return RecoveryFailure{"beta_in_int_z", beta.to_string()};
  if (!in_int_z(gamma)) return RecoveryFailure{"gamma_in_int_z", gamma.to_string()};
  const auto [f, disc] = reduce_relation(beta, gamma);
  if (g * g != disc) return RecoveryFailure{"square_identity", "g^2 != f^2 - 24 beta gamma = " + disc.to_string()};

  ExampleCertificate cert;
  cert.beta = beta;
  cert.gamma = gamma;
  cert.f = f;
  cert.g = g;
  cert.sign = sign;
  cert.u = (Polynomial(sign) * g - Polynomial(5) * f) / Rational(12);
  if (!in_int_z(cert.u)) return RecoveryFailure{"u_in_int_z", "u = " + cert.u.to_string()};
  cert.alpha = Polynomial(3) * cert.u + f;
  cert.delta = Polynomial(-2) * cert.u - f;

  const MatIP b = example_matrix();
  cert.c = make2(cert.alpha, beta, gamma, cert.delta);
  cert.bc = b * cert.c;
  const Polynomial linear = Polynomial(2) * cert.alpha + x_plus_1() * beta + Polynomial::x() * gamma +
                            Polynomial(3) * cert.delta;
  const auto idem = idempotent_check(cert.bc);
  cert.content = unit_content_decide(entries_of(cert.bc));

  cert.checks = {
      {"square_identity", true},
      {"u_in_int_z", true},
      {"alpha_in_int_z", in_int_z(cert.alpha)},
      {"beta_in_int_z", in_int_z(beta)},
      {"gamma_in_int_z", in_int_z(gamma)},
      {"delta_in_int_z", in_int_z(cert.delta)},
      {"relation_linear", linear == Polynomial(1)},
      {"relation_product", cert.alpha * cert.delta == beta * gamma},
      {"det_c_zero", det2(cert.c).is_zero()},
      {"trace_bc_one", trace(cert.bc) == Polynomial(1)},
      {"bc_idempotent", idem.idempotent},
      {"bc_nontrivial", idem.nontrivial},
      {"content_bc_unit", cert.content.is_unit()},
  };
  for (const auto& [name, ok] : cert.checks)
    if (!ok) return RecoveryFailure{name, "check failed"};
  return cert;
}

Recovery reverify(const ExampleCertificate& cert) { return recover_solution(cert.beta, cert.gamma, cert.g, cert.sign); }

ReferenceExampleReport verify_reference_example() {
  ReferenceExampleReport r;
  r.beta = Polynomial{Rational(13), Rational(31), Rational(20), Rational(-2), Rational(-5), Rational(-1)};
  r.gamma = Polynomial{Rational(0), Rational(4), Rational(4), Rational(1)};
  // The X^3 coefficient is re-derived from the square root instead of compared.
  r.reference_g = Polynomial{Rational(-12), Rational(8),  Rational(43), Rational(22),
                           Rational(-6),  Rational(-6), Rational(-1)};
  const auto red = reduce_relation(r.beta, r.gamma);
  r.f = red.f;
  r.discriminant = red.discriminant;

  auto root = poly_sqrt(r.discriminant);
  if (!root) throw DomainError("f^2 - 24 beta gamma is not a square: " + r.discriminant.to_string());
  // Square roots are determined up to sign; orient to the reference leading coefficient.
  r.recomputed_g = (root->leading() > 0) == (r.reference_g.leading() > 0) ? *root : -*root;
  r.derived_x3_coefficient = r.recomputed_g.coeff(3);
  const int top = std::max(r.recomputed_g.degree(), r.reference_g.degree());
  for (int k = 0; k <= top; ++k)
    if (k != 3 && r.recomputed_g.coeff(static_cast<std::size_t>(k)) != r.reference_g.coeff(static_cast<std::size_t>(k)))
      r.mismatched_degrees.push_back(k);
  r.matches_reference = r.mismatched_degrees.empty();

  bool found = false;
  for (int sign : {1, -1}) {
    Recovery rec = recover_solution(r.beta, r.gamma, r.recomputed_g, sign);
    if (auto* cert = std::get_if<ExampleCertificate>(&rec)) {
      r.sign_outcomes.emplace_back(sign, "ok");
      if (!found) {
        r.certificate = std::move(*cert);
        found = true;
      }
    } else {
      const auto& fail = std::get<RecoveryFailure>(rec);
      r.sign_outcomes.emplace_back(sign, fail.check + ": " + fail.detail);
    }
  }
  if (!found) throw DomainError("no sign of g yields a certificate");
  return r;
}

std::vector<ExampleCertificate> bounded_search(int max_deg, int max_height, std::size_t budget) {
  if (max_deg < 0 || max_height < 0) throw DomainError("bounded_search: bounds must be non-negative");
  std::vector<ExampleCertificate> found;
  if (budget == 0) return found;

  // Per exact degree, candidates ordered by height (zero counts as degree 0).
  const auto all = enumerate_int_polynomials(max_deg, max_height);
  std::vector<std::vector<std::pair<int, const Polynomial*>>> by_degree(static_cast<std::size_t>(max_deg) + 1);
  for (const auto& p : all) {
    int h = 0;
    for (const auto& c : p.coeffs()) h = std::max(h, static_cast<int>(Rational(abs(c)).get_num().get_si()));
    by_degree[static_cast<std::size_t>(std::max(p.degree(), 0))].emplace_back(h, &p);
  }

  std::size_t spent = 0;
  for (int db = 0; db <= max_deg; ++db)
    for (int dg = 0; dg <= max_deg; ++dg)
      for (int h = 0; h <= max_height; ++h)
        for (const auto& [hb, beta] : by_degree[static_cast<std::size_t>(db)]) {
          if (hb > h) break;
          for (const auto& [hg, gamma] : by_degree[static_cast<std::size_t>(dg)]) {
            if (hg > h) break;
            if (std::max(hb, hg) != h) continue;
            if (spent++ >= budget) return found;
            const auto red = reduce_relation(*beta, *gamma);
            auto g = poly_sqrt(red.discriminant);
            if (!g) continue;
            for (int sign : {1, -1}) {
              Recovery rec = recover_solution(*beta, *gamma, *g, sign);
              if (auto* cert = std::get_if<ExampleCertificate>(&rec)) {
                found.push_back(std::move(*cert));
                break;
              }
            }
          }
        }
  return found;
}

}  // namespace ivp
