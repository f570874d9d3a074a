#include "ivp/matrices.hpp"

#include <algorithm>

namespace ivp {

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(MatZ& m, Eigen::Index i, Eigen::Index j) {
  if (i != j) m.row(i).swap(m.row(j));
}

void swap_cols(MatZ& m, Eigen::Index i, Eigen::Index j) {
  if (i != j) m.col(i).swap(m.col(j));
}

// row_dst += k * row_src
void add_row(MatZ& m, Eigen::Index dst, Eigen::Index src, const Integer& k) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void add_col(MatZ& m, Eigen::Index dst, Eigen::Index src, const Integer& k) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SNFResult snf_with_transforms(const MatZ& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  SNFResult r{MatZ::Identity(m, m), a, MatZ::Identity(n, n)};
  MatZ& s = r.s;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (s(i, j) != 0 && (pi < 0 || abs(s(i, j)) < abs(s(pi, pj)))) pi = i, pj = j;
      if (pi < 0) return r;  // trailing block is zero

      swap_rows(s, t, pi);
      swap_rows(r.u, t, pi);
      swap_cols(s, t, pj);
      swap_cols(r.w, t, pj);

      bool clear = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        const Integer q = -tdiv(s(i, t), s(t, t));
        add_row(s, i, t, q);
        add_row(r.u, i, t, q);
        clear = clear && s(i, t) == 0;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        const Integer q = -tdiv(s(t, j), s(t, t));
        add_col(s, j, t, q);
        add_col(r.w, j, t, q);
        clear = clear && s(t, j) == 0;
      }
      if (!clear) continue;

      // Pivot must divide the remaining block; otherwise fold an offending row in.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(s, t, bad, Integer(1));
      add_row(r.u, t, bad, Integer(1));
    }
    if (s(t, t) < 0) {
      s.row(t) *= Integer(-1);
      r.u.row(t) *= Integer(-1);
    }
  }
  return r;
}

Integer determinant(const MatZ& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant: matrix is not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  MatZ m = a;
  Integer sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      swap_rows(m, k, swap);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer entry_gcd(const MatZ& a) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, j).get_mpz_t());
  return g;
}

// ---------------------------------------------------------------------------
// Bezout relations over Z

NotCoprimeError::NotCoprimeError(Integer g)
    : DomainError("entries are not coprime: gcd = " + g.get_str()), gcd_(std::move(g)) {}

BezoutCombination bezout_combination(const std::vector<Integer>& values) {
  BezoutCombination out{0, std::vector<Integer>(values.size(), 0)};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) continue;
    if (out.g == 0) {
      out.g = abs(values[i]);
      out.coeffs[i] = values[i] > 0 ? 1 : -1;
      continue;
    }
    const auto [g, u, v] = ext_gcd(out.g, values[i]);
    for (std::size_t j = 0; j < i; ++j) out.coeffs[j] *= u;
    out.coeffs[i] = v;
    out.g = g;
  }
  return out;
}

StrongBezout strong_bezout_z(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  // Columns (a, b) and (c, d) generate M in Z^2. The first SNF column of A W is
  // e_1 = lambda (a, b) + mu (c, d), a basis vector of Z^2, so cont(e_1) = Z.
  const MatZ m = make2<Integer>(a, c, b, d);
  const Integer g = entry_gcd(m);
  if (g != 1) throw NotCoprimeError(g);
  const SNFResult snf = snf_with_transforms(m);
  const Integer lambda = snf.w(0, 0), mu = snf.w(1, 0);
  const Integer e1x = lambda * a + mu * c;
  const Integer e1y = lambda * b + mu * d;
  const auto [one, u, v] = ext_gcd(e1x, e1y);
  if (one != 1) throw DomainError("strong_bezout_z: internal error, first basis vector is not primitive");
  // u (lambda a + mu c) + v (lambda b + mu d) = 1
  return {u * lambda, v * lambda, u * mu, v * mu};
}

Combination<Integer> integer_trace_combination(const MatZ& bc) {
  if (bc.rows() != 2 || bc.cols() != 2) throw DomainError("integer_trace_combination: matrix is not 2x2");
  // Tr(M D) = r M00 + t M01 + s M10 + u M11
  const auto comb = bezout_combination({bc(0, 0), bc(1, 0), bc(0, 1), bc(1, 1)});
  if (comb.g != 1) throw NotCoprimeError(comb.g);
  return {comb.coeffs[0], comb.coeffs[1], comb.coeffs[2], comb.coeffs[3]};
}

// ---------------------------------------------------------------------------
// matrices over Int(Z)

void require_int_valued(const MatIP& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_int_valued(m(i, j)).int_valued)
        throw DomainError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                          m(i, j).to_string() + " is not in Int(Z)");
}

MatIP to_poly_matrix(const MatZ& m) {
  MatIP out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Polynomial(m(i, j));
  return out;
}

std::optional<MatZ> to_integer_matrix(const MatIP& m) {
  MatZ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      auto v = m(i, j).as_integer();
      if (!v) return std::nullopt;
      out(i, j) = *v;
    }
  return out;
}

std::vector<Polynomial> entries_of(const MatIP& m) {
  std::vector<Polynomial> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

namespace {

constexpr unsigned long kMaxCoverage = 1ul << 22;

unsigned coverage_precision(const std::vector<Polynomial>& entries, Prime p) {
  unsigned n = 1;
  for (const auto& f : entries) n = std::max(n, continuity_exponent(f, p));
  return n;
}

void validate_entries(const std::vector<Polynomial>& entries) {
  if (entries.empty()) throw DomainError("content: no entries");
  bool any = false;
  for (const auto& f : entries) {
    if (!is_int_valued(f).int_valued) throw DomainError("content: " + f.to_string() + " is not in Int(Z)");
    any = any || !f.is_zero();
  }
  if (!any) throw DomainError("content: all entries are zero");
}

bool unit_at(const Polynomial& f, const Integer& alpha, const Integer& p) {
  return mod_rational(f(Rational(alpha)), p) != 0;
}

}  // namespace

ContentVerdict unit_content_decide(const std::vector<Polynomial>& entries) {
  validate_entries(entries);
  const std::size_t n = entries.size();

  // gcd over Q[X] with Bezout multipliers
  Polynomial h;
  std::vector<Polynomial> mult(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].is_zero()) continue;
    const auto [g, a, b] = bezout_gcd_qx(h, entries[i]);
    for (std::size_t j = 0; j < i; ++j) mult[j] *= a;
    mult[i] = b;
    h = g;
  }
  if (h.degree() >= 1) return {NonUnitWitness{h, std::nullopt}};

  // Clear denominators: sum (D u_i) f_i = D with D u_i in Z[X].
  Integer c = 1;
  for (const auto& u : mult) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), u.common_denominator().get_mpz_t());
  for (auto& u : mult) u *= Rational(c);
  Integer content = c;
  for (const auto& u : mult)
    for (const auto& k : u.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), k.get_num_mpz_t());
  if (content > 1) {
    c /= content;
    for (auto& u : mult) u /= Rational(content);
  }
  // Integer constants among the entries can only shrink c.
  for (std::size_t i = 0; i < n && c > 1; ++i) {
    auto k = entries[i].as_integer();
    if (!k || *k == 0) continue;
    const auto [g, s, t] = ext_gcd(c, *k);
    if (g == c) continue;
    for (auto& u : mult) u *= Rational(s);
    mult[i] += Polynomial(t);
    c = g;
  }

  UnitCertificate cert{c, mult, {}};
  if (c == 1) return {cert};
  for (const auto& [pz, e] : factor_integer(c)) {
    if (!pz.fits_slong_p()) throw DomainError("content: prime factor " + pz.get_str() + " out of range");
    const Prime p(pz.get_si());
    const unsigned prec = coverage_precision(entries, p);
    const Integer period = p.pow(prec);
    if (period > kMaxCoverage)
      throw DomainError("content: residue sweep mod " + pz.get_str() + "^" + std::to_string(prec) + " too large");
    ResidueCoverage cov{p.value(), prec, {}};
    const unsigned long count = period.get_ui();
    cov.unit_entry.reserve(count);
    for (unsigned long a = 0; a < count; ++a) {
      const Integer alpha(a);
      std::size_t hit = n;
      for (std::size_t i = 0; i < n && hit == n; ++i)
        if (unit_at(entries[i], alpha, pz)) hit = i;
      if (hit == n) return {NonUnitWitness{std::nullopt, PAdicResidue(p, alpha, prec)}};
      cov.unit_entry.push_back(hit);
    }
    cert.coverage.push_back(std::move(cov));
  }
  return {cert};
}

std::string verify_content_verdict(const std::vector<Polynomial>& entries, const ContentVerdict& verdict) {
  try {
    validate_entries(entries);
  } catch (const DomainError& e) {
    return e.what();
  }
  if (verdict.is_unit()) {
    const auto& cert = verdict.unit();
    if (cert.c < 1) return "certificate constant is not positive";
    if (cert.multipliers.size() != entries.size()) return "multiplier count mismatch";
    Polynomial sum;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!cert.multipliers[i].has_integer_coeffs()) return "multiplier " + std::to_string(i) + " is not in Z[X]";
      sum += cert.multipliers[i] * entries[i];
    }
    if (sum != Polynomial(cert.c)) return "combination does not equal c";
    for (const auto& [pz, e] : factor_integer(cert.c)) {
      const Prime p(pz.get_si());
      auto it = std::find_if(cert.coverage.begin(), cert.coverage.end(),
                             [&](const ResidueCoverage& cv) { return cv.p == p.value(); });
      if (it == cert.coverage.end()) return "no coverage table for p = " + pz.get_str();
      if (it->precision < coverage_precision(entries, p)) return "coverage precision too low for p = " + pz.get_str();
      const Integer period = p.pow(it->precision);
      if (Integer(static_cast<unsigned long>(it->unit_entry.size())) != period)
        return "coverage table size mismatch for p = " + pz.get_str();
      for (std::size_t a = 0; a < it->unit_entry.size(); ++a) {
        const std::size_t i = it->unit_entry[a];
        if (i >= entries.size() || !unit_at(entries[i], Integer(static_cast<unsigned long>(a)), pz))
          return "coverage fails at residue " + std::to_string(a) + " mod " + pz.get_str();
      }
    }
    return {};
  }
  const auto& w = verdict.non_unit();
  if (w.common_factor) {
    if (w.common_factor->degree() < 1) return "common factor is constant";
    for (const auto& f : entries)
      if (!divides(*w.common_factor, f)) return "common factor does not divide " + f.to_string();
    return {};
  }
  if (w.point) {
    const Prime p = w.point->prime();
    if (w.point->precision() < coverage_precision(entries, p)) return "witness precision too low";
    for (const auto& f : entries)
      if (vp(f(Rational(w.point->value())), p) < Valuation(1))
        return "entry " + f.to_string() + " is a unit at the witness";
    return {};
  }
  return "empty witness";
}

namespace {

bool content_is_unit(const std::vector<Polynomial>& entries) {
  if (std::all_of(entries.begin(), entries.end(), [](const Polynomial& f) { return f.is_zero(); })) return false;
  return unit_content_decide(entries).is_unit();
}

}  // namespace

UcsReport ucs_pair_check(const MatIP& b, const MatIP& c) {
  if (b.rows() != 2 || b.cols() != 2 || c.rows() != 2 || c.cols() != 2)
    throw DomainError("ucs_pair_check: B and C must be 2x2");
  require_int_valued(b);
  require_int_valued(c);
  UcsReport r;
  r.bc = b * c;
  r.content_unit = content_is_unit(entries_of(r.bc));
  r.det_zero = det2(r.bc).is_zero();

  // B = [[a, c], [b, d]]
  const Polynomial& pa = b(0, 0);
  const Polynomial& pc = b(0, 1);
  const Polynomial& pb = b(1, 0);
  const Polynomial& pd = b(1, 1);
  const auto a_int = pa.as_integer();
  r.a_nonunit_integer = a_int && *a_int != 0 && abs(*a_int) != 1;
  r.acd_unit = content_is_unit({pa, pc, pd});
  const Polynomial det_b = det2(b);
  r.det_b_not_integer = !det_b.as_integer().has_value();

  if (a_int && abs(*a_int) == 1) {
    r.known_suitable_c = make2<Polynomial>(1, 1, 0, 0);
  } else if (!r.det_b_not_integer) {
    // C = [[1, 1], [q, q]] works once (a + q c, b + q d) has unit content.
    std::vector<Polynomial> cands;
    for (int k = 0; k <= 20; ++k) cands.push_back(Polynomial(k % 2 ? (k + 1) / 2 : -(k / 2)));
    for (std::size_t k = 1; k <= 3; ++k) {
      cands.push_back(binomial_polynomial(k));
      cands.push_back(-binomial_polynomial(k));
    }
    for (const auto& q : cands)
      if (content_is_unit({pa + q * pc, pb + q * pd})) {
        r.known_suitable_c = make2<Polynomial>(1, 1, q, q);
        break;
      }
  }
  return r;
}

std::optional<Combination<Polynomial>> search_trace_combination(const MatIP& b, const MatIP& c, int max_deg,
                                                                int height, std::size_t budget) {
  const MatIP bc = b * c;
  // Tr(B C D) = r e00 + t e01 + s e10 + u e11; solve for a slot whose weight has least degree.
  const std::array<Polynomial, 4> e = {bc(0, 0), bc(1, 0), bc(0, 1), bc(1, 1)};  // weights of r, s, t, u
  std::size_t solve = 4;
  for (std::size_t i = 0; i < 4; ++i)
    if (!e[i].is_zero() && (solve == 4 || e[i].degree() < e[solve].degree())) solve = i;
  if (solve == 4) return std::nullopt;
  std::vector<std::size_t> free_slots;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != solve) free_slots.push_back(i);

  const std::vector<Polynomial> cands = enumerate_int_polynomials(max_deg, height);
  std::size_t spent = 0;
  // Diagonal order: all triples whose largest candidate index is n.
  for (std::size_t n = 0; n < cands.size(); ++n)
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t k = 0; k <= n; ++k) {
          if (std::max({i, j, k}) != n) continue;
          if (spent++ >= budget) return std::nullopt;
          Combination<Polynomial> comb;
          comb[free_slots[0]] = cands[i];
          comb[free_slots[1]] = cands[j];
          comb[free_slots[2]] = cands[k];
          Polynomial rest(1);
          for (auto slot : free_slots) rest -= comb[slot] * e[slot];
          auto [q, rem] = divmod(rest, e[solve]);
          if (!rem.is_zero() || !is_int_valued(q).int_valued) continue;
          comb[solve] = q;
          return comb;
        }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// text format

namespace {

template <class Scalar, class F>
Mat<Scalar> parse_grid(std::string_view text, F parse_entry) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto semi = text.find(';', start);
    if (semi == std::string_view::npos) semi = text.size();
    std::string_view row = text.substr(start, semi - start);
    std::vector<Scalar> cells;
    std::size_t rs = 0;
    while (rs <= row.size()) {
      auto comma = row.find(',', rs);
      if (comma == std::string_view::npos) comma = row.size();
      cells.push_back(parse_entry(row.substr(rs, comma - rs)));
      rs = comma + 1;
    }
    rows.push_back(std::move(cells));
    start = semi + 1;
  }
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("matrix '" + std::string(text) + "' is not rectangular");
  Mat<Scalar> m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

}  // namespace

MatZ parse_matz(std::string_view text) {
  return parse_grid<Integer>(text, [](std::string_view s) { return parse_integer(s); });
}

MatIP parse_matip(std::string_view text) {
  return parse_grid<Polynomial>(text, [](std::string_view s) { return parse_polynomial(s); });
}

}  // namespace ivp
