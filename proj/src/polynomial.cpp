#include "ivp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ivp {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::x() { return Polynomial{Rational(0), Rational(1)}; }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

std::optional<Integer> Polynomial::as_integer() const {
  if (coeffs_.empty()) return Integer(0);
  if (coeffs_.size() == 1 && coeffs_[0].get_den() == 1) return coeffs_[0].get_num();
  return std::nullopt;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this / leading();
}

Integer Polynomial::common_denominator() const {
  Integer m = 1;
  for (const auto& c : coeffs_) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.get_den_mpz_t());
  return m;
}

bool Polynomial::has_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
  if (c == 0) throw DomainError("polynomial division by zero");
  for (auto& a : coeffs_) a /= c;
  return *this;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "X";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

DivMod divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("polynomial division by the zero polynomial");
  std::vector<Rational> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {Polynomial(), f};
  std::vector<Rational> q(static_cast<std::size_t>(f.degree() - dg + 1));
  const Rational lead = g.leading();
  for (int k = f.degree(); k >= dg; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    q[static_cast<std::size_t>(k - dg)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k - dg + j)] -= c * g.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& g, const Polynomial& f) {
  if (g.is_zero()) return f.is_zero();
  return divmod(f, g).remainder.is_zero();
}

Polynomial pow(Polynomial f, unsigned n) {
  Polynomial r(1);
  while (n) {
    if (n & 1u) r *= f;
    n >>= 1u;
    if (n) f *= f;
  }
  return r;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  int peek() {
    skip();
    return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : -1;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      int c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      int c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc /= d.coeff(0);
      } else if (c == 'X' || c == 'x' || c == '(' || (c >= 0 && std::isdigit(c))) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    int c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 4) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    int c = peek();
    if (c == 'X' || c == 'x') {
      ++pos_;
      return Polynomial::x();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c >= 0 && std::isdigit(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    fail(c < 0 ? "unexpected end of input" : "unexpected '" + std::string(1, static_cast<char>(c)) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// binomial basis

Polynomial binomial_polynomial(std::size_t k) {
  Polynomial p(1);
  for (std::size_t j = 0; j < k; ++j) {
    p *= Polynomial{Rational(-static_cast<long>(j)), Rational(1)};
    p /= Rational(static_cast<long>(j + 1));
  }
  return p;
}

Polynomial BinomialForm::to_polynomial() const {
  Polynomial f;
  Polynomial b(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    f += b * coeffs[k];
    b *= Polynomial{Rational(-static_cast<long>(k)), Rational(1)};
    b /= Rational(static_cast<long>(k + 1));
  }
  return f;
}

BinomialForm to_binomial_basis(const Polynomial& f) {
  if (f.is_zero()) return {};
  const auto n = static_cast<std::size_t>(f.degree());
  std::vector<Rational> diffs(n + 1);
  for (std::size_t x = 0; x <= n; ++x) diffs[x] = f(Rational(static_cast<long>(x)));
  // After pass k, diffs[k] holds the k-th forward difference at 0.
  BinomialForm out;
  out.coeffs.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    out.coeffs[k] = diffs[k];
    for (std::size_t j = n; j > k; --j) diffs[j] -= diffs[j - 1];
  }
  return out;
}

IntValuedReport is_int_valued(const Polynomial& f) {
  IntValuedReport r;
  r.int_valued = true;
  for (const auto& c : to_binomial_basis(f).coeffs)
    if (c.get_den() != 1) r.int_valued = false;
  const Integer m = f.common_denominator();
  if (m != 1)
    for (const auto& [q, e] : factor_integer(m)) r.denom_exponent[q.get_si()] = static_cast<long>(e);
  return r;
}

bool is_p_int_valued(const Polynomial& f, Prime p) {
  for (const auto& c : to_binomial_basis(f).coeffs)
    if (vp(c, p) < Valuation(0)) return false;
  return true;
}

unsigned continuity_exponent(const Polynomial& f, Prime p) {
  return 1u + static_cast<unsigned>(vp(f.common_denominator(), p).value());
}

namespace {
constexpr unsigned long kMaxResidueSweep = 1ul << 24;
}

std::set<long> residue_image(const Polynomial& f, Prime p) {
  if (!is_p_int_valued(f, p))
    throw DomainError("residue_image: " + f.to_string() + " is not " + std::to_string(p.value()) +
                      "-integrally valued on Z");
  const Integer period = p.pow(continuity_exponent(f, p));
  if (period > kMaxResidueSweep) throw DomainError("residue_image: period " + period.get_str() + " too large");
  const Integer pz = p.integer();
  std::set<long> out;
  const unsigned long n = period.get_ui();
  for (unsigned long x = 0; x < n && out.size() < static_cast<std::size_t>(p.value()); ++x)
    out.insert(mod_rational(f(Rational(Integer(x))), pz).get_si());
  return out;
}

PolyBezout bezout_gcd_qx(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("bezout_gcd_qx: both polynomials are zero");
  Polynomial r0 = f, r1 = g;
  Polynomial s0(1), s1;
  Polynomial t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  const Rational lc = r0.leading();
  return {r0 / lc, s0 / lc, t0 / lc};
}

std::optional<Polynomial> poly_sqrt(const Polynomial& h) {
  if (h.is_zero()) return Polynomial();
  if (h.degree() % 2 != 0) return std::nullopt;
  const auto n = static_cast<std::size_t>(h.degree() / 2);
  std::vector<Rational> g(n + 1);
  if (!exact_sqrt(h.leading(), g[n])) return std::nullopt;
  const Rational twice_lead = 2 * g[n];
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = h.coeff(n + k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::size_t j = n + k - i;
      if (j > k && j < n) acc -= g[i] * g[j];
    }
    g[k] = acc / twice_lead;
  }
  Polynomial root(std::move(g));
  if (root * root != h) return std::nullopt;
  return root;
}

std::vector<Polynomial> enumerate_int_polynomials(int max_deg, int height) {
  if (max_deg < 0 || height < 0) throw DomainError("enumeration bounds must be non-negative");
  const double total = std::pow(2.0 * height + 1.0, max_deg + 1.0);
  if (total > 4e6) throw DomainError("enumeration of " + std::to_string(static_cast<long long>(total)) + " polynomials is too large");
  std::vector<Polynomial> out;
  const auto len = static_cast<std::size_t>(max_deg) + 1;
  for (int h = 0; h <= height; ++h) {
    std::vector<int> c(len, -h);
    for (;;) {
      if (std::any_of(c.begin(), c.end(), [h](int v) { return v == h || v == -h; })) {
        std::vector<Rational> q(c.begin(), c.end());
        out.emplace_back(std::move(q));
      }
      std::size_t k = len;
      while (k-- > 0) {
        if (c[k] < h) {
          ++c[k];
          break;
        }
        c[k] = -h;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

}  // namespace ivp
