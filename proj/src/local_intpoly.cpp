#include "ivp/local_intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ivp {

SubsetDescriptor SubsetDescriptor::finite(std::vector<Rational> points) {
  std::vector<Rational> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("subset points must be pairwise distinct");
  return SubsetDescriptor(Finite{std::move(points)});
}

const std::vector<Rational>& SubsetDescriptor::points() const {
  if (const auto* f = std::get_if<Finite>(&data_)) return f->points;
  throw DomainError("ALL_INTEGERS has no explicit point list");
}

bool SubsetDescriptor::contains(const Rational& a) const {
  if (is_all_integers()) return a.get_den() == 1;
  const auto& pts = points();
  return std::find(pts.begin(), pts.end(), a) != pts.end();
}

void SubsetDescriptor::require_p_integral(Prime p) const {
  if (is_all_integers()) return;
  for (const auto& a : points())
    if (vp(a, p) < Valuation(0))
      throw DomainError("point " + ivp::to_string(a) + " is not " + std::to_string(p.value()) + "-integral");
}

std::string SubsetDescriptor::to_string() const {
  if (is_all_integers()) return "Z";
  std::ostringstream os;
  const auto& pts = points();
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << pts[i].get_str();
  return os.str();
}

namespace {

Valuation product_valuation(const Rational& x, const std::vector<Rational>& prefix, Prime p) {
  Valuation v(0);
  for (const auto& a : prefix) v += vp(x - a, p);
  return v;
}

bool prefer(const Rational& a, const Rational& b, TieBreak tie) {
  return tie == TieBreak::Smallest ? num_den_less(a, b) : num_den_less(b, a);
}

}  // namespace

VOrdering v_ordering(const SubsetDescriptor& set, std::size_t n, Prime p, TieBreak tie) {
  VOrdering out{set, p, {}, {}};
  if (set.is_all_integers()) {
    for (std::size_t k = 0; k <= n; ++k) {
      const Rational ak(Integer(static_cast<unsigned long>(k)));
      out.w.push_back(product_valuation(ak, out.points, p));
      out.points.push_back(ak);
    }
    return out;
  }

  set.require_p_integral(p);
  std::vector<Rational> remaining = set.points();
  if (remaining.size() < n + 1)
    throw DomainError("v_ordering: set has " + std::to_string(remaining.size()) + " points, need " +
                      std::to_string(n + 1));
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t best = 0;
    Valuation best_v = product_valuation(remaining[0], out.points, p);
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      Valuation v = product_valuation(remaining[i], out.points, p);
      if (v < best_v || (v == best_v && prefer(remaining[i], remaining[best], tie))) {
        best = i;
        best_v = v;
      }
    }
    out.points.push_back(remaining[best]);
    out.w.push_back(best_v);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Polynomial regular_basis(const VOrdering& vord, std::size_t k) {
  if (k >= vord.length())
    throw DomainError("regular_basis: index " + std::to_string(k) + " exceeds ordering length " +
                      std::to_string(vord.length()));
  Polynomial f(1);
  const Rational& ak = vord.points[k];
  for (std::size_t j = 0; j < k; ++j) {
    const Rational& aj = vord.points[j];
    f *= Polynomial{-aj, Rational(1)};
    f /= ak - aj;
  }
  return f;
}

std::vector<Rational> expand_in_basis(const Polynomial& f, const VOrdering& vord) {
  if (f.degree() >= static_cast<int>(vord.length()))
    throw DomainError("expand_in_basis: degree " + std::to_string(f.degree()) + " needs an ordering of length " +
                      std::to_string(f.degree() + 1));
  const std::size_t d = f.is_zero() ? 0 : static_cast<std::size_t>(f.degree()) + 1;
  std::vector<Polynomial> basis;
  basis.reserve(d);
  for (std::size_t k = 0; k < d; ++k) basis.push_back(regular_basis(vord, k));
  std::vector<Rational> c(d);
  for (std::size_t k = 0; k < d; ++k) {
    const Rational& ak = vord.points[k];
    Rational acc = f(ak);
    for (std::size_t h = 0; h < k; ++h) acc -= c[h] * basis[h](ak);
    c[k] = acc;
  }
  return c;
}

Valuation min_valuation(const std::vector<Rational>& values, Prime p) {
  Valuation m = Valuation::infinity();
  for (const auto& c : values) m = std::min(m, vp(c, p));
  return m;
}

bool int_membership(const Polynomial& f, const SubsetDescriptor& set, Prime p, MembershipTarget target) {
  const Valuation floor = target == MembershipTarget::V ? Valuation(0) : Valuation(1);
  if (set.is_all_integers()) {
    if (!is_p_int_valued(f, p)) return false;
    if (target == MembershipTarget::V) return true;
    const auto image = residue_image(f, p);
    return image.size() == 1 && *image.begin() == 0;
  }
  set.require_p_integral(p);
  for (const auto& a : set.points())
    if (vp(f(a), p) < floor) return false;
  return true;
}

}  // namespace ivp
