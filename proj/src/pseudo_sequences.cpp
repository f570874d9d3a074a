#include "ivp/pseudo_sequences.hpp"

#include <algorithm>

namespace ivp {

namespace {

bool pairwise_distinct(std::vector<Rational> pts) {
  std::sort(pts.begin(), pts.end());
  return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

}  // namespace

SeqWindow::SeqWindow(Prime p, std::vector<Rational> points) : p_(p), points_(std::move(points)) {
  if (points_.size() < 3) throw DomainError("a sequence window needs at least 3 points");
  if (!pairwise_distinct(points_)) throw DomainError("sequence window points must be pairwise distinct");
  for (const auto& x : points_)
    if (vp(x, p_) < Valuation(0))
      throw DomainError("window point " + ivp::to_string(x) + " is not " + std::to_string(p_.value()) + "-integral");
}

std::string to_string(WindowClass c) {
  switch (c) {
    case WindowClass::PseudoConvergent: return "pseudo-convergent";
    case WindowClass::PseudoDivergent: return "pseudo-divergent";
    case WindowClass::PseudoStationary: return "pseudo-stationary";
    case WindowClass::None: break;
  }
  return "none";
}

std::string to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::Increasing: return "increasing";
    case Dichotomy::EventuallyConstant: return "eventually-constant";
    case Dichotomy::Undetermined: break;
  }
  return "undetermined";
}

std::vector<Valuation> gap_valuations(const std::vector<Rational>& points, Prime p) {
  std::vector<Valuation> gaps;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) gaps.push_back(vp(points[i + 1] - points[i], p));
  return gaps;
}

WindowClass classify_points(const std::vector<Rational>& points, Prime p) {
  if (points.size() < 3) throw DomainError("classification needs at least 3 points");
  const auto gaps = gap_valuations(points, p);
  auto adjacent = [&](auto cmp) {
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
      if (!cmp(gaps[i], gaps[i + 1])) return false;
    return true;
  };
  if (adjacent(std::less<>{})) return WindowClass::PseudoConvergent;
  if (adjacent(std::greater<>{})) return WindowClass::PseudoDivergent;
  // Equal consecutive gaps are not enough: every pair occurring in some triple must agree.
  // The first-to-last pair never occurs in a triple of a finite window, so it is free.
  const Valuation v0 = gaps[0];
  const std::size_t last = points.size() - 1;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if ((i != 0 || j != last) && vp(points[j] - points[i], p) != v0) return WindowClass::None;
  return WindowClass::PseudoStationary;
}

WindowClass classify_window(const SeqWindow& w) { return classify_points(w.points(), w.prime()); }

bool is_pseudo_limit(const Rational& x, const SeqWindow& w) {
  if (classify_window(w) != WindowClass::PseudoConvergent)
    throw DomainError("is_pseudo_limit: window is not pseudo-convergent");
  Valuation prev;
  for (std::size_t n = 0; n < w.size(); ++n) {
    const Valuation v = vp(x - w.points()[n], w.prime());
    if (v.is_infinite()) return false;
    if (n > 0 && !(prev < v)) return false;
    prev = v;
  }
  return true;
}

Dichotomy observe_dichotomy(const std::vector<Valuation>& vals) {
  if (vals.size() < 2) return Dichotomy::Undetermined;
  bool increasing = true;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i)
    if (!(vals[i] < vals[i + 1])) increasing = false;
  if (increasing) return Dichotomy::Increasing;
  if (vals[vals.size() - 1] == vals[vals.size() - 2]) return Dichotomy::EventuallyConstant;
  return Dichotomy::Undetermined;
}

ImageWindowResult image_window_classify(const Polynomial& f, const SeqWindow& w) {
  if (f.is_zero()) throw DomainError("image_window_classify: f must be nonzero");
  ImageWindowResult r;
  for (const auto& x : w.points()) r.image.push_back(f(x));
  r.suffix_start = w.size();
  for (std::size_t s = 0; s + 3 <= w.size(); ++s) {
    std::vector<Rational> tail(r.image.begin() + static_cast<std::ptrdiff_t>(s), r.image.end());
    if (!pairwise_distinct(tail)) continue;
    if (classify_points(tail, w.prime()) != WindowClass::PseudoConvergent) continue;
    r.suffix_start = s;
    r.cls = WindowClass::PseudoConvergent;
    std::vector<Valuation> vals;
    for (const auto& y : tail) vals.push_back(vp(y, w.prime()));
    r.dichotomy = observe_dichotomy(vals);
    return r;
  }
  return r;
}

}  // namespace ivp
