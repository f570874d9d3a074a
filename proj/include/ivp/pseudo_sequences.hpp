// Pseudo-monotone classification of finite sequence windows.
#ifndef IVP_PSEUDO_SEQUENCES_HPP
#define IVP_PSEUDO_SEQUENCES_HPP

#include "ivp/arith.hpp"
#include "ivp/polynomial.hpp"

#include <string>
#include <vector>

namespace ivp {

/// At least three pairwise-distinct p-integral rationals, in sequence order.
class SeqWindow {
 public:
  SeqWindow(Prime p, std::vector<Rational> points);

  Prime prime() const { return p_; }
  const std::vector<Rational>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  Prime p_;
  std::vector<Rational> points_;
};

enum class WindowClass { PseudoConvergent, PseudoDivergent, PseudoStationary, None };

std::string to_string(WindowClass c);

/// v_p(x_{n+1} - x_n) for consecutive points.
std::vector<Valuation> gap_valuations(const std::vector<Rational>& points, Prime p);

/// Classification of any list of distinct rationals (length >= 3).
///   convergent  <=> consecutive gap valuations strictly increase
///   divergent   <=> they strictly decrease
///   stationary  <=> all pairwise difference valuations coincide, the pair (first, last) excepted
WindowClass classify_points(const std::vector<Rational>& points, Prime p);

WindowClass classify_window(const SeqWindow& w);

/// v_p(x - x_n) strictly increasing along the window. A window point is never a
/// pseudo-limit here: its own difference has infinite valuation.
/// Throws DomainError unless the window is pseudo-convergent.
bool is_pseudo_limit(const Rational& x, const SeqWindow& w);

enum class Dichotomy { Increasing, EventuallyConstant, Undetermined };

std::string to_string(Dichotomy d);

/// Observed shape of a valuation list: strictly increasing, or constant on a tail of length >= 2.
Dichotomy observe_dichotomy(const std::vector<Valuation>& vals);

struct ImageWindowResult {
  std::size_t suffix_start = 0;  ///< window length when no suffix qualifies
  WindowClass cls = WindowClass::None;
  Dichotomy dichotomy = Dichotomy::Undetermined;
  std::vector<Rational> image;
};

/// Smallest suffix from which f(x_n) is pseudo-convergent, with the valuation dichotomy on it.
ImageWindowResult image_window_classify(const Polynomial& f, const SeqWindow& w);

}  // namespace ivp

#endif  // IVP_PSEUDO_SEQUENCES_HPP
