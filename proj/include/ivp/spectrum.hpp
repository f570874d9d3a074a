// Points of Spec(Int(E, V)), V = Z_(p), and membership in them.
//
// Implemented families:
//   pq:    P_q = q Q[X] ∩ Int(E, V), q monic nonconstant
//   max:   m_a = { f : v_p(f(a)) >= 1 }, a in E
//   comp:  m_x = { f : v_p(f(x)) >= 1 }, x in the completion, known mod p^N
//   seq:   m_{x_n} = { f : f(x_n) in m for almost all n }, pseudo-convergent window
//   iem:   Int(E, m) itself
// Ultrafilter ideals outside these families have no representation.
#ifndef IVP_SPECTRUM_HPP
#define IVP_SPECTRUM_HPP

#include "ivp/arith.hpp"
#include "ivp/local_intpoly.hpp"
#include "ivp/polynomial.hpp"
#include "ivp/pseudo_sequences.hpp"

#include <optional>
#include <set>
#include <string>
#include <variant>

namespace ivp {

struct PrimeAboveZero {
  Polynomial q;
};
struct MaxTrivial {
  Prime p;
  Rational a;
};
struct MaxCompletion {
  PAdicResidue x;
};
struct MaxSequence {
  SeqWindow window;
};
struct IntEM {
  Prime p;
};

class IdealSpec {
 public:
  using Data = std::variant<PrimeAboveZero, MaxTrivial, MaxCompletion, MaxSequence, IntEM>;

  /// Validates the family invariants (q monic nonconstant, window pseudo-convergent).
  explicit IdealSpec(Data d);

  const Data& data() const { return data_; }
  /// The residue characteristic; empty for P_q.
  std::optional<Prime> prime() const;
  bool is_maximal() const;

  /// Mini-grammar: pq:<poly> | max:p=P,a=A | comp:p=P,x=X,N=N | seq:p=P,pts=x0,x1,... | iem:p=P
  static IdealSpec parse(std::string_view text);
  std::string to_string() const;

 private:
  Data data_;
};

enum class UnknownReason { None, InsufficientPrecision, WindowAmbiguous };

struct TriVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  UnknownReason reason = UnknownReason::None;

  static TriVerdict yes() { return {Kind::Yes, UnknownReason::None}; }
  static TriVerdict no() { return {Kind::No, UnknownReason::None}; }
  static TriVerdict unknown(UnknownReason r) { return {Kind::Unknown, r}; }
  static TriVerdict from(bool b) { return b ? yes() : no(); }

  bool decided() const { return kind != Kind::Unknown; }
  friend bool operator==(const TriVerdict&, const TriVerdict&) = default;
  std::string to_string() const;
};

std::string to_string(UnknownReason r);

/// Requires f in Int(E, V) at the ideal's prime; throws DomainError otherwise.
TriVerdict ideal_membership(const Polynomial& f, const IdealSpec& ideal, const SubsetDescriptor& set);

struct Representative {
  std::optional<long> value;  ///< s in [0, p)
  UnknownReason reason = UnknownReason::None;
};

/// s with f - s in the ideal. Rejects P_q, and Int(E, m) when f is not constant modulo it.
Representative residue_representative(const Polynomial& f, const IdealSpec& ideal, const SubsetDescriptor& set);

struct FrischCheck {
  std::set<long> residues;
  Polynomial product;  ///< prod_{s in residues} (f - s)
  bool product_in_ideal = false;
};

/// Residue image R of f on Z and the test prod_{s in R} (f - s) in Int(Z, pZ_(p)).
FrischCheck frisch_separation_check(const Polynomial& f, Prime p);

}  // namespace ivp

#endif  // IVP_SPECTRUM_HPP
