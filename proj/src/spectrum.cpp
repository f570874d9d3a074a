#include "ivp/spectrum.hpp"

#include <map>
#include <sstream>

namespace ivp {

IdealSpec::IdealSpec(Data d) : data_(std::move(d)) {
  if (const auto* pq = std::get_if<PrimeAboveZero>(&data_)) {
    if (pq->q.degree() < 1) throw DomainError("P_q needs a nonconstant q");
    if (pq->q.leading() != 1) throw DomainError("P_q needs a monic q");
  } else if (const auto* mt = std::get_if<MaxTrivial>(&data_)) {
    if (vp(mt->a, mt->p) < Valuation(0)) throw DomainError("m_a needs a p-integral point a");
  } else if (const auto* ms = std::get_if<MaxSequence>(&data_)) {
    if (classify_window(ms->window) != WindowClass::PseudoConvergent)
      throw DomainError("m_{x_n} needs a pseudo-convergent window");
  }
}

std::optional<Prime> IdealSpec::prime() const {
  struct Visitor {
    std::optional<Prime> operator()(const PrimeAboveZero&) const { return std::nullopt; }
    std::optional<Prime> operator()(const MaxTrivial& m) const { return m.p; }
    std::optional<Prime> operator()(const MaxCompletion& m) const { return m.x.prime(); }
    std::optional<Prime> operator()(const MaxSequence& m) const { return m.window.prime(); }
    std::optional<Prime> operator()(const IntEM& m) const { return m.p; }
  };
  return std::visit(Visitor{}, data_);
}

bool IdealSpec::is_maximal() const {
  return !std::holds_alternative<PrimeAboveZero>(data_) && !std::holds_alternative<IntEM>(data_);
}

namespace {

std::map<std::string, std::string> parse_fields(std::string_view body, std::string_view tail_key) {
  std::map<std::string, std::string> out;
  while (!body.empty()) {
    auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError("ideal spec: expected key=value in '" + std::string(body) + "'");
    std::string key(body.substr(0, eq));
    body.remove_prefix(eq + 1);
    std::size_t end = key == tail_key ? body.size() : body.find(',');
    if (end == std::string_view::npos) end = body.size();
    out[key] = std::string(body.substr(0, end));
    body.remove_prefix(std::min(body.size(), end + 1));
  }
  return out;
}

const std::string& need(const std::map<std::string, std::string>& m, const std::string& key, std::string_view spec) {
  auto it = m.find(key);
  if (it == m.end()) throw ParseError("ideal spec '" + std::string(spec) + "' is missing '" + key + "='");
  return it->second;
}

void only(const std::map<std::string, std::string>& m, std::initializer_list<std::string_view> keys,
          std::string_view spec) {
  for (const auto& [k, v] : m) {
    bool ok = false;
    for (auto key : keys) ok = ok || key == k;
    if (!ok) throw ParseError("ideal spec '" + std::string(spec) + "': unknown key '" + k + "'");
  }
}

Prime parse_prime(const std::string& s) {
  Integer n = parse_integer(s);
  if (!n.fits_slong_p()) throw ParseError("prime out of range: " + s);
  return Prime(n.get_si());
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(parse_rational(std::string_view(s).substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

}  // namespace

IdealSpec IdealSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("ideal spec needs a 'kind:' prefix: '" + std::string(text) + "'");
  const std::string kind(text.substr(0, colon));
  const std::string_view body = text.substr(colon + 1);
  if (kind == "pq") return IdealSpec(PrimeAboveZero{parse_polynomial(body)});
  if (kind == "max") {
    auto f = parse_fields(body, "");
    only(f, {"p", "a"}, text);
    return IdealSpec(MaxTrivial{parse_prime(need(f, "p", text)), parse_rational(need(f, "a", text))});
  }
  if (kind == "comp") {
    auto f = parse_fields(body, "");
    only(f, {"p", "x", "N"}, text);
    const Prime p = parse_prime(need(f, "p", text));
    const Integer n = parse_integer(need(f, "N", text));
    if (n < 1 || n > 4096) throw ParseError("comp: precision N must be in [1, 4096]");
    return IdealSpec(MaxCompletion{padic_residue(parse_rational(need(f, "x", text)), p, static_cast<unsigned>(n.get_ui()))});
  }
  if (kind == "seq") {
    auto f = parse_fields(body, "pts");
    only(f, {"p", "pts"}, text);
    return IdealSpec(MaxSequence{SeqWindow(parse_prime(need(f, "p", text)), parse_list(need(f, "pts", text)))});
  }
  if (kind == "iem") {
    auto f = parse_fields(body, "");
    only(f, {"p"}, text);
    return IdealSpec(IntEM{parse_prime(need(f, "p", text))});
  }
  throw ParseError("unknown ideal kind '" + kind + "'");
}

std::string IdealSpec::to_string() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, PrimeAboveZero>) {
          os << "pq:" << d.q;
        } else if constexpr (std::is_same_v<T, MaxTrivial>) {
          os << "max:p=" << d.p.value() << ",a=" << d.a.get_str();
        } else if constexpr (std::is_same_v<T, MaxCompletion>) {
          os << "comp:p=" << d.x.prime().value() << ",x=" << d.x.value().get_str() << ",N=" << d.x.precision();
        } else if constexpr (std::is_same_v<T, MaxSequence>) {
          os << "seq:p=" << d.window.prime().value() << ",pts=";
          for (std::size_t i = 0; i < d.window.size(); ++i) os << (i ? "," : "") << d.window.points()[i].get_str();
        } else {
          os << "iem:p=" << d.p.value();
        }
      },
      data_);
  return os.str();
}

std::string to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::InsufficientPrecision: return "insufficient-precision";
    case UnknownReason::WindowAmbiguous: return "window-ambiguous";
    case UnknownReason::None: break;
  }
  return "none";
}

std::string TriVerdict::to_string() const {
  switch (kind) {
    case Kind::Yes: return "yes";
    case Kind::No: return "no";
    case Kind::Unknown: break;
  }
  return "unknown(" + ivp::to_string(reason) + ")";
}

namespace {

void require_member_of_int(const Polynomial& f, const SubsetDescriptor& set, Prime p) {
  if (!int_membership(f, set, p, MembershipTarget::V))
    throw DomainError(f.to_string() + " is not in Int(E, Z_(" + std::to_string(p.value()) + "))");
}

/// A representative of x usable for evaluation, checked against E.
void require_in_completion(const PAdicResidue& x, const SubsetDescriptor& set) {
  if (set.is_all_integers()) return;
  const Integer m = x.modulus();
  for (const auto& a : set.points())
    if (mod_rational(a, m) == x.value()) return;
  throw DomainError("no point of E is congruent to " + x.to_string());
}

void require_window_in(const SeqWindow& w, const SubsetDescriptor& set) {
  for (const auto& x : w.points())
    if (!set.contains(x)) throw DomainError("window point " + ivp::to_string(x) + " is not in E");
}

std::size_t final_half_start(std::size_t n) { return n - (n + 1) / 2; }

long residue_mod_p(const Rational& y, Prime p) { return mod_rational(y, p.integer()).get_si(); }

}  // namespace

TriVerdict ideal_membership(const Polynomial& f, const IdealSpec& ideal, const SubsetDescriptor& set) {
  if (const auto* pq = std::get_if<PrimeAboveZero>(&ideal.data())) return TriVerdict::from(divides(pq->q, f));
  const Prime p = *ideal.prime();
  require_member_of_int(f, set, p);

  if (const auto* mt = std::get_if<MaxTrivial>(&ideal.data())) {
    if (!set.contains(mt->a)) throw DomainError("m_a: a = " + ivp::to_string(mt->a) + " is not in E");
    return TriVerdict::from(vp(f(mt->a), p) >= Valuation(1));
  }
  if (const auto* mc = std::get_if<MaxCompletion>(&ideal.data())) {
    require_in_completion(mc->x, set);
    if (mc->x.precision() < continuity_exponent(f, p)) return TriVerdict::unknown(UnknownReason::InsufficientPrecision);
    return TriVerdict::from(vp(f(Rational(mc->x.value())), p) >= Valuation(1));
  }
  if (const auto* ms = std::get_if<MaxSequence>(&ideal.data())) {
    require_window_in(ms->window, set);
    const auto& pts = ms->window.points();
    bool all_in = true, all_out = true;
    for (std::size_t i = final_half_start(pts.size()); i < pts.size(); ++i) {
      const bool in = vp(f(pts[i]), p) >= Valuation(1);
      all_in = all_in && in;
      all_out = all_out && !in;
    }
    if (all_in) return TriVerdict::yes();
    if (all_out) return TriVerdict::no();
    return TriVerdict::unknown(UnknownReason::WindowAmbiguous);
  }
  return TriVerdict::from(int_membership(f, set, p, MembershipTarget::MaximalIdeal));
}

Representative residue_representative(const Polynomial& f, const IdealSpec& ideal, const SubsetDescriptor& set) {
  if (std::holds_alternative<PrimeAboveZero>(ideal.data()))
    throw DomainError("residue_representative: P_q is not a maximal ideal over p");
  const Prime p = *ideal.prime();
  require_member_of_int(f, set, p);

  if (const auto* mt = std::get_if<MaxTrivial>(&ideal.data())) {
    if (!set.contains(mt->a)) throw DomainError("m_a: a = " + ivp::to_string(mt->a) + " is not in E");
    return {residue_mod_p(f(mt->a), p), UnknownReason::None};
  }
  if (const auto* mc = std::get_if<MaxCompletion>(&ideal.data())) {
    require_in_completion(mc->x, set);
    if (mc->x.precision() < continuity_exponent(f, p)) return {std::nullopt, UnknownReason::InsufficientPrecision};
    return {residue_mod_p(f(Rational(mc->x.value())), p), UnknownReason::None};
  }
  if (const auto* ms = std::get_if<MaxSequence>(&ideal.data())) {
    require_window_in(ms->window, set);
    const auto& pts = ms->window.points();
    std::set<long> seen;
    for (std::size_t i = final_half_start(pts.size()); i < pts.size(); ++i) seen.insert(residue_mod_p(f(pts[i]), p));
    if (seen.size() != 1) return {std::nullopt, UnknownReason::WindowAmbiguous};
    return {*seen.begin(), UnknownReason::None};
  }
  // Int(E, m): f - s lies in it only when f is constant modulo m on E.
  std::set<long> image;
  if (set.is_all_integers()) {
    image = residue_image(f, p);
  } else {
    for (const auto& a : set.points()) image.insert(residue_mod_p(f(a), p));
  }
  if (image.size() != 1) throw DomainError("f is not constant modulo Int(E, m)");
  return {*image.begin(), UnknownReason::None};
}

FrischCheck frisch_separation_check(const Polynomial& f, Prime p) {
  FrischCheck out;
  out.residues = residue_image(f, p);
  out.product = Polynomial(1);
  for (long s : out.residues) out.product *= f - Polynomial(Rational(s));
  out.product_in_ideal =
      int_membership(out.product, SubsetDescriptor::all_integers(), p, MembershipTarget::MaximalIdeal);
  return out;
}

}  // namespace ivp
