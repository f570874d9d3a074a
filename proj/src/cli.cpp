#include "ivp/cli.hpp"

#include "ivp/arith.hpp"
#include "ivp/example_lab.hpp"
#include "ivp/local_intpoly.hpp"
#include "ivp/matrices.hpp"
#include "ivp/polynomial.hpp"
#include "ivp/pseudo_sequences.hpp"
#include "ivp/spectrum.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace ivp::cli {

using nlohmann::json;

namespace {

struct Output {
  json j;
  std::string text;
};

// ---------------------------------------------------------------------------
// flag helpers

const std::string& need(const CommandRequest& r, const std::string& key) {
  auto it = r.flags.find(key);
  if (it == r.flags.end()) throw ParseError("missing required flag --" + key);
  return it->second;
}

std::string flag_or(const CommandRequest& r, const std::string& key, const std::string& fallback) {
  auto it = r.flags.find(key);
  return it == r.flags.end() ? fallback : it->second;
}

long parse_long(const std::string& s, const std::string& what) {
  Integer n = parse_integer(s);
  if (!n.fits_slong_p()) throw ParseError(what + " out of range: " + s);
  return n.get_si();
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  long n = parse_long(s, what);
  if (n < 0) throw ParseError(what + " must be non-negative");
  return static_cast<std::size_t>(n);
}

Prime prime_flag(const CommandRequest& r) { return Prime(parse_long(need(r, "p"), "--p")); }

std::vector<Rational> parse_qlist(const std::string& s) {
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

SubsetDescriptor parse_set(const std::string& s) {
  if (s == "Z" || s == "all" || s == "ALL_INTEGERS") return SubsetDescriptor::all_integers();
  return SubsetDescriptor::finite(parse_qlist(s));
}

SeqWindow parse_window(const CommandRequest& r) {
  auto pts = parse_qlist(need(r, "seq"));
  if (pts.size() < 3) throw ParseError("--seq needs at least 3 points, got " + std::to_string(pts.size()));
  return SeqWindow(prime_flag(r), std::move(pts));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto pos = s.find(sep, start);
    if (pos == std::string::npos) pos = s.size();
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// json helpers

json jrat(const Rational& q) { return q.get_str(); }
json jint(const Integer& n) { return n.get_str(); }
json jpoly(const Polynomial& f) { return f.to_string(); }
json jval(const Valuation& v) { return v.is_infinite() ? json("inf") : json(v.value()); }

template <class Scalar>
json jmat(const Mat<Scalar>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::ostringstream os;
      os << m(i, j);
      row.push_back(os.str());
    }
    rows.push_back(row);
  }
  return rows;
}

template <class T, class F>
std::string join(const T& items, F fmt, const char* sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : items) {
    if (!first) os << sep;
    first = false;
    os << fmt(x);
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Integer json_integer(const json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  return parse_integer(v.get<std::string>());
}

Polynomial json_poly(const json& v) { return parse_polynomial(v.get<std::string>()); }

template <class Scalar, class F>
Mat<Scalar> json_mat(const json& v, F parse) {
  const auto rows = static_cast<Eigen::Index>(v.size());
  const auto cols = rows ? static_cast<Eigen::Index>(v.at(0).size()) : 0;
  Mat<Scalar> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(v.at(i).size()) != cols) throw ParseError("matrix rows differ in length");
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = parse(v.at(i).at(j).template get<std::string>());
  }
  return m;
}

// ---------------------------------------------------------------------------
// shared renderers

json content_json(const std::vector<Polynomial>& entries, const ContentVerdict& v) {
  json j;
  j["kind"] = "content";
  j["entries"] = json::array();
  for (const auto& f : entries) j["entries"].push_back(jpoly(f));
  if (v.is_unit()) {
    const auto& c = v.unit();
    j["verdict"] = "unit";
    json cert;
    cert["c"] = jint(c.c);
    cert["multipliers"] = json::array();
    for (const auto& u : c.multipliers) cert["multipliers"].push_back(jpoly(u));
    cert["coverage"] = json::array();
    for (const auto& cov : c.coverage)
      cert["coverage"].push_back({{"p", cov.p}, {"precision", cov.precision}, {"unitEntry", cov.unit_entry}});
    j["certificate"] = cert;
  } else {
    const auto& w = v.non_unit();
    j["verdict"] = "non-unit";
    json wit;
    if (w.common_factor) wit["commonFactor"] = jpoly(*w.common_factor);
    if (w.point) {
      wit["p"] = w.point->prime().value();
      wit["residue"] = jint(w.point->value());
      wit["precision"] = w.point->precision();
    }
    j["witness"] = wit;
  }
  return j;
}

std::string content_text(const ContentVerdict& v) {
  std::ostringstream os;
  if (v.is_unit()) {
    const auto& c = v.unit();
    os << "verdict: unit\nc: " << c.c.get_str() << "\nmultipliers: "
       << join(c.multipliers, [](const Polynomial& f) { return f.to_string(); }, "; ") << "\n";
    for (const auto& cov : c.coverage)
      os << "coverage p=" << cov.p << ": all " << cov.unit_entry.size() << " residues mod " << cov.p << "^"
         << cov.precision << " covered\n";
  } else {
    const auto& w = v.non_unit();
    os << "verdict: non-unit\n";
    if (w.common_factor) os << "witness: common factor " << *w.common_factor << "\n";
    if (w.point) os << "witness: p=" << w.point->prime().value() << ", x = " << *w.point << "\n";
  }
  return os.str();
}

ContentVerdict content_from_json(const json& j) {
  if (j.at("verdict") == "unit") {
    const json& c = j.at("certificate");
    UnitCertificate cert;
    cert.c = json_integer(c.at("c"));
    for (const auto& u : c.at("multipliers")) cert.multipliers.push_back(json_poly(u));
    for (const auto& cov : c.at("coverage"))
      cert.coverage.push_back({cov.at("p").get<long>(), cov.at("precision").get<unsigned>(),
                               cov.at("unitEntry").get<std::vector<std::size_t>>()});
    return {cert};
  }
  const json& w = j.at("witness");
  NonUnitWitness wit;
  if (w.contains("commonFactor")) wit.common_factor = json_poly(w.at("commonFactor"));
  if (w.contains("p"))
    wit.point = PAdicResidue(Prime(w.at("p").get<long>()), json_integer(w.at("residue")), w.at("precision").get<unsigned>());
  return {wit};
}

json certificate_json(const ExampleCertificate& c) {
  json j;
  j["kind"] = "example-certificate";
  j["beta"] = jpoly(c.beta);
  j["gamma"] = jpoly(c.gamma);
  j["f"] = jpoly(c.f);
  j["g"] = jpoly(c.g);
  j["sign"] = c.sign;
  j["u"] = jpoly(c.u);
  j["alpha"] = jpoly(c.alpha);
  j["delta"] = jpoly(c.delta);
  j["C"] = jmat(c.c);
  j["BC"] = jmat(c.bc);
  json checks;
  for (const auto& [name, ok] : c.checks) checks[name] = ok;
  j["checks"] = checks;
  j["valid"] = c.valid();
  return j;
}

std::string certificate_text(const ExampleCertificate& c) {
  std::ostringstream os;
  os << "beta:  " << c.beta << "\ngamma: " << c.gamma << "\nf:     " << c.f << "\ng:     " << c.g
     << "\nsign:  " << (c.sign > 0 ? "+1" : "-1") << "\nu:     " << c.u << "\nalpha: " << c.alpha
     << "\ndelta: " << c.delta << "\nBC:    " << format_matrix(c.bc) << "\n";
  for (const auto& [name, ok] : c.checks) os << "check " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
  os << "valid: " << yes_no(c.valid()) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// handlers

Output cmd_vorder(const CommandRequest& r) {
  const auto set = parse_set(need(r, "set"));
  const Prime p = prime_flag(r);
  const auto n = parse_count(need(r, "n"), "--n");
  const std::string tie_s = flag_or(r, "tie", "smallest");
  if (tie_s != "smallest" && tie_s != "largest") throw ParseError("--tie must be smallest or largest");
  const auto vord = v_ordering(set, n, p, tie_s == "smallest" ? TieBreak::Smallest : TieBreak::Largest);
  Output o;
  o.j["points"] = json::array();
  o.j["w"] = json::array();
  for (const auto& a : vord.points) o.j["points"].push_back(jrat(a));
  for (const auto& v : vord.w) o.j["w"].push_back(jval(v));
  o.text = "points: " + join(vord.points, [](const Rational& a) { return a.get_str(); }) +
           "\nw: " + join(vord.w, [](const Valuation& v) { return v.to_string(); }) + "\n";
  return o;
}

Output cmd_basis(const CommandRequest& r) {
  const auto set = parse_set(need(r, "set"));
  const Prime p = prime_flag(r);
  const auto k = parse_count(need(r, "k"), "--k");
  const auto vord = v_ordering(set, k, p);
  const Polynomial f = regular_basis(vord, k);
  Output o;
  o.j["k"] = k;
  o.j["points"] = json::array();
  for (const auto& a : vord.points) o.j["points"].push_back(jrat(a));
  o.j["basis"] = jpoly(f);
  o.text = "points: " + join(vord.points, [](const Rational& a) { return a.get_str(); }) + "\nf_" +
           std::to_string(k) + ": " + f.to_string() + "\n";
  return o;
}

Output cmd_expand(const CommandRequest& r) {
  const Polynomial f = parse_polynomial(need(r, "poly"));
  const auto set = parse_set(need(r, "set"));
  const Prime p = prime_flag(r);
  const std::size_t deg = f.degree() < 0 ? 0 : static_cast<std::size_t>(f.degree());
  const std::size_t n = r.flags.count("n") ? parse_count(r.flags.at("n"), "--n") : deg;
  const auto vord = v_ordering(set, n, p);
  const auto c = expand_in_basis(f, vord);
  Output o;
  o.j["points"] = json::array();
  for (const auto& a : vord.points) o.j["points"].push_back(jrat(a));
  o.j["coefficients"] = json::array();
  for (const auto& ck : c) o.j["coefficients"].push_back(jrat(ck));
  o.j["minValuation"] = jval(min_valuation(c, p));
  o.text = "points: " + join(vord.points, [](const Rational& a) { return a.get_str(); }) +
           "\ncoefficients: " + join(c, [](const Rational& a) { return a.get_str(); }) +
           "\nmin valuation: " + min_valuation(c, p).to_string() + "\n";
  if (!set.is_all_integers()) {
    std::vector<Rational> values;
    for (const auto& a : set.points()) values.push_back(f(a));
    o.j["minValueValuation"] = jval(min_valuation(values, p));
    o.text += "min valuation on E: " + min_valuation(values, p).to_string() + "\n";
  }
  return o;
}

Output cmd_member(const CommandRequest& r) {
  const Polynomial f = parse_polynomial(need(r, "poly"));
  const auto set = parse_set(need(r, "set"));
  const Prime p = prime_flag(r);
  const std::string t = flag_or(r, "target", "V");
  if (t != "V" && t != "m") throw ParseError("--target must be V or m");
  const bool in = int_membership(f, set, p, t == "V" ? MembershipTarget::V : MembershipTarget::MaximalIdeal);
  Output o;
  o.j["member"] = in;
  o.j["target"] = t;
  o.text = std::string("member: ") + yes_no(in) + "\n";
  return o;
}

Output cmd_residues(const CommandRequest& r) {
  const Polynomial f = parse_polynomial(need(r, "poly"));
  const Prime p = prime_flag(r);
  const auto image = residue_image(f, p);
  Output o;
  o.j["residues"] = image;
  o.j["period"] = jint(p.pow(continuity_exponent(f, p)));
  o.text = "residues: {" + join(image, [](long s) { return s; }) + "}\n";
  return o;
}

Output cmd_classify(const CommandRequest& r) {
  const SeqWindow w = parse_window(r);
  const auto cls = classify_window(w);
  const auto gaps = gap_valuations(w.points(), w.prime());
  Output o;
  o.j["class"] = to_string(cls);
  o.j["gapValuations"] = json::array();
  for (const auto& g : gaps) o.j["gapValuations"].push_back(jval(g));
  o.text = "class: " + to_string(cls) + "\ngap valuations: " + join(gaps, [](const Valuation& v) { return v.to_string(); }) + "\n";
  return o;
}

Output cmd_pseudolimit(const CommandRequest& r) {
  const SeqWindow w = parse_window(r);
  const Rational x = parse_rational(need(r, "x"));
  const bool lim = is_pseudo_limit(x, w);
  std::vector<Valuation> vals;
  for (const auto& xn : w.points()) vals.push_back(vp(x - xn, w.prime()));
  Output o;
  o.j["pseudoLimit"] = lim;
  o.j["valuations"] = json::array();
  for (const auto& v : vals) o.j["valuations"].push_back(jval(v));
  o.text = std::string("pseudo-limit: ") + yes_no(lim) + "\nvaluations: " +
           join(vals, [](const Valuation& v) { return v.to_string(); }) + "\n";
  return o;
}

Output cmd_imageclass(const CommandRequest& r) {
  const SeqWindow w = parse_window(r);
  const Polynomial f = parse_polynomial(need(r, "poly"));
  const auto res = image_window_classify(f, w);
  Output o;
  o.j["suffixStart"] = res.suffix_start;
  o.j["class"] = to_string(res.cls);
  o.j["dichotomy"] = to_string(res.dichotomy);
  o.j["image"] = json::array();
  for (const auto& y : res.image) o.j["image"].push_back(jrat(y));
  o.text = "image: " + join(res.image, [](const Rational& a) { return a.get_str(); }) +
           "\nsuffix start: " + std::to_string(res.suffix_start) + "\nclass: " + to_string(res.cls) +
           "\ndichotomy: " + to_string(res.dichotomy) + "\n";
  return o;
}

Output cmd_ideal(const CommandRequest& r) {
  if (r.positionals.empty() || r.positionals[0] != "member") throw ParseError("usage: ideal member --ideal SPEC --poly F");
  const auto ideal = IdealSpec::parse(need(r, "ideal"));
  const Polynomial f = parse_polynomial(need(r, "poly"));
  const auto set = parse_set(flag_or(r, "set", "Z"));
  const auto v = ideal_membership(f, ideal, set);
  Output o;
  o.j["ideal"] = ideal.to_string();
  o.j["verdict"] = v.decided() ? v.to_string() : "unknown";
  if (!v.decided()) o.j["reason"] = to_string(v.reason);
  o.text = "ideal: " + ideal.to_string() + "\nverdict: " + v.to_string() + "\n";
  return o;
}

Output cmd_representative(const CommandRequest& r) {
  const auto ideal = IdealSpec::parse(need(r, "ideal"));
  const Polynomial f = parse_polynomial(need(r, "poly"));
  const auto set = parse_set(flag_or(r, "set", "Z"));
  const auto rep = residue_representative(f, ideal, set);
  Output o;
  o.j["ideal"] = ideal.to_string();
  if (rep.value) {
    o.j["representative"] = *rep.value;
    o.text = "representative: " + std::to_string(*rep.value) + "\n";
  } else {
    o.j["representative"] = "unknown";
    o.j["reason"] = to_string(rep.reason);
    o.text = "representative: unknown(" + to_string(rep.reason) + ")\n";
  }
  return o;
}

Output cmd_frisch(const CommandRequest& r) {
  const Polynomial f = parse_polynomial(need(r, "poly"));
  const Prime p = prime_flag(r);
  const auto fc = frisch_separation_check(f, p);
  Output o;
  o.j["residues"] = fc.residues;
  o.j["product"] = jpoly(fc.product);
  o.j["productInIdeal"] = fc.product_in_ideal;
  o.text = "residues: {" + join(fc.residues, [](long s) { return s; }) + "}\nproduct: " + fc.product.to_string() +
           "\nproduct in Int(Z, pZ_(p)): " + yes_no(fc.product_in_ideal) + "\n";
  return o;
}

json snf_checks(const MatZ& a, const SNFResult& s) {
  json c;
  c["product"] = (s.u * a * s.w) == s.s;
  c["unimodularU"] = abs(determinant(s.u)) == 1;
  c["unimodularW"] = abs(determinant(s.w)) == 1;
  bool diag = true, chain = true;
  const Eigen::Index k = std::min(s.s.rows(), s.s.cols());
  for (Eigen::Index i = 0; i < s.s.rows(); ++i)
    for (Eigen::Index j = 0; j < s.s.cols(); ++j)
      if (i != j && s.s(i, j) != 0) diag = false;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (s.s(i, i) < 0) chain = false;
    if (i + 1 < k) {
      const Integer& x = s.s(i, i);
      const Integer& y = s.s(i + 1, i + 1);
      if (x == 0 ? y != 0 : !mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) chain = false;
    }
  }
  c["diagonal"] = diag;
  c["divisibilityChain"] = chain;
  return c;
}

Output cmd_snf(const CommandRequest& r) {
  const MatZ a = parse_matz(need(r, "matrix"));
  const auto s = snf_with_transforms(a);
  Output o;
  o.j["kind"] = "snf";
  o.j["A"] = jmat(a);
  o.j["U"] = jmat(s.u);
  o.j["S"] = jmat(s.s);
  o.j["W"] = jmat(s.w);
  o.j["checks"] = snf_checks(a, s);
  std::vector<Integer> diag;
  for (Eigen::Index i = 0; i < std::min(s.s.rows(), s.s.cols()); ++i) diag.push_back(s.s(i, i));
  o.text = "S: " + format_matrix(s.s) + "\nU: " + format_matrix(s.u) + "\nW: " + format_matrix(s.w) +
           "\ndiagonal: " + join(diag, [](const Integer& n) { return n.get_str(); }) + "\n";
  return o;
}

json bezout4_json(const std::array<Integer, 4>& in, const StrongBezout& sb) {
  json j;
  j["kind"] = "bezout4";
  j["input"] = {jint(in[0]), jint(in[1]), jint(in[2]), jint(in[3])};
  j["alpha"] = jint(sb.alpha);
  j["beta"] = jint(sb.beta);
  j["gamma"] = jint(sb.gamma);
  j["delta"] = jint(sb.delta);
  j["linearIdentity"] = in[0] * sb.alpha + in[1] * sb.beta + in[2] * sb.gamma + in[3] * sb.delta == 1;
  j["productIdentity"] = sb.alpha * sb.delta == sb.beta * sb.gamma;
  return j;
}

Output cmd_bezout4(const CommandRequest& r) {
  if (r.positionals.size() != 4) throw ParseError("usage: bezout4 A B C D");
  std::array<Integer, 4> in;
  for (std::size_t i = 0; i < 4; ++i) in[i] = parse_integer(r.positionals[i]);
  const auto sb = strong_bezout_z(in[0], in[1], in[2], in[3]);
  Output o;
  o.j = bezout4_json(in, sb);
  std::ostringstream os;
  os << "alpha beta gamma delta: " << sb.alpha << " " << sb.beta << " " << sb.gamma << " " << sb.delta << "\n"
     << in[0] << "*" << sb.alpha << " + " << in[1] << "*" << sb.beta << " + " << in[2] << "*" << sb.gamma << " + "
     << in[3] << "*" << sb.delta << " = 1: " << o.j["linearIdentity"].dump() << "\n"
     << "alpha*delta = beta*gamma: " << o.j["productIdentity"].dump() << "\n";
  o.text = os.str();
  return o;
}

std::vector<Polynomial> parse_entries(const std::string& s) {
  std::vector<Polynomial> out;
  for (const auto& part : split(s, ';')) out.push_back(parse_polynomial(part));
  return out;
}

Output cmd_content(const CommandRequest& r) {
  const auto entries = parse_entries(need(r, "entries"));
  const auto v = unit_content_decide(entries);
  return {content_json(entries, v), content_text(v)};
}

Output cmd_ucs(const CommandRequest& r) {
  const MatIP b = parse_matip(need(r, "B"));
  const MatIP c = r.flags.count("C") ? parse_matip(r.flags.at("C")) : make2<Polynomial>(1, 0, 0, 1);
  const auto rep = ucs_pair_check(b, c);
  Output o;
  o.j["B"] = jmat(b);
  json q;
  q["aNonunitInteger"] = rep.a_nonunit_integer;
  q["acdUnitContent"] = rep.acd_unit;
  q["detBNotInteger"] = rep.det_b_not_integer;
  q["qualifies"] = rep.qualifies();
  o.j["qualification"] = q;
  std::ostringstream os;
  os << "det B: " << det2(b) << "\n"
     << "a in Z \\ {0,1,-1}: " << yes_no(rep.a_nonunit_integer) << "\n"
     << "cont(a,c,d) unit: " << yes_no(rep.acd_unit) << "\n"
     << "det B not in Z: " << yes_no(rep.det_b_not_integer) << "\n"
     << "qualifies: " << yes_no(rep.qualifies()) << "\n";
  if (r.flags.count("C")) {
    o.j["C"] = jmat(c);
    o.j["BC"] = jmat(rep.bc);
    o.j["contentUnit"] = rep.content_unit;
    o.j["detZero"] = rep.det_zero;
    os << "BC: " << format_matrix(rep.bc) << "\ncont(BC) unit: " << yes_no(rep.content_unit)
       << "\ndet(BC) = 0: " << yes_no(rep.det_zero) << "\n";
  }
  if (rep.known_suitable_c) {
    o.j["knownSuitableC"] = jmat(*rep.known_suitable_c);
    os << "known suitable C: " << format_matrix(*rep.known_suitable_c) << "\n";
  }
  o.text = os.str();
  return o;
}

Output cmd_tracenorm(const CommandRequest& r) {
  const MatIP b = parse_matip(need(r, "B"));
  const MatIP c = parse_matip(need(r, "C"));
  require_int_valued(b);
  require_int_valued(c);
  Combination<Polynomial> comb;
  std::string source;
  if (r.flags.count("comb")) {
    auto parts = split(r.flags.at("comb"), ',');
    if (parts.size() != 4) throw ParseError("--comb needs four comma-separated polynomials r,s,t,u");
    for (std::size_t i = 0; i < 4; ++i) comb[i] = parse_polynomial(parts[i]);
    source = "supplied";
  } else if (auto bz = to_integer_matrix(b), cz = to_integer_matrix(c); bz && cz) {
    const MatZ bcz = (*bz) * (*cz);
    const auto ic = integer_trace_combination(bcz);
    for (std::size_t i = 0; i < 4; ++i) comb[i] = Polynomial(ic[i]);
    source = "ext-gcd";
  } else {
    const int deg = static_cast<int>(parse_long(flag_or(r, "search-deg", "2"), "--search-deg"));
    const int height = static_cast<int>(parse_long(flag_or(r, "search-height", "10"), "--search-height"));
    const auto budget = parse_count(flag_or(r, "budget", "200000"), "--budget");
    auto found = search_trace_combination(b, c, deg, height, budget);
    if (!found) throw DomainError("no trace combination found within the search bounds");
    comb = *found;
    source = "search";
  }
  const MatIP c0 = trace_normalize(b, c, comb);
  const MatIP bc0 = b * c0;
  const auto idem = idempotent_check(bc0);
  Output o;
  o.j["combination"] = {jpoly(comb[0]), jpoly(comb[1]), jpoly(comb[2]), jpoly(comb[3])};
  o.j["combinationSource"] = source;
  o.j["C0"] = jmat(c0);
  o.j["BC0"] = jmat(bc0);
  o.j["detC0Zero"] = det2(c0).is_zero();
  o.j["traceOne"] = trace(bc0) == Polynomial(1);
  o.j["idempotent"] = idem.idempotent;
  o.j["nontrivial"] = idem.nontrivial;
  o.text = "combination (" + source + "): " + join(comb, [](const Polynomial& f) { return f.to_string(); }) +
           "\nC0: " + format_matrix(c0) + "\nBC0: " + format_matrix(bc0) + "\nidempotent: " + yes_no(idem.idempotent) +
           "\nnontrivial: " + yes_no(idem.nontrivial) + "\n";
  return o;
}

Output cmd_idem(const CommandRequest& r) {
  const MatIP m = parse_matip(need(r, "matrix"));
  const auto rep = idempotent_check(m);
  Output o;
  o.j["idempotent"] = rep.idempotent;
  o.j["nontrivial"] = rep.nontrivial;
  o.text = "idempotent: " + yes_no(rep.idempotent) + "\nnontrivial: " + yes_no(rep.nontrivial) + "\n";
  return o;
}

Output cmd_example(const CommandRequest& r) {
  if (r.positionals.empty()) throw ParseError("usage: example verify | example search [...]");
  const std::string& mode = r.positionals[0];
  if (mode == "verify") {
    const auto rep = verify_reference_example();
    Output o;
    o.j = certificate_json(rep.certificate);
    o.j["discriminant"] = jpoly(rep.discriminant);
    o.j["referenceG"] = jpoly(rep.reference_g);
    o.j["recomputedG"] = jpoly(rep.recomputed_g);
    o.j["matchesReference"] = rep.matches_reference;
    o.j["mismatchedDegrees"] = rep.mismatched_degrees;
    o.j["derivedX3Coefficient"] = jrat(rep.derived_x3_coefficient);
    json so = json::object();
    for (const auto& [sign, outcome] : rep.sign_outcomes) so[sign > 0 ? "+1" : "-1"] = outcome;
    o.j["signOutcomes"] = so;
    std::ostringstream os;
    os << certificate_text(rep.certificate) << "discriminant: " << rep.discriminant << "\n"
       << "recomputed g: " << rep.recomputed_g << "\n"
       << "reference g matches except X^3: " << yes_no(rep.matches_reference) << "\n"
       << "derived X^3 coefficient: " << rep.derived_x3_coefficient.get_str() << "\n";
    for (const auto& [sign, outcome] : rep.sign_outcomes) os << "sign " << (sign > 0 ? "+1" : "-1") << ": " << outcome << "\n";
    o.text = os.str();
    return o;
  }
  if (mode == "search") {
    const int deg = static_cast<int>(parse_long(flag_or(r, "max-deg", "1"), "--max-deg"));
    const int height = static_cast<int>(parse_long(flag_or(r, "max-height", "3"), "--max-height"));
    const auto budget = parse_count(flag_or(r, "budget", "100000"), "--budget");
    const auto certs = bounded_search(deg, height, budget);
    Output o;
    o.j["kind"] = "example-search";
    o.j["certificates"] = json::array();
    std::ostringstream os;
    os << "found: " << certs.size() << "\n";
    for (const auto& c : certs) {
      o.j["certificates"].push_back(certificate_json(c));
      os << "beta = " << c.beta << ", gamma = " << c.gamma << ", g = " << c.g << ", sign "
         << (c.sign > 0 ? "+1" : "-1") << "\n";
    }
    o.text = os.str();
    return o;
  }
  throw ParseError("unknown example mode '" + mode + "'");
}

// verify --stdin: re-check a JSON document produced by content, example, bezout4 or snf.
json verify_document(const json& doc) {
  const std::string kind = doc.value("kind", "");
  json out;
  out["kind"] = "verify";
  out["of"] = kind;
  if (kind == "content") {
    std::vector<Polynomial> entries;
    for (const auto& e : doc.at("entries")) entries.push_back(json_poly(e));
    const auto verdict = content_from_json(doc);
    const std::string err = verify_content_verdict(entries, verdict);
    out["verdict"] = verdict.is_unit() ? "unit" : "non-unit";
    out["ok"] = err.empty();
    if (!err.empty()) out["failure"] = err;
  } else if (kind == "example-certificate") {
    const Recovery rec = recover_solution(json_poly(doc.at("beta")), json_poly(doc.at("gamma")),
                                          json_poly(doc.at("g")), doc.at("sign").get<int>());
    json checks = json::object();
    if (const auto* cert = std::get_if<ExampleCertificate>(&rec)) {
      for (const auto& [name, ok] : cert->checks) checks[name] = ok;
      out["ok"] = cert->valid() && checks == doc.at("checks");
    } else {
      const auto& fail = std::get<RecoveryFailure>(rec);
      out["failure"] = fail.check + ": " + fail.detail;
      out["ok"] = false;
    }
    out["checks"] = checks;
  } else if (kind == "bezout4") {
    std::array<Integer, 4> in;
    for (std::size_t i = 0; i < 4; ++i) in[i] = json_integer(doc.at("input").at(i));
    const StrongBezout sb{json_integer(doc.at("alpha")), json_integer(doc.at("beta")), json_integer(doc.at("gamma")),
                          json_integer(doc.at("delta"))};
    const json re = bezout4_json(in, sb);
    out["linearIdentity"] = re["linearIdentity"];
    out["productIdentity"] = re["productIdentity"];
    out["ok"] = re["linearIdentity"].get<bool>() && re["productIdentity"].get<bool>();
  } else if (kind == "snf") {
    auto parse = [](const std::string& s) { return parse_integer(s); };
    const MatZ a = json_mat<Integer>(doc.at("A"), parse);
    const SNFResult s{json_mat<Integer>(doc.at("U"), parse), json_mat<Integer>(doc.at("S"), parse),
                      json_mat<Integer>(doc.at("W"), parse)};
    const json c = snf_checks(a, s);
    out["checks"] = c;
    bool ok = true;
    for (const auto& [k, v] : c.items()) ok = ok && v.get<bool>();
    out["ok"] = ok;
  } else {
    throw ParseError("verify: unsupported document kind '" + kind + "'");
  }
  return out;
}


using Handler = std::function<Output(const CommandRequest&)>;

struct Entry {
  CommandInfo info;
  Handler handler;
};

Output cmd_verify(const CommandRequest& r) {
  json doc;
  try {
    doc = json::parse(r.stdin_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("verify: invalid JSON: ") + e.what());
  }
  Output o;
  try {
    o.j = verify_document(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("verify: malformed document: ") + e.what());
  }
  o.text = "verified " + o.j["of"].get<std::string>() + ": " + (o.j["ok"].get<bool>() ? "ok" : "FAILED") + "\n";
  if (o.j.contains("failure")) o.text += "failure: " + o.j["failure"].get<std::string>() + "\n";
  return o;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"vorder", "greedy v-ordering of E and its valuations w", {"set", "p", "n", "tie"}, {}, 0, 0}, cmd_vorder},
      {{"basis", "regular basis polynomial f_k", {"set", "p", "k"}, {}, 0, 0}, cmd_basis},
      {{"expand", "coefficients of f in the regular basis", {"poly", "set", "p", "n"}, {}, 0, 0}, cmd_expand},
      {{"member", "membership in Int(E, V) or Int(E, m)", {"poly", "set", "p", "target"}, {}, 0, 0}, cmd_member},
      {{"residues", "residue image of f on Z modulo p", {"poly", "p"}, {}, 0, 0}, cmd_residues},
      {{"classify", "pseudo-monotone class of a finite window", {"p", "seq"}, {}, 0, 0}, cmd_classify},
      {{"pseudolimit", "pseudo-limit test for a pseudo-convergent window", {"p", "seq", "x"}, {}, 0, 0},
       cmd_pseudolimit},
      {{"imageclass", "class of the image window f(x_n)", {"p", "seq", "poly"}, {}, 0, 0}, cmd_imageclass},
      {{"ideal", "membership in a prime ideal of Int(E, V)", {"ideal", "poly", "set"}, {}, 1, 1}, cmd_ideal},
      {{"representative", "residue representative modulo a maximal ideal", {"ideal", "poly", "set"}, {}, 0, 0},
       cmd_representative},
      {{"frisch", "separation product over the residue image", {"poly", "p"}, {}, 0, 0}, cmd_frisch},
      {{"snf", "Smith normal form with transforms", {"matrix"}, {}, 0, 0}, cmd_snf},
      {{"bezout4", "strong Bezout relation over Z", {}, {}, 4, 4}, cmd_bezout4},
      {{"content", "unit-content decision over Int(Z)", {"entries"}, {}, 0, 0}, cmd_content},
      {{"ucs", "side conditions and BC checks for a 2x2 matrix", {"B", "C"}, {}, 0, 0}, cmd_ucs},
      {{"tracenorm", "normalize C so that BC0 is a trace-one idempotent",
        {"B", "C", "comb", "search-deg", "search-height", "budget"}, {}, 0, 0},
       cmd_tracenorm},
      {{"idem", "idempotence of a polynomial matrix", {"matrix"}, {}, 0, 0}, cmd_idem},
      {{"example", "verify the 2x2 example or search for more", {"max-deg", "max-height", "budget"}, {}, 1, 1},
       cmd_example},
      {{"verify", "re-check a JSON result read from stdin", {}, {"stdin"}, 0, 0}, cmd_verify},
  };
  return entries;
}

CommandResult failure(const CommandRequest& r, int code, const std::string& kind, const std::string& message) {
  if (r.json) {
    json j{{"error", {{"kind", kind}, {"message", message}}}};
    return {code, j.dump(2) + "\n"};
  }
  return {code, "error: " + message + "\n"};
}

}  // namespace

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> infos = [] {
    std::vector<CommandInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CommandResult run(const CommandRequest& request) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Entry& e) { return e.info.name == request.subcommand; });
  if (it == reg.end()) return failure(request, 2, "usage", "unknown subcommand '" + request.subcommand + "'");
  const CommandInfo& info = it->info;
  for (const auto& [key, value] : request.flags) {
    const bool known = std::find(info.flags.begin(), info.flags.end(), key) != info.flags.end() ||
                       std::find(info.bool_flags.begin(), info.bool_flags.end(), key) != info.bool_flags.end();
    if (!known) return failure(request, 2, "usage", "unknown flag --" + key + " for " + info.name);
  }
  if (request.positionals.size() < info.min_positionals || request.positionals.size() > info.max_positionals)
    return failure(request, 2, "usage", "wrong number of positional arguments for " + info.name);
  try {
    Output o = it->handler(request);
    if (!request.json) return {0, o.text};
    if (!o.j.contains("kind")) o.j["kind"] = info.name;
    return {0, o.j.dump(2) + "\n"};
  } catch (const ParseError& e) {
    return failure(request, 2, "parse", e.what());
  } catch (const DomainError& e) {
    return failure(request, 1, "domain", e.what());
  }
}

}  // namespace ivp::cli
