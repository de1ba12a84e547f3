#include "wres/output.hpp"

#include <algorithm>
#include <map>

#include "wres/errors.hpp"

namespace wres {

using nlohmann::ordered_json;

std::string termKey(const Monomial& m) {
  if (m.empty()) return "1";
  std::vector<std::string> factors;
  for (const auto& [v, e] : m) factors.push_back(e == 1 ? v.name() : v.name() + "^" + std::to_string(e));
  std::sort(factors.begin(), factors.end());
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : " ") + f;
  return out;
}

namespace {

Rational factorial(int k) {
  Rational r = 1;
  for (int j = 2; j <= k; ++j) r *= j;
  return r;
}

/// 2^m * Vol(S^{2m-1}) / pi^m = 2^{m+1} / (m-1)!
Rational prefactorWithoutPi(int m) {
  Rational two = 1;
  for (int j = 0; j <= m; ++j) two *= 2;
  return two / factorial(m - 1);
}

const Monomial& scalarsOf(const Term& t) {
  if (!t.key.xi.empty() || t.key.xiNormPow != 0 || t.key.cliff.mask() != 0) {
    throw NonHomogeneous("density body carries xi or Clifford factors");
  }
  return t.key.scalars;
}

std::string indexList(const std::vector<int>& idx) {
  bool wide = std::any_of(idx.begin(), idx.end(), [](int i) { return i > 9; });
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k && wide) s += ",";
    s += std::to_string(idx[k]);
  }
  return s;
}

std::string derivSuffix(const JetVar& v) {
  std::vector<int> d = v.deriv();
  return d.empty() ? "" : "_{;" + indexList(d) + "}";
}

std::string fracLatex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string power(const std::string& base, int e, bool wrap) {
  if (e == 1) return base;
  return (wrap ? "(" + base + ")" : base) + "^{" + std::to_string(e) + "}";
}

}  // namespace

std::vector<Monomial> monomialsOf(const Expr& e) {
  std::vector<Monomial> out;
  for (const Term& t : e.terms()) out.push_back(scalarsOf(t));
  return out;
}

std::vector<DensityEntry> densityEntries(const Density& d, const std::vector<Monomial>& reference, bool evalPrefactors) {
  std::map<std::string, Rational> coeffs;
  for (const Monomial& mono : reference) coeffs.emplace(termKey(mono), 0);
  for (const Term& t : d.body.terms()) {
    if (!t.coeff.isReal()) throw ImaginaryResidue("density coefficient is not real");
    coeffs[termKey(scalarsOf(t))] += t.coeff.re();
  }
  std::vector<DensityEntry> out;
  const Rational scale = evalPrefactors ? prefactorWithoutPi(d.m) : Rational(1);
  for (auto& [key, c] : coeffs) {
    DensityEntry e;
    e.termKey = key;
    e.coefficient = c * scale;
    e.coefficient.canonicalize();
    e.volSphere = !evalPrefactors;
    e.trId = evalPrefactors ? "evaluated" : "2^m";
    e.piPower = evalPrefactors ? d.m : 0;
    out.push_back(e);
  }
  return out;
}

std::string verdictFor(Status s, OracleStatus o) {
  if (s == Status::ExactMatch) return "match";
  return o == OracleStatus::Agrees ? "erratum" : "unadjudicated";
}

ReportEntry toEntry(const VerificationReport& r) {
  return ReportEntry{toString(r.target), r.m,      toString(r.status), toString(r.oracle),
                     verdictFor(r.status, r.oracle), r.detail};
}

ordered_json toJson(const OutputDocument& doc) {
  ordered_json j;
  j["schemaVersion"] = doc.schemaVersion;
  j["command"] = {{"name", doc.command}, {"args", doc.args}};
  j["results"] = ordered_json::array();
  for (const auto& e : doc.results) {
    ordered_json pre = {{"volSphere", e.volSphere}, {"trId", e.trId}};
    if (e.piPower != 0) pre["piPower"] = e.piPower;
    j["results"].push_back({{"termKey", e.termKey}, {"coefficient", toString(e.coefficient)}, {"prefactor", pre}});
  }
  j["reports"] = ordered_json::array();
  for (const auto& r : doc.reports) {
    j["reports"].push_back({{"target", r.target},
                            {"m", r.m},
                            {"status", r.status},
                            {"oracle", r.oracle},
                            {"verdict", r.verdict},
                            {"detail", r.detail}});
  }
  if (!doc.extra.empty()) j["extra"] = doc.extra;
  return j;
}

OutputDocument documentFromJson(const ordered_json& j) {
  OutputDocument doc;
  doc.schemaVersion = j.at("schemaVersion").get<std::string>();
  doc.command = j.at("command").at("name").get<std::string>();
  doc.args = j.at("command").at("args").get<std::vector<std::string>>();
  for (const auto& r : j.at("results")) {
    DensityEntry e;
    e.termKey = r.at("termKey").get<std::string>();
    e.coefficient = parseRational(r.at("coefficient").get<std::string>());
    const auto& pre = r.at("prefactor");
    e.volSphere = pre.at("volSphere").get<bool>();
    e.trId = pre.at("trId").get<std::string>();
    e.piPower = pre.value("piPower", 0);
    doc.results.push_back(e);
  }
  for (const auto& r : j.at("reports")) {
    doc.reports.push_back(ReportEntry{r.at("target").get<std::string>(), r.at("m").get<int>(),
                                      r.at("status").get<std::string>(), r.at("oracle").get<std::string>(),
                                      r.at("verdict").get<std::string>(), r.at("detail").get<std::string>()});
  }
  if (j.contains("extra")) doc.extra = j.at("extra");
  return doc;
}

std::string monomialLatex(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m) {
    std::string f;
    const std::string d = derivSuffix(v);
    switch (v.kind()) {
      case JetKind::F: f = power("f" + d, e, !d.empty()); break;
      case JetKind::X: f = power("X^{" + std::to_string(v.index(0)) + "}" + d, e, true); break;
      case JetKind::XNormSq:
        f = d.empty() ? "|X|^{" + std::to_string(2 * e) + "}" : power("(|X|^{2})" + d, e, true);
        break;
      case JetKind::Scal: f = power("s" + d, e, !d.empty()); break;
      case JetKind::MetricInv:
        f = power("g^{" + indexList({v.index(0), v.index(1)}) + "}" + d, e, true);
        break;
      case JetKind::Conn:
        f = power("\\omega_{" + std::to_string(v.index(0)) + "," + indexList({v.index(1), v.index(2)}) + "}" + d, e,
                  true);
        break;
      case JetKind::Gamma: f = power("\\Gamma^{" + std::to_string(v.index(0)) + "}" + d, e, true); break;
      case JetKind::Riem:
        f = power("R_{" + indexList({v.index(0), v.index(1), v.index(2), v.index(3)}) + "}" + d, e, true);
        break;
      case JetKind::TrId: f = power("\\mathrm{tr}[\\mathrm{id}]", e, true); break;
      case JetKind::Aux: f = power("a_{" + std::to_string(v.index(0)) + "}", e, false); break;
    }
    out += (out.empty() ? "" : " ") + f;
  }
  return out;
}

std::string densityLatex(const Density& d, bool evalPrefactors) {
  std::string body;
  for (const Term& t : d.body.terms()) {
    if (!t.coeff.isReal()) throw ImaginaryResidue("density coefficient is not real");
    const Monomial& mono = scalarsOf(t);
    Rational c = t.coeff.re();
    if (evalPrefactors) c *= prefactorWithoutPi(d.m);
    c.canonicalize();
    const bool negative = sgn(c) < 0;
    const Rational a = abs(c);
    std::string term = (a == 1 && !mono.empty()) ? "" : fracLatex(a);
    if (!mono.empty()) term += (term.empty() ? "" : " ") + monomialLatex(mono);
    if (body.empty()) {
      body = (negative ? "-" : "") + term;
    } else {
      body += (negative ? " - " : " + ") + term;
    }
  }
  if (body.empty()) body = "0";
  const std::string m = std::to_string(d.m);
  const std::string prefix = evalPrefactors ? "\\pi^{" + m + "}"
                                            : "2^{" + m + "}\\,\\mathrm{Vol}(S^{" + std::to_string(2 * d.m - 1) + "})";
  return prefix + "\\left(" + body + "\\right)";
}

}  // namespace wres
