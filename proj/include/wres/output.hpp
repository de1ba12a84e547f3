#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wres/actions.hpp"

namespace wres {

/// Canonical string for a jet monomial: factors "name^e" sorted by name, the
/// exponent omitted when it is 1, separated by spaces; "1" for the empty
/// monomial. Example: "f^-4 f_;1^2".
std::string termKey(const Monomial& m);

struct DensityEntry {
  std::string termKey;
  Rational coefficient;
  bool volSphere = true;  // the coefficient still multiplies Vol(S^{2m-1})
  std::string trId;       // "2^m" while tr[id] is a formal prefactor, else "evaluated"
  int piPower = 0;        // with an evaluated sphere volume, the coefficient multiplies pi^piPower

  friend bool operator==(const DensityEntry&, const DensityEntry&) = default;
};

/// Density coefficients per termKey, in key order. Every reference monomial is
/// listed, with coefficient 0 when the density lacks it. With evaluated
/// prefactors the coefficient absorbs 2^m and 2/(m-1)!, leaving pi^m.
std::vector<DensityEntry> densityEntries(const Density& d, const std::vector<Monomial>& reference, bool evalPrefactors);

/// Scalar monomials of an x0-evaluated expression.
std::vector<Monomial> monomialsOf(const Expr& e);

/// Serialized verification outcome. verdict is "match", "erratum" (engine
/// differs from the printed statement but agrees with its oracle) or
/// "unadjudicated".
struct ReportEntry {
  std::string target;
  int m = 0;
  std::string status;
  std::string oracle;
  std::string verdict;
  std::string detail;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

ReportEntry toEntry(const VerificationReport& r);
std::string verdictFor(Status s, OracleStatus o);

struct OutputDocument {
  std::string schemaVersion = "1";
  std::string command;
  std::vector<std::string> args;
  std::vector<DensityEntry> results;
  std::vector<ReportEntry> reports;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

nlohmann::ordered_json toJson(const OutputDocument& doc);
OutputDocument documentFromJson(const nlohmann::ordered_json& j);

/// Math-mode LaTeX fragment (no preamble) for a density.
std::string densityLatex(const Density& d, bool evalPrefactors);
/// LaTeX for a single jet monomial.
std::string monomialLatex(const Monomial& m);

}  // namespace wres
