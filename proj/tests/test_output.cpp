#include <doctest.h>

#include "wres/output.hpp"

using namespace wres;

TEST_CASE("term keys sort factors by name") {
  Monomial m = {{JetVar::f(), -4}, {JetVar::f().withDeriv(1), 2}};
  CHECK(termKey(m) == "f^-4 f_;1^2");
  CHECK(termKey({{JetVar::riemRaw(1, 2, 1, 2), 1}}) == "R[1,2,1,2]");
  CHECK(termKey({}) == "1");
  CHECK(termKey({{JetVar::scal(), 1}, {JetVar::xNormSq(), -2}}) == "s |X|2^-2");
}

TEST_CASE("density entries list reference keys with zero coefficients") {
  Density d{2, Expr::var(JetVar::f(), -2) * Expr::var(JetVar::scal()) * Coeff::frac(-1, 12)};
  Monomial extra = {{JetVar::f(), -4}, {JetVar::f().withDeriv(1), 2}};
  auto entries = densityEntries(d, {extra}, false);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].termKey == "f^-2 s");
  CHECK(entries[0].coefficient == Rational(-1, 12));
  CHECK(entries[1].coefficient == 0);
  CHECK(entries[1].trId == "2^m");

  // 2^2 Vol(S^3) = 2^2 * 2 pi^2
  auto evaluated = densityEntries(d, {}, true);
  CHECK(evaluated[0].coefficient == Rational(-2, 3));
  CHECK(evaluated[0].piPower == 2);
  CHECK_FALSE(evaluated[0].volSphere);
}

TEST_CASE("documents round-trip byte for byte") {
  OutputDocument doc;
  doc.command = "density";
  doc.args = {"density", "--triple", "type1"};
  Density d{3, Expr::var(JetVar::f(), -4) * Expr::var(JetVar::scal()) * Coeff::frac(-1, 6)};
  doc.results = densityEntries(d, {}, false);
  VerificationReport r;
  r.target = Target::Thm12;
  r.m = 3;
  r.status = Status::Mismatch;
  r.oracle = OracleStatus::Agrees;
  r.detail = "difference: \"quoted\"";
  doc.reports.push_back(toEntry(r));
  const std::string first = toJson(doc).dump(2);
  OutputDocument back = documentFromJson(nlohmann::ordered_json::parse(first));
  CHECK(back == doc);
  CHECK(toJson(back).dump(2) == first);
  CHECK(doc.reports[0].verdict == "erratum");
}

TEST_CASE("verdicts") {
  CHECK(verdictFor(Status::ExactMatch, OracleStatus::NotApplicable) == "match");
  CHECK(verdictFor(Status::Mismatch, OracleStatus::Agrees) == "erratum");
  CHECK(verdictFor(Status::Mismatch, OracleStatus::Disagrees) == "unadjudicated");
  CHECK(verdictFor(Status::Mismatch, OracleStatus::NotApplicable) == "unadjudicated");
}

TEST_CASE("LaTeX fragments are balanced") {
  Density d{3, Expr::var(JetVar::scal()) * Coeff::frac(-1, 6)};
  const std::string tex = densityLatex(d, false);
  CHECK(tex.find("-\\frac{1}{6}") != std::string::npos);
  CHECK(tex.find("2^{3}") != std::string::npos);
  int depth = 0;
  for (char c : tex) {
    depth += c == '{' ? 1 : c == '}' ? -1 : 0;
    CHECK(depth >= 0);
  }
  CHECK(depth == 0);
  CHECK(tex.find("\\documentclass") == std::string::npos);
  Monomial m = {{JetVar::f().withDeriv(1), 2}};
  CHECK(monomialLatex(m) == "(f_{;1})^{2}");
}
