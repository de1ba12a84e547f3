#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "wres/actions.hpp"
#include "wres/errors.hpp"
#include "wres/output.hpp"

using namespace wres;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kFlagError = 2;
constexpr int kContextError = 3;
constexpr int kPipelineError = 4;

struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parseIntList(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw FlagError("not an integer list: " + csv);
    }
  }
  return out;
}

JetContext loadContext(const std::string& source, std::optional<int> m) {
  if (source == "generic") {
    if (!m) throw FlagError("--m is required with --context generic");
    return JetContext::symbolic(*m);
  }
  std::ifstream in(source);
  if (!in) throw ContextError("cannot open context file " + source);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ContextError(std::string("context file is not valid JSON: ") + e.what());
  }
  JetContext ctx = JetContext::fromJson(doc);
  if (m && *m != ctx.m()) throw FlagError("--m disagrees with the m of the context file");
  return ctx;
}

Expr printedDensity(TripleKind kind, const JetContext& ctx) {
  switch (kind) {
    case TripleKind::TypeI: return printed::fTripleDensity(ctx);
    case TripleKind::TypeII: return printed::xTripleDensity(ctx);
    case TripleKind::Unperturbed: return printed::unperturbedDensity(ctx);
  }
  return {};
}

/// Monomials the printed density is built from, so that vanishing coefficients
/// still appear in the output.
std::vector<Monomial> referenceMonomials(TripleKind kind, const JetContext& ctx) {
  std::vector<Monomial> out = monomialsOf(collectScalarCurvature(canonicalAtX0(printedDensity(kind, ctx), ctx), ctx.n()));
  if (kind == TripleKind::TypeI && !ctx.fValues()) {
    const int m = ctx.m();
    const JetVar f = JetVar::f();
    for (int j = 1; j <= ctx.n(); ++j) {
      out.push_back(Monomial{{f, -2 * m}, {f.withDeriv(j), 2}});
      out.push_back(Monomial{{f, 1 - 2 * m}, {f.withDeriv(j).withDeriv(j), 1}});
    }
    out.push_back(Monomial{{f, 2 - 2 * m}, {JetVar::scal(), 1}});
  }
  return out;
}

struct DensityFlags {
  std::string triple;
  std::optional<int> m;
  std::string context = "generic";
  std::string format = "json";
  bool evalVol = false;
};

int runDensity(const DensityFlags& fl, OutputDocument& doc) {
  if (fl.m && *fl.m < 2) throw FlagError("--m must be at least 2");
  const TripleKind kind = parseTripleKind(fl.triple);
  JetContext ctx = loadContext(fl.context, fl.m);
  Density d = wresDensity(TripleSpec{kind, ctx});
  if (fl.format == "latex") {
    std::cout << densityLatex(d, fl.evalVol) << "\n";
    return kOk;
  }
  doc.results = densityEntries(d, referenceMonomials(kind, ctx), fl.evalVol);
  std::cout << toJson(doc).dump(2) << "\n";
  return kOk;
}

struct VerifyFlags {
  std::string suite = "all";
  std::string mList;
  std::uint64_t seed = 0;
};

std::vector<Target> suiteTargets(const std::string& suite) {
  if (suite == "lemmas") {
    return {Target::Lemma34, Target::Lemma35, Target::Lemma39, Target::Lemma310, Target::Lemma311, Target::Lemma312};
  }
  if (suite == "theorems") {
    return {Target::Eq20, Target::Eq26, Target::Thm11, Target::Thm12, Target::RemarkKKW, Target::RemarkM2};
  }
  return {};
}

ReportEntry errorEntry(const std::string& target, int m, const std::exception& e) {
  return ReportEntry{target, m, "Error", toString(OracleStatus::NotApplicable), "unadjudicated", e.what()};
}

/// Power formula against iterated composition, and sphere moments against Monte Carlo.
std::vector<ReportEntry> oracleChecks(const std::vector<int>& ms, std::uint64_t seed) {
  std::vector<ReportEntry> out;
  for (int m : ms) {
    for (TripleKind kind : {TripleKind::TypeI, TripleKind::TypeII}) {
      const std::string name = "PowerOracle:" + toString(kind);
      try {
        GradedSymbol inv = invert(buildTripleSymbol(kind, 2 * m, Truncation::BasePoint), 2 * m);
        const bool ok = powerSymbolNeg(inv, m, 2 * m) == iteratedCompositionPower(inv, m, 2 * m);
        out.push_back(ReportEntry{name, m, ok ? "ExactMatch" : "Mismatch", "NotApplicable", ok ? "match" : "unadjudicated",
                                  ok ? "" : "power formula differs from iterated composition"});
      } catch (const std::exception& e) {
        out.push_back(errorEntry(name, m, e));
      }
    }
  }
  const std::vector<std::vector<int>> monomials = {{1, 1}, {1, 2}, {1, 1, 1, 1}, {1, 1, 2, 2}, {1, 2, 3, 3}};
  std::uint64_t stream = seed;
  for (int n : {4, 6}) {
    for (const auto& idx : monomials) {
      std::string name = "MomentMC:n=" + std::to_string(n) + ":";
      for (std::size_t k = 0; k < idx.size(); ++k) name += (k ? "," : "") + std::to_string(idx[k]);
      const Rational exact = sphereMoment(idx, n);
      const MonteCarloEstimate est = mcMomentOracle(idx, n, 1000000, stream++);
      const double z = std::abs(est.mean - exact.get_d());
      const bool ok = z <= 3 * est.stderror || (z == 0 && est.stderror == 0);
      std::ostringstream detail;
      detail << "exact " << toString(exact) << ", estimate " << est.mean << " +- " << est.stderror;
      out.push_back(ReportEntry{name, n / 2, ok ? "ExactMatch" : "Mismatch", "NotApplicable", ok ? "match" : "unadjudicated",
                                detail.str()});
    }
  }
  return out;
}

int runVerify(const VerifyFlags& fl, OutputDocument& doc) {
  std::vector<int> ms = parseIntList(fl.mList);
  if (ms.empty()) ms = {2, 3, 4};
  for (int m : ms) {
    if (m < 2) throw FlagError("every m in --m-list must be at least 2");
  }
  std::vector<Target> targets;
  if (fl.suite == "all" || fl.suite == "lemmas") {
    auto t = suiteTargets("lemmas");
    targets.insert(targets.end(), t.begin(), t.end());
  }
  if (fl.suite == "all" || fl.suite == "theorems") {
    auto t = suiteTargets("theorems");
    targets.insert(targets.end(), t.begin(), t.end());
  }
  for (Target t : targets) {
    for (int m : ms) {
      if (t == Target::RemarkM2 && m != 2) continue;
      try {
        doc.reports.push_back(toEntry(compareWithPaper(t, JetContext::symbolic(m))));
      } catch (const std::exception& e) {
        doc.reports.push_back(errorEntry(toString(t), m, e));
      }
    }
  }
  if (fl.suite == "all" || fl.suite == "oracles") {
    auto checks = oracleChecks(ms, fl.seed);
    doc.reports.insert(doc.reports.end(), checks.begin(), checks.end());
  }
  std::cout << toJson(doc).dump(2) << "\n";
  bool errors = false;
  bool failed = false;
  for (const auto& r : doc.reports) {
    errors = errors || r.status == "Error";
    failed = failed || r.verdict == "unadjudicated";
  }
  if (errors) return kPipelineError;
  return failed ? kVerifyFailed : kOk;
}

struct MomentFlags {
  std::string indices;
  int n = 0;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
};

int runMoments(const MomentFlags& fl, OutputDocument& doc) {
  if (fl.n < 4 || fl.n % 2 != 0) throw FlagError("--n must be an even integer >= 4");
  std::vector<int> idx = parseIntList(fl.indices);
  for (int i : idx) {
    if (i < 1 || i > fl.n) throw FlagError("index out of range 1..n: " + std::to_string(i));
  }
  if (fl.samples < 2) throw FlagError("--mc-samples must be at least 2");
  const Rational exact = sphereMoment(idx, fl.n);
  const MonteCarloEstimate est = mcMomentOracle(idx, fl.n, fl.samples, fl.seed);
  doc.extra = {{"exact", toString(exact)},
               {"estimate", est.mean},
               {"stderror", est.stderror},
               {"withinThreeSigma", std::abs(est.mean - exact.get_d()) <= 3 * est.stderror}};
  std::cout << toJson(doc).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residue densities of perturbed squared Dirac operators"};
  app.require_subcommand(1);

  DensityFlags df;
  int mFlag = 0;
  auto* density = app.add_subcommand("density", "Residue density of a triple");
  density->add_option("--triple", df.triple, "type1, type2 or unperturbed")
      ->required()
      ->check(CLI::IsMember({"type1", "type2", "unperturbed"}));
  auto* mOpt = density->add_option("--m", mFlag, "half dimension, n = 2m");
  density->add_option("--context", df.context, "context JSON file, or generic for symbolic jets");
  density->add_option("--format", df.format, "json or latex")->check(CLI::IsMember({"json", "latex"}));
  density->add_flag("--eval-vol", df.evalVol, "evaluate tr[id] and the sphere volume up to pi^m");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Compare the engine with the printed statements");
  verify->add_option("--suite", vf.suite, "lemmas, theorems, oracles or all")
      ->check(CLI::IsMember({"lemmas", "theorems", "oracles", "all"}));
  verify->add_option("--m-list", vf.mList, "comma separated m values (default 2,3,4)");
  verify->add_option("--seed", vf.seed, "Monte Carlo seed (default 0)");

  MomentFlags mf;
  auto* moments = app.add_subcommand("moments", "Sphere moment of a xi monomial");
  moments->add_option("--indices", mf.indices, "comma separated indices")->required();
  moments->add_option("--n", mf.n, "ambient dimension, even")->required();
  moments->add_option("--mc-samples", mf.samples, "Monte Carlo samples");
  moments->add_option("--seed", mf.seed, "Monte Carlo seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFlagError;
  }

  OutputDocument doc;
  doc.args.assign(argv + 1, argv + argc);
  try {
    if (*density) {
      doc.command = "density";
      if (mOpt->count() > 0) df.m = mFlag;
      return runDensity(df, doc);
    }
    if (*verify) {
      doc.command = "verify";
      return runVerify(vf, doc);
    }
    doc.command = "moments";
    return runMoments(mf, doc);
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFlagError;
  } catch (const ContextError& e) {
    std::cerr << "context error: " << e.what() << "\n";
    return kContextError;
  } catch (const std::exception& e) {
    std::cerr << "pipeline error: " << e.what() << "\n";
    return kPipelineError;
  }
}
