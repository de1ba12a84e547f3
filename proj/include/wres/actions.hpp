#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wres/cosphere.hpp"
#include "wres/jets.hpp"
#include "wres/psdo.hpp"

namespace wres {

enum class TripleKind { TypeI, TypeII, Unperturbed };

/// TypeI is f D^2 f, TypeII is c(X) D^2 c(X), Unperturbed is D^2.
struct TripleSpec {
  TripleKind kind;
  JetContext ctx;
};

std::string toString(TripleKind kind);
TripleKind parseTripleKind(const std::string& name);

/// Total symbol of D^2 in generic local jets (metric inverse, spin connection,
/// contracted Christoffel symbols, scalar curvature):
///   sigma_2 = |xi|^2,
///   sigma_1 = i (Gamma^mu - 2 sigma^mu) xi_mu,
///   sigma_0 = -(d^mu sigma_mu + sigma^mu sigma_mu - Gamma^mu sigma_mu) + s/4.
GradedSymbol buildD2Symbol(int n, Truncation mode = Truncation::Exact);

/// Symbol of the triple operator by composing u o D^2 o u with u = f or c(X).
GradedSymbol buildTripleSymbol(TripleKind kind, int n, Truncation mode = Truncation::Exact);

/// Every stage of the residue computation for one triple.
struct PipelineResult {
  GradedSymbol symbol;
  GradedSymbol inverse;
  Expr power;     // order -2m part of the symbol of A^{-(m-1)}, before evaluation
  Expr powerAtX0;  // the same, evaluated at x0 in the context
  Density density;
};

/// invert -> powerSymbolNeg -> base-point evaluation -> traceIntegrate.
/// With useOracle the power symbol comes from iterated composition instead.
PipelineResult runPipeline(const TripleSpec& spec, bool useOracle = false);

/// The residue density, with curvature contractions collected into s.
Density wresDensity(const TripleSpec& spec);

/// Rewrites groups c * sum_{mu,a} R_{mu a mu a} (same cofactor) as c * s.
Expr collectScalarCurvature(const Expr& e, int n);
/// Expands s into curvature components so expressions can be compared.
Expr expandScalarCurvature(const Expr& e, const JetContext& ctx);

/// Canonical form of an x0-evaluated expression for exact comparison.
Expr canonicalAtX0(const Expr& e, const JetContext& ctx);

/// Unique polynomial of degree <= maxDegree through the first points; any
/// further points must lie on it (else InterpolationResidual). Returns the
/// coefficients c_0..c_d of sum c_k m^k.
std::vector<Rational> interpolateCoefficients(const std::vector<std::pair<int, Rational>>& points, int maxDegree = 4);

// ------------------------------------------------------ printed statements

/// Hand transcriptions of the printed symbol lemmas, identities and densities.
/// Each is an independent expression used only as a comparison target.
namespace printed {

/// Symbols of f D^2 f, all three orders, at every point.
GradedSymbol fTripleSymbol(int n);
/// b_{-2}, b_{-3} of (f D^2 f)^{-1} at every point; b_{-4} at x0.
GradedSymbol fTripleInverse(const JetContext& ctx);
/// sigma_{-2m} of (f D^2 f)^{-(m-1)} at x0.
Expr fTriplePower(const JetContext& ctx);

/// Symbols of c(X) D^2 c(X) as printed, with the free-index slips in the
/// first-order cross term read as the contracted sum.
GradedSymbol xTripleSymbol(int n);
/// b_{-2}, b_{-3} of (c(X) D^2 c(X))^{-1} at every point; b_{-4} at x0.
GradedSymbol xTripleInverse(const JetContext& ctx);
/// sigma_{-2m} of (c(X) D^2 c(X))^{-(m-1)} at x0.
Expr xTriplePower(const JetContext& ctx);

/// Four Clifford trace identities in c(X) and its jets, as (lhs, rhs) pairs
/// evaluated at x0 (where |grad_{e_j} X|^2 = sum_i (d_j X^i)^2).
std::vector<std::pair<Expr, Expr>> cliffordTraceIdentities(const JetContext& ctx, int j);
/// Cosphere integrals for the type I terms: (integrand, density body) pairs.
std::vector<std::pair<Expr, Expr>> fIntegralIdentities(const JetContext& ctx);
/// Cosphere integrals for the type II Clifford terms.
std::vector<std::pair<Expr, Expr>> xIntegralIdentities(const JetContext& ctx);

/// Density bodies (coefficient of 2^m Vol(S^{2m-1})).
Expr fTripleDensity(const JetContext& ctx);
Expr xTripleDensity(const JetContext& ctx);
Expr unperturbedDensity(const JetContext& ctx);

}  // namespace printed

// ---------------------------------------------------------------- reports

enum class Target { Lemma34, Lemma35, Eq20, Lemma39, Lemma310, Eq26, Lemma311, Lemma312, Thm11, Thm12, RemarkKKW, RemarkM2 };
enum class Status { ExactMatch, Mismatch };
enum class OracleStatus { NotApplicable, Agrees, Disagrees };

std::string toString(Target t);
std::string toString(Status s);
std::string toString(OracleStatus s);
std::vector<Target> allTargets();

struct VerificationReport {
  Target target;
  int m = 0;
  Status status = Status::ExactMatch;
  Expr diff;  // engine minus printed; zero on ExactMatch
  OracleStatus oracle = OracleStatus::NotApplicable;
  std::string detail;
};

/// Compares the engine's result for the target against the printed statement
/// in the given context. Density-level targets also run the iterated
/// composition oracle and record whether it agrees with the engine.
VerificationReport compareWithPaper(Target target, const JetContext& ctx);

}  // namespace wres
