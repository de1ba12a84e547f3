#pragma once

#include <cstdint>
#include <vector>

#include "wres/expr.hpp"

namespace wres {

/// Pointwise residue density. The represented value is
///   2^m * Vol(S^{2m-1}) * body,
/// with tr[id] = 2^m and the sphere volume kept as formal prefactors. The body is
/// a real polynomial in base-point jets with no xi, |xi| or Clifford factors.
struct Density {
  int m = 0;
  Expr body;

  friend bool operator==(const Density&, const Density&) = default;
};

/// Integral of xi_{i1}...xi_{ik} over the unit sphere in R^n, as a multiple of
/// Vol(S^{n-1}): prod_j (a_j - 1)!! / (n (n+2) ... (n+k-2)) where a_j are the
/// exponent counts; zero if any count is odd.
Rational sphereMoment(const std::vector<int>& indices, int n);

struct MonteCarloEstimate {
  double mean = 0;
  double stderror = 0;
};

/// Monte Carlo estimate of the same normalized moment from uniform sphere
/// samples (normalized Gaussian vectors), deterministic in the seed.
MonteCarloEstimate mcMomentOracle(const std::vector<int>& indices, int n, std::int64_t samples, std::uint64_t seed);

/// Sets |xi| = 1 and replaces every xi-monomial by its sphere moment. The input
/// must already be evaluated at the base point (round cosphere).
Expr integrateCosphere(const Expr& e, int n);

/// Takes the Clifford trace of an order -2m symbol, integrates over the
/// cosphere and strips the tr[id] = 2^m marker. Throws NonHomogeneous and
/// ImaginaryResidue.
Density traceIntegrate(const Expr& e, int m);

}  // namespace wres
