#include "wres/cosphere.hpp"

#include <cmath>
#include <random>

#include "wres/clifford.hpp"
#include "wres/errors.hpp"

namespace wres {

Rational sphereMoment(const std::vector<int>& indices, int n) {
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
  for (int i : indices) {
    if (i < 1 || i > n) throw IndexOutOfRange("sphere moment index out of range: " + std::to_string(i));
    ++counts[i];
  }
  if (indices.size() % 2 != 0) return 0;
  Rational num = 1;
  for (int c : counts) {
    if (c % 2 != 0) return 0;
    for (int k = c - 1; k > 0; k -= 2) num *= k;
  }
  Rational den = 1;
  const int k = static_cast<int>(indices.size()) / 2;
  for (int j = 0; j < k; ++j) den *= n + 2 * j;
  return num / den;
}

MonteCarloEstimate mcMomentOracle(const std::vector<int>& indices, int n, std::int64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  double sum = 0;
  double sumSq = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    double norm = 0;
    for (auto& v : x) {
      v = gauss(rng);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    double value = 1;
    for (int i : indices) value *= x[static_cast<std::size_t>(i - 1)] / norm;
    sum += value;
    sumSq += value * value;
  }
  const double count = static_cast<double>(samples);
  const double mean = sum / count;
  const double var = std::max(0.0, sumSq / count - mean * mean);
  return {mean, std::sqrt(var / count)};
}

Expr integrateCosphere(const Expr& e, int n) {
  std::vector<Term> out;
  for (const Term& t : e.terms()) {
    for (const auto& [v, k] : t.key.scalars) {
      if (v.kind() == JetKind::MetricInv) {
        throw NonHomogeneous("cosphere integration needs base-point values; found " + v.name());
      }
    }
    Rational moment = sphereMoment(t.key.xi.indices(), n);
    if (sgn(moment) == 0) continue;
    Term u = t;
    u.key.xi = XiMonomial();
    u.key.xiNormPow = 0;
    u.coeff *= Coeff(moment);
    out.push_back(std::move(u));
  }
  return Expr::fromTerms(std::move(out));
}

Density traceIntegrate(const Expr& e, int m) {
  const int n = 2 * m;
  for (const Term& t : e.terms()) {
    if (t.order() != -n) {
      throw NonHomogeneous("traceIntegrate expects order " + std::to_string(-n) + ", found " +
                           std::to_string(t.order()));
    }
  }
  Expr traced = integrateCosphere(trace(e), n);
  if (!traced.isReal()) throw ImaginaryResidue("imaginary part survives in the residue density: " + traced.str());
  // Every traced term carries tr[id] exactly once; strip it.
  Expr body = substitute(traced, [](JetVar v) -> std::optional<Expr> {
    if (v.kind() == JetKind::TrId) return Expr(1);
    return std::nullopt;
  });
  return Density{m, body};
}

}  // namespace wres
