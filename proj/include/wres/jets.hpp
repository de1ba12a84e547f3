#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wres/expr.hpp"

namespace wres {

/// Dense numeric curvature tensor R_{abcd}, indices 1..n.
class RiemannTensor {
 public:
  explicit RiemannTensor(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n) {}

  /// Builds the tensor from sparse entries [a,b,c,d,value], completing by
  /// R_{abcd} = -R_{bacd} = -R_{abdc} = R_{cdab}. Omitted entries are zero.
  /// Throws ContextError naming the violated identity (conflicting symmetry
  /// completion or first Bianchi identity).
  struct Entry {
    int a, b, c, d;
    Rational value;
  };
  static RiemannTensor fromEntries(int n, const std::vector<Entry>& entries);

  /// Kulkarni-Nomizu product h (.) k of two symmetric matrices (row-major n x n):
  /// always an algebraic curvature tensor.
  static RiemannTensor kulkarniNomizu(int n, const std::vector<Rational>& h, const std::vector<Rational>& k);
  /// Constant-curvature tensor kappa (delta_ac delta_bd - delta_ad delta_bc).
  static RiemannTensor constantCurvature(int n, const Rational& kappa);

  int n() const { return n_; }
  const Rational& at(int a, int b, int c, int d) const { return data_[offset(a, b, c, d)]; }
  RiemannTensor operator+(const RiemannTensor& o) const;

  /// Throws ContextError if any symmetry or the first Bianchi identity fails.
  void validate() const;

 private:
  std::size_t offset(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a - 1) * n_ + (b - 1)) * n_ + (c - 1)) * n_ + (d - 1);
  }
  Rational& ref(int a, int b, int c, int d) { return data_[offset(a, b, c, d)]; }

  int n_;
  std::vector<Rational> data_;
};

/// Values of f and its first and second partials at the base point.
struct FJets {
  Rational value{1};
  std::vector<Rational> grad;  // n entries
  std::vector<Rational> hess;  // n x n row-major, symmetric
};

/// Frame components X^i and their first and second partials at the base point.
struct XJets {
  std::vector<Rational> value;  // n entries
  std::vector<Rational> grad;   // [i][a], n x n
  std::vector<Rational> hess;   // [i][a][b], n x n x n, symmetric in (a,b)
};

enum class JetMode { Symbolic, Numeric };

/// Geometric state at the base point x0 in normal coordinates. Missing pieces
/// stay symbolic: a context with no curvature values uses free canonical
/// R_{abcd} variables, and so on for the f- and X-jets.
class JetContext {
 public:
  static JetContext symbolic(int m);
  JetContext(int m, std::optional<RiemannTensor> riem, std::optional<FJets> f, std::optional<XJets> x);

  int m() const { return m_; }
  int n() const { return 2 * m_; }
  JetMode mode() const;

  const std::optional<RiemannTensor>& riemValues() const { return riem_; }
  const std::optional<FJets>& fValues() const { return f_; }
  const std::optional<XJets>& xValues() const { return x_; }

  /// R_{abcd}: a number in numeric mode, otherwise +-(canonical symbol) or 0.
  Expr riem(int a, int b, int c, int d) const;

  /// Context file: {m, mode, riem: [[a,b,c,d,value]...], fJets: {...}, xJets: {...}}.
  /// Throws ContextError on any violation.
  static JetContext fromJson(const nlohmann::json& doc);
  nlohmann::json toJson() const;

 private:
  static JetContext parseContext(const nlohmann::json& doc);

  int m_;
  std::optional<RiemannTensor> riem_;
  std::optional<FJets> f_;
  std::optional<XJets> x_;
};

/// Random numeric context with small rationals, deterministic in the seed.
/// f != 0 and |X|^2 != 0 are guaranteed.
JetContext randomNumericContext(int m, std::uint64_t seed);

/// d_mu d_nu g^{alpha beta}(x0) = (1/3)(R_{alpha mu beta nu} + R_{alpha nu beta mu}).
Expr metricInvSecondJet(const JetContext& ctx, int mu, int nu, int alpha, int beta);

/// d_a sigma_b(x0) = -(1/8) sum_{s,t} R_{abst} c(e_s)c(e_t). Clifford-valued.
Expr connFirstJet(const JetContext& ctx, int a, int b);

/// d_a Gamma^k(x0) for the contracted Christoffel symbol, derived from the
/// metric second jets: sum_i (d_a d_i g_{ik} - 1/2 d_a d_k g_{ii}) with
/// d d g_{..} = -d d g^{..} at x0.
Expr gammaFirstJet(const JetContext& ctx, int a, int k);

/// s = sum_{a,mu} R_{mu a mu a}.
Expr scalFromRiem(const JetContext& ctx);

/// Delta(u)(x0) = -sum_j d_j d_j u for a function expression u.
Expr laplacian(const Expr& u, int n);
/// |grad u|^2 = sum_j (d_j u)^2.
Expr gradNormSq(const Expr& u, int n);

/// Order of vanishing at x0 of a term in normal coordinates: sigma_i, Gamma^k and
/// d g^{ab} vanish to first order, off-diagonal g^{ab} to second order.
int vanishingOrder(const Term& t);

/// Drops terms whose vanishing order exceeds the number of x-derivatives that
/// may still act on them. With budget < 2 the diagonal g^{aa}, equal to 1 up to
/// second order, is replaced by 1.
Expr pruneAtBasePoint(const Expr& e, int budget);

/// Evaluates the x-dependence at x0: substitutes metric, connection and
/// Christoffel jets by their curvature expressions, s by the Ricci contraction,
/// and any numeric values the context carries.
Expr atBasePoint(const Expr& e, const JetContext& ctx);

/// Canonical form modulo |X|^2 = sum_i (X^i)^2 (eliminates (X^1)^2).
Expr reduceXNorm(const Expr& e, int n);

/// Numeric assignment of every base-point jet of a numeric context, with xi
/// values given and |xi|^2 = sum xi_i^2, tr[id] = 2^m.
JetAssignment assignmentFor(const JetContext& numeric, const std::vector<Rational>& xi);

}  // namespace wres
