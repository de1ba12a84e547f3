#pragma once

#include <map>

#include "wres/expr.hpp"

namespace wres {

/// How x-dependence is carried through symbol operations.
///  Exact: every jet is kept; results hold at every point.
///  BasePoint: only values at x0 in normal coordinates are needed, so terms
///  that vanish there after all derivatives still to come are dropped early.
enum class Truncation { Exact, BasePoint };

/// Total symbol sum_k sigma_k, each part homogeneous of order k in xi (xi_i
/// counts 1, |xi|^(2p) counts 2p). Orders below floor are unknown, not zero.
struct GradedSymbol {
  /// Floor used for symbols whose lower parts are exactly zero (functions,
  /// differential operators): complete down to any floor.
  static constexpr int kComplete = -1000;

  std::map<int, Expr> parts;
  int top = 0;
  int floor = kComplete;
  Truncation mode = Truncation::Exact;

  /// Part of the given order (zero when absent and order >= floor).
  Expr part(int order) const;
  /// Number of x-derivatives that may still act on part k before the final
  /// base-point evaluation of the order (top - 2) part.
  int budget(int order) const { return 2 - (top - order); }
  /// Throws NonHomogeneous if a part has the wrong order.
  void validate() const;
};

/// Multiplication operator by a function u (order 0, complete).
GradedSymbol functionSymbol(const Expr& u, Truncation mode = Truncation::Exact);
GradedSymbol identitySymbol(Truncation mode = Truncation::Exact);

/// sigma(AB) = sum_beta (-i)^|beta| / beta! d_xi^beta sigma(A) d_x^beta sigma(B),
/// kept down to the given floor. Throws InsufficientTruncation if an input is not
/// retained deep enough or the derivative depth top(A)+top(B)-floor exceeds maxDepth.
GradedSymbol compose(const GradedSymbol& a, const GradedSymbol& b, int floor, int n, int maxDepth = 2);

/// Parametrix parts b_{-2}, ..., b_{-depth-1} (depth 1..3) of a second-order
/// symbol whose leading part is an invertible scalar multiple of |xi|^2.
GradedSymbol invert(const GradedSymbol& a, int n, int depth = 3);

/// Symbol of [S, u] for a (possibly Clifford-valued) function u:
/// sigma_{k-j}[S,u] = [sigma_{k-j}(S), u] + sum_{1<=|beta|<=j} d_xi^beta sigma_{k-j+|beta|}(S) D_x^beta u / beta!,
/// D_x = -i d_x, kept down to the given floor. The leading part of S must commute with u.
GradedSymbol commutatorWithFunction(const GradedSymbol& s, const Expr& u, int floor, int n, int maxDepth = 2);

/// Order -2m part of the symbol of A^{-(m-1)} from the parametrix parts, by the
/// closed power formula. Throws NonScalarB2 if b_{-2} carries Clifford words.
Expr powerSymbolNeg(const GradedSymbol& inverse, int m, int n);

/// Same quantity by (m-1)-fold composition of the parametrix with itself.
Expr iteratedCompositionPower(const GradedSymbol& inverse, int m, int n);

/// Nondecreasing index tuples of the given length over 1..n.
std::vector<std::vector<int>> multiIndices(int length, int n);

}  // namespace wres
