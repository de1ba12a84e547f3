#include "wres/psdo.hpp"

#include "wres/errors.hpp"
#include "wres/jets.hpp"

namespace wres {

Expr GradedSymbol::part(int order) const {
  if (order < floor) {
    throw InsufficientTruncation("order " + std::to_string(order) + " lies below the retained floor " +
                                 std::to_string(floor));
  }
  auto it = parts.find(order);
  return it == parts.end() ? Expr() : it->second;
}

void GradedSymbol::validate() const {
  for (const auto& [k, e] : parts) {
    for (const Term& t : e.terms()) {
      if (t.order() != k) {
        throw NonHomogeneous("part of order " + std::to_string(k) + " contains a term of order " +
                             std::to_string(t.order()));
      }
    }
  }
}

GradedSymbol functionSymbol(const Expr& u, Truncation mode) {
  GradedSymbol s;
  s.parts[0] = u;
  s.mode = mode;
  s.validate();
  return s;
}

GradedSymbol identitySymbol(Truncation mode) { return functionSymbol(Expr(1), mode); }

std::vector<std::vector<int>> multiIndices(int length, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

long factorial(int k) {
  long r = 1;
  for (int j = 2; j <= k; ++j) r *= j;
  return r;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

long multiFactorial(const std::vector<int>& beta) {
  long r = 1;
  std::size_t i = 0;
  while (i < beta.size()) {
    std::size_t j = i;
    while (j < beta.size() && beta[j] == beta[i]) ++j;
    r *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

Coeff minusIPower(int d) {
  static const Coeff cycle[4] = {Coeff(1), -Coeff::i(), Coeff(-1), Coeff::i()};
  return cycle[d % 4];
}

Truncation combined(Truncation a, Truncation b) {
  return (a == Truncation::BasePoint || b == Truncation::BasePoint) ? Truncation::BasePoint : Truncation::Exact;
}

Expr prune(const Expr& e, Truncation mode, int budget) {
  if (mode == Truncation::Exact) return e;
  if (budget < 0) return Expr();
  return pruneAtBasePoint(e, budget);
}

Expr mul(const Expr& a, const Expr& b, Truncation mode, int budget) {
  if (mode == Truncation::Exact) return a * b;
  if (budget < 0) return Expr();
  return pruneAtBasePoint(mulTruncated(a, b, vanishingOrder, budget), budget);
}

/// Memoized iterated derivatives of one expression along nondecreasing tuples.
class DerivCache {
 public:
  DerivCache(Expr base, bool xi, int n, Truncation mode, int budget)
      : xi_(xi), n_(n), mode_(mode), budget_(budget) {
    cache_[{}] = std::move(base);
  }

  const Expr& get(const std::vector<int>& beta) {
    auto it = cache_.find(beta);
    if (it != cache_.end()) return it->second;
    std::vector<int> prefix(beta.begin(), beta.end() - 1);
    Expr parent = get(prefix);
    Expr d = xi_ ? dXi(parent, beta.back(), n_) : dX(parent, beta.back(), n_);
    if (!xi_) d = prune(d, mode_, budget_ - static_cast<int>(beta.size()));
    return cache_.emplace(beta, std::move(d)).first->second;
  }

 private:
  bool xi_;
  int n_;
  Truncation mode_;
  int budget_;
  std::map<std::vector<int>, Expr> cache_;
};

}  // namespace

GradedSymbol compose(const GradedSymbol& a, const GradedSymbol& b, int floor, int n, int maxDepth) {
  GradedSymbol out;
  out.top = a.top + b.top;
  out.floor = floor;
  out.mode = combined(a.mode, b.mode);
  if (floor < a.floor + b.top || floor < b.floor + a.top) {
    throw InsufficientTruncation("compose: inputs are not retained deep enough for floor " + std::to_string(floor));
  }
  const int depth = out.top - floor;
  if (depth > maxDepth) {
    throw InsufficientTruncation("compose: derivative depth " + std::to_string(depth) + " exceeds the bound " +
                                 std::to_string(maxDepth));
  }
  if (out.mode == Truncation::BasePoint && depth > 2) {
    throw InsufficientTruncation("compose: base-point truncation keeps only two orders below the top");
  }

  std::map<int, DerivCache> xiDerivs;
  std::map<int, DerivCache> xDerivs;
  for (const auto& [o, e] : a.parts) xiDerivs.emplace(o, DerivCache(e, true, n, out.mode, a.budget(o)));
  for (const auto& [o, e] : b.parts) xDerivs.emplace(o, DerivCache(e, false, n, out.mode, b.budget(o)));

  for (int d = 0; d <= std::max(depth, 0); ++d) {
    for (const auto& beta : multiIndices(d, n)) {
      const Coeff weight = minusIPower(d) / Coeff(multiFactorial(beta));
      for (auto& [oA, ca] : xiDerivs) {
        for (auto& [oB, cb] : xDerivs) {
          const int k = oA + oB - d;
          if (k < floor) continue;
          const Expr& da = ca.get(beta);
          if (da.isZero()) continue;
          const Expr& db = cb.get(beta);
          if (db.isZero()) continue;
          Expr prod = mul(da, db, out.mode, out.budget(k));
          if (!prod.isZero()) out.parts[k] += prod * weight;
        }
      }
    }
  }
  std::erase_if(out.parts, [](const auto& p) { return p.second.isZero(); });
  return out;
}

namespace {

Expr leadingInverse(const Expr& sigma2, int n) {
  auto fail = [&]() {
    return NonInvertibleLeadingSymbol("leading symbol is not an invertible multiple of |xi|^2: " + sigma2.str());
  };
  Expr s = sigma2.size() == 1 ? sigma2 : reduceXNorm(sigma2, n);
  if (s.size() != 1) throw fail();
  const Term& t = s.terms()[0];
  if (!t.key.xi.empty() || !t.key.cliff.empty() || t.key.xiNormPow != 1) throw fail();
  for (const auto& [v, k] : t.key.scalars) {
    if (v.derivOrder() != 0) throw fail();
    if (v.kind() != JetKind::F && v.kind() != JetKind::XNormSq && v.kind() != JetKind::Aux) throw fail();
  }
  return s.pow(-1);
}

}  // namespace

GradedSymbol invert(const GradedSymbol& a, int n, int depth) {
  if (a.top != 2) throw NonInvertibleLeadingSymbol("invert expects a symbol of order 2");
  if (depth < 1 || depth > 3) throw InsufficientTruncation("invert computes at most three parametrix parts");
  if (a.floor > 3 - depth) throw InsufficientTruncation("invert: symbol is not retained deep enough");
  const Truncation mode = a.mode;
  GradedSymbol out;
  out.top = -2;
  out.floor = -1 - depth;
  out.mode = mode;

  const Expr s2 = a.part(2);
  const Expr s1 = depth >= 2 ? a.part(1) : Expr();
  const Expr s0 = depth >= 3 ? a.part(0) : Expr();
  const Expr b2 = leadingInverse(s2, n);
  const Coeff i = Coeff::i();

  out.parts[-2] = prune(b2, mode, 2);
  if (depth == 1) return out;

  std::vector<Expr> dxiS2(n + 1), dxiS1(n + 1), dxB2(n + 1);
  for (int k = 1; k <= n; ++k) {
    dxiS2[k] = dXi(s2, k, n);
    dxiS1[k] = dXi(s1, k, n);
    dxB2[k] = dX(b2, k, n);
  }

  // b_{-3} = -b_{-2} [sigma_1 b_{-2} - i sum_a d_xi_a sigma_2 d_x_a b_{-2}]
  Expr inner3 = mul(s1, b2, mode, 1);
  for (int k = 1; k <= n; ++k) inner3 -= mul(dxiS2[k], dxB2[k], mode, 1) * i;
  const Expr b3 = -mul(b2, inner3, mode, 1);
  if (!b3.isZero()) out.parts[-3] = b3;
  if (depth == 2) return out;

  // b_{-4} = -b_{-2} [sigma_1 b_{-3} + sigma_0 b_{-2} - i d_xi sigma_1 d_x b_{-2}
  //                  - i d_xi sigma_2 d_x b_{-3} - 1/2 d_xi d_xi sigma_2 d_x d_x b_{-2}]
  Expr inner4 = mul(s1, b3, mode, 0) + mul(s0, b2, mode, 0);
  for (int k = 1; k <= n; ++k) {
    inner4 -= mul(dxiS1[k], dxB2[k], mode, 0) * i;
    inner4 -= mul(dxiS2[k], dX(b3, k, n), mode, 0) * i;
  }
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      Expr ddxi = dXi(dxiS2[p], q, n);
      if (ddxi.isZero()) continue;
      inner4 -= mul(ddxi, dX(dxB2[p], q, n), mode, 0) * Coeff::frac(1, 2);
    }
  }
  const Expr b4 = -mul(b2, inner4, mode, 0);

  if (!b4.isZero()) out.parts[-4] = b4;
  out.validate();
  return out;
}

GradedSymbol commutatorWithFunction(const GradedSymbol& s, const Expr& u, int floor, int n, int maxDepth) {
  GradedSymbol out;
  out.top = s.top - 1;
  out.floor = floor;
  out.mode = s.mode;
  if (floor < s.floor + 1) throw InsufficientTruncation("commutator: symbol is not retained deep enough");
  const int depth = s.top - floor;
  if (depth > maxDepth) {
    throw InsufficientTruncation("commutator: derivative depth " + std::to_string(depth) + " exceeds the bound " +
                                 std::to_string(maxDepth));
  }
  DerivCache du(u, false, n, s.mode, 2);
  auto bracket = [&](int order, int budget) { return mul(s.part(order), u, s.mode, budget) - mul(u, s.part(order), s.mode, budget); };
  if (!bracket(s.top, s.budget(s.top)).isZero()) {
    throw std::invalid_argument("commutator: leading symbol does not commute with the function");
  }
  for (int j = 1; j <= depth; ++j) {
    const int k = s.top - j;
    // Clifford-valued u need not commute with the symbol pointwise.
    Expr acc = bracket(k, out.budget(k));
    for (int len = 1; len <= j; ++len) {
      const int srcOrder = s.top - (j - len);
      auto it = s.parts.find(srcOrder);
      if (it == s.parts.end()) continue;
      DerivCache dxi(it->second, true, n, s.mode, s.budget(srcOrder));
      for (const auto& beta : multiIndices(len, n)) {
        const Expr& dxu = du.get(beta);
        if (dxu.isZero()) continue;
        const Expr& dxs = dxi.get(beta);
        if (dxs.isZero()) continue;
        // D_x^beta u = (-i)^|beta| d_x^beta u, kept to the right of the symbol.
        acc += mul(dxs, dxu, s.mode, out.budget(k)) * (minusIPower(len) / Coeff(multiFactorial(beta)));
      }
    }
    if (!acc.isZero()) out.parts[k] = acc;
  }
  return out;
}

Expr powerSymbolNeg(const GradedSymbol& inverse, int m, int n) {
  if (m < 2) throw std::invalid_argument("powerSymbolNeg needs m >= 2");
  const Truncation mode = inverse.mode;
  const Expr u = inverse.part(-2);
  const Expr v = inverse.part(-3);
  const Expr w = inverse.part(-4);
  if (u.hasClifford()) throw NonScalarB2();
  const int k = m - 1;
  const Coeff i = Coeff::i();

  // Derivatives are taken before any base-point pruning; afterwards only values at x0 matter.
  auto at0 = [&](const Expr& e) { return prune(e, mode, 0); };
  auto P = [&](std::initializer_list<Expr> factors) {
    Expr r(1);
    for (const Expr& f : factors) {
      r = mul(r, f, mode, 0);
      if (r.isZero()) break;
    }
    return r;
  };
  auto upow = [&](int e) { return at0(u).pow(e); };

  std::vector<Expr> uXi(n + 1), uX(n + 1), vXi(n + 1), vX(n + 1);
  std::vector<std::vector<Expr>> uXiXi(n + 1, std::vector<Expr>(n + 1)), uXX(n + 1, std::vector<Expr>(n + 1)),
      uXiX(n + 1, std::vector<Expr>(n + 1));
  for (int a = 1; a <= n; ++a) {
    const Expr dxu = dX(u, a, n);
    const Expr dxiu = dXi(u, a, n);
    uXi[a] = at0(dxiu);
    uX[a] = at0(dxu);
    vXi[a] = at0(dXi(v, a, n));
    vX[a] = at0(dX(v, a, n));
    for (int b = 1; b <= n; ++b) {
      uXiXi[a][b] = at0(dXi(dxiu, b, n));
      uXX[a][b] = at0(dX(dxu, b, n));
      uXiX[b][a] = at0(dX(dXi(u, b, n), a, n));  // d_xi_b d_x_a u
    }
  }
  const Expr v0 = at0(v);
  const Expr w0 = at0(w);

  Expr out;
  // k u^{k-1} w
  out += P({upow(k - 1), w0}) * Coeff(static_cast<long>(k));
  if (k >= 2) {
    const long c2 = binomial(k, 2);
    // C(k,2) u^{k-2} v^2
    out += P({upow(k - 2), v0, v0}) * Coeff(c2);
    // -i C(k,2) u^{k-2} (d_xi_a v d_x_a u + d_xi_a u d_x_a v)
    Expr cross;
    for (int a = 1; a <= n; ++a) cross += P({vXi[a], uX[a]}) + P({uXi[a], vX[a]});
    out -= P({upow(k - 2), cross}) * (i * Coeff(c2));
    // -(k(k-1)/4) u^{k-2} d_xi_a d_xi_b u d_x_a d_x_b u
    Expr second;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) second += P({uXiXi[a][b], uXX[a][b]});
    out -= P({upow(k - 2), second}) * Coeff::frac(k * (k - 1), 4);
  }
  if (k >= 3) {
    Expr grad;  // sum_a d_xi_a u d_x_a u
    for (int a = 1; a <= n; ++a) grad += P({uXi[a], uX[a]});
    // -i k(k-1)(k-2)/2 u^{k-3} v (d_xi_a u d_x_a u)
    out -= P({upow(k - 3), v0, grad}) * (i * Coeff::frac(static_cast<long>(k) * (k - 1) * (k - 2), 2));
    // -C(k,3) u^{k-3} [d_xi_a u d_xi_b d_x_a u d_x_b u + d_xi_a u d_xi_b u d_x_a d_x_b u
    //                  + d_xi_a d_xi_b u d_x_a u d_x_b u]
    Expr triple;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        triple += P({uXi[a], uXiX[b][a], uX[b]});
        triple += P({uXi[a], uXi[b], uXX[a][b]});
        triple += P({uXiXi[a][b], uX[a], uX[b]});
      }
    out -= P({upow(k - 3), triple}) * Coeff(binomial(k, 3));
    if (k >= 4) {
      // -3 C(k,4) u^{k-4} (d_xi_a u d_x_a u)^2
      out -= P({upow(k - 4), grad, grad}) * Coeff(3 * binomial(k, 4));
    }
  }
  return out;
}

Expr iteratedCompositionPower(const GradedSymbol& inverse, int m, int n) {
  if (m < 2) throw std::invalid_argument("iteratedCompositionPower needs m >= 2");
  GradedSymbol p = inverse;
  for (int k = 2; k <= m - 1; ++k) p = compose(inverse, p, -2 * k - 2, n);
  Expr r = p.part(-2 * m);
  return prune(r, p.mode, 0);
}

}  // namespace wres
