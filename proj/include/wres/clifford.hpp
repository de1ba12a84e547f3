#pragma once

#include <span>
#include <vector>

#include "wres/expr.hpp"

namespace wres {

class JetContext;

/// Reduces a raw generator sequence c(e_{i1})...c(e_{ik}) to canonical form.
/// Throws IndexOutOfRange for indices outside 1..n.
Expr normalizeWord(std::span<const int> generators, int n);

/// Clifford trace: words of positive length are traceless; the identity word
/// contributes its coefficient times the formal variable tr[id].
Expr trace(const Expr& e);

/// c(X) = sum_i X^i c(e_i).
Expr cX(const JetContext& ctx);
/// Coordinate derivative jets of c(X): sum_i X^i_{;alpha} c(e_i).
Expr cXDeriv(const JetContext& ctx, std::span<const int> multiIndex);

/// Exact square matrix over Q(i).
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}
  static CMatrix identity(int dim);

  int dim() const { return dim_; }
  Coeff& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Coeff& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

  friend CMatrix operator*(const CMatrix& x, const CMatrix& y);
  friend CMatrix operator+(const CMatrix& x, const CMatrix& y);
  CMatrix scaled(const Coeff& c) const;
  Coeff trace() const;

 private:
  int dim_ = 0;
  std::vector<Coeff> a_;
};

/// Explicit 2^m-dimensional representation of c(e_1)..c(e_2m) built from
/// tensor products of Pauli matrices, with c(e_i)^2 = -1.
class CliffordMatrixModel {
 public:
  explicit CliffordMatrixModel(int m);
  int dim() const { return 1 << m_; }
  const CMatrix& generator(int i) const { return gens_.at(static_cast<std::size_t>(i - 1)); }
  CMatrix word(CliffordWord w) const;
  /// Matrix of sum over Clifford words of the given scalar coefficients.
  CMatrix represent(const std::map<CliffordWord, Coeff>& components) const;

 private:
  int m_;
  std::vector<CMatrix> gens_;
};

}  // namespace wres
