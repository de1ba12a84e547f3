#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wres/clifford_word.hpp"
#include "wres/coeff.hpp"
#include "wres/jet_var.hpp"

namespace wres {

/// Commutative monomial in the cotangent variables xi_1..xi_16 (all indices
/// lowered). Exponents are packed four bits per index.
class XiMonomial {
 public:
  static constexpr int kMaxIndex = 16;
  static constexpr int kMaxExponent = 15;

  constexpr XiMonomial() = default;
  static XiMonomial single(int index);

  int count(int index) const { return static_cast<int>((packed_ >> (4 * (index - 1))) & 15U); }
  int degree() const;
  bool empty() const { return packed_ == 0; }
  /// Sorted index multiset, e.g. xi_1 xi_1 xi_3 -> {1,1,3}.
  std::vector<int> indices() const;

  XiMonomial times(XiMonomial other) const;
  /// Removes one factor xi_index; caller checks count(index) > 0.
  XiMonomial dropOne(int index) const { return XiMonomial(packed_ - (std::uint64_t{1} << (4 * (index - 1)))); }

  friend constexpr auto operator<=>(const XiMonomial&, const XiMonomial&) = default;

 private:
  explicit constexpr XiMonomial(std::uint64_t p) : packed_(p) {}
  std::uint64_t packed_ = 0;
};

/// Sorted product of jet variables with nonzero integer exponents.
using Monomial = std::vector<std::pair<JetVar, int>>;

Monomial multiplyMonomials(const Monomial& a, const Monomial& b);
int exponentOf(const Monomial& m, JetVar v);

struct TermKey {
  Monomial scalars;
  XiMonomial xi;
  int xiNormPow = 0;  // |xi|^(2 * xiNormPow)
  CliffordWord cliff;

  friend auto operator<=>(const TermKey&, const TermKey&) = default;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

struct Term {
  TermKey key;
  Coeff coeff;

  /// Homogeneity degree in xi: deg(xi-monomial) + 2 * xiNormPow.
  int order() const { return key.xi.degree() + 2 * key.xiNormPow; }
};

/// Canonical exact linear combination of terms. Terms are sorted by key, keys
/// are unique and coefficients nonzero, so structural equality is equality of
/// the represented elements (modulo relations that are not rewrite rules, such
/// as |X|^2 = sum X_i^2; see reduceXNorm in the jets module).
class Expr {
 public:
  Expr() = default;
  Expr(Coeff c);  // NOLINT(google-explicit-constructor)
  Expr(long c) : Expr(Coeff(c)) {}  // NOLINT(google-explicit-constructor)

  static Expr var(JetVar v, int exponent = 1);
  static Expr xi(int index);
  static Expr xiNorm(int p);  // |xi|^(2p)
  static Expr word(CliffordWord w);
  static Expr fromTerm(Term t);
  /// Sorts, merges equal keys, drops zeros.
  static Expr fromTerms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of the exact key (zero if absent).
  Coeff coefficientOf(const TermKey& key) const;

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Coeff& c);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator-(Expr a) { return a *= Coeff(-1); }
  friend Expr operator*(Expr a, const Coeff& c) { return a *= c; }
  friend Expr operator*(const Coeff& c, Expr a) { return a *= c; }
  friend Expr operator*(const Expr& a, const Expr& b);
  friend bool operator==(const Expr& a, const Expr& b);

  /// Integer power; negative exponents require a single invertible term
  /// without xi-monomial or Clifford word.
  Expr pow(int e) const;

  /// Terms with the given xi-homogeneity order only.
  Expr homogeneousPart(int order) const;
  /// All orders present.
  std::vector<int> orders() const;
  /// Keeps terms satisfying the predicate.
  Expr filter(const std::function<bool(const Term&)>& keep) const;
  bool hasClifford() const;
  bool isReal() const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

Term multiplyTerms(const Term& a, const Term& b);

/// Product restricted to pairs whose combined weight stays within budget.
/// Weights must be additive over term products.
Expr mulTruncated(const Expr& a, const Expr& b, const std::function<int(const Term&)>& weight, int budget);

/// Formal coordinate derivative d/dx_a in dimension n. Jet variables gain a
/// derivative index; |X|^2 and |xi|^2 differentiate through their definitions
/// (X-jets and g^{ab}-jets respectively). Clifford generators are x-constant.
Expr dX(const Expr& e, int a, int n);

/// Derivative d/dxi_mu. |xi|^(2p) -> 2p |xi|^(2p-2) g^{mu nu} xi_nu.
Expr dXi(const Expr& e, int mu, int n);

/// Replaces jet variables by expressions; unmapped variables are kept.
Expr substitute(const Expr& e, const std::function<std::optional<Expr>(JetVar)>& map);

/// Numeric assignment for evalNumeric.
struct JetAssignment {
  std::map<JetVar, Coeff> vars;
  std::vector<Coeff> xi;        // xi[0] is xi_1
  std::optional<Coeff> xiNormSq;  // value of |xi|^2
};

/// Exact value of a Clifford-free expression under the assignment.
/// Throws UnboundVariable and NonScalarClifford.
Coeff evalNumeric(const Expr& e, const JetAssignment& assignment);

/// Values of the coefficient of each Clifford word.
std::map<CliffordWord, Coeff> evalCliffordComponents(const Expr& e, const JetAssignment& assignment);

}  // namespace wres
