#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wres {

/// Base quantity of a jet variable. The declaration order fixes the canonical
/// ordering of monomials.
enum class JetKind : std::uint8_t {
  F = 0,          // perturbing function f
  X = 1,          // frame component X^i of the vector field
  XNormSq = 2,    // |X|^2 as an atom; x-derivatives expand through the X^i
  Scal = 3,       // scalar curvature s
  MetricInv = 4,  // g^{ab}, stored with a <= b
  Conn = 5,       // w[i,s,t], s < t: sigma_i = sum_{s<t} w[i,s,t] c(e_s)c(e_t)
  Gamma = 6,      // contracted Christoffel Gamma^k = g^{ij} Gamma^k_{ij}
  Riem = 7,       // R_{abcd}, stored in pair-canonical form
  TrId = 8,       // formal tr[id]
  Aux = 9,        // free symbol, used by randomized tests
};

/// A scalar jet: a base quantity with up to four indices and a sorted
/// multi-index of coordinate derivatives (partials commute). Packed into one
/// 64-bit word so that values are trivially copyable and totally ordered.
class JetVar {
 public:
  static constexpr int kMaxIndex = 63;
  static constexpr int kMaxDerivOrder = 6;

  static JetVar f() { return JetVar(JetKind::F, {}); }
  static JetVar x(int i) { return JetVar(JetKind::X, {i}); }
  static JetVar xNormSq() { return JetVar(JetKind::XNormSq, {}); }
  static JetVar scal() { return JetVar(JetKind::Scal, {}); }
  /// g^{ab}; indices are reordered so that a <= b.
  static JetVar metricInv(int a, int b);
  /// w[i,s,t] with s < t (caller's responsibility).
  static JetVar conn(int i, int s, int t) { return JetVar(JetKind::Conn, {i, s, t}); }
  static JetVar gamma(int k) { return JetVar(JetKind::Gamma, {k}); }
  /// Raw R_{abcd} without canonicalization; see canonicalRiem().
  static JetVar riemRaw(int a, int b, int c, int d) { return JetVar(JetKind::Riem, {a, b, c, d}); }
  static JetVar trId() { return JetVar(JetKind::TrId, {}); }
  static JetVar aux(int k) { return JetVar(JetKind::Aux, {k}); }

  JetKind kind() const { return static_cast<JetKind>(raw_ >> 60); }
  /// Index slot 0..3; 0 when unused.
  int index(int slot) const { return static_cast<int>((raw_ >> (54 - 6 * slot)) & 63U); }
  int derivOrder() const;
  std::vector<int> deriv() const;
  /// Same base with one more coordinate derivative. Throws JetOrderExceeded past kMaxDerivOrder.
  JetVar withDeriv(int a) const;
  JetVar base() const { return JetVar(raw_ & ~kDerivMask); }

  std::uint64_t raw() const { return raw_; }
  friend auto operator<=>(const JetVar&, const JetVar&) = default;

  /// Human-readable name, e.g. "f_;1,2", "X3", "R[1,2,1,2]", "g[1,2]_;3".
  std::string name() const;

 private:
  static constexpr std::uint64_t kDerivMask = (std::uint64_t{1} << 36) - 1;
  explicit JetVar(std::uint64_t raw) : raw_(raw) {}
  JetVar(JetKind kind, std::initializer_list<int> idx);

  std::uint64_t raw_ = 0;
};

/// Pair-canonical form of R_{abcd}: a < b, c < d, (a,b) <= (c,d). Returns the
/// sign relating R_{abcd} to the canonical variable (0 when R_{abcd} vanishes
/// identically by antisymmetry).
std::pair<int, JetVar> canonicalRiem(int a, int b, int c, int d);

}  // namespace wres
