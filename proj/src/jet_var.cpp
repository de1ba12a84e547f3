#include "wres/jet_var.hpp"

#include <algorithm>

#include "wres/errors.hpp"

namespace wres {

JetVar::JetVar(JetKind kind, std::initializer_list<int> idx) {
  raw_ = static_cast<std::uint64_t>(kind) << 60;
  int slot = 0;
  for (int i : idx) {
    if (i < 1 || i > kMaxIndex) throw IndexOutOfRange("jet index out of range: " + std::to_string(i));
    raw_ |= static_cast<std::uint64_t>(i) << (54 - 6 * slot);
    ++slot;
  }
}

JetVar JetVar::metricInv(int a, int b) {
  if (a > b) std::swap(a, b);
  return JetVar(JetKind::MetricInv, {a, b});
}

int JetVar::derivOrder() const {
  int k = 0;
  for (int s = 0; s < kMaxDerivOrder; ++s) {
    if (((raw_ >> (30 - 6 * s)) & 63U) != 0) ++k;
  }
  return k;
}

std::vector<int> JetVar::deriv() const {
  std::vector<int> d;
  for (int s = 0; s < kMaxDerivOrder; ++s) {
    int v = static_cast<int>((raw_ >> (30 - 6 * s)) & 63U);
    if (v != 0) d.push_back(v);
  }
  return d;
}

JetVar JetVar::withDeriv(int a) const {
  if (a < 1 || a > kMaxIndex) throw IndexOutOfRange("derivative direction out of range");
  std::vector<int> d = deriv();
  if (static_cast<int>(d.size()) >= kMaxDerivOrder) {
    throw JetOrderExceeded("derivative order exceeds " + std::to_string(kMaxDerivOrder) + " for " + name());
  }
  d.insert(std::upper_bound(d.begin(), d.end(), a), a);
  std::uint64_t raw = raw_ & ~kDerivMask;
  for (std::size_t s = 0; s < d.size(); ++s) raw |= static_cast<std::uint64_t>(d[s]) << (30 - 6 * s);
  return JetVar(raw);
}

std::string JetVar::name() const {
  std::string out;
  auto idx = [this](int n) {
    std::string s;
    for (int k = 0; k < n; ++k) {
      if (k) s += ",";
      s += std::to_string(index(k));
    }
    return s;
  };
  switch (kind()) {
    case JetKind::F: out = "f"; break;
    case JetKind::X: out = "X" + std::to_string(index(0)); break;
    case JetKind::XNormSq: out = "|X|2"; break;
    case JetKind::Scal: out = "s"; break;
    case JetKind::MetricInv: out = "g[" + idx(2) + "]"; break;
    case JetKind::Conn: out = "w[" + idx(3) + "]"; break;
    case JetKind::Gamma: out = "Gamma[" + idx(1) + "]"; break;
    case JetKind::Riem: out = "R[" + idx(4) + "]"; break;
    case JetKind::TrId: out = "tr"; break;
    case JetKind::Aux: out = "a" + std::to_string(index(0)); break;
  }
  std::vector<int> d = deriv();
  if (!d.empty()) {
    out += "_;";
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(d[k]);
    }
  }
  return out;
}

std::pair<int, JetVar> canonicalRiem(int a, int b, int c, int d) {
  if (a == b || c == d) return {0, JetVar::riemRaw(1, 2, 1, 2)};
  int sign = 1;
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  if (c > d) {
    std::swap(c, d);
    sign = -sign;
  }
  if (std::pair(a, b) > std::pair(c, d)) {
    std::swap(a, c);
    std::swap(b, d);
  }
  return {sign, JetVar::riemRaw(a, b, c, d)};
}

}  // namespace wres
