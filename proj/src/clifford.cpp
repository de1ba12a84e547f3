#include "wres/clifford.hpp"

#include "wres/errors.hpp"
#include "wres/jets.hpp"

namespace wres {

std::vector<int> CliffordWord::generators() const {
  std::vector<int> g;
  for (int i = 1; i <= kMaxGenerators; ++i) {
    if (mask_ & (std::uint32_t{1} << (i - 1))) g.push_back(i);
  }
  return g;
}

std::string CliffordWord::str() const {
  std::string s = "c[";
  bool first = true;
  for (int i : generators()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "]";
}

Expr normalizeWord(std::span<const int> generators, int n) {
  int sign = 1;
  CliffordWord w;
  for (int i : generators) {
    if (i < 1 || i > n) throw IndexOutOfRange("Clifford generator out of range: " + std::to_string(i));
    auto [s, next] = multiply(w, CliffordWord::generator(i));
    sign *= s;
    w = next;
  }
  return Expr::word(w) * Coeff(static_cast<long>(sign));
}

Expr trace(const Expr& e) {
  return e.filter([](const Term& t) { return t.key.cliff.empty(); }) * Expr::var(JetVar::trId());
}

Expr cX(const JetContext& ctx) { return cXDeriv(ctx, {}); }

Expr cXDeriv(const JetContext& ctx, std::span<const int> multiIndex) {
  Expr out;
  for (int i = 1; i <= ctx.n(); ++i) {
    JetVar v = JetVar::x(i);
    for (int a : multiIndex) v = v.withDeriv(a);
    out += Expr::var(v) * Expr::word(CliffordWord::generator(i));
  }
  return out;
}

// ------------------------------------------------------------ matrix model

CMatrix CMatrix::identity(int dim) {
  CMatrix m(dim);
  for (int k = 0; k < dim; ++k) m(k, k) = Coeff(1);
  return m;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
  CMatrix r(x.dim_);
  for (int i = 0; i < x.dim_; ++i) {
    for (int k = 0; k < x.dim_; ++k) {
      if (x(i, k).isZero()) continue;
      for (int j = 0; j < x.dim_; ++j) {
        if (!y(k, j).isZero()) r(i, j) += x(i, k) * y(k, j);
      }
    }
  }
  return r;
}

CMatrix operator+(const CMatrix& x, const CMatrix& y) {
  CMatrix r = x;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
  return r;
}

CMatrix CMatrix::scaled(const Coeff& c) const {
  CMatrix r = *this;
  for (auto& v : r.a_) v *= c;
  return r;
}

Coeff CMatrix::trace() const {
  Coeff t(0);
  for (int k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k)
        for (int l = 0; l < b.dim(); ++l) r(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return r;
}

}  // namespace

CliffordMatrixModel::CliffordMatrixModel(int m) : m_(m) {
  CMatrix id = CMatrix::identity(2);
  CMatrix px(2), py(2), pz(2);
  px(0, 1) = Coeff(1);
  px(1, 0) = Coeff(1);
  py(0, 1) = -Coeff::i();
  py(1, 0) = Coeff::i();
  pz(0, 0) = Coeff(1);
  pz(1, 1) = Coeff(-1);
  // Hermitian gamma_{2k-1} = Z..Z X I..I, gamma_{2k} = Z..Z Y I..I; c(e) = i * gamma.
  for (int k = 0; k < m; ++k) {
    for (const CMatrix* p : {&px, &py}) {
      CMatrix g = CMatrix::identity(1);
      for (int slot = 0; slot < m; ++slot) g = kron(g, slot < k ? pz : (slot == k ? *p : id));
      gens_.push_back(g.scaled(Coeff::i()));
    }
  }
}

CMatrix CliffordMatrixModel::word(CliffordWord w) const {
  CMatrix r = CMatrix::identity(dim());
  for (int i : w.generators()) r = r * generator(i);
  return r;
}

CMatrix CliffordMatrixModel::represent(const std::map<CliffordWord, Coeff>& components) const {
  CMatrix r(dim());
  for (const auto& [w, c] : components) r = r + word(w).scaled(c);
  return r;
}

}  // namespace wres
