#include "wres/expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "wres/errors.hpp"

namespace wres {

// ---------------------------------------------------------------- XiMonomial

XiMonomial XiMonomial::single(int index) {
  if (index < 1 || index > kMaxIndex) throw IndexOutOfRange("xi index out of range: " + std::to_string(index));
  return XiMonomial(std::uint64_t{1} << (4 * (index - 1)));
}

int XiMonomial::degree() const {
  int d = 0;
  for (std::uint64_t p = packed_; p != 0; p >>= 4) d += static_cast<int>(p & 15U);
  return d;
}

std::vector<int> XiMonomial::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= kMaxIndex; ++i) {
    for (int k = count(i); k > 0; --k) out.push_back(i);
  }
  return out;
}

XiMonomial XiMonomial::times(XiMonomial other) const {
  for (int i = 1; i <= kMaxIndex; ++i) {
    if (count(i) + other.count(i) > kMaxExponent) throw std::overflow_error("xi exponent overflow");
  }
  return XiMonomial(packed_ + other.packed_);
}

// ------------------------------------------------------------------ Monomial

Monomial multiplyMonomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) out.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

int exponentOf(const Monomial& m, JetVar v) {
  auto it = std::lower_bound(m.begin(), m.end(), v, [](const auto& p, JetVar x) { return p.first < x; });
  return (it != m.end() && it->first == v) ? it->second : 0;
}

namespace {

Monomial withExponentShift(const Monomial& m, JetVar v, int delta) {
  return multiplyMonomials(m, Monomial{{v, delta}});
}

}  // namespace

// ---------------------------------------------------------------------- Expr

Expr::Expr(Coeff c) {
  if (!c.isZero()) terms_.push_back(Term{TermKey{}, std::move(c)});
}

Expr Expr::var(JetVar v, int exponent) {
  if (exponent == 0) return Expr(1);
  Term t;
  t.key.scalars = {{v, exponent}};
  t.coeff = Coeff(1);
  return fromTerm(std::move(t));
}

Expr Expr::xi(int index) {
  Term t;
  t.key.xi = XiMonomial::single(index);
  t.coeff = Coeff(1);
  return fromTerm(std::move(t));
}

Expr Expr::xiNorm(int p) {
  Term t;
  t.key.xiNormPow = p;
  t.coeff = Coeff(1);
  return fromTerm(std::move(t));
}

Expr Expr::word(CliffordWord w) {
  Term t;
  t.key.cliff = w;
  t.coeff = Coeff(1);
  return fromTerm(std::move(t));
}

Expr Expr::fromTerm(Term t) {
  Expr e;
  if (!t.coeff.isZero()) e.terms_.push_back(std::move(t));
  return e;
}

Expr Expr::fromTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  Expr e;
  e.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!e.terms_.empty() && e.terms_.back().key == t.key) {
      e.terms_.back().coeff += t.coeff;
    } else {
      if (!e.terms_.empty() && e.terms_.back().coeff.isZero()) e.terms_.pop_back();
      e.terms_.push_back(std::move(t));
    }
  }
  if (!e.terms_.empty() && e.terms_.back().coeff.isZero()) e.terms_.pop_back();
  return e;
}

Coeff Expr::coefficientOf(const TermKey& key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const TermKey& k) { return t.key < k; });
  return (it != terms_.end() && it->key == key) ? it->coeff : Coeff(0);
}

namespace {

std::vector<Term> mergeSorted(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->key < j->key)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->key < i->key) {
      out.push_back(*j++);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Coeff c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
      if (!c.isZero()) out.push_back(Term{i->key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Expr& Expr::operator+=(const Expr& o) {
  if (o.terms_.empty()) return *this;
  terms_ = mergeSorted(terms_, o.terms_, false);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  if (o.terms_.empty()) return *this;
  terms_ = mergeSorted(terms_, o.terms_, true);
  return *this;
}

Expr& Expr::operator*=(const Coeff& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Term multiplyTerms(const Term& a, const Term& b) {
  Term t;
  t.key.scalars = multiplyMonomials(a.key.scalars, b.key.scalars);
  t.key.xi = a.key.xi.times(b.key.xi);
  t.key.xiNormPow = a.key.xiNormPow + b.key.xiNormPow;
  auto [sign, w] = multiply(a.key.cliff, b.key.cliff);
  t.key.cliff = w;
  t.coeff = a.coeff * b.coeff;
  if (sign < 0) t.coeff = -t.coeff;
  return t;
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.isZero() || b.isZero()) return Expr();
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back(multiplyTerms(x, y));
  }
  return Expr::fromTerms(std::move(prod));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].key == b.terms_[k].key) || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
  }
  return true;
}

Expr Expr::pow(int e) const {
  if (e == 0) return Expr(1);
  if (e < 0) {
    if (terms_.size() != 1 || !terms_[0].key.xi.empty() || !terms_[0].key.cliff.empty()) {
      throw std::domain_error("negative power of a non-monomial expression: " + str());
    }
    Term t = terms_[0];
    for (auto& [v, k] : t.key.scalars) k = -k;
    t.key.xiNormPow = -t.key.xiNormPow;
    t.coeff = Coeff(1) / t.coeff;
    return fromTerm(std::move(t)).pow(-e);
  }
  Expr r(1);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

Expr Expr::homogeneousPart(int order) const {
  return filter([order](const Term& t) { return t.order() == order; });
}

std::vector<int> Expr::orders() const {
  std::vector<int> out;
  for (const auto& t : terms_) out.push_back(t.order());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Expr Expr::filter(const std::function<bool(const Term&)>& keep) const {
  Expr e;
  for (const auto& t : terms_) {
    if (keep(t)) e.terms_.push_back(t);
  }
  return e;
}

bool Expr::hasClifford() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return !t.key.cliff.empty(); });
}

bool Expr::isReal() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.isReal(); });
}

std::string Expr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    if (k) out += " + ";
    out += t.coeff.str();
    for (const auto& [v, e] : t.key.scalars) {
      out += "*" + v.name();
      if (e != 1) out += "^" + std::to_string(e);
    }
    for (int i : t.key.xi.indices()) out += "*xi" + std::to_string(i);
    if (t.key.xiNormPow != 0) out += "*|xi|^" + std::to_string(2 * t.key.xiNormPow);
    if (!t.key.cliff.empty()) out += "*" + t.key.cliff.str();
  }
  return out;
}

Expr mulTruncated(const Expr& a, const Expr& b, const std::function<int(const Term&)>& weight, int budget) {
  std::vector<std::pair<int, const Term*>> wa;
  std::vector<std::pair<int, const Term*>> wb;
  for (const auto& t : a.terms()) {
    int w = weight(t);
    if (w <= budget) wa.emplace_back(w, &t);
  }
  for (const auto& t : b.terms()) {
    int w = weight(t);
    if (w <= budget) wb.emplace_back(w, &t);
  }
  std::vector<Term> prod;
  for (const auto& [w1, x] : wa) {
    for (const auto& [w2, y] : wb) {
      if (w1 + w2 <= budget) prod.push_back(multiplyTerms(*x, *y));
    }
  }
  return Expr::fromTerms(std::move(prod));
}

// --------------------------------------------------------------- derivatives

namespace {

Term scaled(Term t, const Coeff& c) {
  t.coeff *= c;
  return t;
}

}  // namespace

Expr dX(const Expr& e, int a, int n) {
  std::vector<Term> out;
  for (const Term& t : e.terms()) {
    for (const auto& [v, k] : t.key.scalars) {
      switch (v.kind()) {
        case JetKind::TrId:
          break;
        case JetKind::Riem:
          throw JetOrderExceeded("curvature components are point values and carry no derivatives");
        case JetKind::XNormSq: {
          // d(N^k) = k N^(k-1) * 2 sum_i X^i X^i_{;a}
          Term base = t;
          base.key.scalars = withExponentShift(t.key.scalars, v, -1);
          base.coeff *= Coeff(2L * k);
          for (int i = 1; i <= n; ++i) {
            Term u = base;
            u.key.scalars = multiplyMonomials(u.key.scalars, Monomial{{JetVar::x(i), 1}});
            u.key.scalars = multiplyMonomials(u.key.scalars, Monomial{{JetVar::x(i).withDeriv(a), 1}});
            out.push_back(std::move(u));
          }
          break;
        }
        default: {
          Term u = t;
          u.key.scalars = withExponentShift(t.key.scalars, v, -1);
          u.key.scalars = multiplyMonomials(u.key.scalars, Monomial{{v.withDeriv(a), 1}});
          u.coeff *= Coeff(static_cast<long>(k));
          out.push_back(std::move(u));
        }
      }
    }
    if (t.key.xiNormPow != 0) {
      // d|xi|^(2p) = p |xi|^(2p-2) sum_{alpha,beta} (d_a g^{alpha beta}) xi_alpha xi_beta
      const int p = t.key.xiNormPow;
      for (int al = 1; al <= n; ++al) {
        for (int be = al; be <= n; ++be) {
          Term u = t;
          u.key.xiNormPow = p - 1;
          u.key.xi = u.key.xi.times(XiMonomial::single(al)).times(XiMonomial::single(be));
          u.key.scalars = multiplyMonomials(u.key.scalars, Monomial{{JetVar::metricInv(al, be).withDeriv(a), 1}});
          u.coeff *= Coeff(static_cast<long>(al == be ? p : 2 * p));
          out.push_back(std::move(u));
        }
      }
    }
  }
  return Expr::fromTerms(std::move(out));
}

Expr dXi(const Expr& e, int mu, int n) {
  std::vector<Term> out;
  for (const Term& t : e.terms()) {
    int c = t.key.xi.count(mu);
    if (c > 0) {
      Term u = t;
      u.key.xi = t.key.xi.dropOne(mu);
      out.push_back(scaled(std::move(u), Coeff(static_cast<long>(c))));
    }
    if (t.key.xiNormPow != 0) {
      // xi^mu = sum_nu g^{mu nu} xi_nu
      for (int nu = 1; nu <= n; ++nu) {
        Term u = t;
        u.key.xiNormPow = t.key.xiNormPow - 1;
        u.key.xi = t.key.xi.times(XiMonomial::single(nu));
        u.key.scalars = multiplyMonomials(u.key.scalars, Monomial{{JetVar::metricInv(mu, nu), 1}});
        out.push_back(scaled(std::move(u), Coeff(2L * t.key.xiNormPow)));
      }
    }
  }
  return Expr::fromTerms(std::move(out));
}

Expr substitute(const Expr& e, const std::function<std::optional<Expr>(JetVar)>& map) {
  std::map<JetVar, std::optional<Expr>> cache;
  auto lookup = [&](JetVar v) -> const std::optional<Expr>& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, map(v)).first;
    return it->second;
  };
  // Collect every product term first and merge once; repeated += is quadratic.
  std::vector<Term> out;
  for (const Term& t : e.terms()) {
    Term rest = t;
    rest.key.scalars.clear();
    bool any = false;
    bool zero = false;
    Expr factor(1);
    for (const auto& [v, k] : t.key.scalars) {
      const auto& sub = lookup(v);
      if (sub) {
        any = true;
        if (sub->isZero() && k > 0) {
          zero = true;
          break;
        }
        factor = factor * sub->pow(k);
      } else {
        rest.key.scalars.emplace_back(v, k);
      }
    }
    if (zero) continue;
    if (!any) {
      out.push_back(t);
      continue;
    }
    for (const Term& f : factor.terms()) out.push_back(multiplyTerms(f, rest));
  }
  return Expr::fromTerms(std::move(out));
}

namespace {

Coeff evalScalarPart(const Term& t, const JetAssignment& a) {
  Coeff v = t.coeff;
  for (const auto& [var, k] : t.key.scalars) {
    auto it = a.vars.find(var);
    if (it == a.vars.end()) throw UnboundVariable(var.name());
    v *= it->second.pow(k);
  }
  for (int i = 1; i <= XiMonomial::kMaxIndex; ++i) {
    int c = t.key.xi.count(i);
    if (c == 0) continue;
    if (static_cast<int>(a.xi.size()) < i) throw UnboundVariable("xi" + std::to_string(i));
    v *= a.xi[i - 1].pow(c);
  }
  if (t.key.xiNormPow != 0) {
    if (!a.xiNormSq) throw UnboundVariable("|xi|^2");
    v *= a.xiNormSq->pow(t.key.xiNormPow);
  }
  return v;
}

}  // namespace

Coeff evalNumeric(const Expr& e, const JetAssignment& assignment) {
  Coeff sum(0);
  for (const Term& t : e.terms()) {
    if (!t.key.cliff.empty()) throw NonScalarClifford();
    sum += evalScalarPart(t, assignment);
  }
  return sum;
}

std::map<CliffordWord, Coeff> evalCliffordComponents(const Expr& e, const JetAssignment& assignment) {
  std::map<CliffordWord, Coeff> out;
  for (const Term& t : e.terms()) out[t.key.cliff] += evalScalarPart(t, assignment);
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.isZero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace wres
