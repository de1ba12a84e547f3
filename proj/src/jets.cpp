#include "wres/jets.hpp"

#include <random>
#include <sstream>

#include "wres/errors.hpp"

namespace wres {

// ------------------------------------------------------------ RiemannTensor

RiemannTensor RiemannTensor::fromEntries(int n, const std::vector<Entry>& entries) {
  RiemannTensor r(n);
  std::vector<bool> set(r.data_.size(), false);
  auto assign = [&](int a, int b, int c, int d, const Rational& v, const Entry& src, const char* identity) {
    std::size_t off = r.offset(a, b, c, d);
    if (set[off] && r.data_[off] != v) {
      std::ostringstream msg;
      msg << "riem entry [" << src.a << "," << src.b << "," << src.c << "," << src.d << "] conflicts with "
          << identity;
      throw ContextError(msg.str());
    }
    set[off] = true;
    r.data_[off] = v;
  };
  for (const Entry& e : entries) {
    for (int i : {e.a, e.b, e.c, e.d}) {
      if (i < 1 || i > n) throw ContextError("riem index out of range 1.." + std::to_string(n));
    }
    const Rational& v = e.value;
    if ((e.a == e.b || e.c == e.d) && sgn(v) != 0) {
      throw ContextError("riem entry violates antisymmetry R_abcd = -R_bacd = -R_abdc");
    }
    assign(e.a, e.b, e.c, e.d, v, e, "R_abcd = R_abcd");
    assign(e.b, e.a, e.c, e.d, -v, e, "antisymmetry R_abcd = -R_bacd");
    assign(e.a, e.b, e.d, e.c, -v, e, "antisymmetry R_abcd = -R_abdc");
    assign(e.b, e.a, e.d, e.c, v, e, "antisymmetry R_abcd = R_badc");
    assign(e.c, e.d, e.a, e.b, v, e, "pair symmetry R_abcd = R_cdab");
    assign(e.d, e.c, e.a, e.b, -v, e, "pair symmetry R_abcd = -R_dcab");
    assign(e.c, e.d, e.b, e.a, -v, e, "pair symmetry R_abcd = -R_cdba");
    assign(e.d, e.c, e.b, e.a, v, e, "pair symmetry R_abcd = R_dcba");
  }
  r.validate();
  return r;
}

RiemannTensor RiemannTensor::kulkarniNomizu(int n, const std::vector<Rational>& h, const std::vector<Rational>& k) {
  auto H = [&](int i, int j) -> const Rational& { return h[static_cast<std::size_t>(i - 1) * n + (j - 1)]; };
  auto K = [&](int i, int j) -> const Rational& { return k[static_cast<std::size_t>(i - 1) * n + (j - 1)]; };
  RiemannTensor r(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          r.ref(a, b, c, d) = H(a, c) * K(b, d) + H(b, d) * K(a, c) - H(a, d) * K(b, c) - H(b, c) * K(a, d);
  return r;
}

RiemannTensor RiemannTensor::constantCurvature(int n, const Rational& kappa) {
  std::vector<Rational> id(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = 1;
  std::vector<Rational> half = id;
  for (auto& v : half) v *= kappa / 2;
  return kulkarniNomizu(n, id, half);
}

RiemannTensor RiemannTensor::operator+(const RiemannTensor& o) const {
  RiemannTensor r = *this;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

void RiemannTensor::validate() const {
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b)
      for (int c = 1; c <= n_; ++c)
        for (int d = 1; d <= n_; ++d) {
          const Rational& v = at(a, b, c, d);
          if (at(b, a, c, d) != -v) throw ContextError("riem violates antisymmetry R_abcd = -R_bacd");
          if (at(a, b, d, c) != -v) throw ContextError("riem violates antisymmetry R_abcd = -R_abdc");
          if (at(c, d, a, b) != v) throw ContextError("riem violates pair symmetry R_abcd = R_cdab");
          if (v + at(a, c, d, b) + at(a, d, b, c) != 0) {
            std::ostringstream msg;
            msg << "riem violates the first Bianchi identity R_abcd + R_acdb + R_adbc = 0 at (" << a << "," << b
                << "," << c << "," << d << ")";
            throw ContextError(msg.str());
          }
        }
}

// --------------------------------------------------------------- JetContext

JetContext JetContext::symbolic(int m) { return JetContext(m, std::nullopt, std::nullopt, std::nullopt); }

JetContext::JetContext(int m, std::optional<RiemannTensor> riem, std::optional<FJets> f, std::optional<XJets> x)
    : m_(m), riem_(std::move(riem)), f_(std::move(f)), x_(std::move(x)) {
  if (m < 2 || 2 * m > XiMonomial::kMaxIndex) throw ContextError("m must lie in 2..8");
  const int n = 2 * m;
  const auto nn = static_cast<std::size_t>(n);
  if (riem_) {
    if (riem_->n() != n) throw ContextError("riem dimension does not match 2m");
    riem_->validate();
  }
  if (f_) {
    if (f_->grad.empty()) f_->grad.assign(nn, Rational(0));
    if (f_->hess.empty()) f_->hess.assign(nn * nn, Rational(0));
    if (f_->grad.size() != nn || f_->hess.size() != nn * nn) throw ContextError("fJets have wrong dimensions");
    if (sgn(f_->value) == 0) throw ContextError("f must be nonzero at the base point");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (f_->hess[a * nn + b] != f_->hess[b * nn + a]) throw ContextError("f Hessian must be symmetric");
  }
  if (x_) {
    if (x_->value.size() != nn) throw ContextError("xJets.value needs 2m entries");
    if (x_->grad.empty()) x_->grad.assign(nn * nn, Rational(0));
    if (x_->hess.empty()) x_->hess.assign(nn * nn * nn, Rational(0));
    if (x_->grad.size() != nn * nn || x_->hess.size() != nn * nn * nn) throw ContextError("xJets have wrong dimensions");
    Rational norm = 0;
    for (const auto& v : x_->value) norm += v * v;
    if (sgn(norm) == 0) throw ContextError("|X|^2 must be nonzero at the base point");
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (x_->hess[(i * nn + a) * nn + b] != x_->hess[(i * nn + b) * nn + a]) {
            throw ContextError("X second jets must be symmetric in the derivative indices");
          }
  }
}

JetMode JetContext::mode() const { return (riem_ && f_ && x_) ? JetMode::Numeric : JetMode::Symbolic; }

Expr JetContext::riem(int a, int b, int c, int d) const {
  if (riem_) return Expr(Coeff(riem_->at(a, b, c, d)));
  auto [sign, v] = canonicalRiem(a, b, c, d);
  if (sign == 0) return Expr();
  return Expr::var(v) * Coeff(static_cast<long>(sign));
}

namespace {

Rational jsonRational(const nlohmann::json& v) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parseRational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ContextError(e.what());
  }
  throw ContextError("expected an integer or a \"p/q\" string, got " + v.dump());
}

std::vector<Rational> jsonVector(const nlohmann::json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n) throw ContextError(std::string(what) + " must be an array of length " + std::to_string(n));
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(jsonRational(x));
  return out;
}

std::vector<Rational> jsonFlatten(const nlohmann::json& v, std::size_t n, int depth, const char* what) {
  if (depth == 1) return jsonVector(v, n, what);
  if (!v.is_array() || v.size() != n) throw ContextError(std::string(what) + " has wrong shape");
  std::vector<Rational> out;
  for (const auto& row : v) {
    auto part = jsonFlatten(row, n, depth - 1, what);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

nlohmann::json toJsonArray(const std::vector<Rational>& flat, std::size_t n, int depth, std::size_t offset = 0) {
  nlohmann::json arr = nlohmann::json::array();
  std::size_t stride = 1;
  for (int k = 1; k < depth; ++k) stride *= n;
  for (std::size_t i = 0; i < n; ++i) {
    if (depth == 1) {
      arr.push_back(toString(flat[offset + i]));
    } else {
      arr.push_back(toJsonArray(flat, n, depth - 1, offset + i * stride));
    }
  }
  return arr;
}

}  // namespace

JetContext JetContext::fromJson(const nlohmann::json& doc) {
  try {
    return parseContext(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ContextError(std::string("malformed context: ") + e.what());
  }
}

JetContext JetContext::parseContext(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("m") || !doc["m"].is_number_integer()) {
    throw ContextError("context must be an object with integer field m");
  }
  const int m = doc["m"].get<int>();
  if (m < 2 || m > 8) throw ContextError("m must lie in 2..8");
  const int n = 2 * m;
  const auto nn = static_cast<std::size_t>(n);
  std::string mode = doc.value("mode", std::string("numeric"));
  if (mode != "numeric" && mode != "symbolic") throw ContextError("mode must be numeric or symbolic");
  const bool numeric = mode == "numeric";

  std::optional<RiemannTensor> riem;
  if (doc.contains("riem")) {
    std::vector<RiemannTensor::Entry> entries;
    for (const auto& e : doc["riem"]) {
      if (!e.is_array() || e.size() != 5) throw ContextError("riem entries must be [a,b,c,d,value]");
      entries.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>(), jsonRational(e[4])});
    }
    riem = RiemannTensor::fromEntries(n, entries);
  } else if (numeric) {
    riem = RiemannTensor(n);
  }

  std::optional<FJets> f;
  if (doc.contains("fJets")) {
    const auto& fj = doc["fJets"];
    FJets v;
    if (fj.contains("value")) v.value = jsonRational(fj["value"]);
    if (fj.contains("grad")) v.grad = jsonVector(fj["grad"], nn, "fJets.grad");
    if (fj.contains("hess")) v.hess = jsonFlatten(fj["hess"], nn, 2, "fJets.hess");
    f = v;
  } else if (numeric) {
    f = FJets{};
  }

  std::optional<XJets> x;
  if (doc.contains("xJets")) {
    const auto& xj = doc["xJets"];
    XJets v;
    v.value = jsonVector(xj.at("value"), nn, "xJets.value");
    if (xj.contains("grad")) v.grad = jsonFlatten(xj["grad"], nn, 2, "xJets.grad");
    if (xj.contains("hess")) v.hess = jsonFlatten(xj["hess"], nn, 3, "xJets.hess");
    x = v;
  } else if (numeric) {
    XJets v;
    v.value.assign(nn, Rational(0));
    v.value[0] = 1;
    x = v;
  }
  return JetContext(m, std::move(riem), std::move(f), std::move(x));
}

nlohmann::json JetContext::toJson() const {
  nlohmann::json doc;
  doc["m"] = m_;
  doc["mode"] = mode() == JetMode::Numeric ? "numeric" : "symbolic";
  const int n = this->n();
  const auto nn = static_cast<std::size_t>(n);
  if (riem_) {
    nlohmann::json entries = nlohmann::json::array();
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = c + 1; d <= n; ++d) {
            if (std::pair(a, b) > std::pair(c, d)) continue;
            const Rational& v = riem_->at(a, b, c, d);
            if (sgn(v) != 0) entries.push_back({a, b, c, d, toString(v)});
          }
    doc["riem"] = entries;
  }
  if (f_) {
    doc["fJets"] = {{"value", toString(f_->value)}, {"grad", toJsonArray(f_->grad, nn, 1)},
                    {"hess", toJsonArray(f_->hess, nn, 2)}};
  }
  if (x_) {
    doc["xJets"] = {{"value", toJsonArray(x_->value, nn, 1)}, {"grad", toJsonArray(x_->grad, nn, 2)},
                    {"hess", toJsonArray(x_->hess, nn, 3)}};
  }
  return doc;
}

JetContext randomNumericContext(int m, std::uint64_t seed) {
  const int n = 2 * m;
  const auto nn = static_cast<std::size_t>(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  auto q = [&]() {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  auto symmetric = [&]() {
    std::vector<Rational> h(nn * nn);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) h[a * nn + b] = h[b * nn + a] = q();
    return h;
  };
  RiemannTensor riem = RiemannTensor::kulkarniNomizu(n, symmetric(), symmetric()) +
                       RiemannTensor::kulkarniNomizu(n, symmetric(), symmetric());
  FJets f;
  do {
    f.value = q();
  } while (sgn(f.value) == 0);
  for (int a = 0; a < n; ++a) f.grad.push_back(q());
  f.hess = symmetric();
  XJets x;
  Rational norm;
  do {
    x.value.clear();
    norm = 0;
    for (int i = 0; i < n; ++i) {
      x.value.push_back(q());
      norm += x.value.back() * x.value.back();
    }
  } while (sgn(norm) == 0);
  for (std::size_t k = 0; k < nn * nn; ++k) x.grad.push_back(q());
  x.hess.assign(nn * nn * nn, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) x.hess[(i * nn + a) * nn + b] = x.hess[(i * nn + b) * nn + a] = q();
  return JetContext(m, std::move(riem), std::move(f), std::move(x));
}

// ------------------------------------------------------- normal coordinates

Expr metricInvSecondJet(const JetContext& ctx, int mu, int nu, int alpha, int beta) {
  const int n = ctx.n();
  for (int i : {mu, nu, alpha, beta}) {
    if (i < 1 || i > n) throw IndexOutOfRange("metric jet index out of range");
  }
  return (ctx.riem(alpha, mu, beta, nu) + ctx.riem(alpha, nu, beta, mu)) * Coeff::frac(1, 3);
}

Expr connFirstJet(const JetContext& ctx, int a, int b) {
  const int n = ctx.n();
  if (a < 1 || a > n || b < 1 || b > n) throw IndexOutOfRange("connection jet index out of range");
  Expr out;
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t) {
      // R_abst c_s c_t + R_abts c_t c_s = 2 R_abst c_s c_t for s < t
      out += ctx.riem(a, b, s, t) * Expr::word(CliffordWord::generator(s)) *
             Expr::word(CliffordWord::generator(t)) * Coeff::frac(-1, 4);
    }
  return out;
}

Expr gammaFirstJet(const JetContext& ctx, int a, int k) {
  Expr out;
  for (int i = 1; i <= ctx.n(); ++i) {
    out -= metricInvSecondJet(ctx, a, i, i, k);
    out += metricInvSecondJet(ctx, a, k, i, i) * Coeff::frac(1, 2);
  }
  return out;
}

Expr scalFromRiem(const JetContext& ctx) {
  Expr s;
  for (int mu = 1; mu <= ctx.n(); ++mu)
    for (int a = 1; a <= ctx.n(); ++a) s += ctx.riem(mu, a, mu, a);
  return s;
}

Expr laplacian(const Expr& u, int n) {
  Expr out;
  for (int j = 1; j <= n; ++j) out -= dX(dX(u, j, n), j, n);
  return out;
}

Expr gradNormSq(const Expr& u, int n) {
  Expr out;
  for (int j = 1; j <= n; ++j) {
    Expr d = dX(u, j, n);
    out += d * d;
  }
  return out;
}

namespace {

int varVanishingOrder(JetVar v) {
  const int d = v.derivOrder();
  switch (v.kind()) {
    case JetKind::MetricInv:
      if (d == 0) return v.index(0) == v.index(1) ? 0 : 2;
      return d == 1 ? 1 : 0;
    case JetKind::Conn:
    case JetKind::Gamma:
      return d == 0 ? 1 : 0;
    default:
      return 0;
  }
}

bool isDiagonalMetric(JetVar v) {
  return v.kind() == JetKind::MetricInv && v.derivOrder() == 0 && v.index(0) == v.index(1);
}

}  // namespace

int vanishingOrder(const Term& t) {
  int ord = 0;
  for (const auto& [v, k] : t.key.scalars) ord += k * varVanishingOrder(v);
  return ord;
}

Expr pruneAtBasePoint(const Expr& e, int budget) {
  std::vector<Term> kept;
  bool changed = false;
  for (const Term& t : e.terms()) {
    if (vanishingOrder(t) > budget) {
      changed = true;
      continue;
    }
    if (budget < 2) {
      bool hasDiag = false;
      for (const auto& [v, k] : t.key.scalars) hasDiag = hasDiag || isDiagonalMetric(v);
      if (hasDiag) {
        Term u = t;
        std::erase_if(u.key.scalars, [](const auto& p) { return isDiagonalMetric(p.first); });
        kept.push_back(std::move(u));
        changed = true;
        continue;
      }
    }
    kept.push_back(t);
  }
  if (!changed) return e;
  return Expr::fromTerms(std::move(kept));
}

Expr atBasePoint(const Expr& e, const JetContext& ctx) {
  const int n = ctx.n();
  const auto nn = static_cast<std::size_t>(n);
  return substitute(e, [&](JetVar v) -> std::optional<Expr> {
    const std::vector<int> d = v.deriv();
    const int order = static_cast<int>(d.size());
    auto tooDeep = [&]() { return JetOrderExceeded("no base-point value for jet " + v.name()); };
    switch (v.kind()) {
      case JetKind::MetricInv:
        if (order == 0) return Expr(v.index(0) == v.index(1) ? 1 : 0);
        if (order == 1) return Expr();
        if (order == 2) return metricInvSecondJet(ctx, d[0], d[1], v.index(0), v.index(1));
        throw tooDeep();
      case JetKind::Conn:
        if (order == 0) return Expr();
        if (order == 1) return ctx.riem(d[0], v.index(0), v.index(1), v.index(2)) * Coeff::frac(-1, 4);
        throw tooDeep();
      case JetKind::Gamma:
        if (order == 0) return Expr();
        if (order == 1) return gammaFirstJet(ctx, d[0], v.index(0));
        throw tooDeep();
      case JetKind::Scal:
        if (order == 0) return scalFromRiem(ctx);
        throw tooDeep();
      case JetKind::F:
        if (order > 2) throw tooDeep();
        if (!ctx.fValues()) return std::nullopt;
        if (order == 0) return Expr(Coeff(ctx.fValues()->value));
        if (order == 1) return Expr(Coeff(ctx.fValues()->grad[d[0] - 1]));
        return Expr(Coeff(ctx.fValues()->hess[(d[0] - 1) * nn + (d[1] - 1)]));
      case JetKind::X: {
        if (order > 2) throw tooDeep();
        if (!ctx.xValues()) return std::nullopt;
        const auto i = static_cast<std::size_t>(v.index(0) - 1);
        if (order == 0) return Expr(Coeff(ctx.xValues()->value[i]));
        if (order == 1) return Expr(Coeff(ctx.xValues()->grad[i * nn + (d[0] - 1)]));
        return Expr(Coeff(ctx.xValues()->hess[(i * nn + (d[0] - 1)) * nn + (d[1] - 1)]));
      }
      case JetKind::XNormSq: {
        if (!ctx.xValues()) return std::nullopt;
        Rational norm = 0;
        for (const auto& x : ctx.xValues()->value) norm += x * x;
        return Expr(Coeff(norm));
      }
      case JetKind::Riem:
        if (!ctx.riemValues()) return std::nullopt;
        return Expr(Coeff(ctx.riemValues()->at(v.index(0), v.index(1), v.index(2), v.index(3))));
      default:
        return std::nullopt;
    }
  });
}

Expr reduceXNorm(const Expr& e, int n) {
  const JetVar x1 = JetVar::x(1);
  Expr replacement = Expr::var(JetVar::xNormSq());
  for (int i = 2; i <= n; ++i) replacement -= Expr::var(JetVar::x(i), 2);

  Expr done;
  std::vector<Term> pending(e.terms().begin(), e.terms().end());
  while (!pending.empty()) {
    std::vector<Term> ready;
    std::vector<Term> next;
    for (Term& t : pending) {
      int k = exponentOf(t.key.scalars, x1);
      if (k < 2) {
        ready.push_back(std::move(t));
        continue;
      }
      Term rest = t;
      rest.key.scalars = multiplyMonomials(t.key.scalars, Monomial{{x1, -2}});
      for (const Term& r : replacement.terms()) next.push_back(multiplyTerms(rest, r));
    }
    done += Expr::fromTerms(std::move(ready));
    pending = Expr::fromTerms(std::move(next)).terms();
  }
  return done;
}

JetAssignment assignmentFor(const JetContext& numeric, const std::vector<Rational>& xi) {
  if (numeric.mode() != JetMode::Numeric) throw ContextError("assignmentFor needs a numeric context");
  const int n = numeric.n();
  const auto nn = static_cast<std::size_t>(n);
  JetAssignment a;
  const FJets& f = *numeric.fValues();
  const XJets& x = *numeric.xValues();
  a.vars[JetVar::f()] = Coeff(f.value);
  for (int p = 1; p <= n; ++p) {
    a.vars[JetVar::f().withDeriv(p)] = Coeff(f.grad[p - 1]);
    for (int q = p; q <= n; ++q) a.vars[JetVar::f().withDeriv(p).withDeriv(q)] = Coeff(f.hess[(p - 1) * nn + (q - 1)]);
  }
  Rational norm = 0;
  for (int i = 1; i <= n; ++i) {
    const auto ii = static_cast<std::size_t>(i - 1);
    a.vars[JetVar::x(i)] = Coeff(x.value[ii]);
    norm += x.value[ii] * x.value[ii];
    for (int p = 1; p <= n; ++p) {
      a.vars[JetVar::x(i).withDeriv(p)] = Coeff(x.grad[ii * nn + (p - 1)]);
      for (int q = p; q <= n; ++q) {
        a.vars[JetVar::x(i).withDeriv(p).withDeriv(q)] = Coeff(x.hess[(ii * nn + (p - 1)) * nn + (q - 1)]);
      }
    }
  }
  a.vars[JetVar::xNormSq()] = Coeff(norm);
  Rational s = 0;
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) s += numeric.riemValues()->at(p, q, p, q);
  a.vars[JetVar::scal()] = Coeff(s);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int r = 1; r <= n; ++r)
        for (int t = r + 1; t <= n; ++t) {
          a.vars[JetVar::riemRaw(p, q, r, t)] = Coeff(numeric.riemValues()->at(p, q, r, t));
        }
  a.vars[JetVar::trId()] = Coeff(Rational(1L << numeric.m()));
  Rational xiNorm = 0;
  for (const auto& v : xi) {
    a.xi.emplace_back(v);
    xiNorm += v * v;
  }
  a.xiNormSq = Coeff(xiNorm);
  return a;
}

}  // namespace wres
