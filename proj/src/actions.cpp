#include "wres/actions.hpp"

#include "wres/clifford.hpp"
#include "wres/errors.hpp"

namespace wres {

std::string toString(TripleKind kind) {
  switch (kind) {
    case TripleKind::TypeI:
      return "type1";
    case TripleKind::TypeII:
      return "type2";
    case TripleKind::Unperturbed:
      return "unperturbed";
  }
  return "?";
}

TripleKind parseTripleKind(const std::string& name) {
  if (name == "type1") return TripleKind::TypeI;
  if (name == "type2") return TripleKind::TypeII;
  if (name == "unperturbed") return TripleKind::Unperturbed;
  throw std::invalid_argument("unknown triple: " + name);
}

namespace {

Expr connection(int i, int n) {
  Expr s;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      s += Expr::var(JetVar::conn(i, a, b)) * Expr::word(CliffordWord::fromMask((1U << (a - 1)) | (1U << (b - 1))));
  return s;
}

Expr g(int a, int b) { return Expr::var(JetVar::metricInv(a, b)); }

GradedSymbol finish(GradedSymbol s) {
  if (s.mode == Truncation::BasePoint) {
    for (auto& [k, e] : s.parts) e = pruneAtBasePoint(e, s.budget(k));
  }
  std::erase_if(s.parts, [](const auto& p) { return p.second.isZero(); });
  s.validate();
  return s;
}

}  // namespace

GradedSymbol buildD2Symbol(int n, Truncation mode) {
  const Coeff i = Coeff::i();
  std::vector<Expr> sig(n + 1);
  for (int k = 1; k <= n; ++k) sig[k] = connection(k, n);
  // In base-point mode products that vanish beyond the part's budget are never formed.
  auto mul = [&](const Expr& a, const Expr& b, int budget) {
    return mode == Truncation::BasePoint ? mulTruncated(a, b, vanishingOrder, budget) : a * b;
  };

  Expr s1;
  Expr s0 = Expr::var(JetVar::scal()) * Coeff::frac(1, 4);
  for (int mu = 1; mu <= n; ++mu) {
    Expr raised = Expr::var(JetVar::gamma(mu));
    for (int nu = 1; nu <= n; ++nu) {
      raised -= mul(g(mu, nu), sig[nu], 1) * Coeff(2);
      s0 -= mul(g(mu, nu), dX(sig[mu], nu, n), 0);
      s0 -= mul(mul(g(mu, nu), sig[mu], 0), sig[nu], 0);
    }
    s1 += raised * Expr::xi(mu) * i;
    s0 += mul(Expr::var(JetVar::gamma(mu)), sig[mu], 0);
  }

  GradedSymbol out;
  out.top = 2;
  out.mode = mode;
  out.parts[2] = Expr::xiNorm(1);
  out.parts[1] = s1;
  out.parts[0] = s0;
  return finish(out);
}

GradedSymbol buildTripleSymbol(TripleKind kind, int n, Truncation mode) {
  GradedSymbol d2 = buildD2Symbol(n, mode);
  if (kind == TripleKind::Unperturbed) return d2;
  Expr u;
  if (kind == TripleKind::TypeI) {
    u = Expr::var(JetVar::f());
  } else {
    for (int k = 1; k <= n; ++k) u += Expr::var(JetVar::x(k)) * Expr::word(CliffordWord::generator(k));
  }
  GradedSymbol us = functionSymbol(u, mode);
  // The function factor has top order 0; keep its budget aligned with the order-2 result.
  us.top = 0;
  GradedSymbol left = compose(us, d2, 0, n);
  GradedSymbol full = compose(left, us, 0, n);
  // c(X) c(X) = -sum_i (X^i)^2; write the leading part through |X|^2 so it is a unit.
  if (kind == TripleKind::TypeII) full.parts[2] = reduceXNorm(full.parts[2], n);
  return finish(full);
}

Expr canonicalAtX0(const Expr& e, const JetContext& ctx) { return reduceXNorm(atBasePoint(e, ctx), ctx.n()); }

PipelineResult runPipeline(const TripleSpec& spec, bool useOracle) {
  const JetContext& ctx = spec.ctx;
  const int m = ctx.m();
  const int n = ctx.n();
  if (spec.kind == TripleKind::TypeII && ctx.mode() == JetMode::Numeric) {
    Rational norm = 0;
    for (const auto& x : ctx.xValues()->value) norm += x * x;
    if (sgn(norm) == 0) throw ContextError("type2 needs |X|^2 != 0 at the base point");
  }
  PipelineResult r;
  r.symbol = buildTripleSymbol(spec.kind, n, Truncation::BasePoint);
  r.inverse = invert(r.symbol, n);
  r.power = useOracle ? iteratedCompositionPower(r.inverse, m, n) : powerSymbolNeg(r.inverse, m, n);
  r.powerAtX0 = canonicalAtX0(r.power, ctx);
  r.density = traceIntegrate(r.powerAtX0, m);
  r.density.body = reduceXNorm(r.density.body, n);
  return r;
}

Density wresDensity(const TripleSpec& spec) {
  Density d = runPipeline(spec).density;
  d.body = collectScalarCurvature(d.body, spec.ctx.n());
  return d;
}

Expr collectScalarCurvature(const Expr& e, int n) {
  const JetContext generic = JetContext::symbolic(n / 2);
  const Expr scal = scalFromRiem(generic);
  const TermKey probe{{{JetVar::riemRaw(1, 2, 1, 2), 1}}, {}, 0, {}};
  const Coeff probeCoeff = scal.coefficientOf(probe);

  // Group terms by their cofactor of a single curvature component.
  std::map<TermKey, Expr> groups;
  std::vector<Term> rest;
  for (const Term& t : e.terms()) {
    int riemCount = 0;
    JetVar riem = JetVar::f();
    for (const auto& [v, k] : t.key.scalars) {
      if (v.kind() == JetKind::Riem) {
        riemCount += k;
        riem = v;
      }
    }
    if (riemCount != 1) {
      rest.push_back(t);
      continue;
    }
    Term cof = t;
    std::erase_if(cof.key.scalars, [&](const auto& p) { return p.first == riem; });
    Term single{TermKey{{{riem, 1}}, {}, 0, {}}, t.coeff};
    groups[cof.key] += Expr::fromTerm(single);
  }
  Expr out = Expr::fromTerms(std::move(rest));
  for (const auto& [cofKey, lin] : groups) {
    Term cofactor{cofKey, Coeff(1)};
    const Coeff c = lin.coefficientOf(probe) / probeCoeff;
    Expr remainder = lin - scal * c;
    if (!c.isZero()) {
      Term st = cofactor;
      st.key.scalars = multiplyMonomials(st.key.scalars, Monomial{{JetVar::scal(), 1}});
      st.coeff = c;
      out += Expr::fromTerm(st);
    }
    out += remainder * Expr::fromTerm(cofactor);
  }
  return out;
}

Expr expandScalarCurvature(const Expr& e, const JetContext& ctx) {
  return substitute(e, [&](JetVar v) -> std::optional<Expr> {
    if (v.kind() == JetKind::Scal && v.derivOrder() == 0) return scalFromRiem(ctx);
    return std::nullopt;
  });
}

std::vector<Rational> interpolateCoefficients(const std::vector<std::pair<int, Rational>>& points, int maxDegree) {
  if (points.empty()) throw InterpolationResidual("no interpolation points");
  const int deg = std::min<int>(maxDegree, static_cast<int>(points.size()) - 1);
  const int k = deg + 1;
  // Solve the Vandermonde system on the first k points by exact elimination.
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
  for (int r = 0; r < k; ++r) {
    Rational p = 1;
    for (int c = 0; c < k; ++c) {
      a[r][c] = p;
      p *= points[r].first;
    }
    a[r][k] = points[r].second;
  }
  for (int c = 0; c < k; ++c) {
    int piv = c;
    while (piv < k && sgn(a[piv][c]) == 0) ++piv;
    if (piv == k) throw InterpolationResidual("repeated interpolation abscissa");
    std::swap(a[c], a[piv]);
    for (int r = 0; r < k; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (int j = c; j <= k; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> coef(k);
  for (int c = 0; c < k; ++c) coef[c] = a[c][k] / a[c][c];
  for (std::size_t r = k; r < points.size(); ++r) {
    Rational v = 0;
    Rational p = 1;
    for (int c = 0; c < k; ++c) {
      v += coef[c] * p;
      p *= points[r].first;
    }
    if (v != points[r].second) {
      throw InterpolationResidual("point m=" + std::to_string(points[r].first) + " is off the degree-" +
                                  std::to_string(deg) + " interpolant");
    }
  }
  while (coef.size() > 1 && sgn(coef.back()) == 0) coef.pop_back();
  return coef;
}

}  // namespace wres
