#include <doctest.h>

#include "wres/actions.hpp"
#include "wres/errors.hpp"

using namespace wres;

namespace {

Expr scal() { return Expr::var(JetVar::scal()); }
Expr f(int e) { return Expr::var(JetVar::f(), e); }

JetContext withFlatJets(const JetContext& base, const Rational& fValue, std::vector<Rational> x) {
  const int n = base.n();
  FJets fj{fValue, std::vector<Rational>(n), std::vector<Rational>(n * n)};
  XJets xj{std::move(x), std::vector<Rational>(n * n), std::vector<Rational>(n * n * n)};
  return JetContext(base.m(), base.riemValues(), fj, xj);
}

}  // namespace

TEST_CASE("unperturbed density is -(m-1)/12 s") {
  for (int m : {2, 3, 4}) {
    Density d = wresDensity(TripleSpec{TripleKind::Unperturbed, JetContext::symbolic(m)});
    CHECK(d.m == m);
    CHECK(d.body == scal() * Coeff::frac(-(m - 1), 12));
  }
}

TEST_CASE("type I density matches the printed three-term formula") {
  for (int m : {2, 3, 4}) {
    JetContext ctx = JetContext::symbolic(m);
    Density d = runPipeline(TripleSpec{TripleKind::TypeI, ctx}).density;
    CHECK(d.body == canonicalAtX0(printed::fTripleDensity(ctx), ctx));
  }
}

TEST_CASE("type I at m = 2 keeps only the curvature term") {
  Density d = wresDensity(TripleSpec{TripleKind::TypeI, JetContext::symbolic(2)});
  CHECK(d.body == f(-2) * scal() * Coeff::frac(-1, 12));
}

TEST_CASE("constant f rescales the unperturbed density") {
  for (int m : {2, 3}) {
    JetContext base = randomNumericContext(m, 17);
    JetContext ctx = withFlatJets(base, Rational(3), base.xValues()->value);
    Density plain = runPipeline(TripleSpec{TripleKind::Unperturbed, ctx}).density;
    Density scaled = runPipeline(TripleSpec{TripleKind::TypeI, ctx}).density;
    Rational factor = 1;
    for (int k = 0; k < 2 * m - 2; ++k) factor /= 3;
    CHECK(scaled.body == plain.body * Coeff(factor));
  }
}

TEST_CASE("constant unit X reduces type II to the curvature term") {
  for (int m : {2, 3}) {
    JetContext base = randomNumericContext(m, 23);
    std::vector<Rational> e1(2 * m);
    e1[0] = 1;
    JetContext ctx = withFlatJets(base, Rational(1), e1);
    Density plain = runPipeline(TripleSpec{TripleKind::Unperturbed, ctx}).density;
    Density x = runPipeline(TripleSpec{TripleKind::TypeII, ctx}).density;
    // c(e1) D^2 c(e1) has leading symbol -|xi|^2, so the power picks up (-1)^(m-1).
    CHECK(x.body == plain.body * Coeff(m % 2 == 0 ? -1 : 1));
  }
}

TEST_CASE("type II at m = 2") {
  Density d = wresDensity(TripleSpec{TripleKind::TypeII, JetContext::symbolic(2)});
  CHECK(d.body == Expr::var(JetVar::xNormSq(), -1) * scal() * Coeff::frac(1, 12));
}

TEST_CASE("type II needs a nonvanishing X") {
  JetContext base = randomNumericContext(2, 1);
  auto run = [&] {
    JetContext ctx = withFlatJets(base, Rational(1), std::vector<Rational>(4));
    runPipeline(TripleSpec{TripleKind::TypeII, ctx});
  };
  CHECK_THROWS_AS(run(), ContextError);
}

TEST_CASE("scalar curvature collection round-trips") {
  JetContext ctx = JetContext::symbolic(2);
  Expr e = f(-2) * scalFromRiem(ctx) * Coeff::frac(2, 3) + f(1);
  Expr c = collectScalarCurvature(e, ctx.n());
  CHECK(c == f(-2) * scal() * Coeff::frac(2, 3) + f(1));
  CHECK(expandScalarCurvature(c, ctx) == e);
}

TEST_CASE("interpolation recovers exact polynomials") {
  std::vector<std::pair<int, Rational>> pts;
  for (int m = 2; m <= 6; ++m) pts.emplace_back(m, Rational(m * (m * m - 3 * m + 2), 3));
  auto c = interpolateCoefficients(pts);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == 0);
  CHECK(c[1] == Rational(2, 3));
  CHECK(c[2] == -1);
  CHECK(c[3] == Rational(1, 3));
}

TEST_CASE("interpolation reports points off the fit") {
  std::vector<std::pair<int, Rational>> pts = {{2, 1}, {3, 2}, {4, 5}};
  CHECK_THROWS_AS(interpolateCoefficients(pts, 1), InterpolationResidual);
}

TEST_CASE("triple names") {
  CHECK(toString(parseTripleKind("type2")) == "type2");
  CHECK(toString(TripleKind::Unperturbed) == "unperturbed");
  CHECK_THROWS(parseTripleKind("type3"));
}

TEST_CASE("type II density is (-1)^(m-1) times the type I density at f = |X|") {
  for (int m : {2, 3}) {
    const int n = 2 * m;
    JetContext base = randomNumericContext(m, 5 + m);
    XJets x = *base.xValues();
    x.value.assign(n, Rational(0));
    x.value[n - 2] = 3;
    x.value[n - 1] = 4;
    const Rational r = 5;
    // jets of f = |X| from the X-jets
    auto grad = [&](int i, int a) { return x.grad[i * n + a]; };
    auto hess = [&](int i, int a, int b) { return x.hess[(i * n + a) * n + b]; };
    FJets f{r, std::vector<Rational>(n), std::vector<Rational>(n * n)};
    for (int a = 0; a < n; ++a) {
      for (int i = 0; i < n; ++i) f.grad[a] += x.value[i] * grad(i, a) / r;
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        Rational s = 0;
        for (int i = 0; i < n; ++i) s += grad(i, a) * grad(i, b) + x.value[i] * hess(i, a, b);
        f.hess[a * n + b] = (s - f.grad[a] * f.grad[b]) / r;
      }
    }
    JetContext ctx(m, base.riemValues(), f, x);
    Expr one = runPipeline(TripleSpec{TripleKind::TypeI, ctx}).density.body;
    Expr two = runPipeline(TripleSpec{TripleKind::TypeII, ctx}).density.body;
    CHECK(two == one * Coeff(m % 2 == 0 ? -1 : 1));
  }
}
