#include <doctest.h>

#include <random>

#include "wres/coeff.hpp"
#include "wres/errors.hpp"
#include "wres/expr.hpp"

using namespace wres;

namespace {

/// Random polynomial in a few free symbols, xi's and Clifford words.
Expr randomExpr(std::mt19937_64& rng, int n, bool clifford) {
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> var(1, 3);
  std::uniform_int_distribution<int> idx(1, n);
  Expr e;
  for (int t = 0; t < 4; ++t) {
    Expr term = Coeff(Rational(small(rng), 1 + std::abs(small(rng))), Rational(small(rng)));
    term = term * Expr::var(JetVar::aux(var(rng)), 1 + (small(rng) & 1));
    if (small(rng) > 0) term = term * Expr::xi(idx(rng));
    if (clifford && small(rng) > 0) term = term * Expr::word(CliffordWord::generator(idx(rng)));
    e += term;
  }
  return e;
}

}  // namespace

TEST_CASE("rationals round-trip through their string form") {
  CHECK(toString(parseRational("-6/4")) == "-3/2");
  CHECK(toString(parseRational("7")) == "7");
  CHECK_THROWS_AS(parseRational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parseRational("x"), std::invalid_argument);
}

TEST_CASE("Gaussian rational arithmetic") {
  const Coeff i = Coeff::i();
  CHECK(i * i == Coeff(-1));
  CHECK(Coeff(1) / i == -i);
  CHECK((Coeff(Rational(1, 2), Rational(1)) * Coeff(2)).re() == 1);
  CHECK(i.pow(-3) == i);
}

TEST_CASE("ring laws hold on random expressions") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const bool cl = k % 2 == 1;
    Expr a = randomExpr(rng, 4, cl);
    Expr b = randomExpr(rng, 4, cl);
    Expr c = randomExpr(rng, 4, cl);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - a).isZero());
    CHECK(a * Expr(1) == a);
    if (!cl) CHECK(a * b == b * a);
  }
}

TEST_CASE("Clifford generators anticommute") {
  const Expr c1 = Expr::word(CliffordWord::generator(1));
  const Expr c2 = Expr::word(CliffordWord::generator(2));
  CHECK(c1 * c1 == Expr(-1));
  CHECK((c1 * c2 + c2 * c1).isZero());
}

TEST_CASE("coordinate derivatives obey Leibniz and commute") {
  std::mt19937_64 rng(5);
  const int n = 4;
  auto jetExpr = [&]() {
    std::uniform_int_distribution<int> small(-2, 2);
    std::uniform_int_distribution<int> idx(1, n);
    Expr e;
    for (int t = 0; t < 3; ++t) {
      Expr term = Expr(small(rng) + 3) * Expr::var(JetVar::f(), small(rng) == 0 ? -2 : 1);
      term = term * Expr::var(JetVar::x(idx(rng)));
      if (small(rng) > 0) term = term * Expr::var(JetVar::metricInv(idx(rng), idx(rng)));
      if (small(rng) > 0) term = term * Expr::var(JetVar::xNormSq(), -1);
      e += term;
    }
    return e;
  };
  for (int k = 0; k < 30; ++k) {
    Expr u = jetExpr();
    Expr v = jetExpr();
    for (int a = 1; a <= n; ++a) {
      CHECK(dX(u * v, a, n) == dX(u, a, n) * v + u * dX(v, a, n));
      for (int b = 1; b <= n; ++b) CHECK(dX(dX(u, a, n), b, n) == dX(dX(u, b, n), a, n));
    }
  }
}

TEST_CASE("xi derivatives of |xi|^2p") {
  const int n = 4;
  Expr d = dXi(Expr::xiNorm(1), 1, n);
  Expr expected;
  for (int nu = 1; nu <= n; ++nu) expected += Expr(2) * Expr::var(JetVar::metricInv(1, nu)) * Expr::xi(nu);
  CHECK(d == expected);
  CHECK(dXi(Expr::xi(2) * Expr::xi(2), 2, n) == Expr(2) * Expr::xi(2));
}

TEST_CASE("numeric evaluation and unbound variables") {
  JetAssignment as;
  as.vars.emplace(JetVar::aux(1), Coeff(3));
  as.xi = {Coeff(1), Coeff(2)};
  as.xiNormSq = Coeff(5);
  Expr e = Expr::var(JetVar::aux(1), 2) * Expr::xi(2) * Expr::xiNorm(-1);
  CHECK(evalNumeric(e, as) == Coeff(Rational(18, 5)));
  CHECK_THROWS_AS(evalNumeric(Expr::var(JetVar::aux(2)), as), UnboundVariable);
  CHECK_THROWS_AS(evalNumeric(Expr::word(CliffordWord::generator(1)), as), NonScalarClifford);
}

TEST_CASE("homogeneous parts split by xi order") {
  Expr e = Expr::xi(1) * Expr::xiNorm(-1) + Expr::xi(1) * Expr::xi(2) + Expr(4);
  CHECK(e.homogeneousPart(-1) == Expr::xi(1) * Expr::xiNorm(-1));
  CHECK(e.homogeneousPart(0) == Expr(4));
  CHECK(e.homogeneousPart(2).size() == 1);
}
