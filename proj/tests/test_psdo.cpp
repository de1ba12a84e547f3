#include <doctest.h>

#include "wres/actions.hpp"
#include "wres/errors.hpp"
#include "wres/psdo.hpp"

using namespace wres;

namespace {

Expr aux(int k) { return Expr::var(JetVar::aux(k)); }
Expr gen(int i) { return Expr::word(CliffordWord::generator(i)); }

/// First-order differential operator sum_k a_k xi_k + a_0 with free coefficients.
GradedSymbol firstOrder(int base, int n, bool clifford) {
  GradedSymbol s;
  s.top = 1;
  Expr p1;
  for (int k = 1; k <= n; ++k) p1 += aux(base + k) * Expr::xi(k) * (clifford ? gen(k) : Expr(1));
  s.parts[1] = p1;
  s.parts[0] = aux(base) * (clifford ? gen(1) * gen(2) : Expr(1));
  return s;
}

/// Difference of two symbols over the orders top..floor, modulo |X|^2.
bool sameParts(const GradedSymbol& a, const GradedSymbol& b, int top, int floor, int n) {
  for (int k = top; k >= floor; --k) {
    if (!reduceXNorm(a.part(k) - b.part(k), n).isZero()) return false;
  }
  return true;
}

Expr cliffordField(int n) {
  Expr u;
  for (int k = 1; k <= n; ++k) u += Expr::var(JetVar::x(k)) * gen(k);
  return u;
}

}  // namespace

TEST_CASE("identity symbol is a two-sided unit") {
  const int n = 4;
  GradedSymbol d2 = buildD2Symbol(n);
  GradedSymbol l = compose(identitySymbol(), d2, 0, n);
  GradedSymbol r = compose(d2, identitySymbol(), 0, n);
  CHECK(sameParts(l, d2, 2, 0, n));
  CHECK(sameParts(r, d2, 2, 0, n));
}

TEST_CASE("composition is associative") {
  const int n = 2;
  for (bool cl : {false, true}) {
    GradedSymbol a = firstOrder(1, n, cl);
    GradedSymbol b = firstOrder(11, n, cl);
    GradedSymbol c = firstOrder(21, n, cl);
    GradedSymbol left = compose(compose(a, b, 0, n), c, 1, n, 3);
    GradedSymbol right = compose(a, compose(b, c, 0, n), 1, n, 3);
    CHECK(sameParts(left, right, 3, 1, n));
  }
}

TEST_CASE("composition rejects insufficient truncation") {
  const int n = 4;
  GradedSymbol d2 = buildD2Symbol(n);
  GradedSymbol inv = invert(d2, n, 1);
  CHECK_THROWS_AS(compose(d2, inv, -2, n), InsufficientTruncation);
  CHECK_THROWS_AS(compose(d2, d2, 0, n, 2), InsufficientTruncation);
}

TEST_CASE("parametrix residual vanishes at orders 0, -1, -2") {
  const int n = 4;
  for (TripleKind kind : {TripleKind::Unperturbed, TripleKind::TypeI, TripleKind::TypeII}) {
    GradedSymbol a = buildTripleSymbol(kind, n);
    GradedSymbol r = compose(a, invert(a, n), -2, n);
    CHECK(reduceXNorm(r.part(0) - Expr(1), n).isZero());
    CHECK(reduceXNorm(r.part(-1), n).isZero());
    CHECK(reduceXNorm(r.part(-2), n).isZero());
  }
}

TEST_CASE("invert rejects a non-scalar leading symbol") {
  GradedSymbol s;
  s.top = 2;
  s.parts[2] = Expr::xiNorm(1) * gen(1) * gen(2);
  CHECK_THROWS_AS(invert(s, 4), NonInvertibleLeadingSymbol);
}

TEST_CASE("commutator lemma agrees with S o u - u o S") {
  const int n = 4;
  GradedSymbol d2 = buildD2Symbol(n);
  for (const Expr& u : {Expr::var(JetVar::f()), cliffordField(n)}) {
    GradedSymbol us = functionSymbol(u);
    GradedSymbol lhs = commutatorWithFunction(d2, u, 0, n);
    GradedSymbol su = compose(d2, us, 0, n);
    GradedSymbol uss = compose(us, d2, 0, n);
    CHECK(lhs.part(2).isZero());
    for (int k = 1; k >= 0; --k) CHECK(reduceXNorm(lhs.part(k) - (su.part(k) - uss.part(k)), n).isZero());
  }
}

TEST_CASE("f D^2 f = f^2 D^2 + f [D^2, f] gives the printed type I symbol") {
  const int n = 4;
  const Expr f = Expr::var(JetVar::f());
  GradedSymbol d2 = buildD2Symbol(n);
  GradedSymbol a = compose(functionSymbol(f * f), d2, 0, n);
  GradedSymbol b = compose(functionSymbol(f), commutatorWithFunction(d2, f, 0, n), 0, n);
  GradedSymbol printedSymbol = printed::fTripleSymbol(n);
  for (int k = 2; k >= 0; --k) CHECK(a.part(k) + b.part(k) == printedSymbol.part(k));
}

TEST_CASE("power formula matches iterated composition") {
  for (int m : {2, 3}) {
    const int n = 2 * m;
    for (TripleKind kind : {TripleKind::Unperturbed, TripleKind::TypeI, TripleKind::TypeII}) {
      GradedSymbol inv = invert(buildTripleSymbol(kind, n, Truncation::BasePoint), n);
      CHECK(powerSymbolNeg(inv, m, n) == iteratedCompositionPower(inv, m, n));
    }
  }
}

TEST_CASE("power formula refuses a Clifford-valued b_{-2}") {
  GradedSymbol inv;
  inv.top = -2;
  inv.floor = -4;
  inv.parts[-2] = Expr::xiNorm(-1) * gen(1) * gen(2);
  CHECK_THROWS_AS(powerSymbolNeg(inv, 3, 6), NonScalarB2);
}

TEST_CASE("multi-indices are nondecreasing") {
  auto idx = multiIndices(2, 3);
  CHECK(idx.size() == 6);
  for (const auto& b : idx) CHECK(b[0] <= b[1]);
}
