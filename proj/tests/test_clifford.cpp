#include <doctest.h>

#include <random>

#include "wres/clifford.hpp"
#include "wres/errors.hpp"
#include "wres/jets.hpp"

using namespace wres;

namespace {

/// Symbolic trace with tr[id] replaced by the matrix dimension.
Coeff symbolicTrace(const Expr& e, int dim) {
  Expr t = substitute(trace(e), [&](JetVar v) -> std::optional<Expr> {
    if (v.kind() == JetKind::TrId) return Expr(dim);
    return std::nullopt;
  });
  JetAssignment none;
  return evalNumeric(t, none);
}

}  // namespace

TEST_CASE("matrix model satisfies the Clifford relations") {
  for (int m : {2, 3}) {
    CliffordMatrixModel model(m);
    const CMatrix id = CMatrix::identity(model.dim());
    for (int i = 1; i <= 2 * m; ++i) {
      for (int j = 1; j <= 2 * m; ++j) {
        CMatrix ac = model.generator(i) * model.generator(j) + model.generator(j) * model.generator(i);
        CMatrix expected = id.scaled(Coeff(i == j ? -2 : 0));
        for (int r = 0; r < model.dim(); ++r)
          for (int c = 0; c < model.dim(); ++c) CHECK(ac(r, c) == expected(r, c));
      }
    }
  }
}

TEST_CASE("symbolic trace agrees with the matrix model on random words") {
  const int m = 2;
  const int n = 2 * m;
  CliffordMatrixModel model(m);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(0, 7);
  std::uniform_int_distribution<int> gen(1, n);
  for (int k = 0; k < 100; ++k) {
    std::vector<int> seq(len(rng));
    for (int& g : seq) g = gen(rng);
    CMatrix mat = CMatrix::identity(model.dim());
    for (int g : seq) mat = mat * model.generator(g);
    Expr word = normalizeWord(seq, n);
    CHECK(symbolicTrace(word, model.dim()) == mat.trace());
  }
}

TEST_CASE("normalizeWord rejects out-of-range generators") {
  std::vector<int> seq = {1, 5};
  CHECK_THROWS_AS(normalizeWord(seq, 4), IndexOutOfRange);
}

TEST_CASE("c(X) squares to -|X|^2") {
  JetContext ctx = JetContext::symbolic(2);
  Expr cx = cX(ctx);
  Expr sq;
  for (int i = 1; i <= 4; ++i) sq -= Expr::var(JetVar::x(i), 2);
  CHECK(cx * cx == sq);
  CHECK(reduceXNorm(cx * cx, 4) == -Expr::var(JetVar::xNormSq()));
}

TEST_CASE("represent maps words to their matrices") {
  CliffordMatrixModel model(2);
  std::map<CliffordWord, Coeff> comps = {{CliffordWord::fromMask(0b0011), Coeff(2)}, {CliffordWord(), Coeff(1)}};
  CMatrix r = model.represent(comps);
  CMatrix expected = model.word(CliffordWord::fromMask(0b0011)).scaled(Coeff(2)) + CMatrix::identity(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(r(a, b) == expected(a, b));
}
