// Acceptance checks: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

#include "wres/actions.hpp"
#include "wres/clifford.hpp"
#include "wres/errors.hpp"
#include "wres/output.hpp"

using namespace wres;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  // Set when the failure is a documented deviation of the printed statement.
  bool knownDeviation = false;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    note += (note.empty() ? "" : "; ") + what;
  }
};

Expr scal() { return Expr::var(JetVar::scal()); }

Rational coefficientIn(const Expr& body, const Monomial& mono) {
  Coeff c = body.coefficientOf(TermKey{mono, {}, 0, {}});
  return c.re();
}

Outcome kkwAnchor() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (int m = 2; m <= 5; ++m) {
    Density d = wresDensity(TripleSpec{TripleKind::Unperturbed, JetContext::symbolic(m)});
    o.require(d.body == scal() * Coeff::frac(-(m - 1), 12), "m=" + std::to_string(m) + " differs: " + d.body.str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 10, "took " + std::to_string(secs) + " s");
  return o;
}

Outcome typeOneTheorem() {
  Outcome o;
  std::vector<std::pair<int, Rational>> sCoef, lapCoef, gradCoef;
  for (int m = 2; m <= 6; ++m) {
    auto t0 = std::chrono::steady_clock::now();
    JetContext ctx = JetContext::symbolic(m);
    Density d = runPipeline(TripleSpec{TripleKind::TypeI, ctx}).density;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(d.body == canonicalAtX0(printed::fTripleDensity(ctx), ctx), "m=" + std::to_string(m) + " differs");
    if (m == 6) o.require(secs < 60, "m=6 took " + std::to_string(secs) + " s");
    const JetVar f = JetVar::f();
    Expr collected = collectScalarCurvature(d.body, ctx.n());
    sCoef.emplace_back(m, coefficientIn(collected, {{f, 2 - 2 * m}, {JetVar::scal(), 1}}));
    // Delta f = -sum_j f_;jj
    lapCoef.emplace_back(m, -coefficientIn(d.body, {{f, 1 - 2 * m}, {f.withDeriv(1).withDeriv(1), 1}}));
    gradCoef.emplace_back(m, coefficientIn(d.body, {{f, -2 * m}, {f.withDeriv(1), 2}}));
  }
  auto expect = [&](const std::vector<std::pair<int, Rational>>& pts, std::vector<Rational> want, const char* name) {
    std::vector<Rational> got = interpolateCoefficients(pts);
    while (want.size() > 1 && sgn(want.back()) == 0) want.pop_back();
    o.require(got == want, std::string(name) + " coefficient polynomial differs");
  };
  // -(m-1)/12, (m^2-3m+2)/3, m(m^2-3m+2)/3
  expect(sCoef, {Rational(1, 12), Rational(-1, 12)}, "s");
  expect(lapCoef, {Rational(2, 3), Rational(-1), Rational(1, 3)}, "Delta f");
  expect(gradCoef, {Rational(0), Rational(2, 3), Rational(-1), Rational(1, 3)}, "|grad f|^2");
  return o;
}

Outcome degenerateM2() {
  Outcome o;
  JetContext ctx = JetContext::symbolic(2);
  Density d = wresDensity(TripleSpec{TripleKind::TypeI, ctx});
  const JetVar f = JetVar::f();
  for (int j = 1; j <= 4; ++j) {
    o.require(sgn(coefficientIn(d.body, {{f, -3}, {f.withDeriv(j).withDeriv(j), 1}})) == 0, "Delta f term present");
    o.require(sgn(coefficientIn(d.body, {{f, -4}, {f.withDeriv(j), 2}})) == 0, "|grad f|^2 term present");
  }
  // relative to 2^2 Vol: -1/3 = 4 * (-1/12)
  o.require(coefficientIn(d.body, {{f, -2}, {JetVar::scal(), 1}}) * 4 == Rational(-1, 3), "s coefficient is not -1/3");
  o.require(d.body.size() == 1, "unexpected extra terms");
  return o;
}

Outcome typeTwoTheorem() {
  Outcome o;
  for (int m = 2; m <= 4; ++m) {
    VerificationReport r = compareWithPaper(Target::Thm12, JetContext::symbolic(m));
    const std::string v = verdictFor(r.status, r.oracle);
    o.require(v != "unadjudicated", "m=" + std::to_string(m) + " engine disagrees with the oracle");
    if (v == "erratum") o.note += (o.note.empty() ? "" : "; ") + std::string("m=") + std::to_string(m) + " erratum";
  }
  return o;
}

std::vector<Rational> randomXi(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> xi(n);
  do {
    for (auto& x : xi) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
  } while (std::all_of(xi.begin(), xi.end(), [](const Rational& x) { return sgn(x) == 0; }));
  return xi;
}

/// Value of engine - printed at the point, per Clifford component.
bool agreesAt(const Expr& engine, const Expr& printedForm, const JetAssignment& as) {
  for (const auto& [w, c] : evalCliffordComponents(engine - printedForm, as)) {
    if (!c.isZero()) return false;
  }
  return true;
}

Outcome intermediateSymbols() {
  Outcome o;
  std::mt19937_64 rng(2024);
  int eq26Failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + trial % 2;
    const int n = 2 * m;
    JetContext ctx = randomNumericContext(m, 1000 + trial);
    JetAssignment as = assignmentFor(ctx, randomXi(rng, n));
    for (TripleKind kind : {TripleKind::TypeI, TripleKind::TypeII}) {
      PipelineResult r = runPipeline(TripleSpec{kind, ctx});
      GradedSymbol paper = kind == TripleKind::TypeI ? printed::fTripleInverse(ctx) : printed::xTripleInverse(ctx);
      const std::string tag = kind == TripleKind::TypeI ? "type1" : "type2";
      for (int k = -2; k >= -4; --k) {
        o.require(agreesAt(canonicalAtX0(r.inverse.part(k), ctx), canonicalAtX0(paper.part(k), ctx), as),
                  tag + " b_" + std::to_string(k) + " differs at trial " + std::to_string(trial));
      }
      Expr power = kind == TripleKind::TypeI ? printed::fTriplePower(ctx) : printed::xTriplePower(ctx);
      const bool ok = agreesAt(r.powerAtX0, canonicalAtX0(power, ctx), as);
      if (kind == TripleKind::TypeI) {
        o.require(ok, "type1 power symbol differs at trial " + std::to_string(trial));
      } else if (!ok) {
        ++eq26Failures;
      }
    }
  }
  if (eq26Failures > 0) {
    const bool onlyEq26 = o.pass;
    o.require(false, "printed type2 power symbol differs at " + std::to_string(eq26Failures) +
                         "/20 points (engine agrees with iterated composition)");
    o.knownDeviation = onlyEq26;
  }
  return o;
}

Outcome oracleEquivalence() {
  Outcome o;
  for (int m = 2; m <= 4; ++m) {
    for (TripleKind kind : {TripleKind::TypeI, TripleKind::TypeII}) {
      GradedSymbol inv = invert(buildTripleSymbol(kind, 2 * m, Truncation::BasePoint), 2 * m);
      o.require(powerSymbolNeg(inv, m, 2 * m) == iteratedCompositionPower(inv, m, 2 * m),
                toString(kind) + " m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome inversionResidual() {
  Outcome o;
  // Every point at m = 2; at x0 for m = 3.
  for (TripleKind kind : {TripleKind::TypeI, TripleKind::TypeII}) {
    const int n = 4;
    GradedSymbol a = buildTripleSymbol(kind, n);
    GradedSymbol r = compose(a, invert(a, n), -2, n);
    o.require(reduceXNorm(r.part(0) - Expr(1), n).isZero(), toString(kind) + " order 0");
    o.require(reduceXNorm(r.part(-1), n).isZero(), toString(kind) + " order -1");
    o.require(reduceXNorm(r.part(-2), n).isZero(), toString(kind) + " order -2");

    JetContext ctx = JetContext::symbolic(3);
    GradedSymbol a3 = buildTripleSymbol(kind, 6, Truncation::BasePoint);
    GradedSymbol r3 = compose(a3, invert(a3, 6), -2, 6);
    o.require(canonicalAtX0(r3.part(0) - Expr(1), ctx).isZero(), toString(kind) + " m=3 order 0");
    o.require(canonicalAtX0(r3.part(-1), ctx).isZero(), toString(kind) + " m=3 order -1");
    o.require(canonicalAtX0(r3.part(-2), ctx).isZero(), toString(kind) + " m=3 order -2");
  }
  return o;
}

Outcome cliffordTraces() {
  Outcome o;
  for (int m : {2, 3}) {
    VerificationReport r = compareWithPaper(Target::Lemma311, JetContext::symbolic(m));
    o.require(r.status == Status::ExactMatch, "m=" + std::to_string(m) + ": " + r.detail);
  }
  CliffordMatrixModel model(2);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> gen(1, 4);
  for (int k = 0; k < 100; ++k) {
    std::vector<int> seq(len(rng));
    for (int& g : seq) g = gen(rng);
    CMatrix mat = CMatrix::identity(model.dim());
    for (int g : seq) mat = mat * model.generator(g);
    Expr tr = substitute(trace(normalizeWord(seq, 4)), [](JetVar v) -> std::optional<Expr> {
      if (v.kind() == JetKind::TrId) return Expr(4);
      return std::nullopt;
    });
    o.require(evalNumeric(tr, JetAssignment{}) == mat.trace(), "matrix trace differs on word " + std::to_string(k));
  }
  return o;
}

Outcome moments() {
  Outcome o;
  std::uint64_t seed = 0;
  for (int n : {4, 6}) {
    for (int j = 1; j <= n; ++j) {
      for (int l = 1; l <= n; ++l) {
        // degree two: delta_jl / n, i.e. (1/2m) delta_jl relative to Vol(S^{n-1})
        o.require(sphereMoment({j, l}, n) == (j == l ? Rational(1, n) : Rational(0)), "degree-2 moment");
      }
    }
    // degree four: (d_ij d_kl + d_ik d_jl + d_il d_jk) / (n (n+2))
    for (const auto& idx : std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 1, 2, 2}, {1, 2, 1, 2}, {1, 2, 3, 3}}) {
      auto d = [&](int a, int b) { return idx[a] == idx[b] ? 1 : 0; };
      Rational want(d(0, 1) * d(2, 3) + d(0, 2) * d(1, 3) + d(0, 3) * d(1, 2), n * (n + 2));
      want.canonicalize();
      o.require(sphereMoment(idx, n) == want, "degree-4 moment");
    }
    for (const auto& idx : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {1, 1, 1, 1}, {1, 1, 2, 2}}) {
      MonteCarloEstimate est = mcMomentOracle(idx, n, 1000000, seed++);
      o.require(std::abs(est.mean - sphereMoment(idx, n).get_d()) <= 3 * est.stderror,
                "Monte Carlo outside 3 sigma at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome commutatorCrossCheck() {
  Outcome o;
  for (int m : {2, 3}) {
    const int n = 2 * m;
    const Expr f = Expr::var(JetVar::f());
    GradedSymbol d2 = buildD2Symbol(n);
    GradedSymbol fs = functionSymbol(f);
    GradedSymbol comm = commutatorWithFunction(d2, f, 0, n);
    GradedSymbol sf = compose(d2, fs, 0, n);
    GradedSymbol fsS = compose(fs, d2, 0, n);
    for (int k = 2; k >= 0; --k) o.require(comm.part(k) == sf.part(k) - fsS.part(k), "commutator order " + std::to_string(k));
    GradedSymbol a = compose(functionSymbol(f * f), d2, 0, n);
    GradedSymbol b = compose(fs, comm, 0, n);
    GradedSymbol lemma = printed::fTripleSymbol(n);
    for (int k = 2; k >= 0; --k) o.require(a.part(k) + b.part(k) == lemma.part(k), "f D^2 f order " + std::to_string(k));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"unperturbed density -(m-1)/12 s for m = 2..5", kkwAnchor},
      {"type I density and coefficient polynomials for m = 2..6", typeOneTheorem},
      {"type I at m = 2 reduces to -(1/3) f^-2 s", degenerateM2},
      {"type II density adjudicated against the oracle for m = 2..4", typeTwoTheorem},
      {"intermediate symbols at 20 random jet points", intermediateSymbols},
      {"power formula equals iterated composition for m = 2..4", oracleEquivalence},
      {"parametrix residual vanishes at orders 0, -1, -2", inversionResidual},
      {"Clifford trace identities and matrix-model traces", cliffordTraces},
      {"sphere moments exact and within 3 sigma of Monte Carlo", moments},
      {"commutator lemma and f D^2 f decomposition", commutatorCrossCheck},
  };
  int passed = 0;
  int known = 0;
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2zu %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                o.note.empty() ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
    if (o.pass) {
      ++passed;
    } else if (o.knownDeviation) {
      ++known;
    } else {
      ++failed;
    }
  }
  std::printf("%d passed, %d failed as documented deviations of the printed statement, %d failed\n", passed, known,
              failed);
  return failed == 0 ? 0 : 1;
}
