// Hand transcriptions of printed formulas. They are comparison targets only;
// nothing in the pipeline depends on them.

#include "wres/actions.hpp"
#include "wres/clifford.hpp"

namespace wres::printed {

namespace {

Expr f(int e = 1) { return Expr::var(JetVar::f(), e); }
Expr fd(int j) { return Expr::var(JetVar::f().withDeriv(j)); }
Expr fdd(int j, int l) { return Expr::var(JetVar::f().withDeriv(j).withDeriv(l)); }
Expr normX(int e) { return Expr::var(JetVar::xNormSq(), e); }
Expr g(int a, int b) { return Expr::var(JetVar::metricInv(a, b)); }
Expr xi(int j) { return Expr::xi(j); }
Expr xiPow(int e) { return Expr::xiNorm(e / 2); }  // |xi|^e, e even
Expr scal() { return Expr::var(JetVar::scal()); }
Expr gam(int k) { return Expr::var(JetVar::gamma(k)); }
Coeff q(long p, long r = 1) { return Coeff::frac(p, r); }
const Coeff I = Coeff::i();

Expr xiUp(int j, int n) {
  Expr r;
  for (int nu = 1; nu <= n; ++nu) r += g(j, nu) * xi(nu);
  return r;
}

Expr sigma(int k, int n) {
  Expr s;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      s += Expr::var(JetVar::conn(k, a, b)) * Expr::word(CliffordWord::fromMask((1U << (a - 1)) | (1U << (b - 1))));
  return s;
}

Expr sigmaUp(int k, int n) {
  Expr r;
  for (int nu = 1; nu <= n; ++nu) r += g(k, nu) * sigma(nu, n);
  return r;
}

// sum_mu (Gamma^mu - 2 sigma^mu) xi_mu
Expr gammaSigmaXi(int n) {
  Expr r;
  for (int mu = 1; mu <= n; ++mu) r += (gam(mu) - sigmaUp(mu, n) * Coeff(2)) * xi(mu);
  return r;
}

// d^mu sigma_mu + sigma^mu sigma_mu - Gamma^mu sigma_mu
Expr connectionBlock(int n) {
  Expr r;
  for (int mu = 1; mu <= n; ++mu) {
    for (int nu = 1; nu <= n; ++nu) r += g(mu, nu) * dX(sigma(mu, n), nu, n);
    r += sigmaUp(mu, n) * sigma(mu, n);
    r -= gam(mu) * sigma(mu, n);
  }
  return r;
}

// sum_{mu,alpha,beta} xi^mu xi_alpha xi_beta d_mu g^{alpha beta}
Expr metricDerivTerm(int n) {
  Expr r;
  for (int mu = 1; mu <= n; ++mu)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) r += xiUp(mu, n) * xi(a) * xi(b) * dX(g(a, b), mu, n);
  return r;
}

// sum_{alpha,a,mu} R_{alpha a alpha mu} xi_mu xi_a
Expr ricciXiXi(const JetContext& ctx) {
  Expr r;
  for (int al = 1; al <= ctx.n(); ++al)
    for (int a = 1; a <= ctx.n(); ++a)
      for (int mu = 1; mu <= ctx.n(); ++mu) r += ctx.riem(al, a, al, mu) * xi(mu) * xi(a);
  return r;
}

Expr cx(int n) {
  Expr r;
  for (int i = 1; i <= n; ++i) r += Expr::var(JetVar::x(i)) * Expr::word(CliffordWord::generator(i));
  return r;
}
Expr dcx(int j, int n) { return dX(cx(n), j, n); }
Expr ddcx(int j, int l, int n) { return dX(dX(cx(n), j, n), l, n); }
Expr dNinv(int j, int n) { return dX(normX(-1), j, n); }
Expr ddNinv(int j, int l, int n) { return dX(dX(normX(-1), j, n), l, n); }

// sum_j |grad_{e_j} X|^2 at x0
Expr gradXSq(int n) {
  Expr r;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) r += Expr::var(JetVar::x(i).withDeriv(j), 2);
  return r;
}

Expr tr() { return Expr::var(JetVar::trId()); }

}  // namespace

GradedSymbol fTripleSymbol(int n) {
  Expr s1 = f(2) * gammaSigmaXi(n) * I;
  Expr s0 = -(f(2) * connectionBlock(n)) + f(2) * scal() * q(1, 4);
  for (int j = 1; j <= n; ++j) {
    s1 -= f() * fd(j) * xiUp(j, n) * (I * Coeff(2));
    s0 += f() * fd(j) * (gam(j) - sigmaUp(j, n) * Coeff(2));
    for (int l = 1; l <= n; ++l) s0 -= f() * fdd(j, l) * g(j, l);
  }
  GradedSymbol s;
  s.top = 2;
  s.parts[2] = f(2) * xiPow(2);
  s.parts[1] = s1;
  s.parts[0] = s0;
  return s;
}

GradedSymbol fTripleInverse(const JetContext& ctx) {
  const int n = ctx.n();
  Expr b3 = -(f(-2) * xiPow(-4) * gammaSigmaXi(n) * I) - f(-2) * xiPow(-6) * metricDerivTerm(n) * (I * Coeff(2));
  for (int j = 1; j <= n; ++j) b3 -= f(-3) * xiPow(-4) * fd(j) * xiUp(j, n) * (I * Coeff(2));

  Expr b4 = -(f(-2) * xiPow(-4) * scal() * q(1, 4)) + f(-2) * xiPow(-6) * ricciXiXi(ctx) * q(2, 3);
  for (int j = 1; j <= n; ++j) {
    b4 -= f(-3) * xiPow(-4) * fdd(j, j);
    b4 += f(-4) * xiPow(-4) * fd(j) * fd(j) * Coeff(2);
    for (int a = 1; a <= n; ++a) {
      b4 -= f(-4) * xiPow(-6) * fd(j) * fd(a) * xi(j) * xi(a) * Coeff(8);
      b4 += f(-3) * xiPow(-6) * fdd(a, j) * xi(j) * xi(a) * Coeff(4);
    }
  }
  GradedSymbol s;
  s.top = -2;
  s.floor = -4;
  s.parts[-2] = f(-2) * xiPow(-2);
  s.parts[-3] = b3;
  s.parts[-4] = b4;
  return s;
}

Expr fTriplePower(const JetContext& ctx) {
  const int m = ctx.m();
  const int n = ctx.n();
  const long M = m;
  Expr r = -(f(2 - 2 * m) * xiPow(-2 * m) * scal() * q(M - 1, 4));
  r += f(2 - 2 * m) * xiPow(-2 * m - 2) * ricciXiXi(ctx) * q(M * (M - 1), 3);
  for (int j = 1; j <= n; ++j) {
    r -= f(1 - 2 * m) * xiPow(-2 * m) * fdd(j, j) * Coeff((M - 1) * (M - 1));
    r += f(-2 * m) * xiPow(-2 * m) * fd(j) * fd(j) * q(M * (4 * M * M - 9 * M + 5), 3);
    for (int l = 1; l <= n; ++l) {
      r += f(1 - 2 * m) * xiPow(-2 * m - 2) * fdd(j, l) * xi(j) * xi(l) * q(2 * M * (2 * M * M - 3 * M + 1), 3);
      r -= f(-2 * m) * xiPow(-2 * m - 2) * fd(j) * fd(l) * xi(j) * xi(l) * Coeff(2 * M * M * (M - 1) * (M - 1));
    }
  }
  return r;
}

GradedSymbol xTripleSymbol(int n) {
  const Expr c = cx(n);
  Expr s1 = -(normX(1) * gammaSigmaXi(n) * I);
  Expr s0 = normX(1) * connectionBlock(n) - normX(1) * scal() * q(1, 4);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      // c(X) d^i[c(X)] xi_j + c(X) d^j[c(X)] xi_i, read as the symmetric contraction
      s1 -= c * g(i, j) * dcx(i, n) * xi(j) * (I * Coeff(2));
      s0 -= c * g(i, j) * ddcx(i, j, n);
    }
    s0 -= c * sigmaUp(i, n) * dcx(i, n) * Coeff(2);
    s0 += c * gam(i) * dcx(i, n);
  }
  GradedSymbol s;
  s.top = 2;
  s.parts[2] = -(normX(1) * xiPow(2));
  s.parts[1] = s1;
  s.parts[0] = s0;
  return s;
}

GradedSymbol xTripleInverse(const JetContext& ctx) {
  const int n = ctx.n();
  const Expr c = cx(n);
  Expr b3 = normX(-1) * xiPow(-4) * gammaSigmaXi(n) * I + normX(-1) * xiPow(-6) * metricDerivTerm(n) * (I * Coeff(2));
  for (int j = 1; j <= n; ++j) {
    b3 -= xiPow(-4) * dNinv(j, n) * xiUp(j, n) * (I * Coeff(2));
    for (int nu = 1; nu <= n; ++nu) b3 += normX(-2) * xiPow(-4) * c * g(j, nu) * dcx(nu, n) * xi(j) * (I * Coeff(2));
  }

  Expr b4 = normX(-1) * xiPow(-4) * scal() * q(1, 4) - normX(-1) * xiPow(-6) * ricciXiXi(ctx) * q(2, 3);
  for (int a = 1; a <= n; ++a) {
    b4 -= xiPow(-4) * ddNinv(a, a, n);
    b4 += normX(-2) * xiPow(-4) * c * ddcx(a, a, n);
    b4 += normX(-1) * xiPow(-4) * dNinv(a, n) * c * dcx(a, n) * Coeff(2);
    for (int j = 1; j <= n; ++j) {
      const Expr xx = xi(a) * xi(j);
      b4 += xiPow(-6) * ddNinv(a, j, n) * xx * Coeff(4);
      b4 += normX(-3) * xiPow(-6) * c * dcx(a, n) * c * dcx(j, n) * xx * Coeff(4);
      b4 -= normX(-2) * xiPow(-6) * dcx(a, n) * dcx(j, n) * xx * Coeff(4);
      b4 -= normX(-1) * xiPow(-6) * dNinv(j, n) * c * dcx(a, n) * xx * Coeff(12);
      b4 -= normX(-2) * xiPow(-6) * c * ddcx(a, j, n) * xx * Coeff(4);
    }
  }
  GradedSymbol s;
  s.top = -2;
  s.floor = -4;
  s.parts[-2] = -(normX(-1) * xiPow(-2));
  s.parts[-3] = b3;
  s.parts[-4] = b4;
  return s;
}

Expr xTriplePower(const JetContext& ctx) {
  const int m = ctx.m();
  const int n = ctx.n();
  const long M = m;
  const Expr c = cx(n);
  const long sg = (m % 2 == 0) ? 1 : -1;
  Expr r = normX(1 - m) * xiPow(-2 * m) * scal() * q(M - 1, 4);
  r -= normX(1 - m) * xiPow(-2 * m - 2) * ricciXiXi(ctx) * q(M * M - M, 3);
  for (int a = 1; a <= n; ++a) {
    r -= normX(2 - m) * xiPow(-2 * m) * ddNinv(a, a, n) * q(M * M - M, 2);
    r -= normX(3 - m) * xiPow(-2 * m) * dNinv(a, n) * dNinv(a, n) * q(M * (M * M - 3 * M + 2), 3);
    r += normX(-m) * xiPow(-2 * m) * c * ddcx(a, a, n) * Coeff(M - 1);
    r += normX(1 - m) * xiPow(-2 * m) * dNinv(a, n) * c * dcx(a, n) * Coeff(M * (M - 1));
    for (int j = 1; j <= n; ++j) {
      const Expr xx = xi(a) * xi(j);
      const Expr lower = xiPow(-2 * m - 2);
      r += normX(2 - m) * lower * ddNinv(j, a, n) * xx * q(2 * M * (M * M - 1), 3);
      r += normX(3 - m) * lower * dNinv(j, n) * dNinv(a, n) * xx * q(M * (M * M * M - 2 * M * M - M + 2), 2);
      r -= normX(-m) * lower * dcx(a, n) * dcx(j, n) * xx * Coeff(2 * M * (M - 1));
      r -= normX(1 - m) * lower * dNinv(j, n) * c * dcx(a, n) * xx * Coeff(2 * (M * M * M - 2 * M * M + 5 * M - 4));
      r -= normX(-m) * lower * c * ddcx(a, j, n) * xx * Coeff(2 * M * (M - 1));
      r += normX(-1 - m) * lower * c * dcx(j, n) * c * dcx(a, n) * xx * Coeff(2 * M * (M - 1));
    }
  }
  return r * Coeff(sg);
}

std::vector<std::pair<Expr, Expr>> cliffordTraceIdentities(const JetContext& ctx, int j) {
  const int n = ctx.n();
  const Expr c = cx(n);
  Expr lhs1, lhs3, lhs4, nablaSq, laplaceTerm, gradTerm;
  for (int k = 1; k <= n; ++k) {
    lhs1 += dcx(k, n) * dcx(k, n);
    lhs3 += c * ddcx(k, k, n);
    lhs4 += c * dcx(k, n) * c * dcx(k, n);
    laplaceTerm += ddNinv(k, k, n);
    gradTerm += dNinv(k, n) * dNinv(k, n);
  }
  nablaSq = gradXSq(n);
  std::vector<std::pair<Expr, Expr>> ids;
  ids.emplace_back(trace(lhs1), -(nablaSq * tr()));
  ids.emplace_back(trace(c * dcx(j, n)), normX(2) * dNinv(j, n) * tr() * q(1, 2));
  ids.emplace_back(trace(lhs3), (normX(2) * laplaceTerm * q(1, 2) - normX(3) * gradTerm + nablaSq) * tr());
  ids.emplace_back(trace(lhs4), (normX(4) * gradTerm * q(1, 2) - normX(1) * nablaSq) * tr());
  return ids;
}

std::vector<std::pair<Expr, Expr>> fIntegralIdentities(const JetContext& ctx) {
  const int m = ctx.m();
  const int n = ctx.n();
  const Expr lapF = laplacian(f(), n);
  const Expr gradF = gradNormSq(f(), n);
  Expr sumDd, sumDsq, xiDd, xiDsq;
  for (int j = 1; j <= n; ++j) {
    sumDd += fdd(j, j);
    sumDsq += fd(j) * fd(j);
    for (int l = 1; l <= n; ++l) {
      xiDd += fdd(j, l) * xi(j) * xi(l);
      xiDsq += fd(j) * fd(l) * xi(j) * xi(l);
    }
  }
  const Coeff inv2m = q(1, 2L * m);
  std::vector<std::pair<Expr, Expr>> ids;
  ids.emplace_back(f(2 - 2 * m) * xiPow(-2 * m) * scal(), f(2 - 2 * m) * scal());
  ids.emplace_back(f(2 - 2 * m) * xiPow(-2 * m - 2) * ricciXiXi(ctx), f(2 - 2 * m) * scal() * inv2m);
  ids.emplace_back(f(1 - 2 * m) * xiPow(-2 * m) * sumDd, -(f(1 - 2 * m) * lapF));
  ids.emplace_back(f(-2 * m) * xiPow(-2 * m) * sumDsq, f(-2 * m) * gradF);
  ids.emplace_back(f(1 - 2 * m) * xiPow(-2 * m - 2) * xiDd, -(f(1 - 2 * m) * lapF * inv2m));
  ids.emplace_back(f(-2 * m) * xiPow(-2 * m - 2) * xiDsq, f(-2 * m) * gradF * inv2m);
  return ids;
}

std::vector<std::pair<Expr, Expr>> xIntegralIdentities(const JetContext& ctx) {
  const int m = ctx.m();
  const int n = ctx.n();
  const Expr c = cx(n);
  const Expr nablaSq = gradXSq(n);
  const Expr lap = laplacian(normX(-1), n);
  const Expr grad = gradNormSq(normX(-1), n);
  Expr i1, i2, i3, i4;
  for (int j = 1; j <= n; ++j) {
    i2 += dNinv(j, n) * c * dcx(j, n);
    i3 += c * ddcx(j, j, n);
    for (int l = 1; l <= n; ++l) {
      i1 += dcx(j, n) * dcx(l, n) * xi(j) * xi(l);
      i4 += c * dcx(l, n) * c * dcx(j, n) * xi(j) * xi(l);
    }
  }
  std::vector<std::pair<Expr, Expr>> ids;
  ids.emplace_back(i1, -(nablaSq * q(1, 2L * m)));
  ids.emplace_back(i2, normX(2) * grad * q(1, 2));
  ids.emplace_back(i3, nablaSq - normX(3) * grad - normX(2) * lap * q(1, 2));
  ids.emplace_back(i4, (normX(4) * grad - normX(1) * nablaSq * Coeff(2)) * q(1, 4L * m));
  return ids;
}

Expr fTripleDensity(const JetContext& ctx) {
  const long m = ctx.m();
  const int n = ctx.n();
  const int mi = ctx.m();
  return -(f(2 - 2 * mi) * scal() * q(m - 1, 12)) + f(1 - 2 * mi) * laplacian(f(), n) * q(m * m - 3 * m + 2, 3) +
         f(-2 * mi) * gradNormSq(f(), n) * q(m * (m * m - 3 * m + 2), 3);
}

Expr xTripleDensity(const JetContext& ctx) {
  const long m = ctx.m();
  const int n = ctx.n();
  const int mi = ctx.m();
  Expr body = normX(1 - mi) * scal() * q(m - 1, 12) + normX(2 - mi) * laplacian(normX(-1), n) * q(m * m - 3 * m + 2, 6) +
              normX(3 - mi) * gradNormSq(normX(-1), n) * q(6 * m * m * m - m * m * m * m + m * m - 30 * m + 24, 12 * m);
  return body * Coeff(m % 2 == 0 ? 1 : -1);
}

Expr unperturbedDensity(const JetContext& ctx) { return -(scal() * q(ctx.m() - 1, 12)); }

}  // namespace wres::printed
