#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wres {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parseRational(std::string_view text);

/// Lossless "p/q" (or "p" when the denominator is 1).
std::string toString(const Rational& q);

/// Exact element of Q(i). Every symbolic coefficient in the engine is one of these.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Coeff(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Coeff(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Coeff i() { return Coeff(Rational(0), Rational(1)); }
  static Coeff frac(long p, long q) { return Coeff(Rational(p, q)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool isReal() const { return sgn(im_) == 0; }

  Coeff& operator+=(const Coeff& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Coeff& operator-=(const Coeff& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend Coeff operator-(const Coeff& a) { return Coeff(-a.re_, -a.im_); }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  Coeff pow(int e) const;

  /// "p/q", "i*p/q" or "(a+b*i)" style rendering.
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace wres
