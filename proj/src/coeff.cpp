#include "wres/coeff.hpp"

#include <stdexcept>

namespace wres {

Rational parseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string toString(const Rational& q) { return q.get_str(); }

Coeff& Coeff::operator*=(const Coeff& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  if (o.isZero()) throw std::domain_error("division by zero coefficient");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  Coeff conj(o.re_ / norm, -o.im_ / norm);
  return *this *= conj;
}

Coeff Coeff::pow(int e) const {
  if (e < 0) return (Coeff(1) / *this).pow(-e);
  Coeff r(1);
  Coeff b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Coeff::str() const {
  if (isReal()) return toString(re_);
  if (sgn(re_) == 0) return "i*" + toString(im_);
  return "(" + toString(re_) + "+i*" + toString(im_) + ")";
}

}  // namespace wres
