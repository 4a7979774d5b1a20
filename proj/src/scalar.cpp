#include "pgca/scalar.hpp"

namespace pgca {

Scalar Scalar::rational(long num, long den) { return Scalar(Rational(num, den)); }

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar Scalar::inverse() const {
  Rational n = re_ * re_ + im_ * im_;
  if (n == 0) throw std::domain_error("scalar: division by zero");
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc(1);
  Scalar base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) out += re_.get_str();
  if (im_ != 0) {
    if (re_ != 0 && im_ > 0) out += "+";
    if (im_ == -1)
      out += "-";
    else if (im_ != 1)
      out += im_.get_str();
    // the unit coefficient still prints an explicit "1i"
    if (im_ == 1 || im_ == -1) out += "1";
    out += "i";
  }
  return out;
}

Rational binom_rat(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(z);
}

Scalar binom(unsigned long n, unsigned long k) { return Scalar(binom_rat(n, k)); }

}  // namespace pgca
