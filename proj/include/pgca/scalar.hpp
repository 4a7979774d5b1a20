#ifndef PGCA_SCALAR_HPP
#define PGCA_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pgca {

using Rational = mpq_class;

// Gaussian rational a + b*i with exact rational components.
// This is the coefficient field for every module computation in the
// library; all arithmetic is exact.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}                       // NOLINT implicit
  // Rational components are canonicalized on entry (GMP arithmetic
  // requires canonical operands); a zero denominator throws.
  Scalar(Rational re) : re_(std::move(re)), im_(0) {       // NOLINT implicit
    canonicalize_part(re_);
  }
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    canonicalize_part(re_);
    canonicalize_part(im_);
  }

  // num/den factory; den == 0 throws.
  static Scalar rational(long num, long den);
  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_rational() const { return im_ == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  // Integer power, negative exponents via inverse().
  Scalar pow(long e) const;

  // Canonical text form: "0", "3", "-3/2", "2i", "1/2+2/3i", "1/2-1i".
  std::string str() const;

 private:
  static void canonicalize_part(Rational& q) {
    if (q.get_den() == 0) throw std::domain_error("scalar: zero denominator");
    q.canonicalize();
  }

  Rational re_, im_;
};

// Exact binomial coefficient C(n, k); k > n yields 0.
Scalar binom(unsigned long n, unsigned long k);
Rational binom_rat(unsigned long n, unsigned long k);

}  // namespace pgca

#endif
