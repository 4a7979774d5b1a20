#ifndef PGCA_VEC_HPP
#define PGCA_VEC_HPP

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "pgca/scalar.hpp"

namespace pgca {

// Commutative monomial in up to four variables.  Module elements use
// arity 2 (one polynomial factor), tensor elements use arity 4 (slots
// 0,1 are the left factor, slots 2,3 the right factor).
class Monomial {
 public:
  static constexpr int kMaxArity = 4;

  Monomial() : arity_(0), e_{} {}
  explicit Monomial(int arity) : arity_(static_cast<uint8_t>(arity)), e_{} {
    assert(arity >= 1 && arity <= kMaxArity);
  }
  Monomial(int arity, std::initializer_list<unsigned> exps) : Monomial(arity) {
    int s = 0;
    for (unsigned v : exps) set_exp(s++, v);
    assert(s == arity);
  }

  int arity() const { return arity_; }
  unsigned exp(int slot) const {
    assert(slot >= 0 && slot < arity_);
    return e_[static_cast<size_t>(slot)];
  }
  void set_exp(int slot, unsigned v) {
    assert(slot >= 0 && slot < arity_);
    assert(v <= 0xffffu);
    e_[static_cast<size_t>(slot)] = static_cast<uint16_t>(v);
  }
  Monomial bumped(int slot, unsigned by) const {
    Monomial m = *this;
    m.set_exp(slot, exp(slot) + by);
    return m;
  }
  Monomial with_exp(int slot, unsigned v) const {
    Monomial m = *this;
    m.set_exp(slot, v);
    return m;
  }
  bool is_unit() const {
    for (int s = 0; s < arity_; ++s)
      if (e_[static_cast<size_t>(s)]) return false;
    return true;
  }
  unsigned weight() const {
    unsigned w = 0;
    for (int s = 0; s < arity_; ++s) w += e_[static_cast<size_t>(s)];
    return w;
  }

  // Storage order: plain lexicographic on the exponent tuple.  This is
  // only a term-bookkeeping order, independent of the graded order below.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    return a.e_ <=> b.e_;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded order: compare total weight first, then exponents from the
  // last slot back to the first.  On arity-4 tuples this is the order
  // used to pick the leading term of a tensor element.
  static std::strong_ordering graded_cmp(const Monomial& a, const Monomial& b) {
    assert(a.arity_ == b.arity_);
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    for (int s = a.arity_ - 1; s >= 0; --s) {
      if (auto c = a.e_[static_cast<size_t>(s)] <=> b.e_[static_cast<size_t>(s)]; c != 0)
        return c;
    }
    return std::strong_ordering::equal;
  }
  static bool graded_less(const Monomial& a, const Monomial& b) {
    return graded_cmp(a, b) < 0;
  }

 private:
  uint8_t arity_;
  std::array<uint16_t, kMaxArity> e_;
};

// Univariate polynomial with Scalar coefficients (for the sigma/delta
// module parameters).  Coefficient vector is trimmed: back() is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Scalar c) { return Poly(std::vector<Scalar>{std::move(c)}); }
  static Poly var() { return Poly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(size_t d) const { return d < c_.size() ? c_[d] : Scalar(0); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  // p(x + a), expanded exactly.
  Poly shifted_arg(const Scalar& a) const;

  Scalar eval(const Scalar& x) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

// Sparse polynomial vector: finite Scalar combination of monomials of a
// single arity.  Terms are kept sorted in the storage order with no zero
// coefficients, so equal vectors compare equal structurally.
class Vector {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit Vector(int arity) : arity_(arity) {}
  static Vector monomial(const Monomial& m, Scalar c = Scalar(1)) {
    Vector v(m.arity());
    if (!c.is_zero()) v.terms_.emplace_back(m, std::move(c));
    return v;
  }
  static Vector unit(int arity) { return monomial(Monomial(arity)); }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // nullptr when the monomial is absent
  const Scalar* coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  Vector& operator+=(const Vector& o) {
    axpy(Scalar(1), o);
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    axpy(Scalar(-1), o);
    return *this;
  }
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }

  // this += c * o  (linear merge of the sorted term lists)
  void axpy(const Scalar& c, const Vector& o);

  Vector scaled(const Scalar& c) const;

  // multiply by variable slot^p
  Vector mul_var(int slot, unsigned p = 1) const;

  // substitute var[slot] -> var[slot] + c, expanded by the binomial rule
  Vector shifted(int slot, const Scalar& c) const;

  // multiply by poly evaluated at var[slot]
  Vector mul_poly(int slot, const Poly& p) const;

  // leading monomial in the graded order; vector must be nonzero
  const Monomial& graded_max() const;
  unsigned weight() const { return is_zero() ? 0 : graded_max().weight(); }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  int arity_;
  std::vector<Term> terms_;
};

// Exact linear combination sum(c_k * v_k); result independent of entry order.
Vector vec_combine(std::span<const std::pair<Scalar, Vector>> entries, int arity);

// All monomials of the given arity with weight <= cap, ascending in the
// graded order.  When unit_slots is nonzero those slots are pinned to
// exponent 0 (used for the one-variable families embedded at arity 2/4).
std::vector<Monomial> monomials_up_to(int arity, unsigned cap, unsigned unit_slots_mask = 0);

}  // namespace pgca

#endif
