#include "pgca/vec.hpp"

#include <algorithm>

namespace pgca {

Poly Poly::shifted_arg(const Scalar& a) const {
  // (x+a)^d = sum_t C(d,t) a^(d-t) x^t
  std::vector<Scalar> out(c_.size(), Scalar(0));
  for (size_t d = 0; d < c_.size(); ++d) {
    if (c_[d].is_zero()) continue;
    for (size_t t = 0; t <= d; ++t)
      out[t] += c_[d] * binom(d, t) * a.pow(static_cast<long>(d - t));
  }
  return Poly(std::move(out));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc(0);
  for (size_t d = c_.size(); d-- > 0;) acc = acc * x + c_[d];
  return acc;
}

const Scalar* Vector::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return &it->second;
  return nullptr;
}

void Vector::add_term(const Monomial& m, const Scalar& c) {
  assert(m.arity() == arity_);
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace(it, m, c);
  }
}

void Vector::axpy(const Scalar& c, const Vector& o) {
  assert(arity_ == o.arity_);
  if (c.is_zero() || o.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first < b->first) {
      out.push_back(std::move(*a));
      ++a;
    } else if (b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) out.emplace_back(b->first, c * b->second);
  terms_ = std::move(out);
}

Vector Vector::scaled(const Scalar& c) const {
  Vector v(arity_);
  if (c.is_zero()) return v;
  v.terms_.reserve(terms_.size());
  for (const auto& [m, s] : terms_) v.terms_.emplace_back(m, c * s);
  return v;
}

Vector Vector::mul_var(int slot, unsigned p) const {
  if (p == 0) return *this;
  Vector v(arity_);
  v.terms_.reserve(terms_.size());
  // bumping one slot by a constant preserves the lexicographic term order
  for (const auto& [m, s] : terms_) v.terms_.emplace_back(m.bumped(slot, p), s);
  return v;
}

Vector Vector::shifted(int slot, const Scalar& c) const {
  if (c.is_zero()) return *this;
  Vector out(arity_);
  std::vector<Scalar> cpow{Scalar(1)};
  for (const auto& [m, s] : terms_) {
    unsigned j = m.exp(slot);
    while (cpow.size() <= j) cpow.push_back(cpow.back() * c);
    // (v+c)^j = sum_t C(j,t) c^(j-t) v^t
    for (unsigned t = 0; t <= j; ++t)
      out.add_term(m.with_exp(slot, t), s * binom(j, t) * cpow[j - t]);
  }
  return out;
}

Vector Vector::mul_poly(int slot, const Poly& p) const {
  Vector out(arity_);
  for (int d = 0; d <= p.degree(); ++d) {
    Scalar c = p.coeff(static_cast<size_t>(d));
    if (c.is_zero()) continue;
    out.axpy(c, mul_var(slot, static_cast<unsigned>(d)));
  }
  return out;
}

const Monomial& Vector::graded_max() const {
  assert(!terms_.empty());
  const Monomial* best = &terms_.front().first;
  for (const auto& [m, s] : terms_)
    if (Monomial::graded_less(*best, m)) best = &m;
  return *best;
}

Vector vec_combine(std::span<const std::pair<Scalar, Vector>> entries, int arity) {
  Vector acc(arity);
  for (const auto& [c, v] : entries) acc.axpy(c, v);
  return acc;
}

std::vector<Monomial> monomials_up_to(int arity, unsigned cap, unsigned unit_slots_mask) {
  std::vector<Monomial> out;
  Monomial m(arity);
  // depth-first enumeration; sorted afterwards into the graded order
  auto rec = [&](auto&& self, int slot, unsigned used) -> void {
    if (slot == arity) {
      out.push_back(m);
      return;
    }
    unsigned lim = (unit_slots_mask >> slot) & 1u ? 0u : cap - used;
    for (unsigned e = 0; e <= lim; ++e) {
      m.set_exp(slot, e);
      self(self, slot + 1, used + e);
    }
    m.set_exp(slot, 0);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), Monomial::graded_less);
  return out;
}

}  // namespace pgca
