#include "pgca/tensor.hpp"

#include <stdexcept>

namespace pgca {

static bool polynomial_factor(Family f) {
  return f == Family::TypeI || f == Family::TypeII;
}

TensorSpec::TensorSpec(ModuleSpec l, ModuleSpec r) : left(std::move(l)), right(std::move(r)) {
  bool ok = (polynomial_factor(left.family) && polynomial_factor(right.family)) ||
            (left.family == Family::WittOmega && right.family == Family::WittOmega) ||
            (left.family == Family::HVirOmega && right.family == Family::HVirOmega);
  if (!ok)
    throw std::invalid_argument(std::string("tensor spec: unsupported factor pair ") +
                                family_name(left.family) + " / " + family_name(right.family));
}

std::vector<Kind> TensorSpec::defined_kinds() const { return left.defined_kinds(); }

bool TensorSpec::kind_defined(Kind k) const {
  return left.kind_defined(k) && right.kind_defined(k);
}

bool order_gt(const DegTuple& a, const DegTuple& b) {
  return Monomial::graded_cmp(a, b) > 0;
}

DegTuple deg(const Vector& v) {
  if (v.is_zero()) throw std::invalid_argument("deg: zero vector has no degree");
  if (v.arity() != 4) throw std::invalid_argument("deg: expected an arity-4 vector");
  return v.graded_max();
}

Vector tensor_of(const Vector& left, const Vector& right) {
  Vector out(4);
  for (const auto& [lm, lc] : left.terms())
    for (const auto& [rm, rc] : right.terms()) {
      Monomial m(4, {lm.exp(0), lm.exp(1), rm.exp(0), rm.exp(1)});
      out.add_term(m, lc * rc);
    }
  return out;
}

Monomial left_part(const Monomial& m) { return Monomial(2, {m.exp(0), m.exp(1)}); }
Monomial right_part(const Monomial& m) { return Monomial(2, {m.exp(2), m.exp(3)}); }

// embed an arity-2 image back into slots (base, base+1) against the
// untouched other half
static void add_embedded(Vector& out, const Vector& img, const Monomial& other, int base,
                         const Scalar& c) {
  for (const auto& [m2, s] : img.terms()) {
    Monomial m(4);
    m.set_exp(base, m2.exp(0));
    m.set_exp(base + 1, m2.exp(1));
    int obase = base == 0 ? 2 : 0;
    m.set_exp(obase, other.exp(0));
    m.set_exp(obase + 1, other.exp(1));
    out.add_term(m, c * s);
  }
}

Vector tact(const TensorSpec& ts, GenRef g, const Vector& v) {
  if (!ts.kind_defined(g.kind))
    throw std::invalid_argument(std::string("tact: generator kind ") + kind_name(g.kind) +
                                " not defined on this tensor module");
  if (v.arity() != 4) throw std::invalid_argument("tact: expected an arity-4 vector");
  Vector out(4);
  for (const auto& [m, c] : v.terms()) {
    Monomial lm = left_part(m), rm = right_part(m);
    add_embedded(out, act(ts.left, g, Vector::monomial(lm)), rm, 0, c);
    add_embedded(out, act(ts.right, g, Vector::monomial(rm)), lm, 2, c);
  }
  return out;
}

}  // namespace pgca
