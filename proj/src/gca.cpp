#include "pgca/gca.hpp"

namespace pgca {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::L: return "L";
    case Kind::H: return "H";
    case Kind::I: return "I";
    case Kind::J: return "J";
  }
  return "?";
}

std::string AlgElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (!(c == Scalar(1))) out += c.str() + "*";
    out += kind_name(g.kind);
    out += "_" + std::to_string(g.index);
  }
  return out;
}

AlgElement bracket(GenRef x, GenRef y) {
  // canonical kind order L < H < I < J; flip and negate otherwise
  if (static_cast<int>(x.kind) > static_cast<int>(y.kind))
    return bracket(y, x).scaled(Scalar(-1));
  long m = x.index, n = y.index;
  auto one = [](Kind k, long i, Scalar c) {
    return AlgElement::gen(GenRef{k, i}, std::move(c));
  };
  if (x.kind == Kind::L && y.kind == Kind::L) return one(Kind::L, m + n, Scalar(n - m));
  if (x.kind == Kind::L && y.kind == Kind::H) return one(Kind::H, m + n, Scalar(n));
  if (x.kind == Kind::L && y.kind == Kind::I) return one(Kind::I, m + n, Scalar(n - m));
  if (x.kind == Kind::L && y.kind == Kind::J) return one(Kind::J, m + n, Scalar(n - m));
  if (x.kind == Kind::H && y.kind == Kind::I) return one(Kind::I, m + n, Scalar(1));
  if (x.kind == Kind::H && y.kind == Kind::J) return one(Kind::J, m + n, Scalar(-1));
  return AlgElement();  // H-H, I-*, J-* all abelian
}

AlgElement bracket_lin(const AlgElement& x, const AlgElement& y) {
  AlgElement out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) out.axpy(cx * cy, bracket(gx, gy));
  return out;
}

bool kind_admitted(Kind k, SubalgebraTag tag) {
  switch (tag) {
    case SubalgebraTag::Witt: return k == Kind::L;
    case SubalgebraTag::HeisenbergVirasoro: return k == Kind::L || k == Kind::H;
    case SubalgebraTag::W22_I: return k == Kind::L || k == Kind::I;
    case SubalgebraTag::W22_J: return k == Kind::L || k == Kind::J;
    case SubalgebraTag::Full: return true;
  }
  return false;
}

bool in_subalgebra(const AlgElement& e, SubalgebraTag tag) {
  for (const auto& [g, c] : e.terms())
    if (!kind_admitted(g.kind, tag)) return false;
  return true;
}

}  // namespace pgca
