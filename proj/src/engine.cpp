#include "pgca/engine.hpp"

namespace pgca {

const Vector& ActionEngine::act_mono(GenRef g, const Monomial& m) const {
  auto key = std::make_tuple(g.kind, g.index, m);
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(std::move(key), mod_.act_on(g, Vector::monomial(m))).first;
  return it->second;
}

Vector ActionEngine::act(GenRef g, const Vector& v) const {
  Vector out(mod_.arity());
  for (const auto& [m, c] : v.terms()) out.axpy(c, act_mono(g, m));
  return out;
}

Vector ActionEngine::act(const AlgElement& x, const Vector& v) const {
  Vector out(mod_.arity());
  for (const auto& [g, c] : x.terms()) out.axpy(c, act(g, v));
  return out;
}

}  // namespace pgca
