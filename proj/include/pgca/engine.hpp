#ifndef PGCA_ENGINE_HPP
#define PGCA_ENGINE_HPP

#include <map>
#include <tuple>
#include <variant>

#include "pgca/tensor.hpp"

namespace pgca {

// Uniform handle over a single rank-one module (arity 2) or a tensor
// product (arity 4).
class ModuleRef {
 public:
  ModuleRef(ModuleSpec s) : impl_(std::move(s)) {}   // NOLINT implicit
  ModuleRef(TensorSpec s) : impl_(std::move(s)) {}   // NOLINT implicit

  bool is_tensor() const { return std::holds_alternative<TensorSpec>(impl_); }
  const ModuleSpec& single() const { return std::get<ModuleSpec>(impl_); }
  const TensorSpec& tensor() const { return std::get<TensorSpec>(impl_); }

  int arity() const { return is_tensor() ? 4 : 2; }
  std::vector<Kind> defined_kinds() const {
    return is_tensor() ? tensor().defined_kinds() : single().defined_kinds();
  }
  unsigned unit_slots_mask() const {
    return is_tensor() ? tensor().unit_slots_mask() : single().unit_slots_mask();
  }

  Vector act_on(GenRef g, const Vector& v) const {
    return is_tensor() ? tact(tensor(), g, v) : act(single(), g, v);
  }

 private:
  std::variant<ModuleSpec, TensorSpec> impl_;
};

// Action evaluator that memoizes generator images of monomials, so that
// repeated sweeps over overlapping supports cost one expansion each.
class ActionEngine {
 public:
  explicit ActionEngine(ModuleRef mod) : mod_(std::move(mod)) {}

  const ModuleRef& module() const { return mod_; }
  int arity() const { return mod_.arity(); }

  const Vector& act_mono(GenRef g, const Monomial& m) const;
  Vector act(GenRef g, const Vector& v) const;
  Vector act(const AlgElement& x, const Vector& v) const;

 private:
  ModuleRef mod_;
  mutable std::map<std::tuple<Kind, long, Monomial>, Vector> cache_;
};

}  // namespace pgca

#endif
