#ifndef PGCA_TENSOR_HPP
#define PGCA_TENSOR_HPP

#include "pgca/freemod.hpp"

namespace pgca {

// Tensor product of two rank-one modules, acted on diagonally:
//   x (u tensor w) = (x u) tensor w + u tensor (x w).
// Elements live at arity 4; slots 0,1 hold the left factor's variables
// and slots 2,3 the right factor's.  Supported factor combinations are
// TypeI/TypeII on both sides (any mix), WittOmega with WittOmega, and
// HVirOmega with HVirOmega.
struct TensorSpec {
  ModuleSpec left, right;

  TensorSpec(ModuleSpec l, ModuleSpec r);

  std::vector<Kind> defined_kinds() const;
  bool kind_defined(Kind k) const;
  unsigned unit_slots_mask() const {
    return left.unit_slots_mask() | (right.unit_slots_mask() << 2);
  }
};

// Degree tuple of a tensor element: exponent tuple of its leading
// monomial in the graded order (weight first, then last slot back to
// first).  order_gt(a, b) is that order, strictly.
using DegTuple = Monomial;

bool order_gt(const DegTuple& a, const DegTuple& b);
DegTuple deg(const Vector& v);

// u tensor w for arity-2 vectors.
Vector tensor_of(const Vector& left, const Vector& right);

// Split an arity-4 monomial into its factor halves.
Monomial left_part(const Monomial& m);
Monomial right_part(const Monomial& m);

// Diagonal action of a basis generator on an arity-4 vector.
Vector tact(const TensorSpec& ts, GenRef g, const Vector& v);

}  // namespace pgca

#endif
