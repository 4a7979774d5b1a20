#ifndef PGCA_FREEMOD_HPP
#define PGCA_FREEMOD_HPP

#include <string>
#include <vector>

#include "pgca/gca.hpp"
#include "pgca/vec.hpp"

namespace pgca {

// Rank-one free module families.  TypeI/TypeII/TypeIII are modules over
// the full algebra; WittOmega and HVirOmega are the one-variable modules
// over the Witt and Heisenberg-Virasoro subalgebras.
//
// All five act on polynomial vectors of arity 2.  TypeI uses variables
// (X, Y) in slots (0, 1); TypeII uses (S, T); TypeIII uses (P, Q).  The
// one-variable families keep slot 0 pinned to exponent zero and put
// their single variable Y in slot 1.
enum class Family : uint8_t { TypeI, TypeII, TypeIII, WittOmega, HVirOmega };

const char* family_name(Family f);

// Deliberate action defects used to validate the axiom checker.
//   SigmaArgShifted: the I/J action multiplies by sigma evaluated at the
//     already-shifted first variable.  This produces the module of the
//     same family with parameter sigma(x-1) (resp. sigma(x+1)), so the
//     bracket axioms still hold; it is kept as a passing control.
//   DropDegreeShift: the I/J action forgets the second-variable shift
//     f(.., Y-m).  This genuinely breaks [L_m, I_n] = (n-m) I_{m+n}.
enum class MutationTag : uint8_t { None, SigmaArgShifted, DropDegreeShift };

struct ModuleSpec {
  Family family = Family::TypeI;
  Scalar lambda;       // always nonzero
  Scalar eta;          // TypeI / TypeII
  Poly sigma;          // TypeI (in X) / TypeII (in S); nonzero
  Poly delta;          // TypeIII (in P); may be zero
  Scalar alpha;        // WittOmega / HVirOmega
  Scalar beta;         // HVirOmega
  MutationTag mutation = MutationTag::None;

  static ModuleSpec type_i(Scalar lambda, Scalar eta, Poly sigma);
  static ModuleSpec type_ii(Scalar lambda, Scalar eta, Poly sigma);
  static ModuleSpec type_iii(Scalar lambda, Poly delta);
  static ModuleSpec witt(Scalar lambda, Scalar alpha);
  static ModuleSpec hvir(Scalar lambda, Scalar alpha, Scalar beta);

  // kinds the family carries an action for (zero actions count as defined)
  std::vector<Kind> defined_kinds() const;
  bool kind_defined(Kind k) const;

  // exponent-0 slot mask for the one-variable families
  unsigned unit_slots_mask() const {
    return (family == Family::WittOmega || family == Family::HVirOmega) ? 1u : 0u;
  }

  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

// Action of a basis generator on a module vector (arity 2).  Throws
// std::invalid_argument when the generator kind is undefined on the
// family (e.g. I on WittOmega).
Vector act(const ModuleSpec& spec, GenRef g, const Vector& v);

// Linear extension to algebra elements.
Vector act(const ModuleSpec& spec, const AlgElement& x, const Vector& v);

}  // namespace pgca

#endif
