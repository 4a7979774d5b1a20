#ifndef PGCA_CLOSURE_HPP
#define PGCA_CLOSURE_HPP

#include <optional>

#include "pgca/engine.hpp"

namespace pgca {

// Row-reduced echelon basis of a growing subspace.  Pivots are leading
// monomials in the graded order; rows are normalized to pivot
// coefficient 1 and fully back-reduced, so the row set of a given span
// is unique and insertion order cannot change the final basis.
class EchelonBasis {
 public:
  explicit EchelonBasis(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }

  // residue of v modulo the current span
  Vector reduce(Vector v) const;

  bool member(const Vector& v) const { return reduce(v).is_zero(); }

  // adjoin v; returns true when the span grew
  bool insert(const Vector& v);

  // pivot monomials, ascending in the graded order
  std::vector<Monomial> pivots() const;

  // number of pivots of each weight 0..cap
  std::vector<size_t> dims_by_weight(unsigned cap) const;

 private:
  int arity_;
  std::vector<Vector> rows_;             // parallel to pivots_
  std::vector<Monomial> pivots_;         // ascending in graded order
};

// How a closure row was produced: the generator word, applied left to
// right, acting on a base vector.  Bases are either original seeds
// (seed_index set) or snapshots of already-derived basis rows taken
// during a saturation sweep.
struct Derivation {
  std::optional<size_t> seed_index;
  Vector base;
  std::vector<GenRef> word;

  Derivation() : base(0) {}
};

struct ClosureOptions {
  size_t insert_cap = 10000;
  // stop as soon as this vector lies in the span (membership searches)
  std::optional<Vector> stop_when_member;
};

struct ClosureReport {
  EchelonBasis basis;
  long gen_range = 0;        // M
  unsigned weight_cap = 0;   // Dcap
  bool saturated = false;    // a full sweep over the basis added nothing
  size_t insert_attempts = 0;
  size_t discarded = 0;      // action results above the weight cap
  bool target_found = false; // stop_when_member triggered
  // raw inserted vectors with their derivations, in insertion order
  std::vector<std::pair<Derivation, Vector>> derivations;

  explicit ClosureReport(int arity) : basis(arity) {}
};

// Bounded closure of the span of `seeds` under all defined generators
// with |index| <= M, discarding action results of weight above Dcap.
// Requires nonzero seeds of weight <= Dcap and M >= 1.  The result is an
// under-approximation of the intersection of the generated submodule
// with the weight cap: membership answers are sound, non-membership is
// evidence at these bounds only.
ClosureReport generate(const ActionEngine& eng, std::span<const Vector> seeds, long M,
                       unsigned Dcap, const ClosureOptions& opts = {});

}  // namespace pgca

#endif
