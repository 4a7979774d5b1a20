#ifndef PGCA_ANALYSIS_HPP
#define PGCA_ANALYSIS_HPP

#include "pgca/closure.hpp"

namespace pgca {

// ---------------------------------------------------------------- axioms

struct AxiomCounterexample {
  GenRef x, y;
  Monomial monomial;
  Vector difference;  // act([x,y], v) - (act(x, act(y, v)) - act(y, act(x, v)))

  AxiomCounterexample() : difference(0) {}
};

struct AxiomResult {
  bool ok = false;
  std::optional<AxiomCounterexample> counterexample;
};

// Checks act([x,y], v) = act(x, act(y, v)) - act(y, act(x, v)) exactly for
// all unordered pairs of kinds defined on the module, all |m|,|n| <=
// index_bound, and all basis monomials of weight <= degree_bound.
AxiomResult verify_axioms(const ModuleRef& mod, long index_bound, unsigned degree_bound);

// ---------------------------------------------------------------- probes

enum class ProbeVerdict { IrreducibleEvidence, ReducibleWitness, Inconclusive };

const char* probe_verdict_name(ProbeVerdict v);

struct RankOneProbe {
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
  std::vector<Vector> seeds;                  // fixed witness seed set, in order
  std::optional<size_t> deficient_seed;       // first seed whose closure fell short
  std::optional<ClosureReport> witness;       // that closure
};

// Bounded reducibility probe for a single rank-one module.  Runs generate
// from each of a fixed seed set {1, first variable, second variable,
// sigma (resp. delta) times 1}; irreducible evidence iff every closure
// spans all monomials of weight <= Dcap-1, otherwise the first deficient
// closure is returned as the reducible witness.
RankOneProbe probe_rank_one(const ModuleSpec& spec, long M, unsigned Dcap);

struct TensorProbe {
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
  // lambda1 != lambda2 branch
  std::optional<ClosureReport> unit_closure;  // closure of {1 tensor 1}
  size_t random_seeds_checked = 0;
  std::optional<Vector> deficient_seed;
  // lambda1 == lambda2 branch
  std::vector<Vector> witness_span;           // minimal submodule vectors, weight <= D+1
  bool witness_invariant = false;
  bool witness_proper = false;                // Y tensor 1 not in the span
};

// Irreducibility probe for TypeI(x)TypeII, TypeI(x)TypeI, TypeII(x)TypeII
// tensors with constant sigmas.  With distinct lambdas, saturates the
// closure of {1 tensor 1} (plus deterministic pseudo-random seeds) at
// Dcap = D+1 and demands a full span up to weight D; with equal lambdas,
// returns the explicit proper-submodule span as a verified witness.
TensorProbe probe_tensor_irreducible(const TensorSpec& ts, long M, unsigned D,
                                     size_t random_seed_count = 4);

// ----------------------------------------------------- minimal submodules

enum class SubmoduleKind { V12, W11, U5 };

// Spanning vectors v_{i,j,k} = sum_t binom(j,t) slot0^i slot1^{j-t}
// (x) slot2^k slot3^t for i <= imax, j <= jmax, k <= kmax.  U5 pins
// i = k = 0 (its factors are the one-variable modules).
std::vector<Vector> minimal_submodule(SubmoduleKind kind, unsigned imax, unsigned jmax,
                                      unsigned kmax);

struct InvarianceResult {
  bool ok = false;
  std::optional<GenRef> failing_gen;
  std::optional<Vector> failing_vector;
  std::optional<Vector> escaped_image;  // residue outside the span
};

// Echelons the given spanning family (weights up to Dcap) and tests that
// every generator image, |m| <= M, of every spanning vector of weight
// <= Dcap-1 stays inside the span.  Images of weight-(Dcap-1) vectors
// reach weight Dcap at most, so the family must be supplied up to
// weight Dcap for the test to be meaningful.
InvarianceResult check_invariance(const ModuleRef& mod, std::span<const Vector> spanning,
                                  long M, unsigned Dcap);

// ----------------------------------------------------- degree reduction

struct ReductionStep {
  int case_id = 0;  // 1..4
  long m = 0;
  Vector result;
  DegTuple before_deg;
  DegTuple after_deg;

  ReductionStep() : result(4) {}
};

// One degree-reduction step r_m = I_m v - lambda1^m sigma1 v
// - lambda2^m sigma2 v inside a TypeI(x)TypeI tensor with constant
// sigmas and lambda1 != lambda2.  The case is read off deg(v) =
// (p',q',s',t'): p'>0 lowers slot 0 with m=0; p'=0,q'>0 lowers slot 1
// with m in {0,1}; then slot 2 with m in {0,1,2}; then slot 3 with m in
// {0,1,2,3}.  The returned step's after_deg equals before_deg with that
// slot lowered by one.
ReductionStep reduce_degree(const TensorSpec& ts, const Vector& v);

// ----------------------------------------------------------- obstructions

struct VandermondeResult {
  Scalar det;
  bool factored_zero = false;
};

// Determinant of the 4x4 matrix with rows (1,-1,1,-1),
// (l1,-l1p,l2,-l2p), their squares, their cubes; factored_zero reports
// the vanishing of (l1-l1p)(l2-l1)(l2-l1p)(l1-l2p)(l2p-l1p)(l2p-l2).
// The determinant equals that product exactly, which the routine checks.
VandermondeResult vandermonde_obstruction(const Scalar& l1, const Scalar& l1p,
                                          const Scalar& l2, const Scalar& l2p);

// ------------------------------------------------------------ intertwiner

struct LinearMapSample {
  // images of the weight <= D source monomials, ascending graded order
  std::vector<std::pair<Monomial, Vector>> images;
};

struct IntertwinerResult {
  size_t dim = 0;       // solution-space dimension at these bounds
  size_t unknowns = 0;
  size_t rank = 0;
  std::optional<LinearMapSample> sample;  // one nonzero solution when dim >= 1
};

// Exact bounded-degree intertwiner space between two modules of the same
// arity and generator kinds: unknowns are images (weight <= D+1 in B) of
// the weight <= D monomials of A, constrained by phi(act_A(g, v)) =
// act_B(g, phi(v)) for all |m| <= M and all monomials v of weight <= D-1
// whose A-image stays within weight D.  dim = 0 soundly certifies that
// no isomorphism exists; dim >= 1 is evidence only.
IntertwinerResult intertwiner_solve(const ModuleRef& A, const ModuleRef& B, unsigned D,
                                    long M);

// --------------------------------------------------------- classification

enum class Matching { Ordered, Swapped, None };

const char* matching_name(Matching m);

struct IsoVerdict {
  bool equivalent = false;
  Matching matching = Matching::None;
  size_t witness_dim = 0;                // intertwiner dimension at (D=2, M=3)
  std::optional<Scalar> obstruction;     // Vandermonde determinant when relevant
};

// Closed-form isomorphism classification of two irreducible tensor
// modules of the same shape (mixed: ordered parameter match; TypeI(x)TypeI
// and TypeII(x)TypeII: ordered or swapped), cross-checked against
// intertwiner_solve at (D=2, M=3).  Requires lambda1 != lambda2 on each
// side and constant sigmas.
IsoVerdict classify_iso(const TensorSpec& A, const TensorSpec& B);

// ---------------------------------------------------------------- helpers

// 1 (x) 1 at arity 4
Vector unit_tensor();

// true when the basis contains every monomial of weight <= D (restricted
// to the module's monomial universe)
bool spans_all_monomials(const EchelonBasis& basis, int arity, unsigned D,
                         unsigned unit_slots_mask = 0);

}  // namespace pgca

#endif
