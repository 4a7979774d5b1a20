#include "pgca/closure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pgca {

Vector EchelonBasis::reduce(Vector v) const {
  // eliminate pivot occurrences from the top down; each row subtraction
  // can only introduce monomials strictly below that row's pivot
  for (size_t r = rows_.size(); r-- > 0;) {
    if (v.is_zero()) break;
    if (const Scalar* c = v.coeff(pivots_[r])) v.axpy(-*c, rows_[r]);
  }
  return v;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  if (r.is_zero()) return false;
  Monomial p = r.graded_max();
  Vector row = r.scaled(r.coeff(p)->inverse());
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p, Monomial::graded_less);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + static_cast<ptrdiff_t>(idx), std::move(row));
  // back-reduce older rows against the new pivot
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i == idx) continue;
    if (const Scalar* c = rows_[i].coeff(p)) rows_[i].axpy(-*c, rows_[idx]);
  }
  return true;
}

std::vector<Monomial> EchelonBasis::pivots() const { return pivots_; }

std::vector<size_t> EchelonBasis::dims_by_weight(unsigned cap) const {
  std::vector<size_t> out(cap + 1, 0);
  for (const Monomial& p : pivots_) {
    unsigned w = p.weight();
    if (w <= cap) ++out[w];
  }
  return out;
}

namespace {

struct WorkItem {
  Vector vec;
  Derivation deriv;
};

// Worklist driver shared by the drain and sweep phases.
struct Generator {
  const ActionEngine& eng;
  ClosureReport& rep;
  const ClosureOptions& opts;
  std::vector<Kind> kinds;
  long M;
  std::deque<WorkItem> queue;
  bool capped = false;

  bool done() const { return capped || rep.target_found; }

  void note_insert(const Derivation& d, const Vector& raw) {
    rep.derivations.emplace_back(d, raw);
    queue.push_back(WorkItem{raw, d});
    // membership in the span can only change when the span grows
    if (opts.stop_when_member && !rep.target_found &&
        rep.basis.member(*opts.stop_when_member))
      rep.target_found = true;
  }

  void offer(const Vector& v, const Derivation& d) {
    if (v.is_zero()) return;
    if (rep.insert_attempts >= opts.insert_cap) {
      capped = true;
      return;
    }
    ++rep.insert_attempts;
    if (v.weight() > rep.weight_cap) {
      ++rep.discarded;
      return;
    }
    if (rep.basis.insert(v)) note_insert(d, v);
  }

  void expand(const Vector& v, const Derivation& parent) {
    for (Kind k : kinds) {
      for (long m = -M; m <= M; ++m) {
        if (done()) return;
        Derivation d = parent;
        d.word.push_back(GenRef{k, m});
        offer(eng.act(GenRef{k, m}, v), d);
      }
    }
  }

  void drain() {
    while (!queue.empty() && !done()) {
      WorkItem item = std::move(queue.front());
      queue.pop_front();
      expand(item.vec, item.deriv);
    }
  }
};

}  // namespace

ClosureReport generate(const ActionEngine& eng, std::span<const Vector> seeds, long M,
                       unsigned Dcap, const ClosureOptions& opts) {
  if (M < 1) throw std::invalid_argument("generate: M must be at least 1");
  ClosureReport rep(eng.arity());
  rep.gen_range = M;
  rep.weight_cap = Dcap;

  Generator gen{eng, rep, opts, eng.module().defined_kinds(), M, {}, false};

  for (size_t i = 0; i < seeds.size(); ++i) {
    const Vector& s = seeds[i];
    if (s.is_zero()) throw std::invalid_argument("generate: seed vectors must be nonzero");
    if (s.arity() != eng.arity()) throw std::invalid_argument("generate: seed arity mismatch");
    if (s.weight() > Dcap)
      throw std::invalid_argument("generate: seed weight exceeds the weight cap");
    Derivation d;
    d.seed_index = i;
    d.base = s;
    if (rep.basis.insert(s)) gen.note_insert(d, s);
  }

  gen.drain();

  // saturation: sweep every basis row under every generator and drain
  // whatever that adds; the span is saturated at these bounds when one
  // entire sweep leaves the dimension unchanged
  while (!gen.done()) {
    const std::vector<Vector> snapshot = rep.basis.rows();
    const size_t before = rep.basis.dim();
    for (const Vector& row : snapshot) {
      if (gen.done()) break;
      Derivation d;
      d.base = row;
      gen.expand(row, d);
    }
    gen.drain();
    if (rep.basis.dim() == before) {
      rep.saturated = !gen.capped;
      break;
    }
  }
  if (rep.target_found) rep.saturated = false;

  return rep;
}

}  // namespace pgca
