#ifndef PGCA_GCA_HPP
#define PGCA_GCA_HPP

#include <compare>
#include <map>
#include <string>

#include "pgca/scalar.hpp"

namespace pgca {

// Generator kinds of the planar Galilean conformal algebra.  The basis
// is {L_m, H_m, I_m, J_m : m in Z} with brackets
//   [L_m, L_n] = (n-m) L_{m+n}
//   [L_m, H_n] = n H_{m+n}
//   [L_m, I_n] = (n-m) I_{m+n}
//   [L_m, J_n] = (n-m) J_{m+n}
//   [H_m, I_n] = I_{m+n}
//   [H_m, J_n] = -J_{m+n}
// and every other pair of kinds bracketing to zero.
enum class Kind : uint8_t { L, H, I, J };

const char* kind_name(Kind k);

struct GenRef {
  Kind kind;
  long index;
  friend auto operator<=>(const GenRef&, const GenRef&) = default;
};

// Finite Scalar combination of basis generators.
class AlgElement {
 public:
  AlgElement() = default;
  static AlgElement gen(GenRef g, Scalar c = Scalar(1)) {
    AlgElement e;
    e.add(g, std::move(c));
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<GenRef, Scalar>& terms() const { return terms_; }
  Scalar coeff(GenRef g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add(GenRef g, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(g, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void axpy(const Scalar& c, const AlgElement& o) {
    for (const auto& [g, s] : o.terms_) add(g, c * s);
  }
  AlgElement& operator+=(const AlgElement& o) {
    axpy(Scalar(1), o);
    return *this;
  }
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  AlgElement scaled(const Scalar& c) const {
    AlgElement e;
    e.axpy(c, *this);
    return e;
  }

  friend bool operator==(const AlgElement&, const AlgElement&) = default;

  std::string str() const;

 private:
  std::map<GenRef, Scalar> terms_;
};

// Structure constants on basis generators.
AlgElement bracket(GenRef x, GenRef y);

// Bilinear extension of bracket.
AlgElement bracket_lin(const AlgElement& x, const AlgElement& y);

// Distinguished subalgebras, identified by which kinds they admit.
enum class SubalgebraTag { Witt, HeisenbergVirasoro, W22_I, W22_J, Full };

bool kind_admitted(Kind k, SubalgebraTag tag);
bool in_subalgebra(const AlgElement& e, SubalgebraTag tag);

}  // namespace pgca

#endif
