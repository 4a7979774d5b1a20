#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pgca/closure.hpp"

using namespace pgca;

namespace {

ModuleSpec ti(long lambda, long eta, long sigma) {
  return ModuleSpec::type_i(Scalar(lambda), Scalar(eta), Poly::constant(Scalar(sigma)));
}
ModuleSpec tii(long lambda, long eta, long sigma) {
  return ModuleSpec::type_ii(Scalar(lambda), Scalar(eta), Poly::constant(Scalar(sigma)));
}

Vector mono4(unsigned a, unsigned b, unsigned c, unsigned d, Scalar s = Scalar(1)) {
  return Vector::monomial(Monomial(4, {a, b, c, d}), std::move(s));
}

size_t row_index_of_pivot(const EchelonBasis& e, const Monomial& p) {
  const auto piv = e.pivots();
  const auto it = std::find(piv.begin(), piv.end(), p);
  REQUIRE(it != piv.end());
  return static_cast<size_t>(it - piv.begin());
}

}  // namespace

TEST_CASE("echelon insert and membership") {
  EchelonBasis e(4);
  const Vector x1 = mono4(1, 0, 0, 0);
  CHECK(e.insert(x1));
  CHECK(e.dim() == 1);
  CHECK_FALSE(e.insert(x1.scaled(Scalar(2))));
  CHECK(e.dim() == 1);
  CHECK(e.member(x1.scaled(Scalar(-7))));
  CHECK_FALSE(e.member(mono4(0, 1, 0, 0)));

  EchelonBasis f(4);
  CHECK(f.insert(mono4(1, 0, 0, 0) + mono4(0, 0, 1, 0)));
  CHECK(f.insert(mono4(1, 0, 0, 0) - mono4(0, 0, 1, 0)));
  CHECK(f.dim() == 2);
  // back-reduction separates the rows into pure monomials; pivots come
  // out ascending in the graded order (slot 2 outranks slot 0)
  const auto piv = f.pivots();
  REQUIRE(piv.size() == 2);
  CHECK(piv[0] == Monomial(4, {1, 0, 0, 0}));
  CHECK(piv[1] == Monomial(4, {0, 0, 1, 0}));
  CHECK(f.rows()[row_index_of_pivot(f, piv[0])] == mono4(1, 0, 0, 0));
  CHECK(f.rows()[row_index_of_pivot(f, piv[1])] == mono4(0, 0, 1, 0));
  CHECK(f.member(mono4(1, 0, 0, 0)));
}

TEST_CASE("echelon basis is insertion-order independent") {
  const std::array<Vector, 4> vs{
      mono4(0, 1, 0, 0) + mono4(0, 0, 0, 1),
      mono4(0, 1, 0, 0) - mono4(1, 0, 0, 0, Scalar(3)),
      mono4(0, 0, 1, 0, Scalar(2)) + mono4(0, 0, 0, 1),
      mono4(0, 1, 0, 0) + mono4(0, 0, 1, 0),
  };
  EchelonBasis a(4), b(4);
  for (const Vector& v : vs) a.insert(v);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) b.insert(*it);
  CHECK(a.dim() == b.dim());
  CHECK(a.rows() == b.rows());
}

TEST_CASE("membership example with a bound sum") {
  EchelonBasis e(4);
  e.insert(mono4(0, 1, 0, 0) + mono4(0, 0, 0, 1));
  CHECK_FALSE(e.member(mono4(0, 1, 0, 0)));
  e.insert(mono4(0, 0, 0, 1));
  CHECK(e.member(mono4(0, 1, 0, 0)));
}

TEST_CASE("dims_by_weight") {
  EchelonBasis e(4);
  e.insert(Vector::unit(4));
  e.insert(mono4(0, 1, 0, 0) + mono4(0, 0, 0, 1));
  e.insert(mono4(0, 0, 2, 0));
  const auto dims = e.dims_by_weight(3);
  REQUIRE(dims.size() == 4);
  CHECK(dims[0] == 1);
  CHECK(dims[1] == 1);
  CHECK(dims[2] == 1);
  CHECK(dims[3] == 0);
}

TEST_CASE("closure of the mixed unit spans all low-weight monomials") {
  const ActionEngine eng(TensorSpec(ti(2, 0, 1), tii(3, 0, 1)));
  const std::array<Vector, 1> seeds{Vector::unit(4)};
  const ClosureReport rep = generate(eng, seeds, 3, 3);
  CHECK(rep.saturated);
  CHECK_FALSE(rep.target_found);
  CHECK(rep.gen_range == 3);
  CHECK(rep.weight_cap == 3);
  for (const Monomial& m : monomials_up_to(4, 2))
    CHECK(rep.basis.member(Vector::monomial(m)));
  CHECK(rep.insert_attempts >= rep.basis.dim());
  CHECK(rep.derivations.size() == rep.basis.dim());
}

TEST_CASE("equal lambdas leave a proper gap") {
  const ActionEngine eng(TensorSpec(ti(2, 0, 1), tii(2, 0, 1)));
  const std::array<Vector, 1> seeds{Vector::unit(4)};
  const ClosureReport rep = generate(eng, seeds, 3, 4);
  CHECK(rep.saturated);
  // Y x 1 alone is not reachable; only the symmetric combination is.
  CHECK_FALSE(rep.basis.member(mono4(0, 1, 0, 0)));
  CHECK(rep.basis.member(mono4(0, 1, 0, 0) + mono4(0, 0, 0, 1)));
}

TEST_CASE("degenerate bounds") {
  const ActionEngine eng(TensorSpec(ti(2, 0, 1), tii(3, 0, 1)));
  const std::array<Vector, 1> seeds{Vector::unit(4)};
  const ClosureReport rep = generate(eng, seeds, 1, 0);
  CHECK(rep.basis.dim() == 1);
  CHECK(rep.saturated);
  CHECK(rep.discarded > 0);

  CHECK_THROWS_AS(generate(eng, seeds, 0, 3), std::invalid_argument);
  const std::array<Vector, 1> zero{Vector(4)};
  CHECK_THROWS_AS(generate(eng, zero, 2, 3), std::invalid_argument);
  const std::array<Vector, 1> heavy{mono4(0, 5, 0, 0)};
  CHECK_THROWS_AS(generate(eng, heavy, 2, 3), std::invalid_argument);
}

TEST_CASE("determinism across runs") {
  const ActionEngine eng(TensorSpec(ti(2, 1, 1), tii(3, 0, 2)));
  const std::array<Vector, 1> seeds{Vector::unit(4)};
  const ClosureReport a = generate(eng, seeds, 2, 3);
  const ClosureReport b = generate(eng, seeds, 2, 3);
  CHECK(a.basis.rows() == b.basis.rows());
  CHECK(a.insert_attempts == b.insert_attempts);
  CHECK(a.discarded == b.discarded);
  REQUIRE(a.derivations.size() == b.derivations.size());
  for (size_t k = 0; k < a.derivations.size(); ++k) {
    CHECK(a.derivations[k].first.word == b.derivations[k].first.word);
    CHECK(a.derivations[k].second == b.derivations[k].second);
  }
}

TEST_CASE("monotone in the bounds") {
  const ActionEngine eng(TensorSpec(ti(2, 0, 3), ti(5, 1, 7)));
  const std::array<Vector, 1> seeds{Vector::unit(4)};
  const size_t d_small = generate(eng, seeds, 1, 2).basis.dim();
  const size_t d_mid = generate(eng, seeds, 2, 2).basis.dim();
  const size_t d_big = generate(eng, seeds, 2, 3).basis.dim();
  CHECK(d_small <= d_mid);
  CHECK(d_mid <= d_big);
}

TEST_CASE("derivation replay reproduces every inserted row") {
  const ActionEngine eng(TensorSpec(ti(2, 0, 1), tii(3, 0, 1)));
  const std::array<Vector, 2> seeds{Vector::unit(4), mono4(1, 0, 0, 1)};
  const ClosureReport rep = generate(eng, seeds, 2, 3);
  REQUIRE(rep.derivations.size() == rep.basis.dim());

  EchelonBasis replay(4);
  for (const auto& [der, raw] : rep.derivations) {
    // the base is either an original seed or a previously inserted row
    if (der.seed_index) {
      REQUIRE(*der.seed_index < seeds.size());
      CHECK(der.base == seeds[*der.seed_index]);
    } else {
      CHECK(replay.member(der.base));
    }
    Vector v = der.base;
    for (const GenRef& g : der.word) v = eng.act(g, v);
    CHECK(v == raw);
    replay.insert(raw);
  }
  CHECK(replay.rows() == rep.basis.rows());
}

TEST_CASE("insert cap truncates the sweep") {
  const ActionEngine eng(TensorSpec(ti(2, 0, 1), tii(3, 0, 1)));
  const std::array<Vector, 1> seeds{Vector::unit(4)};
  ClosureOptions opts;
  opts.insert_cap = 10;
  const ClosureReport rep = generate(eng, seeds, 3, 4, opts);
  CHECK_FALSE(rep.saturated);
  CHECK(rep.insert_attempts <= 10);
}

TEST_CASE("stop_when_member exits early") {
  const ActionEngine eng(TensorSpec(ti(2, 0, 1), tii(3, 0, 1)));
  const std::array<Vector, 1> seeds{mono4(1, 1, 0, 0) - mono4(0, 0, 1, 1, Scalar(2))};
  ClosureOptions opts;
  opts.stop_when_member = Vector::unit(4);
  const ClosureReport rep = generate(eng, seeds, 3, 4, opts);
  CHECK(rep.target_found);
  CHECK(rep.basis.member(Vector::unit(4)));
  // early exit: far fewer insert attempts than saturation would take
  const ClosureReport full = generate(eng, seeds, 3, 4);
  CHECK(rep.insert_attempts < full.insert_attempts);
}
