// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.  argv[1] is the CLI binary, argv[2] the golden-report
// directory.
#include <array>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "pgca/analysis.hpp"
#include "pgca/expr.hpp"

using namespace pgca;

namespace {

std::mt19937_64 rng(0x51a3c0deULL);

Rational rand_rational(int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Scalar rand_scalar(bool nonzero, bool allow_imaginary = true) {
  for (;;) {
    Rational re = rand_rational(-4, 4, 3);
    Rational im(0);
    std::uniform_int_distribution<int> imag(0, 2);
    if (allow_imaginary && imag(rng) == 0) im = rand_rational(-3, 3, 2);
    Scalar s{re, im};
    if (!nonzero || !s.is_zero()) return s;
  }
}

Poly rand_poly(bool nonzero) {
  std::uniform_int_distribution<int> degree(0, 2);
  const int d = degree(rng);
  for (;;) {
    std::vector<Scalar> c(static_cast<size_t>(d) + 1);
    for (Scalar& x : c) x = rand_scalar(false);
    Poly p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

ModuleSpec ti(Scalar l, Scalar e, Scalar s) {
  return ModuleSpec::type_i(std::move(l), std::move(e), Poly::constant(std::move(s)));
}
ModuleSpec tii(Scalar l, Scalar e, Scalar s) {
  return ModuleSpec::type_ii(std::move(l), std::move(e), Poly::constant(std::move(s)));
}

Vector mono4(unsigned a, unsigned b, unsigned c, unsigned d, Scalar s = Scalar(1)) {
  return Vector::monomial(Monomial(4, {a, b, c, d}), std::move(s));
}

// ------------------------------------------------------------ criterion 1

bool criterion1() {
  constexpr std::array<Kind, 4> kinds{Kind::L, Kind::H, Kind::I, Kind::J};
  for (Kind a : kinds)
    for (Kind b : kinds)
      for (long m = -4; m <= 4; ++m)
        for (long n = -4; n <= 4; ++n) {
          AlgElement anti = bracket({a, m}, {b, n});
          anti.axpy(Scalar(1), bracket({b, n}, {a, m}));
          if (!anti.is_zero()) return false;
        }
  for (Kind a : kinds)
    for (Kind b : kinds)
      for (Kind c : kinds)
        for (long m = -4; m <= 4; ++m)
          for (long n = -4; n <= 4; ++n)
            for (long k = -4; k <= 4; ++k) {
              AlgElement acc =
                  bracket_lin(AlgElement::gen({a, m}), bracket({b, n}, {c, k}));
              acc.axpy(Scalar(1),
                       bracket_lin(AlgElement::gen({b, n}), bracket({c, k}, {a, m})));
              acc.axpy(Scalar(1),
                       bracket_lin(AlgElement::gen({c, k}), bracket({a, m}, {b, n})));
              if (!acc.is_zero()) return false;
            }
  return true;
}

// ------------------------------------------------------------ criterion 2

bool criterion2() {
  for (int point = 0; point < 5; ++point) {
    const std::vector<ModuleRef> mods{
        ModuleSpec::type_i(rand_scalar(true), rand_scalar(false), rand_poly(true)),
        ModuleSpec::type_ii(rand_scalar(true), rand_scalar(false), rand_poly(true)),
        ModuleSpec::type_iii(rand_scalar(true), rand_poly(false)),
        ModuleSpec::witt(rand_scalar(true), rand_scalar(false)),
        ModuleSpec::hvir(rand_scalar(true), rand_scalar(false), rand_scalar(false)),
        TensorSpec(
            ModuleSpec::type_i(rand_scalar(true), rand_scalar(false), rand_poly(true)),
            ModuleSpec::type_ii(rand_scalar(true), rand_scalar(false), rand_poly(true))),
        TensorSpec(
            ModuleSpec::type_i(rand_scalar(true), rand_scalar(false), rand_poly(true)),
            ModuleSpec::type_i(rand_scalar(true), rand_scalar(false), rand_poly(true))),
        TensorSpec(
            ModuleSpec::type_ii(rand_scalar(true), rand_scalar(false), rand_poly(true)),
            ModuleSpec::type_ii(rand_scalar(true), rand_scalar(false), rand_poly(true))),
    };
    for (const ModuleRef& mod : mods)
      if (!verify_axioms(mod, 3, 3).ok) return false;
  }
  return true;
}

// ------------------------------------------------------------ criterion 3

Vector random_seed4(unsigned max_weight) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> pick(0, max_weight);
  for (;;) {
    Vector v(4);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
      // split a random weight across the four slots
      unsigned budget = pick(rng);
      Monomial m(4);
      for (int slot = 0; slot < 4 && budget > 0; ++slot) {
        std::uniform_int_distribution<unsigned> part(0, budget);
        const unsigned e = slot == 3 ? budget : part(rng);
        m.set_exp(slot, e);
        budget -= e;
      }
      int c = coeff(rng);
      if (c == 0) c = 1;
      v.add_term(m, Scalar(c));
    }
    if (!v.is_zero()) return v;
  }
}

bool criterion3() {
  const std::array<TensorSpec, 5> points{
      TensorSpec(ti(Scalar(2), Scalar(0), Scalar(1)), tii(Scalar(3), Scalar(0), Scalar(1))),
      TensorSpec(ti(Scalar(2), Scalar(0), Scalar(1)), tii(Scalar(2), Scalar(0), Scalar(1))),
      TensorSpec(ti(Scalar::rational(1, 2), Scalar(1), Scalar(2)),
                 tii(Scalar(-3), Scalar(-1), Scalar::rational(1, 3))),
      TensorSpec(ti(Scalar(-1), Scalar::rational(1, 2), Scalar(5)),
                 tii(Scalar(-1), Scalar(2), Scalar(1))),
      TensorSpec(ti(Scalar(1) + Scalar::imaginary_unit(), Scalar(0), Scalar(1)),
                 tii(Scalar(2) - Scalar::imaginary_unit(), Scalar::rational(1, 2),
                     Scalar(3))),
  };
  for (const TensorSpec& ts : points) {
    const ActionEngine eng{ModuleRef(ts)};
    for (int trial = 0; trial < 20; ++trial) {
      const std::array<Vector, 1> seeds{random_seed4(3)};
      ClosureOptions opts;
      opts.stop_when_member = unit_tensor();
      const ClosureReport rep = generate(eng, seeds, 4, 6, opts);
      if (!rep.basis.member(unit_tensor())) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ criterion 4

bool criterion4() {
  const std::array<TensorSpec, 9> points{
      TensorSpec(ti(Scalar(2), Scalar(0), Scalar(1)), tii(Scalar(3), Scalar(0), Scalar(1))),
      TensorSpec(ti(Scalar::rational(1, 2), Scalar(1), Scalar(2)),
                 tii(Scalar(-3), Scalar(0), Scalar(1))),
      TensorSpec(ti(Scalar(1) + Scalar::imaginary_unit(), Scalar::rational(1, 2), Scalar(3)),
                 tii(Scalar(2), Scalar(0), Scalar(1))),
      TensorSpec(ti(Scalar(2), Scalar(0), Scalar(3)), ti(Scalar(5), Scalar(1), Scalar(7))),
      TensorSpec(ti(Scalar(-2), Scalar(1), Scalar(1)), ti(Scalar(3), Scalar(0), Scalar(2))),
      TensorSpec(ti(Scalar::rational(1, 3), Scalar(0), Scalar(1)),
                 ti(Scalar(4), Scalar::rational(1, 2), Scalar(5))),
      TensorSpec(tii(Scalar(2), Scalar::rational(1, 2), Scalar(1)),
                 tii(Scalar(3), Scalar(0), Scalar(2))),
      TensorSpec(tii(Scalar(-1), Scalar(0), Scalar(4)), tii(Scalar(2), Scalar(1), Scalar(1))),
      TensorSpec(tii(Scalar(5), Scalar(1), Scalar::rational(1, 2)),
                 tii(Scalar::rational(1, 2), Scalar(0), Scalar(3))),
  };
  ClosureOptions opts;
  opts.insert_cap = 1000000;  // saturation must not be truncated
  for (const TensorSpec& ts : points) {
    const ActionEngine eng{ModuleRef(ts)};
    const std::array<Vector, 1> seeds{unit_tensor()};
    const ClosureReport rep = generate(eng, seeds, 4, 4, opts);
    if (!rep.saturated) return false;
    if (!spans_all_monomials(rep.basis, 4, 2)) return false;  // all 15 of weight <= 2
    if (!spans_all_monomials(rep.basis, 4, 3)) return false;  // all 35 of weight <= 3
  }
  return true;
}

// ------------------------------------------------------------ criterion 5

bool criterion5() {
  // mixed pair with a shared lambda: V12 is invariant and proper
  const TensorSpec mixed(ti(Scalar(2), Scalar(0), Scalar(1)),
                         tii(Scalar(2), Scalar(0), Scalar(1)));
  std::vector<Vector> v12;
  for (const Vector& v : minimal_submodule(SubmoduleKind::V12, 5, 5, 5))
    if (v.weight() <= 5) v12.push_back(v);
  if (!check_invariance(ModuleRef(mixed), v12, 3, 5).ok) return false;
  EchelonBasis v12span(4);
  for (const Vector& v : v12) v12span.insert(v);
  if (v12span.member(mono4(0, 1, 0, 0))) return false;  // properness certificate

  // type-i pair with a shared lambda: W11 is invariant and proper
  const TensorSpec ii(ti(Scalar(2), Scalar(0), Scalar(1)), ti(Scalar(2), Scalar(1), Scalar(3)));
  std::vector<Vector> w11;
  for (const Vector& v : minimal_submodule(SubmoduleKind::W11, 5, 5, 5))
    if (v.weight() <= 5) w11.push_back(v);
  if (!check_invariance(ModuleRef(ii), w11, 3, 5).ok) return false;
  EchelonBasis w11span(4);
  for (const Vector& v : w11) w11span.insert(v);
  if (w11span.member(mono4(0, 1, 0, 0))) return false;

  // the closure of the unit reproduces the V12 dimensions per weight
  const ActionEngine eng{ModuleRef(mixed)};
  const std::array<Vector, 1> seeds{unit_tensor()};
  ClosureOptions opts;
  opts.insert_cap = 1000000;
  const ClosureReport rep = generate(eng, seeds, 4, 5, opts);
  if (!rep.saturated) return false;
  const std::vector<size_t> got = rep.basis.dims_by_weight(4);
  const std::vector<size_t> want = v12span.dims_by_weight(4);
  for (unsigned w = 0; w <= 4; ++w)
    if (got[w] != want[w]) return false;
  return true;
}

// ------------------------------------------------------------ criterion 6

bool criterion6() {
  const TensorSpec ts(ti(Scalar(2), Scalar(0), Scalar(5)), ti(Scalar(3), Scalar(0), Scalar(7)));
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> small(0, 2);
  std::uniform_int_distribution<int> extra(0, 2);
  for (int case_id = 1; case_id <= 4; ++case_id) {
    const int lead_slot = case_id - 1;
    for (int trial = 0; trial < 100; ++trial) {
      Monomial lead(4);
      lead.set_exp(lead_slot, 1 + small(rng));
      for (int s = lead_slot + 1; s < 4; ++s) lead.set_exp(s, small(rng));
      int lead_c = coeff(rng);
      if (lead_c == 0) lead_c = 1;
      Vector v = Vector::monomial(lead, Scalar(lead_c));
      for (int e = extra(rng); e > 0; --e) {
        Monomial m(4, {small(rng), small(rng), small(rng), small(rng)});
        if (!Monomial::graded_less(m, lead)) continue;
        int c = coeff(rng);
        if (c == 0) c = 2;
        v.add_term(m, Scalar(c));
      }
      const ReductionStep step = reduce_degree(ts, v);
      if (step.case_id != case_id) return false;
      if (step.m < 0 || step.m > case_id - 1) return false;
      if (step.before_deg != lead) return false;
      if (step.after_deg != lead.with_exp(lead_slot, lead.exp(lead_slot) - 1)) return false;

      // iterated reduction reaches the unit tuple
      Vector w = std::move(v);
      unsigned guard = 0;
      while (!deg(w).is_unit()) {
        const ReductionStep s = reduce_degree(ts, w);
        if (s.after_deg.weight() + 1 != s.before_deg.weight()) return false;
        w = s.result;
        if (w.is_zero() || ++guard > 64) return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------------ criterion 7

bool criterion7() {
  const TensorSpec m0(ti(Scalar(2), Scalar(0), Scalar(1)), tii(Scalar(3), Scalar(0), Scalar(1)));
  const TensorSpec a1(ti(Scalar(2), Scalar(0), Scalar(3)), ti(Scalar(5), Scalar(1), Scalar(7)));
  const TensorSpec a2(tii(Scalar(2), Scalar::rational(1, 2), Scalar(1)),
                      tii(Scalar(3), Scalar(0), Scalar(2)));

  struct Case {
    TensorSpec a, b;
    Matching expect;
  };
  const std::vector<Case> grid{
      // mixed shape: identical and three single-parameter perturbations
      {m0, m0, Matching::Ordered},
      {m0, TensorSpec(ti(Scalar(2), Scalar(1), Scalar(1)), tii(Scalar(3), Scalar(0), Scalar(1))),
       Matching::None},
      {m0, TensorSpec(ti(Scalar(2), Scalar(0), Scalar(1)), tii(Scalar(3), Scalar(0), Scalar(2))),
       Matching::None},
      {m0, TensorSpec(ti(Scalar(5), Scalar(0), Scalar(1)), tii(Scalar(3), Scalar(0), Scalar(1))),
       Matching::None},
      // type-i pair: identical, swapped, and three perturbations
      {a1, a1, Matching::Ordered},
      {a1, TensorSpec(ti(Scalar(5), Scalar(1), Scalar(7)), ti(Scalar(2), Scalar(0), Scalar(3))),
       Matching::Swapped},
      {a1, TensorSpec(ti(Scalar(2), Scalar(0), Scalar(3)), ti(Scalar(5), Scalar(2), Scalar(7))),
       Matching::None},
      {a1, TensorSpec(ti(Scalar(2), Scalar(0), Scalar(4)), ti(Scalar(5), Scalar(1), Scalar(7))),
       Matching::None},
      {a1, TensorSpec(ti(Scalar(2), Scalar(0), Scalar(3)), ti(Scalar(7), Scalar(1), Scalar(7))),
       Matching::None},
      // type-ii pair: identical, swapped, one perturbation
      {a2, a2, Matching::Ordered},
      {a2, TensorSpec(tii(Scalar(3), Scalar(0), Scalar(2)),
                      tii(Scalar(2), Scalar::rational(1, 2), Scalar(1))),
       Matching::Swapped},
      {a2, TensorSpec(tii(Scalar(2), Scalar::rational(1, 2), Scalar(1)),
                      tii(Scalar(3), Scalar(0), Scalar(5))),
       Matching::None},
  };
  if (grid.size() != 12) return false;
  for (const Case& c : grid) {
    const IsoVerdict verdict = classify_iso(c.a, c.b);
    if (verdict.matching != c.expect) return false;
    if (verdict.equivalent != (c.expect != Matching::None)) return false;
    const IntertwinerResult itw =
        intertwiner_solve(ModuleRef(c.a), ModuleRef(c.b), 2, 3);
    if (verdict.witness_dim != itw.dim) return false;
    if (verdict.equivalent && itw.dim < 1) return false;
    if (!verdict.equivalent && itw.dim != 0) return false;
  }
  return true;
}

// ------------------------------------------------------------ criterion 8

bool criterion8() {
  const VandermondeResult concrete =
      vandermonde_obstruction(Scalar(1), Scalar(2), Scalar(3), Scalar(4));
  if (concrete.det != Scalar(12) || concrete.factored_zero) return false;
  // inputs are module parameters, hence nonzero Gaussian rationals
  std::uniform_int_distribution<int> pick(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> shape(0, 2);
  const auto draw = [&]() {
    for (;;) {
      Scalar s(Rational(pick(rng), den(rng)),
               shape(rng) == 0 ? Rational(pick(rng), den(rng)) : Rational(0));
      if (!s.is_zero()) return s;
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar l1 = draw(), l1p = draw(), l2 = draw(), l2p = draw();
    const VandermondeResult r = vandermonde_obstruction(l1, l1p, l2, l2p);
    const Scalar prod = (l1 - l1p) * (l2 - l1) * (l2 - l1p) * (l1 - l2p) *
                        (l2p - l1p) * (l2p - l2);
    if (r.det != prod) return false;
    if (r.factored_zero != prod.is_zero()) return false;
    if (r.det.is_zero() != r.factored_zero) return false;
  }
  return true;
}

// ------------------------------------------------------------ criterion 9

bool criterion9() {
  struct Point {
    Scalar lambda, a1, a2, b1, b2;
  };
  const std::vector<Point> points{
      {Scalar(1), Scalar::rational(1, 2), Scalar::rational(1, 3), Scalar(2), Scalar(-1)},
      {Scalar(2), Scalar(1), Scalar::rational(-1, 2), Scalar::rational(1, 3), Scalar(1)},
      {Scalar(-1), Scalar::rational(2, 3), Scalar(3), Scalar(-2), Scalar::rational(1, 2)},
  };
  const std::vector<Vector> u = minimal_submodule(SubmoduleKind::U5, 0, 5, 0);
  EchelonBasis uspan(4);
  for (const Vector& v : u) uspan.insert(v);
  if (uspan.member(mono4(0, 1, 0, 0))) return false;  // Y (x) 1 stays outside

  for (const Point& p : points) {
    const TensorSpec witt(ModuleSpec::witt(p.lambda, p.a1), ModuleSpec::witt(p.lambda, p.a2));
    if (!check_invariance(ModuleRef(witt), u, 3, 5).ok) return false;
    const TensorSpec hvir(ModuleSpec::hvir(p.lambda, p.a1, p.b1),
                          ModuleSpec::hvir(p.lambda, p.a2, p.b2));
    if (!check_invariance(ModuleRef(hvir), u, 3, 5).ok) return false;
  }
  return true;
}

// ------------------------------------------------------------ criterion 10

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool run_golden(const std::string& binary, const std::string& args,
                const std::string& golden_path, const std::string& actual_path) {
  const std::string cmd =
      "\"" + binary + "\" " + args + " --no-timing --out \"" + actual_path + "\" 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  if (rc == -1 || !WIFEXITED(rc) || WEXITSTATUS(rc) != 0) {
    std::cerr << "  golden run failed (exit " << rc << "): " << cmd << "\n";
    return false;
  }
  const std::string actual = read_file(actual_path);
  const std::string expected = read_file(golden_path);
  if (actual.empty() || expected.empty() || actual != expected) {
    std::cerr << "  golden mismatch: " << golden_path << "\n";
    return false;
  }
  return true;
}

bool roundtrip_block(const Alphabet& alph, int trials) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<unsigned> expo(0, 4);
  std::uniform_int_distribution<int> nterms(0, 5);
  for (int trial = 0; trial < trials; ++trial) {
    Vector v(alph.arity);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
      Monomial m(alph.arity);
      for (const auto& [name, slot] : alph.vars) m.set_exp(slot, expo(rng));
      const Scalar c = Scalar(Rational(num(rng), den(rng))) +
                       Scalar(Rational(num(rng), den(rng))) * Scalar::imaginary_unit();
      v.add_term(m, c);
    }
    const std::string text = format_vector(v, alph);
    if (parse_vector(text, alph) != v) return false;
    if (format_vector(parse_vector(text, alph), alph) != text) return false;
  }
  return true;
}

bool criterion10(const std::string& binary, const std::string& golden_dir) {
  bool ok = true;
  ok &= run_golden(binary,
                   "tensor-irr --family mixed --l1 2 --eta1 0 --s1 1 --l2 3 --eta2 0 "
                   "--s2 1 --M 4 --D 3",
                   golden_dir + "/tensor-irr.json", "acceptance_tensor_irr.json");
  ok &= run_golden(binary, "classify --A \"mixed:2,0,1;3,0,1\" --B \"mixed:2,1,1;3,0,1\"",
                   golden_dir + "/classify.json", "acceptance_classify.json");
  ok &= run_golden(binary, "vandermonde --vals 1,2,3,4", golden_dir + "/vandermonde.json",
                   "acceptance_vandermonde.json");

  const std::vector<Alphabet> alphabets{
      alphabet_for(TensorSpec(ti(Scalar(2), Scalar(0), Scalar(1)),
                              tii(Scalar(3), Scalar(0), Scalar(1)))),
      alphabet_for(TensorSpec(ti(Scalar(2), Scalar(0), Scalar(3)),
                              ti(Scalar(5), Scalar(1), Scalar(7)))),
      alphabet_for(ti(Scalar(2), Scalar(0), Scalar(1))),
      alphabet_for(ModuleSpec::type_iii(Scalar(1), Poly::var())),
      alphabet_for(TensorSpec(ModuleSpec::witt(Scalar(1), Scalar(0)),
                              ModuleSpec::witt(Scalar(2), Scalar(1)))),
  };
  for (const Alphabet& alph : alphabets) ok &= roundtrip_block(alph, 40);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <pgca-binary> <golden-dir>\n";
    return 2;
  }
  const std::string binary = argv[1];
  const std::string golden_dir = argv[2];

  struct Criterion {
    int num;
    const char* what;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "algebra antisymmetry and Jacobi, all kind triples, indices in [-4,4]", criterion1},
      {2, "module axioms for all five families and three tensor shapes, 5 random points",
       criterion2},
      {3, "closure reaches 1 (x) 1 from 100 random seeds of the mixed tensor", criterion3},
      {4, "distinct-lambda unit closures span weights <= 2 and <= 3, three shapes",
       criterion4},
      {5, "equal-lambda V12/W11 invariance, properness, and closure dimension match",
       criterion5},
      {6, "degree reduction: case table, search ranges, and descent to (0,0,0,0)",
       criterion6},
      {7, "classification agrees with the intertwiner space on 12 pairs", criterion7},
      {8, "Vandermonde determinant equals the six-factor product, 200 quadruples",
       criterion8},
      {9, "diagonal one-variable family invariant and proper at 3 points", criterion9},
      {10, "golden reports byte-identical and 200 expression round-trips",
       [&] { return criterion10(binary, golden_dir); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = std::string(" (exception: ") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::cout << "criterion " << c.num << ": " << (ok ? "pass" : "FAIL") << " - " << c.what
              << note << "\n";
  }
  return failures == 0 ? 0 : 1;
}
