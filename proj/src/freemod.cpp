#include "pgca/freemod.hpp"

#include <stdexcept>

namespace pgca {

const char* family_name(Family f) {
  switch (f) {
    case Family::TypeI: return "type-i";
    case Family::TypeII: return "type-ii";
    case Family::TypeIII: return "type-iii";
    case Family::WittOmega: return "witt";
    case Family::HVirOmega: return "hvir";
  }
  return "?";
}

static void require_lambda(const Scalar& l) {
  if (l.is_zero()) throw std::invalid_argument("module spec: lambda must be nonzero");
}

ModuleSpec ModuleSpec::type_i(Scalar lambda, Scalar eta, Poly sigma) {
  require_lambda(lambda);
  if (sigma.is_zero()) throw std::invalid_argument("module spec: sigma must be nonzero");
  ModuleSpec s;
  s.family = Family::TypeI;
  s.lambda = std::move(lambda);
  s.eta = std::move(eta);
  s.sigma = std::move(sigma);
  return s;
}

ModuleSpec ModuleSpec::type_ii(Scalar lambda, Scalar eta, Poly sigma) {
  require_lambda(lambda);
  if (sigma.is_zero()) throw std::invalid_argument("module spec: sigma must be nonzero");
  ModuleSpec s;
  s.family = Family::TypeII;
  s.lambda = std::move(lambda);
  s.eta = std::move(eta);
  s.sigma = std::move(sigma);
  return s;
}

ModuleSpec ModuleSpec::type_iii(Scalar lambda, Poly delta) {
  require_lambda(lambda);
  ModuleSpec s;
  s.family = Family::TypeIII;
  s.lambda = std::move(lambda);
  s.delta = std::move(delta);
  return s;
}

ModuleSpec ModuleSpec::witt(Scalar lambda, Scalar alpha) {
  require_lambda(lambda);
  ModuleSpec s;
  s.family = Family::WittOmega;
  s.lambda = std::move(lambda);
  s.alpha = std::move(alpha);
  return s;
}

ModuleSpec ModuleSpec::hvir(Scalar lambda, Scalar alpha, Scalar beta) {
  require_lambda(lambda);
  ModuleSpec s;
  s.family = Family::HVirOmega;
  s.lambda = std::move(lambda);
  s.alpha = std::move(alpha);
  s.beta = std::move(beta);
  return s;
}

std::vector<Kind> ModuleSpec::defined_kinds() const {
  switch (family) {
    case Family::TypeI:
    case Family::TypeII:
    case Family::TypeIII: return {Kind::L, Kind::H, Kind::I, Kind::J};
    case Family::WittOmega: return {Kind::L};
    case Family::HVirOmega: return {Kind::L, Kind::H};
  }
  return {};
}

bool ModuleSpec::kind_defined(Kind k) const {
  for (Kind d : defined_kinds())
    if (d == k) return true;
  return false;
}

// sigma multiplier honoring the mutation knobs; shift_dir is the first
// variable displacement of the genuine action (-1 for TypeI, +1 for TypeII)
static Vector apply_sigma_step(const ModuleSpec& spec, const Vector& v, long m, int shift_dir) {
  Vector g = v.shifted(0, Scalar(shift_dir));
  if (spec.mutation != MutationTag::DropDegreeShift) g = g.shifted(1, Scalar(-m));
  Poly sig = spec.sigma;
  if (spec.mutation == MutationTag::SigmaArgShifted) sig = sig.shifted_arg(Scalar(shift_dir));
  return g.mul_poly(0, sig);
}

Vector act(const ModuleSpec& spec, GenRef g, const Vector& v) {
  if (!spec.kind_defined(g.kind))
    throw std::invalid_argument(std::string("act: generator kind ") + kind_name(g.kind) +
                                " not defined on family " + family_name(spec.family));
  if (v.is_zero()) return Vector(2);
  const long m = g.index;
  const Scalar lm = spec.lambda.pow(m);

  switch (spec.family) {
    case Family::TypeI:
      switch (g.kind) {
        case Kind::L: {
          // L_m f = lambda^m (Y - mX + m eta) f(X, Y-m)
          Vector f = v.shifted(1, Scalar(-m));
          Vector r = f.mul_var(1);
          r.axpy(Scalar(-m), f.mul_var(0));
          r.axpy(Scalar(m) * spec.eta, f);
          return r.scaled(lm);
        }
        case Kind::H: {
          // H_m f = lambda^m X f(X, Y-m)
          return v.shifted(1, Scalar(-m)).mul_var(0).scaled(lm);
        }
        case Kind::I:
          // I_m f = lambda^m sigma(X) f(X-1, Y-m)
          return apply_sigma_step(spec, v, m, -1).scaled(lm);
        case Kind::J: return Vector(2);
      }
      break;

    case Family::TypeII:
      switch (g.kind) {
        case Kind::L: {
          // L_m f = lambda^m (T + mS + m eta) f(S, T-m)
          Vector f = v.shifted(1, Scalar(-m));
          Vector r = f.mul_var(1);
          r.axpy(Scalar(m), f.mul_var(0));
          r.axpy(Scalar(m) * spec.eta, f);
          return r.scaled(lm);
        }
        case Kind::H: return v.shifted(1, Scalar(-m)).mul_var(0).scaled(lm);
        case Kind::I: return Vector(2);
        case Kind::J:
          // J_m f = lambda^m sigma(S) f(S+1, T-m)
          return apply_sigma_step(spec, v, m, +1).scaled(lm);
      }
      break;

    case Family::TypeIII:
      switch (g.kind) {
        case Kind::L: {
          // L_m f = lambda^m (Q + m delta(P)) f(P, Q-m)
          Vector f = v.shifted(1, Scalar(-m));
          Vector r = f.mul_var(1);
          r.axpy(Scalar(m), f.mul_poly(0, spec.delta));
          return r.scaled(lm);
        }
        case Kind::H: return v.shifted(1, Scalar(-m)).mul_var(0).scaled(lm);
        case Kind::I:
        case Kind::J: return Vector(2);
      }
      break;

    case Family::WittOmega:
    case Family::HVirOmega:
      switch (g.kind) {
        case Kind::L: {
          // L_m f = lambda^m (Y + m alpha) f(Y-m)
          Vector f = v.shifted(1, Scalar(-m));
          Vector r = f.mul_var(1);
          r.axpy(Scalar(m) * spec.alpha, f);
          return r.scaled(lm);
        }
        case Kind::H:
          // H_m f = beta lambda^m f(Y-m)   (HVirOmega only)
          return v.shifted(1, Scalar(-m)).scaled(lm * spec.beta);
        default: break;
      }
      break;
  }
  throw std::logic_error("act: unhandled generator");
}

Vector act(const ModuleSpec& spec, const AlgElement& x, const Vector& v) {
  Vector out(2);
  for (const auto& [g, c] : x.terms()) out.axpy(c, act(spec, g, v));
  return out;
}

}  // namespace pgca
