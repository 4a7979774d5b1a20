// pgca: command-line front end for the exact symbolic engine.
//
// Subcommands map one-to-one onto the analysis/closure operations and
// emit a single structured JSON report per run (schema_version 1).
// Exit codes: 0 verified/expected verdict, 1 falsified mathematical
// invariant, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "pgca/analysis.hpp"
#include "pgca/report.hpp"

using namespace pgca;

namespace {

struct CommonFlags {
  std::string out;
  std::string config;
  bool no_timing = false;
};

struct ModuleFlags {
  std::string family;
  std::string lambda, eta = "0", sigma = "1", delta = "0", alpha = "0", beta = "0";
  std::string l1, eta1 = "0", s1 = "1", alpha1 = "0", beta1 = "0";
  std::string l2, eta2 = "0", s2 = "1", alpha2 = "0", beta2 = "0";
  std::string mutate;
};

void add_common(CLI::App* cmd, CommonFlags& c) {
  cmd->add_option("--out", c.out, "write the report to this path instead of stdout");
  cmd->add_option("--config", c.config, "JSON file mirroring the flag surface");
  cmd->add_flag("--no-timing", c.no_timing, "report wall_ms as 0 (golden fixtures)");
}

void add_module_flags(CLI::App* cmd, ModuleFlags& m, bool tensors, bool singles) {
  std::string families;
  if (singles) families = "type-i|type-ii|type-iii|witt|hvir";
  if (tensors) {
    if (!families.empty()) families += "|";
    families += "mixed|i-i|ii-ii|witt-witt|hvir-hvir";
  }
  cmd->add_option("--family", m.family, "module family (" + families + ")")->required();
  if (singles) {
    cmd->add_option("--lambda", m.lambda, "lambda (nonzero scalar)");
    cmd->add_option("--eta", m.eta, "eta (type-i/type-ii)");
    cmd->add_option("--sigma", m.sigma, "sigma polynomial (type-i in X, type-ii in S)");
    cmd->add_option("--delta", m.delta, "delta polynomial (type-iii, in P)");
    cmd->add_option("--alpha", m.alpha, "alpha (witt/hvir)");
    cmd->add_option("--beta", m.beta, "beta (hvir)");
    cmd->add_option("--mutate", m.mutate,
                    "action defect: sigma-arg-shift (passing control) or drop-degree-shift");
  }
  if (tensors) {
    cmd->add_option("--l1", m.l1, "left factor lambda");
    cmd->add_option("--eta1", m.eta1, "left factor eta");
    cmd->add_option("--s1", m.s1, "left factor sigma (constant or polynomial)");
    cmd->add_option("--alpha1", m.alpha1, "left factor alpha (witt-witt/hvir-hvir)");
    cmd->add_option("--beta1", m.beta1, "left factor beta (hvir-hvir)");
    cmd->add_option("--l2", m.l2, "right factor lambda");
    cmd->add_option("--eta2", m.eta2, "right factor eta");
    cmd->add_option("--s2", m.s2, "right factor sigma");
    cmd->add_option("--alpha2", m.alpha2, "right factor alpha");
    cmd->add_option("--beta2", m.beta2, "right factor beta");
  }
}

MutationTag parse_mutation(const std::string& s) {
  if (s.empty()) return MutationTag::None;
  if (s == "sigma-arg-shift") return MutationTag::SigmaArgShifted;
  if (s == "drop-degree-shift") return MutationTag::DropDegreeShift;
  throw std::invalid_argument("unknown --mutate value: " + s);
}

ModuleRef build_module(const ModuleFlags& m) {
  const MutationTag tag = parse_mutation(m.mutate);
  auto single = [&](ModuleSpec spec) {
    spec.mutation = tag;
    return ModuleRef(std::move(spec));
  };
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty())
      throw std::invalid_argument(std::string("missing required flag ") + flag);
    return parse_scalar(v);
  };
  if (m.family == "type-i")
    return single(ModuleSpec::type_i(need(m.lambda, "--lambda"), parse_scalar(m.eta),
                                     parse_poly(m.sigma, "X")));
  if (m.family == "type-ii")
    return single(ModuleSpec::type_ii(need(m.lambda, "--lambda"), parse_scalar(m.eta),
                                      parse_poly(m.sigma, "S")));
  if (m.family == "type-iii")
    return single(ModuleSpec::type_iii(need(m.lambda, "--lambda"), parse_poly(m.delta, "P")));
  if (m.family == "witt")
    return single(ModuleSpec::witt(need(m.lambda, "--lambda"), parse_scalar(m.alpha)));
  if (m.family == "hvir")
    return single(ModuleSpec::hvir(need(m.lambda, "--lambda"), parse_scalar(m.alpha),
                                   parse_scalar(m.beta)));

  if (tag != MutationTag::None)
    throw std::invalid_argument("--mutate applies to single-module families only");
  if (m.family == "mixed")
    return ModuleRef(TensorSpec(
        ModuleSpec::type_i(need(m.l1, "--l1"), parse_scalar(m.eta1), parse_poly(m.s1, "X")),
        ModuleSpec::type_ii(need(m.l2, "--l2"), parse_scalar(m.eta2), parse_poly(m.s2, "S"))));
  if (m.family == "i-i")
    return ModuleRef(TensorSpec(
        ModuleSpec::type_i(need(m.l1, "--l1"), parse_scalar(m.eta1), parse_poly(m.s1, "X")),
        ModuleSpec::type_i(need(m.l2, "--l2"), parse_scalar(m.eta2), parse_poly(m.s2, "X"))));
  if (m.family == "ii-ii")
    return ModuleRef(TensorSpec(
        ModuleSpec::type_ii(need(m.l1, "--l1"), parse_scalar(m.eta1), parse_poly(m.s1, "S")),
        ModuleSpec::type_ii(need(m.l2, "--l2"), parse_scalar(m.eta2), parse_poly(m.s2, "S"))));
  if (m.family == "witt-witt")
    return ModuleRef(
        TensorSpec(ModuleSpec::witt(need(m.l1, "--l1"), parse_scalar(m.alpha1)),
                   ModuleSpec::witt(need(m.l2, "--l2"), parse_scalar(m.alpha2))));
  if (m.family == "hvir-hvir")
    return ModuleRef(TensorSpec(
        ModuleSpec::hvir(need(m.l1, "--l1"), parse_scalar(m.alpha1), parse_scalar(m.beta1)),
        ModuleSpec::hvir(need(m.l2, "--l2"), parse_scalar(m.alpha2), parse_scalar(m.beta2))));
  throw std::invalid_argument("unknown --family value: " + m.family);
}

// Compact spec: "shape:p,p,..." for singles, "shape:p,p,..;p,p,.." for
// tensors, components in family parameter order (type-i/ii: lambda,eta,
// sigma; type-iii: lambda,delta; witt: lambda,alpha; hvir: lambda,
// alpha,beta).
std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

ModuleSpec compact_factor(const std::string& tag, const std::string& body) {
  const std::vector<std::string> p = split(body, ',');
  auto want = [&](size_t n) {
    if (p.size() != n)
      throw std::invalid_argument("compact spec '" + body + "': expected " +
                                  std::to_string(n) + " comma-separated parameters");
  };
  if (tag == "type-i") {
    want(3);
    return ModuleSpec::type_i(parse_scalar(p[0]), parse_scalar(p[1]), parse_poly(p[2], "X"));
  }
  if (tag == "type-ii") {
    want(3);
    return ModuleSpec::type_ii(parse_scalar(p[0]), parse_scalar(p[1]), parse_poly(p[2], "S"));
  }
  if (tag == "type-iii") {
    want(2);
    return ModuleSpec::type_iii(parse_scalar(p[0]), parse_poly(p[1], "P"));
  }
  if (tag == "witt") {
    want(2);
    return ModuleSpec::witt(parse_scalar(p[0]), parse_scalar(p[1]));
  }
  if (tag == "hvir") {
    want(3);
    return ModuleSpec::hvir(parse_scalar(p[0]), parse_scalar(p[1]), parse_scalar(p[2]));
  }
  throw std::invalid_argument("unknown family tag '" + tag + "' in compact spec");
}

ModuleRef parse_compact(const std::string& spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("compact spec '" + spec + "': missing ':'");
  const std::string tag = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  const std::vector<std::string> sides = split(rest, ';');
  auto tensor_of_tags = [&](const std::string& lt, const std::string& rt) {
    if (sides.size() != 2)
      throw std::invalid_argument("compact spec '" + spec + "': expected 'left;right'");
    return ModuleRef(TensorSpec(compact_factor(lt, sides[0]), compact_factor(rt, sides[1])));
  };
  if (tag == "mixed") return tensor_of_tags("type-i", "type-ii");
  if (tag == "i-i") return tensor_of_tags("type-i", "type-i");
  if (tag == "ii-ii") return tensor_of_tags("type-ii", "type-ii");
  if (tag == "witt-witt") return tensor_of_tags("witt", "witt");
  if (tag == "hvir-hvir") return tensor_of_tags("hvir", "hvir");
  if (sides.size() != 1)
    throw std::invalid_argument("compact spec '" + spec + "': single family takes one side");
  return ModuleRef(compact_factor(tag, sides[0]));
}

// --config preprocessing: JSON object {"flag": value}; values may be
// strings, numbers, booleans or arrays of strings.  Flags given on the
// command line win; config entries for flags already present are
// dropped.
std::vector<std::string> merge_config_args(const std::vector<std::string>& args) {
  std::string config_path;
  for (size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config") config_path = args[i + 1];
  for (const std::string& a : args)
    if (a.rfind("--config=", 0) == 0) config_path = a.substr(9);
  if (config_path.empty()) return args;

  std::ifstream in(config_path);
  if (!in) throw std::invalid_argument("cannot open config file: " + config_path);
  Json doc = Json::parse(in);
  if (!doc.is_object()) throw std::invalid_argument("config root must be a JSON object");

  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    for (const std::string& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };

  std::vector<std::string> merged = args;
  for (const auto& [key, val] : doc.items()) {
    if (given(key)) continue;
    const std::string flag = "--" + key;
    if (val.is_boolean()) {
      if (val.get<bool>()) merged.push_back(flag);
    } else if (val.is_array()) {
      merged.push_back(flag);
      for (const auto& v : val) merged.push_back(v.get<std::string>());
    } else if (val.is_string()) {
      merged.push_back(flag);
      merged.push_back(val.get<std::string>());
    } else {
      merged.push_back(flag);
      merged.push_back(val.dump());
    }
  }
  return merged;
}

Json deg_json(const Monomial& m) {
  Json a = Json::array();
  for (int s = 0; s < m.arity(); ++s) a.push_back(m.exp(s));
  return a;
}

Json dims_by_weight_json(const EchelonBasis& basis, unsigned cap) {
  Json a = Json::array();
  for (size_t n : basis.dims_by_weight(cap)) a.push_back(n);
  return a;
}

void emit(const Report& rep, const CommonFlags& common, const std::string& human) {
  const std::string text = rep.serialize();
  if (common.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(common.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + common.out);
    out << text;
  }
  std::cerr << human << "\n";
}

std::string module_human(const ModuleRef& mod) {
  auto one = [](const ModuleSpec& s) {
    std::string txt = std::string(family_name(s.family)) + "(" + s.lambda.str();
    switch (s.family) {
      case Family::TypeI:
      case Family::TypeII:
        txt += "," + s.eta.str() + "," + format_poly(s.sigma, alphabet_for(s).vars[0].first);
        break;
      case Family::TypeIII:
        txt += "," + format_poly(s.delta, "P");
        break;
      case Family::WittOmega:
        txt += "," + s.alpha.str();
        break;
      case Family::HVirOmega:
        txt += "," + s.alpha.str() + "," + s.beta.str();
        break;
    }
    return txt + ")";
  };
  if (!mod.is_tensor()) return one(mod.single());
  return one(mod.tensor().left) + " ⊗ " + one(mod.tensor().right);
}

// ------------------------------------------------------------ subcommands

struct Invocation {
  CommonFlags common;
  ModuleFlags module;
  std::string a_spec, b_spec;
  // sentinel: a submodule truncation bound left unset follows Dcap
  static constexpr unsigned auto_bound = std::numeric_limits<unsigned>::max();

  std::string member_expr, expr, vals, submodule;
  std::vector<std::string> seed_exprs, span_exprs;
  long M = 3;
  unsigned D = 3;
  unsigned Dcap = 5;
  unsigned imax = auto_bound, jmax = auto_bound, kmax = auto_bound;
  size_t random_seeds = 4;
  long steps = -1;
};

int cmd_axioms(const Invocation& inv, Report& rep) {
  const ModuleRef mod = build_module(inv.module);
  rep.params["module"] = module_ref_params_json(mod);
  if (parse_mutation(inv.module.mutate) != MutationTag::None)
    rep.params["mutate"] = inv.module.mutate;
  rep.params["index_bound"] = inv.M;
  rep.params["degree_bound"] = inv.D;
  const AxiomResult res = verify_axioms(mod, inv.M, inv.D);
  const Alphabet alph = alphabet_for(mod);
  rep.dims["kinds"] = mod.defined_kinds().size();
  rep.dims["monomials"] =
      monomials_up_to(mod.arity(), inv.D, mod.unit_slots_mask()).size();
  rep.verdict = res.ok ? "axioms_hold" : "axioms_falsified";
  if (!res.ok) {
    Json ce = Json::object();
    ce["x"] = gen_str(res.counterexample->x);
    ce["y"] = gen_str(res.counterexample->y);
    ce["monomial"] = format_vector(Vector::monomial(res.counterexample->monomial), alph);
    ce["difference"] = format_vector(res.counterexample->difference, alph);
    rep.counterexample = std::move(ce);
  }
  return res.ok ? 0 : 1;
}

int cmd_rank_one(const Invocation& inv, Report& rep) {
  const ModuleRef mod = build_module(inv.module);
  if (mod.is_tensor())
    throw std::invalid_argument("rank-one expects a single-module family");
  rep.params["module"] = module_ref_params_json(mod);
  rep.params["M"] = inv.M;
  rep.params["Dcap"] = inv.Dcap;
  const RankOneProbe probe = probe_rank_one(mod.single(), inv.M, inv.Dcap);
  const Alphabet alph = alphabet_for(mod);
  rep.verdict = probe_verdict_name(probe.verdict);
  rep.dims["seeds"] = probe.seeds.size();
  for (const Vector& s : probe.seeds) rep.witnesses.push_back(format_vector(s, alph));
  if (probe.deficient_seed) {
    rep.dims["deficient_seed"] = *probe.deficient_seed;
    rep.dims["witness_dims_by_weight"] =
        dims_by_weight_json(probe.witness->basis, inv.Dcap);
  }
  return 0;
}

int cmd_tensor_irr(const Invocation& inv, Report& rep) {
  const ModuleRef mod = build_module(inv.module);
  if (!mod.is_tensor()) throw std::invalid_argument("tensor-irr expects a tensor family");
  rep.params["module"] = module_ref_params_json(mod);
  rep.params["M"] = inv.M;
  rep.params["D"] = inv.D;
  const TensorProbe probe =
      probe_tensor_irreducible(mod.tensor(), inv.M, inv.D, inv.random_seeds);
  const Alphabet alph = alphabet_for(mod);
  rep.verdict = probe_verdict_name(probe.verdict);
  if (probe.unit_closure) {
    rep.dims["unit_closure_dim"] = probe.unit_closure->basis.dim();
    rep.dims["unit_closure_by_weight"] =
        dims_by_weight_json(probe.unit_closure->basis, inv.D + 1);
    rep.dims["insert_attempts"] = probe.unit_closure->insert_attempts;
    rep.dims["random_seeds_checked"] = probe.random_seeds_checked;
  }
  if (probe.deficient_seed)
    rep.witnesses.push_back(format_vector(*probe.deficient_seed, alph));
  if (probe.verdict == ProbeVerdict::ReducibleWitness) {
    rep.dims["witness_vectors"] = probe.witness_span.size();
    rep.dims["witness_invariant"] = probe.witness_invariant;
    rep.dims["witness_proper"] = probe.witness_proper;
    for (const Vector& v : probe.witness_span)
      if (v.weight() <= 2) rep.witnesses.push_back(format_vector(v, alph));
  }
  return 0;
}

int cmd_closure(const Invocation& inv, Report& rep) {
  const ModuleRef mod = build_module(inv.module);
  rep.params["module"] = module_ref_params_json(mod);
  rep.params["M"] = inv.M;
  rep.params["Dcap"] = inv.Dcap;
  const Alphabet alph = alphabet_for(mod);
  if (inv.seed_exprs.empty())
    throw std::invalid_argument("closure requires at least one --seed-exprs expression");
  std::vector<Vector> seeds;
  Json seed_echo = Json::array();
  for (const std::string& s : inv.seed_exprs) {
    seeds.push_back(parse_vector(s, alph));
    seed_echo.push_back(format_vector(seeds.back(), alph));
  }
  rep.params["seeds"] = std::move(seed_echo);
  ClosureOptions opts;
  if (!inv.member_expr.empty()) {
    opts.stop_when_member = parse_vector(inv.member_expr, alph);
    rep.params["member"] = format_vector(*opts.stop_when_member, alph);
  }
  ActionEngine eng(mod);
  const ClosureReport res = generate(eng, seeds, inv.M, inv.Dcap, opts);
  rep.dims["dim"] = res.basis.dim();
  rep.dims["by_weight"] = dims_by_weight_json(res.basis, inv.Dcap);
  rep.dims["insert_attempts"] = res.insert_attempts;
  rep.dims["discarded"] = res.discarded;
  rep.dims["saturated"] = res.saturated;
  if (!inv.member_expr.empty()) {
    const bool member =
        res.target_found || res.basis.member(*opts.stop_when_member);
    rep.verdict = member ? "member" : "not_member_at_bounds";
  } else {
    rep.verdict = res.saturated ? "saturated" : "capped";
  }
  size_t shown = 0;
  for (const Monomial& p : res.basis.pivots()) {
    if (++shown > 40) break;
    rep.witnesses.push_back(format_vector(Vector::monomial(p), alph));
  }
  return 0;
}

int cmd_reduce(const Invocation& inv, Report& rep) {
  const ModuleRef mod = build_module(inv.module);
  if (!mod.is_tensor() || mod.tensor().left.family != Family::TypeI ||
      mod.tensor().right.family != Family::TypeI)
    throw std::invalid_argument("reduce expects --family i-i");
  const TensorSpec& ts = mod.tensor();
  rep.params["module"] = module_ref_params_json(mod);
  const Alphabet alph = alphabet_for(mod);
  if (inv.expr.empty()) throw std::invalid_argument("reduce requires --expr");
  Vector v = parse_vector(inv.expr, alph);
  rep.params["expr"] = format_vector(v, alph);
  if (v.is_zero()) throw std::invalid_argument("reduce requires a nonzero vector");
  rep.dims["before"] = deg_json(deg(v));
  Json cases = Json::array(), ms = Json::array();
  long taken = 0;
  while (!deg(v).is_unit() && (inv.steps < 0 || taken < inv.steps)) {
    const ReductionStep step = reduce_degree(ts, v);
    cases.push_back(step.case_id);
    ms.push_back(step.m);
    rep.witnesses.push_back(format_vector(step.result, alph));
    v = step.result;
    ++taken;
  }
  rep.dims["steps"] = taken;
  rep.dims["cases"] = std::move(cases);
  rep.dims["ms"] = std::move(ms);
  rep.dims["after"] = deg_json(deg(v));
  rep.verdict = deg(v).is_unit() ? "reduced_to_unit" : "stepped";
  return 0;
}

int cmd_invariance(const Invocation& inv, Report& rep) {
  const ModuleRef mod = build_module(inv.module);
  rep.params["module"] = module_ref_params_json(mod);
  rep.params["M"] = inv.M;
  rep.params["Dcap"] = inv.Dcap;
  const Alphabet alph = alphabet_for(mod);
  std::vector<Vector> span;
  if (!inv.submodule.empty()) {
    SubmoduleKind kind;
    if (inv.submodule == "v12") kind = SubmoduleKind::V12;
    else if (inv.submodule == "w11") kind = SubmoduleKind::W11;
    else if (inv.submodule == "u5") kind = SubmoduleKind::U5;
    else throw std::invalid_argument("unknown --submodule value: " + inv.submodule);
    rep.params["submodule"] = inv.submodule;
    // the full family up to the weight cap; a deliberately partial
    // truncation (explicit bounds) is how one exhibits an escape
    const auto bound = [&](unsigned b) { return b == Invocation::auto_bound ? inv.Dcap : b; };
    for (Vector& v : minimal_submodule(kind, bound(inv.imax), bound(inv.jmax), bound(inv.kmax)))
      if (v.weight() <= inv.Dcap) span.push_back(std::move(v));
  }
  for (const std::string& s : inv.span_exprs) span.push_back(parse_vector(s, alph));
  if (span.empty())
    throw std::invalid_argument("invariance requires --submodule or --span-exprs");
  rep.dims["span_vectors"] = span.size();
  const InvarianceResult res = check_invariance(mod, span, inv.M, inv.Dcap);
  rep.verdict = res.ok ? "invariant" : "not_invariant";
  if (!res.ok) {
    Json ce = Json::object();
    ce["generator"] = gen_str(*res.failing_gen);
    ce["vector"] = format_vector(*res.failing_vector, alph);
    ce["escaped"] = format_vector(*res.escaped_image, alph);
    rep.counterexample = std::move(ce);
  }
  return res.ok ? 0 : 1;
}

int cmd_intertwiner(const Invocation& inv, Report& rep) {
  if (inv.a_spec.empty() || inv.b_spec.empty())
    throw std::invalid_argument("intertwiner requires --A and --B compact specs");
  const ModuleRef A = parse_compact(inv.a_spec);
  const ModuleRef B = parse_compact(inv.b_spec);
  rep.params["A"] = module_ref_params_json(A);
  rep.params["B"] = module_ref_params_json(B);
  rep.params["D"] = inv.D;
  rep.params["M"] = inv.M;
  const IntertwinerResult res = intertwiner_solve(A, B, inv.D, inv.M);
  rep.verdict = res.dim == 0 ? "only_zero_map" : "nonzero_space";
  rep.dims["dim"] = res.dim;
  rep.dims["unknowns"] = res.unknowns;
  rep.dims["rank"] = res.rank;
  return 0;
}

int cmd_classify(const Invocation& inv, Report& rep) {
  if (inv.a_spec.empty() || inv.b_spec.empty())
    throw std::invalid_argument("classify requires --A and --B compact specs");
  const ModuleRef A = parse_compact(inv.a_spec);
  const ModuleRef B = parse_compact(inv.b_spec);
  if (!A.is_tensor() || !B.is_tensor())
    throw std::invalid_argument("classify expects tensor specs");
  rep.params["A"] = module_ref_params_json(A);
  rep.params["B"] = module_ref_params_json(B);
  const IsoVerdict v = classify_iso(A.tensor(), B.tensor());
  rep.verdict = v.equivalent ? "equivalent" : "not-equivalent";
  rep.dims["matching"] = matching_name(v.matching);
  rep.dims["witness_dim"] = v.witness_dim;
  if (v.obstruction) rep.dims["obstruction"] = v.obstruction->str();
  return 0;
}

int cmd_vandermonde(const Invocation& inv, Report& rep) {
  const std::vector<std::string> parts = split(inv.vals, ',');
  if (parts.size() != 4)
    throw std::invalid_argument("vandermonde requires --vals l1,l1p,l2,l2p");
  const Scalar l1 = parse_scalar(parts[0]), l1p = parse_scalar(parts[1]);
  const Scalar l2 = parse_scalar(parts[2]), l2p = parse_scalar(parts[3]);
  rep.params["vals"] = Json::array({l1.str(), l1p.str(), l2.str(), l2p.str()});
  const VandermondeResult res = vandermonde_obstruction(l1, l1p, l2, l2p);
  rep.verdict = res.det.is_zero() ? "zero" : "nonzero";
  rep.dims["det"] = res.det.str();
  rep.dims["factored_zero"] = res.factored_zero;
  return 0;
}

int dispatch(const std::string& name, const Invocation& inv) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep(name);
  int code = 0;
  if (name == "axioms") code = cmd_axioms(inv, rep);
  else if (name == "rank-one") code = cmd_rank_one(inv, rep);
  else if (name == "tensor-irr") code = cmd_tensor_irr(inv, rep);
  else if (name == "closure") code = cmd_closure(inv, rep);
  else if (name == "reduce") code = cmd_reduce(inv, rep);
  else if (name == "invariance") code = cmd_invariance(inv, rep);
  else if (name == "intertwiner") code = cmd_intertwiner(inv, rep);
  else if (name == "classify") code = cmd_classify(inv, rep);
  else if (name == "vandermonde") code = cmd_vandermonde(inv, rep);
  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = inv.common.no_timing
                    ? 0
                    : std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  std::string human = name + ": " + rep.verdict;
  if (name == "tensor-irr" || name == "axioms" || name == "closure" ||
      name == "invariance" || name == "rank-one" || name == "reduce") {
    try {
      human = module_human(build_module(inv.module)) + " " + human;
    } catch (const std::exception&) {
    }
  }
  emit(rep, inv.common, human);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for the planar Galilean conformal algebra"};
  app.require_subcommand(1);

  Invocation inv;
  struct Sub {
    CLI::App* cmd;
    const char* name;
  };
  std::vector<Sub> subs;

  auto make = [&](const char* name, const char* desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    add_common(cmd, inv.common);
    subs.push_back({cmd, name});
    return cmd;
  };

  CLI::App* axioms = make("axioms", "verify the bracket-compatibility axioms on a module");
  add_module_flags(axioms, inv.module, true, true);
  axioms->add_option("--M", inv.M, "index bound");
  axioms->add_option("--D", inv.D, "degree bound");

  CLI::App* rank_one = make("rank-one", "bounded irreducibility probe for a rank-one module");
  add_module_flags(rank_one, inv.module, false, true);
  rank_one->add_option("--M", inv.M, "generator index bound");
  rank_one->add_option("--Dcap", inv.Dcap, "closure weight cap");

  CLI::App* tensor_irr = make("tensor-irr", "irreducibility probe for a tensor module");
  add_module_flags(tensor_irr, inv.module, true, false);
  tensor_irr->add_option("--M", inv.M, "generator index bound");
  tensor_irr->add_option("--D", inv.D, "span weight demanded (closure runs at D+1)");
  tensor_irr->add_option("--random-seeds", inv.random_seeds, "extra random closure seeds");

  CLI::App* closure = make("closure", "bounded submodule closure of given seeds");
  add_module_flags(closure, inv.module, true, true);
  closure->add_option("--M", inv.M, "generator index bound");
  closure->add_option("--Dcap", inv.Dcap, "weight cap");
  closure->add_option("--seed-exprs", inv.seed_exprs, "seed expressions")->expected(-1);
  closure->add_option("--member-expr", inv.member_expr, "stop when this vector joins the span");

  CLI::App* reduce = make("reduce", "iterated leading-degree reduction in a type-i tensor");
  add_module_flags(reduce, inv.module, true, false);
  reduce->add_option("--expr", inv.expr, "vector to reduce");
  reduce->add_option("--steps", inv.steps, "maximum steps (default: reduce to degree 0)");

  CLI::App* invariance = make("invariance", "test a finite family for generator invariance");
  add_module_flags(invariance, inv.module, true, true);
  invariance->add_option("--M", inv.M, "generator index bound");
  invariance->add_option("--Dcap", inv.Dcap, "weight cap of the supplied family");
  invariance->add_option("--span-exprs", inv.span_exprs, "spanning vectors")->expected(-1);
  invariance->add_option("--submodule", inv.submodule, "built-in family: v12, w11 or u5");
  invariance->add_option("--imax", inv.imax, "submodule index bound i (default: the weight cap)");
  invariance->add_option("--jmax", inv.jmax, "submodule index bound j (default: the weight cap)");
  invariance->add_option("--kmax", inv.kmax, "submodule index bound k (default: the weight cap)");

  CLI::App* intertwiner = make("intertwiner", "bounded-degree intertwiner space dimension");
  intertwiner->add_option("--A", inv.a_spec, "source module (compact spec)");
  intertwiner->add_option("--B", inv.b_spec, "target module (compact spec)");
  intertwiner->add_option("--D", inv.D, "source degree bound");
  intertwiner->add_option("--M", inv.M, "generator index bound");

  CLI::App* classify = make("classify", "isomorphism classification of two tensor modules");
  classify->add_option("--A", inv.a_spec, "first tensor (compact spec)");
  classify->add_option("--B", inv.b_spec, "second tensor (compact spec)");

  CLI::App* vandermonde = make("vandermonde", "alternating Vandermonde obstruction determinant");
  vandermonde->add_option("--vals", inv.vals, "four lambdas: l1,l1p,l2,l2p");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = merge_config_args(args);
    std::vector<const char*> cargs;
    cargs.push_back(argv[0]);
    for (const std::string& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  for (const Sub& s : subs) {
    if (!s.cmd->parsed()) continue;
    try {
      return dispatch(s.name, inv);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::domain_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::logic_error& e) {
      // an internal cross-check failed: mathematically falsified, not misuse
      std::cerr << "invariant falsified: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  std::cerr << "no subcommand\n";
  return 2;
}
