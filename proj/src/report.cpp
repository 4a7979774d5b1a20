#include "pgca/report.hpp"

namespace pgca {

Json Report::assemble() const {
  Json doc = Json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command_;
  doc["params"] = params;
  doc["verdict"] = verdict;
  doc["dims"] = dims;
  doc["witnesses"] = witnesses;
  if (counterexample) doc["counterexample"] = *counterexample;
  doc["wall_ms"] = wall_ms;
  return doc;
}

std::string Report::serialize() const { return assemble().dump(2) + "\n"; }

Json module_params_json(const ModuleSpec& spec) {
  Json j = Json::object();
  j["family"] = family_name(spec.family);
  j["lambda"] = spec.lambda.str();
  switch (spec.family) {
    case Family::TypeI:
    case Family::TypeII:
      j["eta"] = spec.eta.str();
      j["sigma"] = format_poly(spec.sigma, alphabet_for(spec).vars[0].first);
      break;
    case Family::TypeIII:
      j["delta"] = format_poly(spec.delta, alphabet_for(spec).vars[0].first);
      break;
    case Family::WittOmega:
      j["alpha"] = spec.alpha.str();
      break;
    case Family::HVirOmega:
      j["alpha"] = spec.alpha.str();
      j["beta"] = spec.beta.str();
      break;
  }
  return j;
}

Json tensor_params_json(const TensorSpec& spec) {
  Json j = Json::object();
  j["left"] = module_params_json(spec.left);
  j["right"] = module_params_json(spec.right);
  return j;
}

Json module_ref_params_json(const ModuleRef& mod) {
  return mod.is_tensor() ? tensor_params_json(mod.tensor())
                         : module_params_json(mod.single());
}

std::string gen_str(GenRef g) {
  return std::string(kind_name(g.kind)) + "_" + std::to_string(g.index);
}

}  // namespace pgca
