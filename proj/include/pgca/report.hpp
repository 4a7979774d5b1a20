#ifndef PGCA_REPORT_HPP
#define PGCA_REPORT_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "pgca/expr.hpp"

namespace pgca {

using Json = nlohmann::ordered_json;

// Structured run report.  The serialized document carries exactly the
// fields schema_version, command, params, verdict, dims, witnesses,
// counterexample (only when present), wall_ms, in that order; golden
// tests pin the bytes, so the order is assembled here rather than left
// to call sites.
class Report {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit Report(std::string command) : command_(std::move(command)) {}

  Json params = Json::object();
  std::string verdict;
  Json dims = Json::object();
  Json witnesses = Json::array();
  std::optional<Json> counterexample;
  long wall_ms = 0;

  Json assemble() const;

  // assemble().dump(2) with a trailing newline
  std::string serialize() const;

 private:
  std::string command_;
};

// Parameter echoes.  A tensor spec serializes as the two-field object
// {left, right}; polynomial parameters render in the family's first
// variable (X, S or P).
Json module_params_json(const ModuleSpec& spec);
Json tensor_params_json(const TensorSpec& spec);
Json module_ref_params_json(const ModuleRef& mod);

std::string gen_str(GenRef g);

}  // namespace pgca

#endif
