#pragma once

// Identity suites over the library, reported as structured pass/fail records.

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetalift/arith.hpp"
#include "thetalift/maassform.hpp"
#include "thetalift/tolerances.hpp"

namespace thetalift {

enum class Suite { all, classnumbers, kloosterman, shadow, hecke, multiplier };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct CaseDetail {
  std::string check;
  std::string params;
  double error;
  double tolerance;
  bool passed;
};

struct CheckSummary {
  std::string name;
  i64 cases_run = 0;
  i64 cases_failed = 0;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
};

struct VerifyReport {
  std::string suite;
  i64 n_max = 0;
  i64 cases_run = 0;
  i64 cases_failed = 0;
  double max_abs_error = 0.0;
  std::vector<std::string> notes;
  std::vector<CheckSummary> checks;
  std::vector<CaseDetail> cases;

  [[nodiscard]] bool passed() const { return cases_failed == 0; }
  [[nodiscard]] const CheckSummary* find_check(std::string_view name) const;
  // Per-case detail is included at verbosity >= 2.
  [[nodiscard]] nlohmann::json to_json(int verbosity = 1) const;
};

struct VerifyOptions {
  i64 n_max = 100;
  unsigned threads = 1;
  double tol_scale = 1.0;
  ConstantTermConvention convention = ConstantTermConvention::theorem2;
};

// Throws DomainError for n_max < 10.
VerifyReport run_suite(Suite suite, const VerifyOptions& options);

}  // namespace thetalift
