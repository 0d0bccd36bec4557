#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsgeom/cmat.hpp"

namespace hsgeom {

enum class OutFormat { Json, Csv };

struct RunConfig {
  int n = 2;
  std::uint64_t seed = 0;
  int trials = 10;
  std::optional<double> tol;  // overrides both Tolerance fields when set
  OutFormat out_format = OutFormat::Json;

  Tolerance tolerance() const;
  /// Throws InvalidParams unless n ≥ 1, trials ≥ 1 and tol > 0.
  void validate() const;
};

struct CheckStat {
  std::string name;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = true;
};

struct SuiteFailure {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string check;
  double residual = 0.0;
  double threshold = 0.0;
};

struct SuiteReport {
  std::string name;
  int trials = 0;
  double max_residual = 0.0;
  std::vector<CheckStat> checks;
  std::optional<SuiteFailure> first_failure;

  bool pass() const { return !first_failure.has_value(); }
};

struct VerifyReport {
  std::vector<SuiteReport> suites;

  bool pass() const;
};

/// forms, groups, actions, reflections, metric, npc, covariant, families.
const std::vector<std::string>& suite_names();

/// Seed of a single trial; derived from the run seed, the suite and the
/// trial index only, so each trial can be replayed on its own.
std::uint64_t trial_seed(std::uint64_t seed, std::string_view suite, int trial);

SuiteReport run_suite(std::string_view name, const RunConfig& cfg);
/// `suite` is a suite name or "all". Throws InvalidParams on unknown names.
VerifyReport run_verify(std::string_view suite, const RunConfig& cfg);

std::string format_report(const VerifyReport& report, const RunConfig& cfg);

}  // namespace hsgeom
