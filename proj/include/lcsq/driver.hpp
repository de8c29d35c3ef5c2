#pragma once

// Orchestration shared by the command-line tool and the Python module.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcsq/jh_decomposer.hpp"
#include "lcsq/lcs_spans.hpp"
#include "lcsq/reference_tables.hpp"

namespace lcsq::driver {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kInconsistent = 2, kPrimeFailure = 3 };

struct RunConfig {
  int n = 2;
  int m = 3;
  std::optional<int> max_degree;  // nullopt = lambda_bound(m, n)
  int extra_degree = 0;
  lcs::ScalarMode mode = lcs::ScalarMode::from_seed(1);
  int threads = 1;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument unless n >= 2, m >= 2 and degrees are sane.
  void validate() const;
  /// Truncation degree actually used: max_degree (or the bound) + extra_degree.
  int resolved_degree() const;
};

struct DecomposeResult {
  int n;
  int m;
  int max_degree;
  int bound;
  TruncatedSeries series;
  jh::JHSeries jh;
  bool bound_satisfied;
};

DecomposeResult run_decompose(const RunConfig& config);
/// Reuses the towers of `engine` (which must match config.n and mode).
DecomposeResult run_decompose(const RunConfig& config, lcs::Engine& engine);

/// {"bound", "bound_satisfied", "m", "max_degree", "modules": [{"lambda", "mult"}], "n"}
nlohmann::json to_json(const DecomposeResult& r);

struct DimsRow {
  MultiDegree degree;
  std::size_t dim_M;       // (M_m)_d
  std::size_t dim_M_next;  // (M_{m+1})_d
  std::size_t dim_N;       // (N_m)_d
};

std::vector<DimsRow> run_dims(const RunConfig& config, const std::vector<MultiDegree>& degrees);
nlohmann::json to_json(const RunConfig& config, const std::vector<DimsRow>& rows);

/// Parses "2,1,0" into a multidegree in n variables.
MultiDegree parse_multidegree(const std::string& text, int n);

struct TableCheck {
  ReferenceEntry entry;
  jh::JHSeries expected;
  jh::JHSeries computed;
  bool match;
  bool bound_satisfied;
};

TableCheck check_reference(const ReferenceEntry& entry, const RunConfig& base);

}  // namespace lcsq::driver
