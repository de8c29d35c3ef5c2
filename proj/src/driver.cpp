#include "lcsq/driver.hpp"

#include <sstream>
#include <stdexcept>

#include "lcsq/tensor_fields.hpp"

namespace lcsq::driver {

void RunConfig::validate() const {
  if (n < 2) throw std::invalid_argument("--n must be >= 2");
  if (m < 2) throw std::invalid_argument("--m must be >= 2");
  if (max_degree && *max_degree < fields::lambda_bound(m, n))
    throw std::invalid_argument("--max-deg must be at least the bound " + std::to_string(fields::lambda_bound(m, n)));
  if (extra_degree < 0) throw std::invalid_argument("--extra-degree must be >= 0");
  if (threads < 1) throw std::invalid_argument("--threads must be >= 1");
}

int RunConfig::resolved_degree() const {
  return max_degree.value_or(fields::lambda_bound(m, n)) + extra_degree;
}

DecomposeResult run_decompose(const RunConfig& config) {
  config.validate();
  lcs::Engine engine(config.n, config.mode, config.threads);
  return run_decompose(config, engine);
}

DecomposeResult run_decompose(const RunConfig& config, lcs::Engine& engine) {
  config.validate();
  if (engine.n() != config.n) throw std::invalid_argument("engine built for a different n");
  const int D = config.resolved_degree();
  auto series = engine.hilbert_N(config.m, D);
  auto jh = jh::decompose(series, config.m);
  const bool ok = jh::verify_bound(jh);
  return {config.n, config.m, D, fields::lambda_bound(config.m, config.n), std::move(series), std::move(jh), ok};
}

nlohmann::json to_json(const DecomposeResult& r) {
  nlohmann::json modules = nlohmann::json::array();
  std::vector<std::pair<sym::Partition, std::int64_t>> items(r.jh.entries.begin(), r.jh.entries.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.norm() != b.first.norm()) return a.first.norm() < b.first.norm();
    return a.first > b.first;
  });
  for (const auto& [lambda, c] : items) modules.push_back({{"lambda", lambda.padded(r.n)}, {"mult", c}});
  return {{"n", r.n},         {"m", r.m},         {"max_degree", r.max_degree},
          {"modules", modules}, {"bound", r.bound}, {"bound_satisfied", r.bound_satisfied}};
}

std::vector<DimsRow> run_dims(const RunConfig& config, const std::vector<MultiDegree>& degrees) {
  config.validate();
  lcs::Engine engine(config.n, config.mode, config.threads);
  std::vector<DimsRow> rows;
  for (const auto& d : degrees) {
    if (d.n() != config.n) throw std::invalid_argument("multidegree " + d.str() + " is not in n variables");
    const auto next = engine.dim_M(config.m + 1, d);
    const auto quotient = engine.dim_N(config.m, d);
    rows.push_back({d, next + quotient, next, quotient});
  }
  engine.check_agreement();
  return rows;
}

nlohmann::json to_json(const RunConfig& config, const std::vector<DimsRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"degree", r.degree.exps()}, {"dim_M", r.dim_M}, {"dim_M_next", r.dim_M_next}, {"dim_N", r.dim_N}});
  return {{"n", config.n}, {"m", config.m}, {"dims", out}};
}

MultiDegree parse_multidegree(const std::string& text, int n) {
  std::vector<int> exps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multidegree '" + text + "'");
    }
    if (used != item.size() || v < 0) throw std::invalid_argument("bad multidegree '" + text + "'");
    exps.push_back(v);
  }
  if (static_cast<int>(exps.size()) != n)
    throw std::invalid_argument("multidegree '" + text + "' needs " + std::to_string(n) + " entries");
  return MultiDegree(std::move(exps));
}

TableCheck check_reference(const ReferenceEntry& entry, const RunConfig& base) {
  RunConfig config = base;
  config.n = entry.n;
  config.m = entry.m;
  config.max_degree.reset();
  auto result = run_decompose(config);
  auto expected = jh::parse_jh(entry.decomposition, entry.n, entry.m);
  const bool match = expected.same_constituents(result.jh);
  return {entry, std::move(expected), std::move(result.jh), match, result.bound_satisfied};
}

}  // namespace lcsq::driver
