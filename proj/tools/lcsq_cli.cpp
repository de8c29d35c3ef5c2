// lcsq: dimensions, Hilbert series and Jordan-Holder decompositions of the
// lower central series quotients N_m = M_m / M_{m+1} of the free algebra A_n.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "lcsq/driver.hpp"
#include "lcsq/properties.hpp"
#include "lcsq/tensor_fields.hpp"

namespace {

using namespace lcsq;
using driver::ExitCode;

struct Options {
  driver::RunConfig config;
  std::string max_deg = "auto";
  bool exact = false;
  std::string primes;
  std::string format = "text";
  std::string out;
};

void resolve(Options& o) {
  if (o.max_deg != "auto") {
    try {
      o.config.max_degree = std::stoi(o.max_deg);
    } catch (const std::exception&) {
      throw std::invalid_argument("--max-deg must be an integer or 'auto'");
    }
  }
  if (o.exact) {
    o.config.mode = lcs::ScalarMode::rationals();
  } else if (!o.primes.empty()) {
    const auto comma = o.primes.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--primes expects p1,p2");
    const auto p = std::stoul(o.primes.substr(0, comma));
    const auto q = std::stoul(o.primes.substr(comma + 1));
    for (auto v : {p, q})
      if (v <= (1ul << 30) || v >= (1ul << 31) || !exactla::is_prime(v))
        throw std::invalid_argument("--primes: " + std::to_string(v) + " is not a prime in (2^30, 2^31)");
    o.config.mode = lcs::ScalarMode::two_primes(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q));
  } else {
    o.config.mode = lcs::ScalarMode::from_seed(o.config.seed);
  }
  if (o.format != "text" && o.format != "json") throw std::invalid_argument("--format must be text or json");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

int cmd_dims(Options& o, const std::vector<std::string>& degrees) {
  std::vector<MultiDegree> ds;
  for (const auto& s : degrees) ds.push_back(driver::parse_multidegree(s, o.config.n));
  const auto rows = driver::run_dims(o.config, ds);
  if (o.format == "json") {
    emit(o, driver::to_json(o.config, rows).dump(2) + "\n");
    return ExitCode::kOk;
  }
  const int m = o.config.m;
  std::string text = fmt::format("{:<16} {:>10} {:>10} {:>10}\n", "degree", fmt::format("dim M_{}", m),
                                 fmt::format("dim M_{}", m + 1), fmt::format("dim N_{}", m));
  for (const auto& r : rows)
    text += fmt::format("{:<16} {:>10} {:>10} {:>10}\n", r.degree.str(), r.dim_M, r.dim_M_next, r.dim_N);
  emit(o, text);
  return ExitCode::kOk;
}

int cmd_decompose(Options& o) {
  const auto r = driver::run_decompose(o.config);
  if (o.format == "json") {
    emit(o, driver::to_json(r).dump(2) + "\n");
  } else {
    std::string text = fmt::format("N_{}(A_{}) = {}\n", r.m, r.n, r.jh.str());
    text += fmt::format("bound |lambda| <= {}: {} (largest |lambda| = {})\n", r.bound,
                        r.bound_satisfied ? "satisfied" : "VIOLATED", r.jh.max_norm());
    text += fmt::format("truncation degree {}, {}\n", r.max_degree, o.config.mode.str());
    for (const auto& w : r.jh.warnings) text += "warning: " + w + "\n";
    emit(o, text);
  }
  for (const auto& w : r.jh.warnings) std::cerr << "warning: " << w << "\n";
  return r.bound_satisfied ? ExitCode::kOk : ExitCode::kInconsistent;
}

int cmd_verify(Options& o, const std::string& selector) {
  const auto entries = select_reference_tables(selector);
  if (entries.empty()) throw std::invalid_argument("selector '" + selector + "' matches no table entry");
  bool all = true;
  nlohmann::json report = nlohmann::json::array();
  std::string text;
  for (const auto& e : entries) {
    const auto c = driver::check_reference(e, o.config);
    const bool ok = c.match && c.bound_satisfied;
    all = all && ok;
    text += fmt::format("[{}] n={} m={}: {}\n", ok ? "PASS" : "FAIL", e.n, e.m, c.computed.str());
    if (!c.match) text += fmt::format("       expected: {}\n", c.expected.str());
    if (*e.note) text += fmt::format("       note: {}\n", e.note);
    report.push_back({{"n", e.n},
                      {"m", e.m},
                      {"expected", c.expected.str()},
                      {"computed", c.computed.str()},
                      {"match", c.match},
                      {"bound_satisfied", c.bound_satisfied}});
  }
  if (o.format == "json") emit(o, nlohmann::json{{"tables", report}, {"all_match", all}}.dump(2) + "\n");
  else emit(o, text);
  return all ? ExitCode::kOk : ExitCode::kInconsistent;
}

int cmd_properties(Options& o) {
  props::Grid grid;
  const auto outcomes = props::run_property_suite(o.config.mode, o.config.seed, grid);
  bool all = true;
  std::string text;
  nlohmann::json report = nlohmann::json::array();
  for (const auto& r : outcomes) {
    all = all && r.passed();
    text += fmt::format("[{}] {} ({} cases)\n", r.passed() ? "PASS" : "FAIL", r.name, r.cases);
    for (const auto& f : r.failures) text += "       witness: " + f + "\n";
    report.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}});
  }
  if (o.format == "json") emit(o, nlohmann::json{{"properties", report}, {"all_passed", all}}.dump(2) + "\n");
  else emit(o, text);
  return all ? ExitCode::kOk : ExitCode::kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower central series quotients of free algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.config.n, "number of generators")->capture_default_str();
    sub->add_option("--m", o.config.m, "index of the quotient N_m")->capture_default_str();
    sub->add_flag("--exact", o.exact, "rank computations over the rationals");
    sub->add_option("--primes", o.primes, "two primes p1,p2 in (2^30, 2^31)");
    sub->add_option("--threads", o.config.threads, "worker threads")->capture_default_str();
    sub->add_option("--format", o.format, "text or json")->capture_default_str();
    sub->add_option("--seed", o.config.seed, "seed for prime choice and random instances")->capture_default_str();
    sub->add_option("--out", o.out, "write output to this file instead of stdout");
  };

  auto* dims = app.add_subcommand("dims", "dim M_m, dim M_{m+1} and dim N_m at given multidegrees");
  add_common(dims);
  std::vector<std::string> degrees;
  dims->add_option("degrees", degrees, "multidegrees such as 2,1")->required();

  auto* dec = app.add_subcommand("decompose", "Jordan-Holder series of N_m(A_n)");
  add_common(dec);
  dec->add_option("--max-deg", o.max_deg, "truncation degree or 'auto' (the |lambda| bound)")->capture_default_str();
  dec->add_option("--extra-degree", o.config.extra_degree, "extend the residue check by this many degrees")
      ->capture_default_str();

  auto* ver = app.add_subcommand("verify", "recompute the published decomposition tables");
  add_common(ver);
  std::string selector = "all";
  ver->add_option("--paper-tables", selector, "selector: all, n=2, n=3,m=4, ...")->capture_default_str();

  auto* prop = app.add_subcommand("properties", "seeded membership checks of the structural identities");
  add_common(prop);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ExitCode::kOk : ExitCode::kUsage;
  }

  try {
    resolve(o);
    if (dims->parsed()) return cmd_dims(o, degrees);
    if (dec->parsed()) return cmd_decompose(o);
    if (ver->parsed()) return cmd_verify(o, selector);
    if (prop->parsed()) return cmd_properties(o);
  } catch (const lcs::PrimeDisagreement& e) {
    std::cerr << "error: " << e.what() << "\nrerun with different primes (--seed, --primes) or --exact\n";
    return ExitCode::kPrimeFailure;
  } catch (const jh::InconsistentSeries& e) {
    std::cerr << "error: inconsistent series: " << e.what() << "\n";
    if (e.where()) std::cerr << "at multidegree " << e.where()->str() << "\n";
    return ExitCode::kInconsistent;
  } catch (const lcs::InconsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return ExitCode::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kInconsistent;
  }
  return ExitCode::kUsage;
}
