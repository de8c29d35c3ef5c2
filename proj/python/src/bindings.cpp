#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcsq/driver.hpp"
#include "lcsq/free_algebra.hpp"
#include "lcsq/jh_decomposer.hpp"
#include "lcsq/lcs_spans.hpp"
#include "lcsq/properties.hpp"
#include "lcsq/reference_tables.hpp"
#include "lcsq/symmetric.hpp"
#include "lcsq/tensor_fields.hpp"

namespace py = pybind11;
using namespace lcsq;

namespace {

lcs::ScalarMode make_mode(bool exact, std::uint64_t seed, std::optional<std::pair<std::uint32_t, std::uint32_t>> primes) {
  if (exact) return lcs::ScalarMode::rationals();
  if (primes) {
    for (auto p : {primes->first, primes->second})
      if (p <= (1u << 30) || p >= (1u << 31) || !exactla::is_prime(p))
        throw std::invalid_argument("primes must lie in (2^30, 2^31)");
    return lcs::ScalarMode::two_primes(primes->first, primes->second);
  }
  return lcs::ScalarMode::from_seed(seed);
}

MultiDegree degree_of(const std::vector<int>& d) {
  for (int x : d)
    if (x < 0) throw std::invalid_argument("negative exponent");
  return MultiDegree(d);
}

py::dict series_dict(const TruncatedSeries& s) {
  py::dict out;
  for (const auto& [d, c] : s.coeffs()) out[py::tuple(py::cast(d.exps()))] = c;
  return out;
}

py::list modules_list(const jh::JHSeries& jh) {
  py::list out;
  for (const auto& [lambda, c] : jh.entries) out.append(py::make_tuple(py::tuple(py::cast(lambda.padded(jh.n))), c));
  return out;
}

py::dict decomposition_dict(const driver::DecomposeResult& r) {
  py::dict d;
  d["n"] = r.n;
  d["m"] = r.m;
  d["max_degree"] = r.max_degree;
  d["bound"] = r.bound;
  d["bound_satisfied"] = r.bound_satisfied;
  d["modules"] = modules_list(r.jh);
  d["text"] = r.jh.str();
  d["warnings"] = r.jh.warnings;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lcsq, m) {
  m.doc() = "Lower central series quotients of free associative algebras";

  static py::exception<lcs::PrimeDisagreement> prime_exc(m, "PrimeDisagreement", PyExc_RuntimeError);
  static py::exception<jh::InconsistentSeries> series_exc(m, "InconsistentSeries", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const lcs::PrimeDisagreement& e) {
      prime_exc(e.what());
    } catch (const jh::InconsistentSeries& e) {
      series_exc(e.what());
    } catch (const lcs::InconsistencyError& e) {
      series_exc(e.what());
    }
  });

  m.def("component_dim", [](const std::vector<int>& d) { return component_dim(degree_of(d)); }, py::arg("degree"));
  m.def("lambda_bound", &fields::lambda_bound, py::arg("m"), py::arg("n"));

  m.def(
      "schur",
      [](const std::vector<int>& lambda, int n) {
        py::dict out;
        for (const auto& [alpha, c] : sym::schur(sym::Partition(lambda), n).expand())
          out[py::tuple(py::cast(alpha))] = c;
        return out;
      },
      py::arg("partition"), py::arg("n"), "monomial expansion {exponent tuple: coefficient}");

  m.def(
      "hilbert_F",
      [](const std::vector<int>& lambda, int n, int maxdeg) {
        return series_dict(fields::hilbert_F(sym::Partition(lambda), n, maxdeg));
      },
      py::arg("partition"), py::arg("n"), py::arg("maxdeg"));

  py::class_<lcs::Engine>(m, "Engine")
      .def(py::init([](int n, bool exact, std::uint64_t seed,
                       std::optional<std::pair<std::uint32_t, std::uint32_t>> primes, int threads) {
             if (n < 1) throw std::invalid_argument("n must be >= 1");
             return std::make_unique<lcs::Engine>(n, make_mode(exact, seed, primes), threads);
           }),
           py::arg("n"), py::kw_only(), py::arg("exact") = false, py::arg("seed") = 1, py::arg("primes") = py::none(),
           py::arg("threads") = 1)
      .def_property_readonly("n", &lcs::Engine::n)
      .def_property_readonly("mode", [](const lcs::Engine& e) { return e.mode().str(); })
      .def("dim_L", [](lcs::Engine& e, int i, const std::vector<int>& d) { return e.dim_L(i, degree_of(d)); })
      .def("dim_M", [](lcs::Engine& e, int i, const std::vector<int>& d) { return e.dim_M(i, degree_of(d)); })
      .def("dim_N", [](lcs::Engine& e, int i, const std::vector<int>& d) { return e.dim_N(i, degree_of(d)); })
      .def(
          "hilbert_N",
          [](lcs::Engine& e, int i, int maxdeg) {
            py::gil_scoped_release release;
            auto s = e.hilbert_N(i, maxdeg);
            py::gil_scoped_acquire acquire;
            return series_dict(s);
          },
          py::arg("i"), py::arg("maxdeg"))
      .def("check_agreement", &lcs::Engine::check_agreement);

  m.def(
      "decompose",
      [](int n, int m_, std::optional<int> max_degree, int extra_degree, bool exact, std::uint64_t seed, int threads) {
        driver::RunConfig c;
        c.n = n;
        c.m = m_;
        c.max_degree = max_degree;
        c.extra_degree = extra_degree;
        c.mode = make_mode(exact, seed, std::nullopt);
        c.seed = seed;
        c.threads = threads;
        driver::DecomposeResult r = [&] {
          py::gil_scoped_release release;
          return driver::run_decompose(c);
        }();
        return decomposition_dict(r);
      },
      py::arg("n"), py::arg("m"), py::kw_only(), py::arg("max_degree") = py::none(), py::arg("extra_degree") = 0,
      py::arg("exact") = false, py::arg("seed") = 1, py::arg("threads") = 1);

  m.def(
      "reference_tables",
      [](const std::string& selector) {
        py::list out;
        for (const auto& e : select_reference_tables(selector)) {
          py::dict d;
          d["n"] = e.n;
          d["m"] = e.m;
          d["decomposition"] = e.decomposition;
          d["note"] = e.note;
          out.append(d);
        }
        return out;
      },
      py::arg("selector") = "all");

  m.def(
      "verify_tables",
      [](const std::string& selector, bool exact, std::uint64_t seed) {
        driver::RunConfig base;
        base.mode = make_mode(exact, seed, std::nullopt);
        base.seed = seed;
        py::list out;
        for (const auto& e : select_reference_tables(selector)) {
          driver::TableCheck c = [&] {
            py::gil_scoped_release release;
            return driver::check_reference(e, base);
          }();
          py::dict d;
          d["n"] = e.n;
          d["m"] = e.m;
          d["expected"] = c.expected.str();
          d["computed"] = c.computed.str();
          d["match"] = c.match;
          d["bound_satisfied"] = c.bound_satisfied;
          out.append(d);
        }
        return out;
      },
      py::arg("selector") = "all", py::kw_only(), py::arg("exact") = false, py::arg("seed") = 1);

  m.def(
      "property_suite",
      [](std::uint64_t seed, bool exact) {
        py::list out;
        const auto outcomes = props::run_property_suite(make_mode(exact, seed, std::nullopt), seed, props::Grid{});
        for (const auto& o : outcomes) {
          py::dict d;
          d["name"] = o.name;
          d["cases"] = o.cases;
          d["failures"] = o.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 1, py::arg("exact") = false);
}
