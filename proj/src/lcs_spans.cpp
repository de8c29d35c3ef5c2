#include "lcsq/lcs_spans.hpp"

#include <algorithm>

namespace lcsq::lcs {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto run = [&] {
    for (;;) {
      const auto k = next.fetch_add(1);
      if (k >= count) return;
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) pool.emplace_back(run);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

std::vector<MultiDegree> orbit_representatives(int n, int total) {
  std::vector<MultiDegree> out;
  for (auto& d : multidegrees_of_total(n, total))
    if (d.is_sorted_desc()) out.push_back(std::move(d));
  return out;
}

std::vector<Letter> relabelling_to(const MultiDegree& d) {
  std::vector<Letter> order(d.n());
  std::iota(order.begin(), order.end(), Letter{0});
  std::stable_sort(order.begin(), order.end(), [&](Letter a, Letter b) { return d[a] > d[b]; });
  return order;
}

std::string ScalarMode::str() const {
  if (exact) return "exact rationals";
  return "primes " + std::to_string(p1) + ", " + std::to_string(p2);
}

Engine::Engine(int n, ScalarMode mode, int threads) : n_(n), mode_(mode), threads_(threads) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (mode.exact) {
    exact_ = std::make_unique<Tower<exactla::RationalField>>(exactla::RationalField{}, n);
  } else {
    if (mode.p1 == mode.p2) throw std::invalid_argument("the two primes must differ");
    first_ = std::make_unique<Tower<exactla::PrimeField>>(exactla::PrimeField(mode.p1), n);
    second_ = std::make_unique<Tower<exactla::PrimeField>>(exactla::PrimeField(mode.p2), n);
  }
}

template <class Fn>
std::size_t Engine::query(Fn&& fn, const std::string& what) {
  if (exact_) return fn(*exact_);
  const auto a = fn(*first_);
  const auto b = fn(*second_);
  if (a != b)
    throw PrimeDisagreement(what + ": rank " + std::to_string(a) + " mod " + std::to_string(mode_.p1) +
                            " but " + std::to_string(b) + " mod " + std::to_string(mode_.p2));
  return a;
}

std::size_t Engine::dim_L(int i, const MultiDegree& d) {
  return query([&](auto& t) { return t.dim_L(i, d); }, "dim L" + std::to_string(i) + d.str());
}

std::size_t Engine::dim_M(int i, const MultiDegree& d) {
  return query([&](auto& t) { return t.dim_M(i, d); }, "dim M" + std::to_string(i) + d.str());
}

std::size_t Engine::dim_N(int i, const MultiDegree& d) {
  return query([&](auto& t) { return t.dim_N(i, d); }, "dim N" + std::to_string(i) + d.str());
}

TruncatedSeries Engine::hilbert_N(int i, int maxdeg) {
  if (i < 2) throw std::invalid_argument("hilbert_N needs i >= 2");
  TruncatedSeries out(n_, maxdeg);
  std::map<MultiDegree, std::size_t> by_rep;
  for (int t = 0; t <= maxdeg; ++t) {
    const auto reps = orbit_representatives(n_, t);
    std::vector<std::size_t> dims(reps.size());
    parallel_for(reps.size(), threads_, [&](std::size_t k) { dims[k] = dim_N(i, reps[k]); });
    for (std::size_t k = 0; k < reps.size(); ++k) by_rep[reps[k]] = dims[k];
  }
  for (const auto& [d, v] : out.coeffs()) out.set(d, static_cast<std::int64_t>(by_rep.at(d.sorted_desc())));
  check_agreement();
  return out;
}

void Engine::check_agreement() const {
  if (exact_) return;
  const auto a = first_->rank_log();
  const auto b = second_->rank_log();
  for (const auto& [key, r] : a) {
    auto it = b.find(key);
    if (it != b.end() && it->second != r)
      throw PrimeDisagreement("rank of " + key + " is " + std::to_string(r) + " mod " +
                              std::to_string(mode_.p1) + " but " + std::to_string(it->second) + " mod " +
                              std::to_string(mode_.p2));
  }
}

}  // namespace lcsq::lcs
