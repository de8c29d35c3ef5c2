#include "lcsq/properties.hpp"

#include <random>

namespace lcsq::props {

namespace {

// Runs check(field) over every field of the mode; true only if all agree on true.
template <class Check>
bool holds(const lcs::ScalarMode& mode, Check&& check) {
  if (mode.exact) return check(exactla::RationalField{});
  return check(exactla::PrimeField(mode.p1)) && check(exactla::PrimeField(mode.p2));
}

Word random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> letter(0, n - 1);
  Word w(len);
  for (auto& l : w) l = static_cast<Letter>(letter(rng));
  return w;
}

}  // namespace

std::string PrefixSwapInstance::str() const {
  std::string s = "n=" + std::to_string(n) + " i=" + std::to_string(i) + " x=" + word_str(x) +
                  " y=" + word_str(y) + " a=" + word_str(a) + " b=[";
  for (std::size_t k = 0; k < b_words.size(); ++k) s += (k ? "," : "") + word_str(b_words[k]);
  return s + "]";
}

std::vector<PrefixSwapInstance> random_prefix_swap_instances(std::uint64_t seed, const Grid& grid) {
  std::mt19937_64 rng(seed);
  std::vector<PrefixSwapInstance> out;
  auto pick = [&](const std::vector<int>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  while (out.size() < grid.lemma_count) {
    PrefixSwapInstance inst;
    inst.n = pick(grid.lemma_ns);
    inst.i = pick(grid.lemma_is);
    const int inner = inst.i - 1;
    // x, y and every bracket argument need one letter; a may be empty.
    int budget = grid.lemma_max_total - 2 - inner;
    if (budget < 0) continue;
    auto extra = [&] {
      const int e = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= e;
      return e;
    };
    const int ax = extra();
    const int ay = extra();
    const int aa = extra();
    inst.x = random_word(rng, inst.n, 1 + ax);
    inst.y = random_word(rng, inst.n, 1 + ay);
    inst.a = random_word(rng, inst.n, aa);
    for (int k = 0; k < inner; ++k) inst.b_words.push_back(random_word(rng, inst.n, 1 + extra()));
    out.push_back(std::move(inst));
  }
  return out;
}

Outcome run_prefix_swap(const lcs::ScalarMode& mode, std::uint64_t seed, const Grid& grid) {
  Outcome out{"prefix swap: yx[a,b] = x[ya,b] + y[xa,b] - [xya,b] mod A L_{i+1}", 0, {}};
  for (const auto& inst : random_prefix_swap_instances(seed, grid)) {
    ++out.cases;
    const bool ok = holds(mode, [&](const auto& field) {
      std::vector<std::span<const Letter>> ws(inst.b_words.begin(), inst.b_words.end());
      const auto b = lcs::left_normed_bracket(field, std::span(ws), inst.n);
      return lcs::check_prefix_swap(field, inst.x, inst.y, inst.a, b, inst.i);
    });
    if (!ok) out.failures.push_back(inst.str());
  }
  return out;
}

Outcome run_linear_prefixes(const lcs::ScalarMode& mode, const Grid& grid) {
  Outcome out{"reduction: degree <= 1 prefixes span M_i modulo M_{i+1}", 0, {}};
  for (int n : grid.reduction_ns)
    for (int i : grid.reduction_is)
      for (int t = 0; t <= grid.reduction_max_total; ++t)
        for (const auto& d : multidegrees_of_total(n, t)) {
          ++out.cases;
          if (!holds(mode, [&](const auto& field) { return lcs::check_linear_prefixes(field, i, d); }))
            out.failures.push_back("n=" + std::to_string(n) + " i=" + std::to_string(i) + " d=" + d.str());
        }
  return out;
}

Outcome run_mjk(const lcs::ScalarMode& mode, const Grid& grid) {
  Outcome out{"products: M_j M_k in M_{j+k-1} for j or k odd", 0, {}};
  for (auto [j, k] : grid.product_pairs)
    for (int t = 0; t <= grid.product_max_total; ++t)
      for (const auto& d : multidegrees_of_total(grid.product_n, t)) {
        ++out.cases;
        if (!holds(mode, [&](const auto& field) { return lcs::check_mjk(field, j, k, d); }))
          out.failures.push_back("j=" + std::to_string(j) + " k=" + std::to_string(k) + " d=" + d.str());
      }
  return out;
}

std::vector<Outcome> run_property_suite(const lcs::ScalarMode& mode, std::uint64_t seed, const Grid& grid) {
  return {run_prefix_swap(mode, seed, grid), run_linear_prefixes(mode, grid), run_mjk(mode, grid)};
}

}  // namespace lcsq::props
