#pragma once

// Seeded grids of membership checks for the structural identities of the
// lower central series filtration.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lcsq/free_algebra.hpp"
#include "lcsq/lcs_spans.hpp"

namespace lcsq::props {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// yx[a,b] - x[ya,b] - y[xa,b] + [xya,b] in A L_{i+1}, with b the
/// left-normed bracket of b_words (a single word when i = 2).
struct PrefixSwapInstance {
  int n;
  int i;
  Word x, y, a;
  std::vector<Word> b_words;
  std::string str() const;
};

struct Grid {
  std::size_t lemma_count = 100;
  int lemma_max_total = 6;
  std::vector<int> lemma_ns{2, 3};
  std::vector<int> lemma_is{2, 3};

  std::vector<int> reduction_ns{2, 3};
  std::vector<int> reduction_is{2, 3, 4};
  int reduction_max_total = 7;

  std::vector<std::pair<int, int>> product_pairs{{2, 3}, {3, 2}, {3, 3}};
  int product_n = 2;
  int product_max_total = 6;
};

std::vector<PrefixSwapInstance> random_prefix_swap_instances(std::uint64_t seed, const Grid& grid);

Outcome run_prefix_swap(const lcs::ScalarMode& mode, std::uint64_t seed, const Grid& grid);
Outcome run_linear_prefixes(const lcs::ScalarMode& mode, const Grid& grid);
Outcome run_mjk(const lcs::ScalarMode& mode, const Grid& grid);

std::vector<Outcome> run_property_suite(const lcs::ScalarMode& mode, std::uint64_t seed, const Grid& grid);

}  // namespace lcsq::props
