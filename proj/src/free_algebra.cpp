#include "lcsq/free_algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace lcsq {

MultiDegree::MultiDegree(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw std::invalid_argument("multidegree needs at least one variable");
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent in multidegree");
  total_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

MultiDegree MultiDegree::unit(int n, int j) {
  std::vector<int> e(n, 0);
  e.at(j) = 1;
  return MultiDegree(std::move(e));
}

MultiDegree MultiDegree::of_word(std::span<const Letter> w, int n) {
  std::vector<int> e(n, 0);
  for (auto l : w) {
    if (l >= n) throw std::invalid_argument("letter out of range");
    ++e[l];
  }
  return MultiDegree(std::move(e));
}

bool MultiDegree::fits_in(const MultiDegree& other) const {
  if (n() != other.n()) return false;
  for (int j = 0; j < n(); ++j)
    if (exps_[j] > other.exps_[j]) return false;
  return true;
}

bool MultiDegree::is_sorted_desc() const {
  return std::is_sorted(exps_.begin(), exps_.end(), std::greater<>());
}

MultiDegree MultiDegree::sorted_desc() const {
  auto e = exps_;
  std::sort(e.begin(), e.end(), std::greater<>());
  return MultiDegree(std::move(e));
}

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
  if (n() != o.n()) throw std::invalid_argument("multidegrees over different n");
  auto e = exps_;
  for (int j = 0; j < n(); ++j) e[j] += o.exps_[j];
  return MultiDegree(std::move(e));
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const {
  if (n() != o.n()) throw std::invalid_argument("multidegrees over different n");
  auto e = exps_;
  for (int j = 0; j < n(); ++j) e[j] -= o.exps_[j];
  return MultiDegree(std::move(e));
}

std::string MultiDegree::str() const {
  std::string s = "(";
  for (int j = 0; j < n(); ++j) {
    if (j) s += ",";
    s += std::to_string(exps_[j]);
  }
  return s + ")";
}

std::uint64_t component_dim(const MultiDegree& d) {
  // Build the multinomial one letter at a time: C(t, e) products stay exact.
  unsigned __int128 r = 1;
  int t = 0;
  for (int e : d.exps()) {
    for (int k = 1; k <= e; ++k) {
      ++t;
      r = r * t / k;
    }
  }
  if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("component too large");
  return static_cast<std::uint64_t>(r);
}

namespace {

void compositions_rec(int n, int j, int left, std::vector<int>& cur, std::vector<MultiDegree>& out) {
  if (j == n - 1) {
    cur[j] = left;
    out.emplace_back(cur);
    return;
  }
  for (int v = left; v >= 0; --v) {
    cur[j] = v;
    compositions_rec(n, j + 1, left - v, cur, out);
  }
}

void sub_rec(const MultiDegree& d, int j, std::vector<int>& cur, std::vector<MultiDegree>& out) {
  if (j == d.n()) {
    out.emplace_back(cur);
    return;
  }
  for (int v = 0; v <= d[j]; ++v) {
    cur[j] = v;
    sub_rec(d, j + 1, cur, out);
  }
}

}  // namespace

std::vector<MultiDegree> multidegrees_of_total(int n, int total) {
  if (n < 1 || total < 0) throw std::invalid_argument("multidegrees_of_total: bad arguments");
  std::vector<MultiDegree> out;
  std::vector<int> cur(n, 0);
  compositions_rec(n, 0, total, cur, out);
  return out;
}

std::vector<MultiDegree> sub_degrees(const MultiDegree& d) {
  std::vector<MultiDegree> out;
  std::vector<int> cur(d.n(), 0);
  sub_rec(d, 0, cur, out);
  return out;
}

ComponentBasis::ComponentBasis(MultiDegree d) : degree_(std::move(d)) {
  const auto dim = component_dim(degree_);
  if (dim > (1ull << 26)) throw std::length_error("component " + degree_.str() + " too large");
  size_ = static_cast<std::size_t>(dim);
  Word w;
  for (int j = 0; j < degree_.n(); ++j) w.insert(w.end(), degree_[j], static_cast<Letter>(j));
  letters_.reserve(size_ * w.size());
  do {
    letters_.insert(letters_.end(), w.begin(), w.end());
  } while (std::next_permutation(w.begin(), w.end()));
}

std::size_t ComponentBasis::prefix_offset(std::span<const Letter> prefix) const {
  std::vector<int> left = degree_.exps();
  const int n = degree_.n();
  unsigned __int128 remaining = size_;  // words on the remaining multiset
  int t = degree_.total();
  unsigned __int128 offset = 0;
  for (auto l : prefix) {
    if (l >= n || left[l] == 0)
      throw std::invalid_argument("word " + word_str(prefix) + " does not fit component " + degree_.str());
    for (int b = 0; b < l; ++b)
      if (left[b] > 0) offset += remaining * left[b] / t;
    remaining = remaining * left[l] / t;
    --left[l];
    --t;
  }
  return static_cast<std::size_t>(offset);
}

std::size_t ComponentBasis::index_of(std::span<const Letter> w) const {
  if (static_cast<int>(w.size()) != length())
    throw std::invalid_argument("word " + word_str(w) + " has wrong length for " + degree_.str());
  return prefix_offset(w);
}

const ComponentBasis& component(const MultiDegree& d) {
  static std::mutex mu;
  static std::map<MultiDegree, std::unique_ptr<ComponentBasis>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return *it->second;
  }
  auto fresh = std::make_unique<ComponentBasis>(d);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(d, std::move(fresh));
  return *it->second;
}

std::string word_str(std::span<const Letter> w) {
  if (w.empty()) return "1";
  std::string s;
  for (auto l : w) s += "x" + std::to_string(l + 1);
  return s;
}

}  // namespace lcsq
