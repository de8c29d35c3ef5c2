#include "lcsq/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <tuple>

namespace lcsq::sym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 0) throw std::invalid_argument("negative part in partition");
    if (j > 0 && parts_[j] > parts_[j - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::norm() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int n) const {
  if (length() > n) throw std::invalid_argument("partition longer than n");
  auto p = parts_;
  p.resize(n, 0);
  return p;
}

std::string Partition::str(int n) const {
  const auto p = padded(std::max(n, 1));
  std::string s = "(";
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(p[j]);
  }
  return s + ")";
}

bool dominated_by(const Partition& mu, const Partition& lambda) {
  if (mu.norm() != lambda.norm()) return false;
  int a = 0, b = 0;
  for (int j = 0; j < std::max(mu.length(), lambda.length()); ++j) {
    a += mu[j];
    b += lambda[j];
    if (a > b) return false;
  }
  return true;
}

namespace {

void partitions_rec(int left, int max_part, int slots, std::vector<int>& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(left - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k, int max_len) {
  if (k < 0) return {};
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(k, k, max_len, cur, out);
  return out;
}

std::vector<std::vector<int>> orbit(const Partition& lambda, int n) {
  auto v = lambda.padded(n);
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

SymPoly SymPoly::one(int n) { return monomial(Partition{}, n); }

SymPoly SymPoly::monomial(const Partition& mu, int n, std::int64_t c) {
  SymPoly p(n);
  if (mu.length() <= n) p.add(mu, c);
  return p;
}

std::int64_t SymPoly::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

void SymPoly::add(const Partition& mu, std::int64_t c) {
  if (mu.length() > n_) throw std::invalid_argument("partition " + mu.str(mu.length()) + " too long for n");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymPoly over different n");
  for (const auto& [mu, c] : o.terms_) add(mu, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymPoly over different n");
  for (const auto& [mu, c] : o.terms_) add(mu, -c);
  return *this;
}

SymPoly SymPoly::operator*(std::int64_t c) const {
  SymPoly out(n_);
  for (const auto& [mu, v] : terms_) out.add(mu, v * c);
  return out;
}

SymPoly SymPoly::part(int k) const {
  SymPoly out(n_);
  for (const auto& [mu, c] : terms_)
    if (mu.norm() == k) out.terms_.emplace(mu, c);
  return out;
}

bool SymPoly::is_homogeneous() const { return min_degree() == max_degree(); }

int SymPoly::min_degree() const {
  int best = -1;
  for (const auto& [mu, c] : terms_) best = best < 0 ? mu.norm() : std::min(best, mu.norm());
  return best;
}

int SymPoly::max_degree() const {
  int best = -1;
  for (const auto& [mu, c] : terms_) best = std::max(best, mu.norm());
  return best;
}

std::int64_t SymPoly::monomial_coeff(const std::vector<int>& alpha) const {
  if (static_cast<int>(alpha.size()) != n_) throw std::invalid_argument("exponent vector has wrong length");
  auto s = alpha;
  std::sort(s.begin(), s.end(), std::greater<>());
  if (!s.empty() && s.back() < 0) return 0;
  return coeff(Partition(std::move(s)));
}

std::map<std::vector<int>, std::int64_t> SymPoly::expand() const {
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& [mu, c] : terms_)
    for (auto& a : orbit(mu, n_)) out[std::move(a)] += c;
  return out;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest degree first, dominance-largest first within a degree.
  std::vector<std::pair<Partition, std::int64_t>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.first.norm(), a.first) > std::make_tuple(b.first.norm(), b.first);
  });
  for (const auto& [mu, c] : items) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const auto a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += "m" + mu.str(mu.length());
  }
  return s;
}

SymPoly multiply(const SymPoly& a, const SymPoly& b) {
  if (a.n() != b.n()) throw std::invalid_argument("SymPoly over different n");
  const int n = a.n();
  SymPoly out(n);
  if (a.is_zero() || b.is_zero()) return out;
  // The coefficient of m_kappa is the coefficient of t^kappa with kappa
  // sorted: sum over alpha in supp(a) of a(alpha) * b(kappa - alpha).
  const auto ea = a.expand();
  const auto eb = b.expand();
  std::vector<int> kappa(n);
  for (const auto& [alpha, ca] : ea) {
    for (const auto& [beta, cb] : eb) {
      bool sorted = true;
      for (int j = 0; j < n; ++j) {
        kappa[j] = alpha[j] + beta[j];
        if (j > 0 && kappa[j] > kappa[j - 1]) {
          sorted = false;
          break;
        }
      }
      if (sorted) out.add(Partition(kappa), ca * cb);
    }
  }
  return out;
}

SymPoly elementary(int k, int n) {
  SymPoly out(n);
  if (k < 0 || k > n) return out;
  out.add(Partition(std::vector<int>(k, 1)), 1);
  return out;
}

SymPoly complete(int k, int n) {
  SymPoly out(n);
  if (k < 0) return out;
  for (const auto& mu : partitions_of(k, n)) out.add(mu, 1);
  return out;
}

namespace {

SymPoly jacobi_trudi(const Partition& lambda, int n) {
  const int len = lambda.length();
  // Laplace expansion along the first remaining row; `used` marks columns.
  std::vector<bool> used(len, false);
  std::function<SymPoly(int)> det = [&](int row) -> SymPoly {
    if (row == len) return SymPoly::one(n);
    SymPoly acc(n);
    int sign = 1;
    for (int col = 0; col < len; ++col) {
      if (used[col]) continue;
      const int k = lambda[row] - row + col;
      if (k >= 0) {
        used[col] = true;
        auto minor = det(row + 1);
        used[col] = false;
        if (!minor.is_zero()) {
          auto term = multiply(complete(k, n), minor);
          if (sign > 0) acc += term;
          else acc -= term;
        }
      }
      sign = -sign;
    }
    return acc;
  };
  return det(0);
}

}  // namespace

SymPoly schur(const Partition& lambda, int n) {
  if (lambda.length() > n) return SymPoly(n);
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, SymPoly> cache;
  const auto key = std::make_pair(lambda, n);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto s = jacobi_trudi(lambda, n);
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(s)).first->second;
}

std::map<Partition, std::int64_t> expand_in_schur(const SymPoly& p) {
  std::map<Partition, std::int64_t> out;
  if (p.is_zero()) return out;
  if (!p.is_homogeneous()) throw std::invalid_argument("expand_in_schur needs a homogeneous polynomial");
  auto rest = p;
  while (!rest.is_zero()) {
    // Lexicographically largest remaining term is dominance-maximal.
    const auto [lead, c] = *rest.terms().rbegin();
    out[lead] += c;
    rest -= schur(lead, p.n()) * c;
  }
  return out;
}

SymPoly from_schur(const std::map<Partition, std::int64_t>& coeffs, int n) {
  SymPoly out(n);
  for (const auto& [lambda, c] : coeffs) out += schur(lambda, n) * c;
  return out;
}

}  // namespace lcsq::sym
