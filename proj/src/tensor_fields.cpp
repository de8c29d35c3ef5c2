#include "lcsq/tensor_fields.hpp"

#include <stdexcept>

namespace lcsq::fields {

ModuleLabel ModuleLabel::of(const sym::Partition& lambda, int n) {
  if (lambda.length() > n) throw std::invalid_argument("partition " + lambda.str(lambda.length()) + " has more than n parts");
  if (lambda[0] <= 1 && lambda.length() < n) return {lambda, n, ModuleKind::column, lambda.length()};
  return {lambda, n, ModuleKind::generic, 0};
}

sym::SymPoly numerator(const sym::Partition& lambda, int n) {
  const auto label = ModuleLabel::of(lambda, n);
  if (label.kind == ModuleKind::generic) return sym::schur(lambda, n);
  sym::SymPoly p(n);
  for (int j = label.k; j <= n; ++j) {
    const auto e = sym::elementary(j, n);
    if ((j - label.k) % 2 == 0) p += e;
    else p -= e;
  }
  return p;
}

TruncatedSeries divide_by_torus(const sym::SymPoly& p, int maxdeg) {
  TruncatedSeries out(p.n(), maxdeg);
  const auto terms = p.expand();
  for (const auto& [d, v] : out.coeffs()) {
    std::int64_t c = 0;
    for (const auto& [alpha, a] : terms) {
      bool fits = true;
      for (int j = 0; j < p.n() && fits; ++j) fits = alpha[j] <= d[j];
      if (fits) c += a;
    }
    if (c != 0) out.set(d, c);
  }
  return out;
}

TruncatedSeries hilbert_F(const sym::Partition& lambda, int n, int maxdeg) {
  return divide_by_torus(numerator(lambda, n), maxdeg);
}

int lambda_bound(int m, int n) {
  if (m < 2 || n < 1) throw std::invalid_argument("lambda_bound needs m >= 2, n >= 1");
  if (m % 2 == 1 || n < 2) return 2 * m - 2;
  return 2 * m - 2 + 2 * ((n - 2) / 2);
}

std::vector<sym::Partition> enumerate_labels(int n, int max_norm) {
  std::vector<sym::Partition> out;
  for (int k = 0; k <= max_norm; ++k)
    for (auto& p : sym::partitions_of(k, n)) out.push_back(std::move(p));
  return out;
}

}  // namespace lcsq::fields
