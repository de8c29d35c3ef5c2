#include "lcsq/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcsq {

TruncatedSeries::TruncatedSeries(int n, int maxdeg) : n_(n), maxdeg_(maxdeg) {
  if (n < 1 || maxdeg < 0) throw std::invalid_argument("TruncatedSeries: bad shape");
  for (int t = 0; t <= maxdeg; ++t)
    for (auto& d : multidegrees_of_total(n, t)) coeffs_.emplace(std::move(d), 0);
}

void TruncatedSeries::check(const MultiDegree& d) const {
  if (d.n() != n_ || d.total() > maxdeg_)
    throw std::out_of_range("multidegree " + d.str() + " outside truncated series");
}

std::int64_t TruncatedSeries::at(const MultiDegree& d) const {
  check(d);
  return coeffs_.at(d);
}

void TruncatedSeries::set(const MultiDegree& d, std::int64_t v) {
  check(d);
  coeffs_[d] = v;
}

void TruncatedSeries::add(const MultiDegree& d, std::int64_t v) {
  check(d);
  coeffs_[d] += v;
}

TruncatedSeries TruncatedSeries::truncated(int maxdeg) const {
  if (maxdeg > maxdeg_) throw std::invalid_argument("cannot extend a truncated series");
  TruncatedSeries out(n_, maxdeg);
  for (auto& [d, v] : out.coeffs_) v = coeffs_.at(d);
  return out;
}

bool TruncatedSeries::is_symmetric() const {
  for (const auto& [d, v] : coeffs_)
    if (coeffs_.at(d.sorted_desc()) != v) return false;
  return true;
}

std::optional<MultiDegree> TruncatedSeries::first_difference(const TruncatedSeries& other) const {
  if (other.n_ != n_) throw std::invalid_argument("series over different n");
  const int D = std::min(maxdeg_, other.maxdeg_);
  for (const auto& [d, v] : coeffs_)
    if (d.total() <= D && other.coeffs_.at(d) != v) return d;
  return std::nullopt;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.n_ != n_ || o.maxdeg_ < maxdeg_) throw std::invalid_argument("series shape mismatch");
  for (auto& [d, v] : coeffs_) v += o.coeffs_.at(d);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.n_ != n_ || o.maxdeg_ < maxdeg_) throw std::invalid_argument("series shape mismatch");
  for (auto& [d, v] : coeffs_) v -= o.coeffs_.at(d);
  return *this;
}

}  // namespace lcsq
