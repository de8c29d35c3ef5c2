#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lcsq/free_algebra.hpp"

namespace lcsq {

/// Multigraded Hilbert series truncated at total degree `maxdeg`.  Every
/// multidegree of total <= maxdeg has an explicit (possibly zero) entry.
class TruncatedSeries {
 public:
  TruncatedSeries(int n, int maxdeg);

  int n() const { return n_; }
  int maxdeg() const { return maxdeg_; }

  std::int64_t at(const MultiDegree& d) const;
  void set(const MultiDegree& d, std::int64_t v);
  void add(const MultiDegree& d, std::int64_t v);

  const std::map<MultiDegree, std::int64_t>& coeffs() const { return coeffs_; }

  /// Same series cut at a smaller total degree.
  TruncatedSeries truncated(int maxdeg) const;

  /// Invariant under permuting the n coordinates.
  bool is_symmetric() const;

  /// First multidegree (in map order) where the two series differ.
  std::optional<MultiDegree> first_difference(const TruncatedSeries& other) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void check(const MultiDegree& d) const;

  int n_;
  int maxdeg_;
  std::map<MultiDegree, std::int64_t> coeffs_;
};

}  // namespace lcsq
