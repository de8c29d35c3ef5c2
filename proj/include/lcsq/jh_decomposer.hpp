#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcsq/series.hpp"
#include "lcsq/symmetric.hpp"

namespace lcsq::jh {

/// The series is not a nonnegative combination of the h_{F_lambda}.
class InconsistentSeries : public std::runtime_error {
 public:
  InconsistentSeries(const std::string& what, std::optional<MultiDegree> where)
      : std::runtime_error(what), where_(std::move(where)) {}
  const std::optional<MultiDegree>& where() const { return where_; }

 private:
  std::optional<MultiDegree> where_;
};

/// Jordan-Holder multiplicities [F_lambda : N_m] read off a Hilbert series.
struct JHSeries {
  int n = 0;
  int m = 0;
  int truncation = 0;
  std::map<sym::Partition, std::int64_t> entries;
  std::vector<std::string> warnings;

  /// Largest |lambda| present, or -1 if empty.
  int max_norm() const;
  /// Constituents by ascending norm, lexicographically decreasing within a
  /// norm: "(4,1) + (3,2) + 2(4,2)".  Empty series prints as "0".
  std::string str() const;

  /// Same multiset of (lambda, multiplicity).
  bool same_constituents(const JHSeries& o) const { return n == o.n && entries == o.entries; }
};

/// Parses "(2, 1) + 2(4, 2)" style sums.  Tuples longer than n or with
/// increasing entries are rejected.
JHSeries parse_jh(const std::string& text, int n, int m);

/// Greedy degree-ascending elimination: at each total degree t <= bound, the
/// degree-t part of (h - committed) * prod(1 - t_i) expanded in Schur
/// polynomials gives the multiplicities of all lambda with |lambda| = t.
/// The residue must then vanish on every multidegree up to h.maxdeg().
JHSeries decompose(const TruncatedSeries& h, int m);

/// Every lambda satisfies |lambda| <= lambda_bound(m, n).
bool verify_bound(const JHSeries& jh);

/// sum mult(lambda) * h_{F_lambda} truncated at total degree maxdeg.
TruncatedSeries reconstruct(const JHSeries& jh, int maxdeg);

}  // namespace lcsq::jh
