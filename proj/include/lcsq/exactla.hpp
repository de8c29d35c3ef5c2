#pragma once

// Exact scalars and incremental row-echelon accumulation.
//
// Two coefficient fields are supported: a prime field Z/p with p < 2^31 and
// the rationals (GMP).  Both expose the same small interface so that the
// accumulator and everything above it can be written once as templates.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lcsq::exactla {

/// Raised when vectors of different ambient dimension are combined.
class DimensionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t n);

/// Draws a uniformly random prime from [lo, hi).
std::uint32_t random_prime(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi);

/// Two distinct primes in (2^30, 2^31) derived from `seed`.
std::pair<std::uint32_t, std::uint32_t> default_primes(std::uint64_t seed);

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type from_int(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const;

  /// dst[j] -= c * src[j] for every j in cols.
  void sub_scaled(value_type* dst, const value_type* src, value_type c,
                  std::span<const std::uint32_t> cols) const {
    // Shoup multiplication: c is fixed across the loop.
    const std::uint64_t cs = (static_cast<std::uint64_t>(c) << 32) / p_;
    const std::uint64_t p = p_;
    for (auto j : cols) {
      const std::uint64_t x = src[j];
      if (x == 0) continue;
      const std::uint64_t q = (x * cs) >> 32;
      std::uint64_t t = x * c - q * p;
      if (t >= p) t -= p;
      const std::uint32_t d = dst[j];
      dst[j] = static_cast<std::uint32_t>(d >= t ? d - t : d + p - t);
    }
  }
  void scale(value_type* dst, value_type c, std::span<const std::uint32_t> cols) const {
    for (auto j : cols) dst[j] = mul(dst[j], c);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = mpq_class;

  std::string name() const { return "QQ"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  void sub_scaled(value_type* dst, const value_type* src, const value_type& c,
                  std::span<const std::uint32_t> cols) const {
    for (auto j : cols)
      if (sgn(src[j]) != 0) dst[j] -= c * src[j];
  }
  void scale(value_type* dst, const value_type& c, std::span<const std::uint32_t> cols) const {
    for (auto j : cols) dst[j] *= c;
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Sparse vector over a field: strictly increasing indices, no stored zeros.
template <class F>
class SparseVec {
 public:
  using value_type = typename F::value_type;
  struct Entry {
    std::uint32_t index;
    value_type value;
  };

  SparseVec() = default;
  explicit SparseVec(std::size_t dim) : dim_(dim) {}

  /// Builds from arbitrary (index, value) pairs: sorts, sums duplicates and
  /// drops zeros.
  static SparseVec from_pairs(const F& field, std::size_t dim, std::vector<Entry> pairs);

  /// Builds from small integer coefficients.
  static SparseVec from_ints(const F& field, std::size_t dim,
                             const std::vector<std::pair<std::uint32_t, std::int64_t>>& pairs) {
    std::vector<Entry> e;
    e.reserve(pairs.size());
    for (auto [i, v] : pairs) e.push_back({i, field.from_int(v)});
    return from_pairs(field, dim, std::move(e));
  }

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Coefficient at `index` (zero if absent).
  value_type at(const F& field, std::uint32_t index) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

template <class F>
SparseVec<F> SparseVec<F>::from_pairs(const F& field, std::size_t dim, std::vector<Entry> pairs) {
  SparseVec out(dim);
  std::sort(pairs.begin(), pairs.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (auto& e : pairs) {
    if (e.index >= dim) throw DimensionError("sparse entry index out of range");
    if (!out.entries_.empty() && out.entries_.back().index == e.index) {
      out.entries_.back().value = field.add(out.entries_.back().value, e.value);
    } else {
      if (!out.entries_.empty() && field.is_zero(out.entries_.back().value))
        out.entries_.pop_back();
      out.entries_.push_back(std::move(e));
    }
  }
  if (!out.entries_.empty() && field.is_zero(out.entries_.back().value)) out.entries_.pop_back();
  return out;
}

template <class F>
typename SparseVec<F>::value_type SparseVec<F>::at(const F& field, std::uint32_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return field.zero();
}

/// Incremental reduced row-echelon form.
///
/// Rows are kept fully reduced: each stored row has a 1 at its pivot column
/// and zeros at every other pivot column.  Reducing an incoming vector
/// therefore touches only the pivot columns present in its support, and each
/// row operation only the non-pivot ("free") columns.
template <class F>
class EchelonAccumulator {
 public:
  using value_type = typename F::value_type;

  EchelonAccumulator(F field, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }
  const F& field() const { return field_; }

  /// Adds v to the span.  Returns true iff the rank increased.
  bool insert(const SparseVec<F>& v);

  /// True iff v lies in the current span.  Does not modify the accumulator.
  bool is_member(const SparseVec<F>& v) const;

 private:
  // Reduces v into `work` (dense, size dim_).  Returns the lowest free column
  // holding a nonzero residue, or dim_ if the residue is zero.
  std::size_t reduce(const SparseVec<F>& v, std::vector<value_type>& work) const;

  F field_;
  std::size_t dim_;
  std::vector<std::int32_t> pivot_row_;  // column -> row, -1 if free
  std::vector<std::uint32_t> free_cols_;
  std::vector<std::vector<value_type>> rows_;
  std::vector<value_type> work_;
};

template <class F>
EchelonAccumulator<F>::EchelonAccumulator(F field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), pivot_row_(dim, -1) {
  free_cols_.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) free_cols_[j] = static_cast<std::uint32_t>(j);
}

template <class F>
std::size_t EchelonAccumulator<F>::reduce(const SparseVec<F>& v,
                                          std::vector<value_type>& work) const {
  if (v.dim() != dim_)
    throw DimensionError("vector of dimension " + std::to_string(v.dim()) +
                         " inserted into accumulator of dimension " + std::to_string(dim_));
  work.assign(dim_, field_.zero());
  for (const auto& e : v.entries()) work[e.index] = e.value;
  // Pivot-column entries of `work` are never changed by subtracting other
  // (fully reduced) rows, so one pass over the original support suffices.
  for (const auto& e : v.entries()) {
    const auto r = pivot_row_[e.index];
    if (r < 0) continue;
    const value_type c = work[e.index];
    field_.sub_scaled(work.data(), rows_[r].data(), c, free_cols_);
    work[e.index] = field_.zero();
  }
  for (auto j : free_cols_)
    if (!field_.is_zero(work[j])) return j;
  return dim_;
}

template <class F>
bool EchelonAccumulator<F>::insert(const SparseVec<F>& v) {
  if (full()) {
    if (v.dim() != dim_) throw DimensionError("dimension mismatch");
    return false;
  }
  const std::size_t col = reduce(v, work_);
  if (col == dim_) return false;

  const value_type s = field_.inv(work_[col]);
  field_.scale(work_.data(), s, free_cols_);

  std::vector<std::uint32_t> others;
  others.reserve(free_cols_.size() - 1);
  for (auto j : free_cols_)
    if (j != col) others.push_back(j);

  for (auto& row : rows_) {
    if (field_.is_zero(row[col])) continue;
    const value_type c = row[col];
    field_.sub_scaled(row.data(), work_.data(), c, others);
    row[col] = field_.zero();
  }
  pivot_row_[col] = static_cast<std::int32_t>(rows_.size());
  free_cols_ = std::move(others);
  rows_.push_back(std::move(work_));
  work_ = {};
  return true;
}

template <class F>
bool EchelonAccumulator<F>::is_member(const SparseVec<F>& v) const {
  std::vector<value_type> work;
  return reduce(v, work) == dim_;
}

/// Dimension of the span of `rows`, all of ambient dimension `dim`.
template <class F>
std::size_t rank(const F& field, std::size_t dim, std::span<const SparseVec<F>> rows) {
  EchelonAccumulator<F> acc(field, dim);
  for (const auto& r : rows) {
    if (r.dim() != dim) throw DimensionError("rows of mixed dimension");
    acc.insert(r);
  }
  return acc.rank();
}

}  // namespace lcsq::exactla
