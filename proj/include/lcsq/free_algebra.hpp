#pragma once

// Words in n noncommuting generators, the multigraded components of the free
// algebra, and homogeneous elements over an exact field.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcsq/exactla.hpp"

namespace lcsq {

/// Zero-based generator index: letter k stands for x_{k+1}.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Exponent vector of a monomial in n variables.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> exps);

  static MultiDegree zero(int n) { return MultiDegree(std::vector<int>(n, 0)); }
  static MultiDegree unit(int n, int j);
  static MultiDegree of_word(std::span<const Letter> w, int n);

  int n() const { return static_cast<int>(exps_.size()); }
  int total() const { return total_; }
  int operator[](int j) const { return exps_[j]; }
  const std::vector<int>& exps() const { return exps_; }

  /// Componentwise <=.
  bool fits_in(const MultiDegree& other) const;
  bool is_sorted_desc() const;
  MultiDegree sorted_desc() const;

  MultiDegree operator+(const MultiDegree& o) const;
  /// Componentwise difference; throws if any coordinate goes negative.
  MultiDegree operator-(const MultiDegree& o) const;

  std::string str() const;

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree& a, const MultiDegree& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<int> exps_;
  int total_ = 0;
};

/// Number of words of multidegree d: total! / prod(exps!).
std::uint64_t component_dim(const MultiDegree& d);

/// All multidegrees in n variables with the given total, in lexicographically
/// decreasing order.
std::vector<MultiDegree> multidegrees_of_total(int n, int total);

/// All e with 0 <= e <= d componentwise (including 0 and d).
std::vector<MultiDegree> sub_degrees(const MultiDegree& d);

/// Words of a fixed multidegree, enumerated lexicographically (x1 < x2 < ...).
class ComponentBasis {
 public:
  explicit ComponentBasis(MultiDegree d);

  const MultiDegree& degree() const { return degree_; }
  std::size_t size() const { return size_; }
  int length() const { return degree_.total(); }

  std::span<const Letter> word(std::size_t idx) const {
    return {letters_.data() + idx * static_cast<std::size_t>(length()),
            static_cast<std::size_t>(length())};
  }

  /// Index of the first word of this component that starts with `prefix`.
  /// For a full-length word this is its index.
  std::size_t prefix_offset(std::span<const Letter> prefix) const;
  std::size_t index_of(std::span<const Letter> w) const;

 private:
  MultiDegree degree_;
  std::size_t size_;
  std::vector<Letter> letters_;
};

/// Process-wide cache of component bases.  References stay valid for the
/// lifetime of the program.
const ComponentBasis& component(const MultiDegree& d);

std::string word_str(std::span<const Letter> w);

/// Homogeneous element: a sparse coefficient vector over one component.
template <class F>
class AlgElement {
 public:
  AlgElement(const ComponentBasis& basis, exactla::SparseVec<F> coeffs)
      : basis_(&basis), coeffs_(std::move(coeffs)) {
    if (coeffs_.dim() != basis.size()) throw exactla::DimensionError("element/component mismatch");
  }

  static AlgElement zero(const MultiDegree& d) {
    const auto& b = component(d);
    return AlgElement(b, exactla::SparseVec<F>(b.size()));
  }
  static AlgElement word(const F& field, std::span<const Letter> w, int n) {
    const auto& b = component(MultiDegree::of_word(w, n));
    return AlgElement(b, exactla::SparseVec<F>::from_pairs(
                             field, b.size(), {{static_cast<std::uint32_t>(b.index_of(w)), field.one()}}));
  }
  static AlgElement unit(const F& field, int n) { return word(field, {}, n); }

  const ComponentBasis& basis() const { return *basis_; }
  const MultiDegree& degree() const { return basis_->degree(); }
  const exactla::SparseVec<F>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.is_zero(); }

  std::string str(const F& field) const;

 private:
  const ComponentBasis* basis_;
  exactla::SparseVec<F> coeffs_;
};

template <class F>
AlgElement<F> multiply(const F& field, const AlgElement<F>& a, const AlgElement<F>& b) {
  if (a.degree().n() != b.degree().n()) throw exactla::DimensionError("elements over different n");
  const auto& target = component(a.degree() + b.degree());
  using Entry = typename exactla::SparseVec<F>::Entry;
  std::vector<Entry> out;
  out.reserve(a.coeffs().nnz() * b.coeffs().nnz());
  // Words of a equal length concatenate in lexicographic order, so the output
  // indices are produced sorted and distinct.
  for (const auto& ea : a.coeffs().entries()) {
    const auto off = target.prefix_offset(a.basis().word(ea.index));
    for (const auto& eb : b.coeffs().entries())
      out.push_back({static_cast<std::uint32_t>(off + eb.index), field.mul(ea.value, eb.value)});
  }
  return AlgElement<F>(target, exactla::SparseVec<F>::from_pairs(field, target.size(), std::move(out)));
}

/// a + c * b, both in the same component.
template <class F>
AlgElement<F> add_scaled(const F& field, const AlgElement<F>& a, const typename F::value_type& c,
                         const AlgElement<F>& b) {
  if (!(a.degree() == b.degree())) throw exactla::DimensionError("adding elements of different degree");
  using Entry = typename exactla::SparseVec<F>::Entry;
  std::vector<Entry> out(a.coeffs().entries().begin(), a.coeffs().entries().end());
  for (const auto& e : b.coeffs().entries()) out.push_back({e.index, field.mul(c, e.value)});
  return AlgElement<F>(a.basis(),
                       exactla::SparseVec<F>::from_pairs(field, a.basis().size(), std::move(out)));
}

template <class F>
AlgElement<F> add(const F& field, const AlgElement<F>& a, const AlgElement<F>& b) {
  return add_scaled(field, a, field.one(), b);
}

template <class F>
AlgElement<F> sub(const F& field, const AlgElement<F>& a, const AlgElement<F>& b) {
  return add_scaled(field, a, field.neg(field.one()), b);
}

template <class F>
AlgElement<F> commutator(const F& field, const AlgElement<F>& a, const AlgElement<F>& b) {
  return sub(field, multiply(field, a, b), multiply(field, b, a));
}

template <class F>
std::string AlgElement<F>::str(const F& field) const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& e : coeffs_.entries()) {
    std::string c;
    if constexpr (std::is_same_v<F, exactla::RationalField>) {
      c = e.value.get_str();
    } else {
      c = std::to_string(e.value);
    }
    if (!s.empty()) s += " + ";
    s += c + "*" + word_str(basis_->word(e.index));
  }
  (void)field;
  return s;
}

}  // namespace lcsq
