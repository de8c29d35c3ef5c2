#pragma once

// Partitions and symmetric polynomials in n variables, stored in the
// monomial-symmetric basis m_mu.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcsq::sym {

/// Weakly decreasing sequence of positive parts (zeros are stripped).
class Partition {
 public:
  Partition() = default;
  /// Accepts trailing zeros; throws if the parts are not weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int norm() const;
  int operator[](int j) const { return j < length() ? parts_[j] : 0; }

  /// Parts padded with zeros to length n (n >= length()).
  std::vector<int> padded(int n) const;
  /// "(2,1,0)" style, padded to n.
  std::string str(int n) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// mu <= lambda in dominance order (equal norms required).
bool dominated_by(const Partition& mu, const Partition& lambda);

/// Partitions of k with at most max_len parts, lexicographically decreasing
/// (a linear extension of dominance, largest first).
std::vector<Partition> partitions_of(int k, int max_len);

/// Symmetric polynomial sum_mu c_mu m_mu(t_1..t_n) with integer coefficients.
class SymPoly {
 public:
  explicit SymPoly(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SymPoly needs n >= 1");
  }
  static SymPoly one(int n);
  static SymPoly monomial(const Partition& mu, int n, std::int64_t c = 1);

  int n() const { return n_; }
  const std::map<Partition, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(const Partition& mu) const;

  void add(const Partition& mu, std::int64_t c);
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly operator*(std::int64_t c) const;

  /// Homogeneous part of total degree k.
  SymPoly part(int k) const;
  bool is_homogeneous() const;
  /// Lowest / highest total degree among the terms; -1 for the zero poly.
  int min_degree() const;
  int max_degree() const;

  /// Coefficient of t^alpha for an arbitrary exponent vector of length n.
  std::int64_t monomial_coeff(const std::vector<int>& alpha) const;
  /// Full expansion into exponent vectors.
  std::map<std::vector<int>, std::int64_t> expand() const;

  std::string str() const;

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  int n_;
  std::map<Partition, std::int64_t> terms_;
};

SymPoly multiply(const SymPoly& a, const SymPoly& b);

/// e_k(t_1..t_n); zero for k > n.
SymPoly elementary(int k, int n);
/// h_k(t_1..t_n), the complete homogeneous polynomial.
SymPoly complete(int k, int n);

/// s_lambda(t_1..t_n) via the Jacobi-Trudi determinant in the h_k; zero if
/// lambda has more than n parts.  Results are memoized.
SymPoly schur(const Partition& lambda, int n);

/// Coefficients c_lambda with p = sum c_lambda s_lambda.  p must be homogeneous.
std::map<Partition, std::int64_t> expand_in_schur(const SymPoly& p);

/// sum c_lambda s_lambda.
SymPoly from_schur(const std::map<Partition, std::int64_t>& coeffs, int n);

/// All distinct rearrangements of lambda padded to n.
std::vector<std::vector<int>> orbit(const Partition& lambda, int n);

}  // namespace lcsq::sym
