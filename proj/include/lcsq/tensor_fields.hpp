#pragma once

// Hilbert series of the irreducible tensor-field modules F_lambda over the
// Lie algebra of polynomial vector fields, written as numerator / prod(1 - t_i).

#include <vector>

#include "lcsq/series.hpp"
#include "lcsq/symmetric.hpp"

namespace lcsq::fields {

/// generic: F_lambda is the full tensor-field module, numerator s_lambda.
/// column: lambda = (1^k) with k < n, F_lambda = closed k-forms.
enum class ModuleKind { generic, column };

struct ModuleLabel {
  sym::Partition lambda;
  int n;
  ModuleKind kind;
  int k;  // number of ones when kind == column

  static ModuleLabel of(const sym::Partition& lambda, int n);
};

/// p with h_{F_lambda} = p / prod(1 - t_i).
///
///   generic            p = s_lambda
///   column, 0<=k<n     p = sum_{j=k..n} (-1)^{j-k} e_j
///
/// The column formula comes from exactness of the polynomial de Rham complex
/// with deg dx_i = deg x_i: h(closed k-forms) = h(Omega^{k-1}) - h(closed
/// (k-1)-forms), starting from h(closed 0-forms) = 1.  For k = 0 it gives
/// prod(1 - t_i), i.e. F_0 is the constants.
sym::SymPoly numerator(const sym::Partition& lambda, int n);

/// numerator(lambda, n) / prod(1 - t_i), expanded to total degree maxdeg.
TruncatedSeries hilbert_F(const sym::Partition& lambda, int n, int maxdeg);

/// Series of p / prod(1 - t_i) for an arbitrary symmetric numerator.
TruncatedSeries divide_by_torus(const sym::SymPoly& p, int maxdeg);

/// Largest |lambda| that can occur in the Jordan-Holder series of N_m(A_n):
/// 2m-2 for m odd, otherwise 2m-2 + 2*floor((n-2)/2).
int lambda_bound(int m, int n);

/// Partitions with at most n parts and norm <= max_norm, by ascending norm
/// and lexicographically decreasing within a norm.
std::vector<sym::Partition> enumerate_labels(int n, int max_norm);

}  // namespace lcsq::fields
