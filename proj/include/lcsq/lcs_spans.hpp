#pragma once

// Lower central series of the free algebra: spanning sets of (L_i)_d and
// (M_i)_d, their dimensions, the quotients N_i = M_i / M_{i+1}, and the
// membership checks for the structural identities relating them.
//
// Two routes compute the same spans:
//
//  * the generator streams (for_each_lie_generator, for_each_ideal_generator)
//    enumerate left-normed brackets of words and their prefixes directly from
//    the definitions;
//  * Tower builds bases degree by degree, reusing lower-degree bases:
//      (L_i)_d = span{ [w, b] : w a word of degree e, b in basis (L_{i-1})_{d-e} }
//      (M_i)_d = (L_i)_d + sum_j x_j (M_i)_{d-e_j}
//    Only one multidegree per orbit of the symmetric group is computed; other
//    orderings are obtained by relabelling letters.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lcsq/exactla.hpp"
#include "lcsq/free_algebra.hpp"
#include "lcsq/series.hpp"

namespace lcsq::lcs {

/// The two default primes disagreed on some rank.
class PrimeDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rank computation produced an impossible value (e.g. negative quotient).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Generator streams

namespace detail {

inline bool word_less(std::span<const Letter> a, std::span<const Letter> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <class Fn>
void for_each_word_tuple(const MultiDegree& left, int parts, std::vector<std::span<const Letter>>& words,
                         Fn& fn) {
  if (parts == 1) {
    if (left.total() == 0) return;
    const auto& comp = component(left);
    for (std::size_t k = 0; k < comp.size(); ++k) {
      words.push_back(comp.word(k));
      fn(words);
      words.pop_back();
    }
    return;
  }
  for (const auto& e : sub_degrees(left)) {
    // Each remaining part needs at least one letter.
    if (e.total() == 0 || left.total() - e.total() < parts - 1) continue;
    const auto& comp = component(e);
    const auto rest = left - e;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      words.push_back(comp.word(k));
      for_each_word_tuple(rest, parts - 1, words, fn);
      words.pop_back();
    }
  }
}

}  // namespace detail

/// Left-normed bracket [w_1,[w_2,...[w_{k-1},w_k]...]] of words.
template <class F>
AlgElement<F> left_normed_bracket(const F& field, std::span<const std::span<const Letter>> words, int n) {
  if (words.empty()) throw std::invalid_argument("bracket of no words");
  auto acc = AlgElement<F>::word(field, words.back(), n);
  for (std::size_t j = words.size() - 1; j-- > 0;)
    acc = commutator(field, AlgElement<F>::word(field, words[j], n), acc);
  return acc;
}

/// Calls fn(const AlgElement<F>&) for a spanning set of (L_i)_d: all
/// left-normed brackets of i nonempty words with total multidegree d.
/// Brackets whose two innermost words coincide are skipped, and of the pair
/// [.., [u, v]] / [.., [v, u]] only the one with u < v is produced.
template <class F, class Fn>
void for_each_lie_generator(const F& field, int i, const MultiDegree& d, Fn&& fn) {
  if (i < 1) throw std::invalid_argument("Lie index must be >= 1");
  const int n = d.n();
  if (i == 1) {
    const auto& comp = component(d);
    for (std::size_t k = 0; k < comp.size(); ++k) fn(AlgElement<F>::word(field, comp.word(k), n));
    return;
  }
  if (d.total() < i) return;
  std::vector<std::span<const Letter>> words;
  auto visit = [&](const std::vector<std::span<const Letter>>& ws) {
    const auto& u = ws[ws.size() - 2];
    const auto& v = ws.back();
    if (!detail::word_less(u, v)) return;
    fn(left_normed_bracket(field, std::span(ws), n));
  };
  detail::for_each_word_tuple(d, i, words, visit);
}

/// Calls fn for a spanning set of (M_i)_d: prefix * g for every word prefix
/// and every Lie generator g of the complementary degree.  With `reduced`,
/// prefixes are restricted to degree <= 1; the result then spans a subspace W
/// with W + (M_{i+1})_d = (M_i)_d.
template <class F, class Fn>
void for_each_ideal_generator(const F& field, int i, const MultiDegree& d, bool reduced, Fn&& fn) {
  const int n = d.n();
  for (const auto& p : sub_degrees(d)) {
    if (reduced && p.total() > 1) continue;
    const auto rest = d - p;
    if (i >= 2 && rest.total() < i) continue;
    const auto& pcomp = component(p);
    for (std::size_t k = 0; k < pcomp.size(); ++k) {
      const auto prefix = AlgElement<F>::word(field, pcomp.word(k), n);
      for_each_lie_generator(field, i, rest, [&](const AlgElement<F>& g) {
        fn(multiply(field, prefix, g));
      });
    }
  }
}

/// dim (M_i)_d via the unreduced generator stream.
template <class F>
std::size_t dim_M_streamed(const F& field, int i, const MultiDegree& d) {
  exactla::EchelonAccumulator<F> acc(field, component(d).size());
  for_each_ideal_generator(field, i, d, false, [&](const AlgElement<F>& g) {
    if (!acc.full()) acc.insert(g.coeffs());
  });
  return acc.rank();
}

/// dim (L_i)_d via the left-normed bracket stream.
template <class F>
std::size_t dim_L_streamed(const F& field, int i, const MultiDegree& d) {
  exactla::EchelonAccumulator<F> acc(field, component(d).size());
  for_each_lie_generator(field, i, d, [&](const AlgElement<F>& g) {
    if (!acc.full()) acc.insert(g.coeffs());
  });
  return acc.rank();
}

// ---------------------------------------------------------------------------
// Recursive basis tower

template <class F>
struct SpanBasis {
  MultiDegree degree;
  std::vector<exactla::SparseVec<F>> vectors;
};

/// Runs fn(k) for k in [0, count) on up to `threads` workers.  The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

/// Sorted (weakly decreasing) representatives of all multidegrees of the
/// given total in n variables.
std::vector<MultiDegree> orbit_representatives(int n, int total);

/// Letter relabelling taking words of `d.sorted_desc()` to words of `d`.
std::vector<Letter> relabelling_to(const MultiDegree& d);

template <class F>
class Tower {
 public:
  using Basis = SpanBasis<F>;
  using BasisPtr = std::shared_ptr<const Basis>;

  Tower(F field, int n) : field_(std::move(field)), n_(n) {
    if (n < 1) throw std::invalid_argument("Tower needs n >= 1");
  }

  const F& field() const { return field_; }
  int n() const { return n_; }

  /// Basis of (L_i)_d (as a list of independent generator vectors).
  BasisPtr lie(int i, const MultiDegree& d);
  /// Basis of (M_i)_d.
  BasisPtr ideal(int i, const MultiDegree& d);

  std::size_t dim_L(int i, const MultiDegree& d) { return lie(i, d)->vectors.size(); }
  std::size_t dim_M(int i, const MultiDegree& d) {
    if (i == 1) return component(d).size();
    return ideal(i, d)->vectors.size();
  }

  /// dim (N_i)_d, computed as the number of degree-<=1-prefixed Lie
  /// generators of M_i that stay independent modulo (M_{i+1})_d.
  std::size_t dim_N(int i, const MultiDegree& d);

  /// Every rank this tower has computed, keyed by a readable label.
  std::map<std::string, std::size_t> rank_log() const {
    std::lock_guard lock(mu_);
    return log_;
  }

 private:
  struct Key {
    char kind;
    int i;
    MultiDegree d;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };

  BasisPtr lookup(const Key& k) const {
    std::lock_guard lock(mu_);
    auto it = cache_.find(k);
    return it == cache_.end() ? nullptr : it->second;
  }
  BasisPtr store(const Key& k, Basis b) {
    auto ptr = std::make_shared<const Basis>(std::move(b));
    std::lock_guard lock(mu_);
    log_[std::string(1, k.kind) + std::to_string(k.i) + k.d.str()] = ptr->vectors.size();
    return cache_.try_emplace(k, ptr).first->second;
  }

  Basis permuted(const Basis& b, const MultiDegree& target) const;
  exactla::SparseVec<F> left_letter(Letter j, const exactla::SparseVec<F>& v,
                                    const ComponentBasis& target) const;

  Basis build_lie(int i, const MultiDegree& rep);
  Basis build_ideal(int i, const MultiDegree& rep, exactla::EchelonAccumulator<F>& acc);

  F field_;
  int n_;
  mutable std::mutex mu_;
  std::map<Key, BasisPtr> cache_;
  std::map<Key, std::size_t> quotient_;
  std::map<std::string, std::size_t> log_;
};

template <class F>
typename Tower<F>::Basis Tower<F>::permuted(const Basis& b, const MultiDegree& target) const {
  const auto sigma = relabelling_to(target);
  const auto& src = component(b.degree);
  const auto& dst = component(target);
  std::vector<std::uint32_t> map(src.size());
  Word w(static_cast<std::size_t>(src.length()));
  for (std::size_t k = 0; k < src.size(); ++k) {
    const auto s = src.word(k);
    for (std::size_t p = 0; p < w.size(); ++p) w[p] = sigma[s[p]];
    map[k] = static_cast<std::uint32_t>(dst.index_of(w));
  }
  Basis out{target, {}};
  out.vectors.reserve(b.vectors.size());
  using Entry = typename exactla::SparseVec<F>::Entry;
  for (const auto& v : b.vectors) {
    std::vector<Entry> e;
    e.reserve(v.nnz());
    for (const auto& x : v.entries()) e.push_back({map[x.index], x.value});
    out.vectors.push_back(exactla::SparseVec<F>::from_pairs(field_, dst.size(), std::move(e)));
  }
  return out;
}

template <class F>
exactla::SparseVec<F> Tower<F>::left_letter(Letter j, const exactla::SparseVec<F>& v,
                                            const ComponentBasis& target) const {
  const Letter pre[1] = {j};
  const auto off = static_cast<std::uint32_t>(target.prefix_offset(pre));
  using Entry = typename exactla::SparseVec<F>::Entry;
  std::vector<Entry> e;
  e.reserve(v.nnz());
  for (const auto& x : v.entries()) e.push_back({off + x.index, x.value});
  return exactla::SparseVec<F>::from_pairs(field_, target.size(), std::move(e));
}

template <class F>
typename Tower<F>::BasisPtr Tower<F>::lie(int i, const MultiDegree& d) {
  if (i < 1) throw std::invalid_argument("Lie index must be >= 1");
  if (d.n() != n_) throw std::invalid_argument("multidegree has wrong number of variables");
  const Key key{'L', i, d};
  if (auto hit = lookup(key)) return hit;
  if (!d.is_sorted_desc()) {
    auto rep = lie(i, d.sorted_desc());
    return store(key, permuted(*rep, d));
  }
  return store(key, build_lie(i, d));
}

template <class F>
typename Tower<F>::BasisPtr Tower<F>::ideal(int i, const MultiDegree& d) {
  if (i < 2) throw std::invalid_argument("ideal index must be >= 2");
  if (d.n() != n_) throw std::invalid_argument("multidegree has wrong number of variables");
  const Key key{'M', i, d};
  if (auto hit = lookup(key)) return hit;
  if (!d.is_sorted_desc()) {
    auto rep = ideal(i, d.sorted_desc());
    return store(key, permuted(*rep, d));
  }
  exactla::EchelonAccumulator<F> acc(field_, component(d).size());
  return store(key, build_ideal(i, d, acc));
}

template <class F>
typename Tower<F>::Basis Tower<F>::build_lie(int i, const MultiDegree& rep) {
  const auto& target = component(rep);
  Basis out{rep, {}};
  using Entry = typename exactla::SparseVec<F>::Entry;
  const auto one = field_.one();
  const auto minus_one = field_.neg(one);

  if (i == 1) {
    for (std::size_t k = 0; k < target.size(); ++k)
      out.vectors.push_back(exactla::SparseVec<F>::from_pairs(
          field_, target.size(), {{static_cast<std::uint32_t>(k), one}}));
    return out;
  }
  if (rep.total() < i) return out;

  exactla::EchelonAccumulator<F> acc(field_, target.size());
  auto offer = [&](std::vector<Entry>&& entries) {
    auto v = exactla::SparseVec<F>::from_pairs(field_, target.size(), std::move(entries));
    if (acc.insert(v)) out.vectors.push_back(std::move(v));
  };

  for (const auto& e : sub_degrees(rep)) {
    if (acc.full()) break;
    const auto rest = rep - e;
    if (e.total() == 0 || rest.total() < i - 1) continue;
    if (i == 2 && rest < e) continue;
    const auto& wcomp = component(e);
    const auto& rcomp = component(rest);
    // target index of w ++ u  =  off(w) + index(u)
    std::vector<std::uint32_t> left_off(wcomp.size()), right_off(rcomp.size());
    for (std::size_t k = 0; k < wcomp.size(); ++k)
      left_off[k] = static_cast<std::uint32_t>(target.prefix_offset(wcomp.word(k)));
    for (std::size_t k = 0; k < rcomp.size(); ++k)
      right_off[k] = static_cast<std::uint32_t>(target.prefix_offset(rcomp.word(k)));

    if (i == 2) {
      // [w, u] for words w, u; keep one of each antisymmetric pair.
      for (std::size_t a = 0; a < wcomp.size(); ++a) {
        for (std::size_t b = (e == rest ? a + 1 : 0); b < rcomp.size(); ++b) {
          if (acc.full()) break;
          offer({{static_cast<std::uint32_t>(left_off[a] + b), one},
                 {static_cast<std::uint32_t>(right_off[b] + a), minus_one}});
        }
      }
      continue;
    }

    const auto inner = lie(i - 1, rest);
    for (std::size_t a = 0; a < wcomp.size() && !acc.full(); ++a) {
      for (const auto& b : inner->vectors) {
        if (acc.full()) break;
        std::vector<Entry> entries;
        entries.reserve(2 * b.nnz());
        for (const auto& x : b.entries()) {
          entries.push_back({static_cast<std::uint32_t>(left_off[a] + x.index), x.value});
          entries.push_back({static_cast<std::uint32_t>(right_off[x.index] + a), field_.neg(x.value)});
        }
        offer(std::move(entries));
      }
    }
  }
  return out;
}

template <class F>
typename Tower<F>::Basis Tower<F>::build_ideal(int i, const MultiDegree& rep,
                                               exactla::EchelonAccumulator<F>& acc) {
  const auto& target = component(rep);
  Basis out{rep, {}};
  if (rep.total() < i) return out;
  for (const auto& v : lie(i, rep)->vectors)
    if (acc.insert(v)) out.vectors.push_back(v);
  for (int j = 0; j < n_ && !acc.full(); ++j) {
    if (rep[j] == 0) continue;
    const auto lower = rep - MultiDegree::unit(n_, j);
    if (lower.total() < i) continue;
    for (const auto& v : ideal(i, lower)->vectors) {
      if (acc.full()) break;
      auto shifted = left_letter(static_cast<Letter>(j), v, target);
      if (acc.insert(shifted)) out.vectors.push_back(std::move(shifted));
    }
  }
  return out;
}

template <class F>
std::size_t Tower<F>::dim_N(int i, const MultiDegree& d) {
  if (i < 2) throw std::invalid_argument("quotient index must be >= 2");
  const auto rep = d.sorted_desc();
  const Key key{'N', i, rep};
  {
    std::lock_guard lock(mu_);
    auto it = quotient_.find(key);
    if (it != quotient_.end()) return it->second;
  }
  const auto& target = component(rep);
  exactla::EchelonAccumulator<F> acc(field_, target.size());
  // Seed with (M_{i+1})_d, building it in this accumulator when not cached.
  const Key mkey{'M', i + 1, rep};
  if (auto hit = lookup(mkey)) {
    for (const auto& v : hit->vectors) acc.insert(v);
  } else {
    store(mkey, build_ideal(i + 1, rep, acc));
  }
  const auto base = acc.rank();
  if (rep.total() >= i) {
    for (const auto& v : lie(i, rep)->vectors) acc.insert(v);
    for (int j = 0; j < n_ && !acc.full(); ++j) {
      if (rep[j] == 0) continue;
      const auto lower = rep - MultiDegree::unit(n_, j);
      if (lower.total() < i) continue;
      for (const auto& v : lie(i, lower)->vectors) {
        if (acc.full()) break;
        acc.insert(left_letter(static_cast<Letter>(j), v, target));
      }
    }
  }
  const auto result = acc.rank() - base;
  std::lock_guard lock(mu_);
  quotient_[key] = result;
  log_[std::string("N") + std::to_string(i) + rep.str()] = result;
  return result;
}

// ---------------------------------------------------------------------------
// Scalar-mode facade

/// Which exact field(s) rank computations run over.
struct ScalarMode {
  bool exact = false;
  std::uint32_t p1 = 0;
  std::uint32_t p2 = 0;

  static ScalarMode rationals() { return {true, 0, 0}; }
  static ScalarMode two_primes(std::uint32_t p, std::uint32_t q) { return {false, p, q}; }
  static ScalarMode from_seed(std::uint64_t seed) {
    auto [p, q] = exactla::default_primes(seed);
    return two_primes(p, q);
  }
  std::string str() const;
};

/// Dimension queries for one n, answered over either the rationals or two
/// independent primes that must agree on every rank.
class Engine {
 public:
  Engine(int n, ScalarMode mode, int threads = 1);

  int n() const { return n_; }
  const ScalarMode& mode() const { return mode_; }

  std::size_t dim_L(int i, const MultiDegree& d);
  std::size_t dim_M(int i, const MultiDegree& d);
  std::size_t dim_N(int i, const MultiDegree& d);

  /// Hilbert series of N_i up to total degree D.  One task per orbit
  /// representative, levels processed in increasing total degree.
  TruncatedSeries hilbert_N(int i, int maxdeg);

  /// Throws PrimeDisagreement if the two prime towers have diverged on any
  /// rank computed so far.  No-op in exact mode.
  void check_agreement() const;

 private:
  template <class Fn>
  std::size_t query(Fn&& fn, const std::string& what);

  int n_;
  ScalarMode mode_;
  int threads_;
  std::unique_ptr<Tower<exactla::PrimeField>> first_, second_;
  std::unique_ptr<Tower<exactla::RationalField>> exact_;
};

// ---------------------------------------------------------------------------
// Structural identities, checked as span memberships over a given field.

/// yx[a,b] - x[ya,b] - y[xa,b] + [xya,b] lies in A L_{i+1} for b in
/// L_{i-1}.  Membership is tested against the unreduced generator stream.
template <class F>
bool check_prefix_swap(const F& field, std::span<const Letter> x, std::span<const Letter> y,
                       std::span<const Letter> a, const AlgElement<F>& b, int i) {
  if (i < 2) throw std::invalid_argument("check_prefix_swap needs i >= 2");
  if (x.empty() || y.empty()) throw std::invalid_argument("x and y must have degree >= 1");
  const int n = b.degree().n();
  auto W = [&](std::span<const Letter> w) { return AlgElement<F>::word(field, w, n); };
  const auto ex = W(x), ey = W(y), ea = W(a);
  const auto yx = multiply(field, ey, ex);
  const auto ya = multiply(field, ey, ea);
  const auto xa = multiply(field, ex, ea);
  const auto xya = multiply(field, ex, ya);
  auto v = multiply(field, yx, commutator(field, ea, b));
  v = sub(field, v, multiply(field, ex, commutator(field, ya, b)));
  v = sub(field, v, multiply(field, ey, commutator(field, xa, b)));
  v = add(field, v, commutator(field, xya, b));
  if (v.is_zero()) return true;
  exactla::EchelonAccumulator<F> acc(field, v.basis().size());
  for_each_ideal_generator(field, i + 1, v.degree(), false, [&](const AlgElement<F>& g) {
    if (!acc.full()) acc.insert(g.coeffs());
  });
  return acc.is_member(v.coeffs());
}

/// Reduced (degree <= 1 prefix) and unreduced generators of M_i give the
/// same span modulo M_{i+1} at multidegree d.
template <class F>
bool check_linear_prefixes(const F& field, int i, const MultiDegree& d) {
  if (i < 2) throw std::invalid_argument("check_linear_prefixes needs i >= 2");
  const auto dim = component(d).size();
  exactla::EchelonAccumulator<F> reduced(field, dim), full(field, dim);
  for_each_ideal_generator(field, i + 1, d, false, [&](const AlgElement<F>& g) {
    if (!reduced.full()) reduced.insert(g.coeffs());
    if (!full.full()) full.insert(g.coeffs());
  });
  for_each_ideal_generator(field, i, d, true, [&](const AlgElement<F>& g) {
    if (!reduced.full()) reduced.insert(g.coeffs());
  });
  for_each_ideal_generator(field, i, d, false, [&](const AlgElement<F>& g) {
    if (!full.full()) full.insert(g.coeffs());
  });
  return reduced.rank() == full.rank();
}

/// M_j M_k is contained in M_{j+k-1} at multidegree d (j or k odd).
template <class F>
bool check_mjk(const F& field, int j, int k, const MultiDegree& d) {
  if (j < 2 || k < 2) throw std::invalid_argument("check_mjk needs j, k >= 2");
  if (j % 2 == 0 && k % 2 == 0) throw std::invalid_argument("check_mjk needs j or k odd");
  if (d.total() < j + k) return true;
  exactla::EchelonAccumulator<F> acc(field, component(d).size());
  for_each_ideal_generator(field, j + k - 1, d, false, [&](const AlgElement<F>& g) {
    if (!acc.full()) acc.insert(g.coeffs());
  });
  if (acc.full()) return true;
  for (const auto& d1 : sub_degrees(d)) {
    const auto d2 = d - d1;
    if (d1.total() < j || d2.total() < k) continue;
    std::vector<AlgElement<F>> left;
    for_each_ideal_generator(field, j, d1, false, [&](const AlgElement<F>& u) { left.push_back(u); });
    bool ok = true;
    for_each_ideal_generator(field, k, d2, false, [&](const AlgElement<F>& v) {
      if (!ok) return;
      for (const auto& u : left)
        if (!acc.is_member(multiply(field, u, v).coeffs())) {
          ok = false;
          return;
        }
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace lcsq::lcs
