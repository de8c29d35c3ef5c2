#include <doctest.h>

#include <random>

#include "lcsq/exactla.hpp"
#include "oracles.hpp"

using namespace lcsq::exactla;

namespace {

template <class F>
SparseVec<F> vec(const F& f, std::vector<std::int64_t> xs) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> p;
  for (std::size_t j = 0; j < xs.size(); ++j) p.emplace_back(static_cast<std::uint32_t>(j), xs[j]);
  return SparseVec<F>::from_ints(f, xs.size(), p);
}

const PrimeField big{2147483647u};

}  // namespace

TEST_CASE("insert examples") {
  RationalField q;
  EchelonAccumulator<RationalField> acc(q, 2);
  CHECK(acc.insert(vec(q, {1, 0})));
  CHECK(acc.rank() == 1);

  EchelonAccumulator<RationalField> b(q, 2);
  b.insert(vec(q, {1, 2}));
  CHECK_FALSE(b.insert(vec(q, {2, 4})));

  PrimeField p101(101);
  EchelonAccumulator<PrimeField> c(p101, 2);
  CHECK(c.insert(vec(p101, {1, 2})));
  CHECK(c.insert(vec(p101, {0, 1})));
  CHECK_FALSE(c.insert(vec(p101, {3, 7})));
  CHECK(c.full());
}

TEST_CASE("dimension mismatch is a structural error") {
  RationalField q;
  EchelonAccumulator<RationalField> acc(q, 2);
  CHECK_THROWS_AS(acc.insert(vec(q, {1, 0, 0})), DimensionError);
}

TEST_CASE("rank examples") {
  RationalField q;
  std::vector<SparseVec<RationalField>> none;
  CHECK(rank(q, 2, std::span<const SparseVec<RationalField>>(none)) == 0);
  std::vector rows{vec(q, {1, 2}), vec(q, {2, 4}), vec(q, {0, 1})};
  CHECK(rank(q, 2, std::span<const SparseVec<RationalField>>(rows)) == 2);
  std::vector tri{vec(big, {1, 1, 0}), vec(big, {0, 1, 1}), vec(big, {1, 0, -1})};
  CHECK(rank(big, 3, std::span<const SparseVec<PrimeField>>(tri)) == 2);
}

TEST_CASE("is_member examples") {
  RationalField q;
  EchelonAccumulator<RationalField> acc(q, 2);
  CHECK(acc.is_member(vec(q, {0, 0})));
  acc.insert(vec(q, {1, 1}));
  CHECK(acc.is_member(vec(q, {2, 2})));
  CHECK_FALSE(acc.is_member(vec(q, {1, 2})));
  CHECK(acc.rank() == 1);
}

TEST_CASE("from_pairs merges duplicates and drops zeros") {
  PrimeField p(7);
  auto v = SparseVec<PrimeField>::from_ints(p, 5, {{3, 4}, {1, 2}, {3, 3}, {0, 7}});
  CHECK(v.nnz() == 1);
  CHECK(v.at(p, 1) == 2);
  CHECK(v.at(p, 3) == 0);
}

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ull));
  const auto [p, q] = default_primes(1);
  CHECK(p != q);
  for (auto r : {p, q}) {
    CHECK(r > (1u << 30));
    CHECK(r < (1u << 31));
    CHECK(is_prime(r));
  }
  CHECK(default_primes(1) == default_primes(1));
  PrimeField f(p);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = static_cast<std::uint32_t>(rng() % (p - 1) + 1);
    CHECK(f.mul(a, f.inv(a)) == 1);
    const auto b = static_cast<std::uint32_t>(rng() % p);
    std::vector<std::uint32_t> dst{b}, src{a};
    const std::uint32_t col = 0;
    f.sub_scaled(dst.data(), src.data(), b, std::span<const std::uint32_t>(&col, 1));
    CHECK(dst[0] == f.sub(b, f.mul(a, b)));
  }
}

TEST_CASE("rank is invariant under row order and scaling, and agrees across fields") {
  std::mt19937_64 rng(11);
  RationalField q;
  PrimeField f(default_primes(1).first);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 7);
    const int count = 1 + static_cast<int>(rng() % 9);
    std::vector<std::vector<std::int64_t>> raw;
    for (int r = 0; r < count; ++r) {
      std::vector<std::int64_t> row(dim);
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 5) - 2;
      raw.push_back(row);
    }
    // low-rank trial: append combinations
    if (trial % 2) {
      auto c = raw[0];
      for (int j = 0; j < dim; ++j) c[j] = 3 * raw[0][j] - raw.back()[j];
      raw.push_back(c);
    }
    std::vector<std::vector<mpq_class>> dense;
    std::vector<SparseVec<RationalField>> qs;
    std::vector<SparseVec<PrimeField>> ps, scaled;
    for (const auto& r : raw) {
      dense.emplace_back(r.begin(), r.end());
      qs.push_back(vec(q, r));
      ps.push_back(vec(f, r));
      auto s = r;
      for (auto& x : s) x *= 5;
      scaled.push_back(vec(f, s));
    }
    const auto expect = oracle::dense_rank(dense);
    CHECK(rank(q, dim, std::span<const SparseVec<RationalField>>(qs)) == expect);
    CHECK(rank(f, dim, std::span<const SparseVec<PrimeField>>(ps)) == expect);
    std::reverse(scaled.begin(), scaled.end());
    CHECK(rank(f, dim, std::span<const SparseVec<PrimeField>>(scaled)) == expect);

    EchelonAccumulator<PrimeField> acc(f, dim);
    for (std::size_t r = 0; r + 1 < ps.size(); ++r) acc.insert(ps[r]);
    const bool member = acc.is_member(ps.back());
    const auto before = acc.rank();
    CHECK(acc.insert(ps.back()) == !member);
    CHECK(acc.rank() == before + (member ? 0 : 1));
  }
}
