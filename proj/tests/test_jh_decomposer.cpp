#include <doctest.h>

#include "lcsq/jh_decomposer.hpp"
#include "lcsq/lcs_spans.hpp"
#include "lcsq/tensor_fields.hpp"

using namespace lcsq;
using namespace lcsq::jh;
using sym::Partition;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("decompose a single tensor field module") {
  const auto h = fields::hilbert_F(P({2, 1}), 2, 6);
  const auto jh = decompose(h, 3);
  CHECK(jh.entries == std::map<Partition, std::int64_t>{{P({2, 1}), 1}});
  CHECK(reconstruct(jh, 6) == h);
}

TEST_CASE("decompose computed series, n=2") {
  lcs::Engine e(2, lcs::ScalarMode::from_seed(1));
  const auto h3 = e.hilbert_N(3, 4);
  const auto j3 = decompose(h3, 3);
  CHECK(j3.same_constituents(parse_jh("(2, 1) + (2, 2)", 2, 3)));
  CHECK(j3.str() == "(2,1) + (2,2)");
  CHECK(verify_bound(j3));
  CHECK(j3.max_norm() == 4);
  CHECK(reconstruct(j3, 4) == h3);

  const auto h5 = e.hilbert_N(5, 8);
  const auto j5 = decompose(h5, 5);
  CHECK(j5.entries == std::map<Partition, std::int64_t>{
                          {P({4, 1}), 1}, {P({3, 2}), 1}, {P({4, 2}), 2}, {P({4, 3}), 1}, {P({4, 4}), 1}});
  CHECK(j5.str() == "(4,1) + (3,2) + 2(4,2) + (4,3) + (4,4)");
  CHECK(reconstruct(j5, 8) == h5);
  e.check_agreement();
}

TEST_CASE("verify_bound and reconstruct on small inputs") {
  JHSeries empty;
  empty.n = 2;
  empty.m = 3;
  CHECK(verify_bound(empty));
  const auto zero = reconstruct(empty, 4);
  for (const auto& [d, c] : zero.coeffs()) CHECK(c == 0);

  const auto one = parse_jh("(2,2)", 2, 3);
  CHECK(reconstruct(one, 4).at(MultiDegree({2, 2})) == 1);
  CHECK(reconstruct(one, 4).at(MultiDegree({2, 1})) == 0);

  CHECK_FALSE(verify_bound(parse_jh("(3,2)", 2, 3)));
}

TEST_CASE("inconsistent series are rejected") {
  TruncatedSeries neg(2, 4);
  neg.set(MultiDegree({1, 1}), -1);
  CHECK_THROWS_AS(decompose(neg, 3), InconsistentSeries);

  TruncatedSeries asym(2, 4);
  asym.set(MultiDegree({2, 1}), 1);
  CHECK_THROWS_AS(decompose(asym, 3), InconsistentSeries);

  // x1 x2 alone, no tail: residue cannot vanish
  TruncatedSeries lonely(2, 4);
  lonely.set(MultiDegree({1, 1}), 1);
  try {
    decompose(lonely, 3);
    FAIL("expected an inconsistency");
  } catch (const InconsistentSeries& e) {
    CHECK(e.where().has_value());
  }

  CHECK_THROWS_AS(decompose(TruncatedSeries(2, 3), 3), std::invalid_argument);
}

TEST_CASE("constant module triggers a warning") {
  const auto h = fields::hilbert_F(P({}), 2, 4);
  const auto jh = decompose(h, 3);
  CHECK(jh.entries.count(P({})) == 1);
  CHECK(jh.warnings.size() == 1);
}

TEST_CASE("parse_jh") {
  const auto a = parse_jh("(5, 1) + 2(5, 2) + (3,3)", 2, 6);
  CHECK(a.entries.at(P({5, 2})) == 2);
  CHECK(a.entries.size() == 3);
  CHECK(parse_jh("(2,1,0) + (2,2,0)", 3, 3).entries.count(P({2, 2})) == 1);
  CHECK(parse_jh("0", 2, 3).entries.empty());
  CHECK_THROWS(parse_jh("(2,1", 2, 3));
  CHECK_THROWS(parse_jh("(1,1,1)", 2, 3));
  CHECK_THROWS(parse_jh("(2,1) (2,2)", 2, 3));
  CHECK(parse_jh(a.str(), 2, 6).entries == a.entries);
}
