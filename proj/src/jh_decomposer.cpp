#include "lcsq/jh_decomposer.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "lcsq/tensor_fields.hpp"

namespace lcsq::jh {

int JHSeries::max_norm() const {
  int best = -1;
  for (const auto& [lambda, c] : entries) best = std::max(best, lambda.norm());
  return best;
}

std::string JHSeries::str() const {
  if (entries.empty()) return "0";
  std::vector<std::pair<sym::Partition, std::int64_t>> items(entries.begin(), entries.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.norm() != b.first.norm()) return a.first.norm() < b.first.norm();
    return a.first > b.first;
  });
  std::string s;
  for (const auto& [lambda, c] : items) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c);
    s += lambda.str(n);
  }
  return s;
}

JHSeries parse_jh(const std::string& text, int n, int m) {
  JHSeries out;
  out.n = n;
  out.m = m;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse '" + text + "' at offset " + std::to_string(pos) + ": " + why);
  };
  auto number = [&] {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a number");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
    return v;
  };
  skip_ws();
  if (text.substr(pos) == "0") return out;
  for (;;) {
    skip_ws();
    std::int64_t mult = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) mult = number();
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> parts;
    for (;;) {
      parts.push_back(static_cast<int>(number()));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (static_cast<int>(parts.size()) > n) fail("tuple longer than n");
    out.entries[sym::Partition(parts)] += mult;
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '+') fail("expected '+'");
    ++pos;
  }
  return out;
}

JHSeries decompose(const TruncatedSeries& h, int m) {
  const int n = h.n();
  const int bound = fields::lambda_bound(m, n);
  if (h.maxdeg() < bound)
    throw std::invalid_argument("series truncated at " + std::to_string(h.maxdeg()) + " below the bound " +
                                std::to_string(bound));
  if (!h.is_symmetric()) throw InconsistentSeries("series is not symmetric", std::nullopt);
  for (const auto& [d, v] : h.coeffs())
    if (v < 0) throw InconsistentSeries("negative coefficient at " + d.str(), d);

  JHSeries out;
  out.n = n;
  out.m = m;
  out.truncation = h.maxdeg();
  auto residue = h;

  for (int t = 0; t <= bound; ++t) {
    // Degree-t slice of residue * prod(1 - t_i), on sorted multidegrees.
    sym::SymPoly slice(n);
    for (const auto& alpha : multidegrees_of_total(n, t)) {
      if (!alpha.is_sorted_desc()) continue;
      std::int64_t c = 0;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> e = alpha.exps();
        bool ok = true;
        int sign = 1;
        for (int j = 0; j < n; ++j)
          if (mask & (1u << j)) {
            if (--e[j] < 0) ok = false;
            sign = -sign;
          }
        if (ok) c += sign * residue.at(MultiDegree(std::move(e)));
      }
      slice.add(sym::Partition(alpha.exps()), c);
    }
    for (const auto& [lambda, c] : sym::expand_in_schur(slice)) {
      if (c < 0)
        throw InconsistentSeries("negative multiplicity " + std::to_string(c) + " for " + lambda.str(n),
                                 MultiDegree(lambda.padded(n)));
      out.entries[lambda] += c;
      auto part = fields::hilbert_F(lambda, n, h.maxdeg());
      for (const auto& [d, v] : part.coeffs())
        if (v != 0) residue.add(d, -c * v);
    }
  }
  for (const auto& [d, v] : residue.coeffs())
    if (v != 0)
      throw InconsistentSeries("nonzero residue " + std::to_string(v) + " at " + d.str() +
                                   " after committing all constituents",
                               d);
  if (out.entries.count(sym::Partition{}))
    out.warnings.push_back("constant module F_0 appears in the decomposition");
  return out;
}

bool verify_bound(const JHSeries& jh) {
  if (jh.entries.empty()) return true;
  const int bound = fields::lambda_bound(jh.m, jh.n);
  return std::all_of(jh.entries.begin(), jh.entries.end(),
                     [&](const auto& kv) { return kv.first.norm() <= bound; });
}

TruncatedSeries reconstruct(const JHSeries& jh, int maxdeg) {
  TruncatedSeries out(jh.n, maxdeg);
  for (const auto& [lambda, c] : jh.entries) {
    auto part = fields::hilbert_F(lambda, jh.n, maxdeg);
    for (const auto& [d, v] : part.coeffs())
      if (v != 0) out.add(d, c * v);
  }
  return out;
}

}  // namespace lcsq::jh
