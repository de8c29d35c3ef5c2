#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcsq/free_algebra.hpp"

namespace testing {

// "xyx" -> {0,1,0}; letters x,y,z,w then a,b,...
inline lcsq::Word w(const std::string& s) {
  lcsq::Word out;
  for (char c : s) {
    switch (c) {
      case 'x': out.push_back(0); break;
      case 'y': out.push_back(1); break;
      case 'z': out.push_back(2); break;
      case 'w': out.push_back(3); break;
      default: out.push_back(static_cast<lcsq::Letter>(c - 'a'));
    }
  }
  return out;
}

template <class F>
lcsq::AlgElement<F> poly(const F& f, int n, const std::vector<std::pair<std::string, std::int64_t>>& terms) {
  auto acc = lcsq::AlgElement<F>::zero(lcsq::MultiDegree::of_word(w(terms.at(0).first), n));
  for (const auto& [s, c] : terms) {
    const auto word = w(s);
    acc = lcsq::add_scaled(f, acc, f.from_int(c), lcsq::AlgElement<F>::word(f, word, n));
  }
  return acc;
}

}  // namespace testing
