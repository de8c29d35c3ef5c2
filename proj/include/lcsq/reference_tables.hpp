#pragma once

#include <span>
#include <string>
#include <vector>

namespace lcsq {

/// Published Jordan-Holder series of N_m(A_n), in the source notation.
struct ReferenceEntry {
  int n;
  int m;
  const char* decomposition;
  const char* note;
};

std::span<const ReferenceEntry> reference_tables();

/// Entries matching a selector such as "all", "n=2", "n=3,m=4" or "m=3".
std::vector<ReferenceEntry> select_reference_tables(const std::string& selector);

}  // namespace lcsq
