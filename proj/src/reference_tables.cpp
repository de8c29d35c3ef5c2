#include "lcsq/reference_tables.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace lcsq {

namespace {

constexpr std::array kTables{
    ReferenceEntry{2, 3, "(2, 1) + (2, 2)", "N_3 also computed by Etingof, Kim and Ma"},
    ReferenceEntry{2, 4, "(3, 1) + (3, 2) + (3, 3)", ""},
    ReferenceEntry{2, 5, "(4, 1) + (3, 2) + 2(4, 2) + (4, 3) + (4, 4)", ""},
    ReferenceEntry{2, 6, "(5, 1) + (4, 2) + (3, 3) + 2(5, 2) + 2(4, 3) + 2(5, 3) + (5, 4) + (5, 5)", ""},
    ReferenceEntry{2, 7,
                   "(6, 1) + 2(5, 2) + 2(4, 3) + 3(6, 2) + 3(5, 3) + 3(4, 4) + 3(6, 3) + 2(5, 4) + 2(6, 4) + "
                   "(6, 5) + (6, 6)",
                   ""},
    ReferenceEntry{3, 3, "(2,1,0) + (2,2,0)", "N_3 also computed by Etingof, Kim and Ma"},
    ReferenceEntry{3, 4, "(2, 2, 2) + (2, 2,1) + (3, 1,0)+(3,1,1)+(3,2,0)+(3,3,0)", ""},
    ReferenceEntry{4, 3, "(2,1,0,0)+(2,2,0,0)", "N_3 also computed by Etingof, Kim and Ma"},
    ReferenceEntry{4, 4,
                   "(3,3,0,0) + (3,2,0,0) + (3,1,1,1) + (3,1,1,0) + (3,1,0,0) + (2,2,1,1) + (2,2,2,0) + "
                   "(2,1,1,1) + (2,1,1,0)",
                   ""},
};

}  // namespace

std::span<const ReferenceEntry> reference_tables() { return kTables; }

std::vector<ReferenceEntry> select_reference_tables(const std::string& selector) {
  std::optional<int> n, m;
  if (selector != "all" && !selector.empty()) {
    std::stringstream ss(selector);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad selector item '" + item + "'");
      const auto key = item.substr(0, eq);
      int value = 0;
      try {
        value = std::stoi(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad selector value in '" + item + "'");
      }
      if (key == "n") n = value;
      else if (key == "m") m = value;
      else throw std::invalid_argument("unknown selector key '" + key + "'");
    }
  }
  std::vector<ReferenceEntry> out;
  for (const auto& e : kTables)
    if ((!n || e.n == *n) && (!m || e.m == *m)) out.push_back(e);
  return out;
}

}  // namespace lcsq
