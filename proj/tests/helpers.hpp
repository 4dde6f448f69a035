#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ag/magma.hpp"

namespace test_helpers {

inline ag::Magma table_of(int n, std::vector<ag::Element> flat,
                          std::vector<std::string> labels = {}) {
  return ag::Magma(n, std::move(flat), std::move(labels));
}

// x*y = x
inline ag::Magma left_zero2() { return table_of(2, {0, 0, 1, 1}); }
// x*y = 0
inline ag::Magma constant2() { return table_of(2, {0, 0, 0, 0}); }
// addition mod 2
inline ag::Magma addmod2() { return table_of(2, {0, 1, 1, 0}); }
// addition mod 3
inline ag::Magma addmod3() { return table_of(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}); }

inline std::string fixture_path(const std::string& name) {
  return std::string(AG_FIXTURES_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(AG_GOLDENS_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ag::Magma example6() { return ag::parse_magma(slurp(fixture_path("example6.txt"))); }

// Enumerate every order-n table (all n^(n*n) of them) through `fn`.
template <typename Fn>
void for_all_tables(int n, Fn&& fn) {
  std::vector<ag::Element> flat(n * n, 0);
  for (;;) {
    fn(ag::Magma(n, flat));
    int i = n * n - 1;
    while (i >= 0 && flat[i] == n - 1) flat[i--] = 0;
    if (i < 0) return;
    ++flat[i];
  }
}

}  // namespace test_helpers
