#include "mask_ops.hpp"

#include <algorithm>
#include <bit>

#include "sigkit/system.hpp"

namespace sigkit::detail {

void close_upward(std::vector<std::uint8_t>& table, int n) {
  const std::size_t size = table.size();
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < size; ++s)
      if (s & bit) table[s] |= table[s ^ bit];
  }
}

std::vector<std::uint8_t> supersets_of_any(const std::vector<std::uint64_t>& members, int n) {
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (std::uint64_t m : members) table[m] = 1;
  close_upward(table, n);
  return table;
}

std::vector<std::uint64_t> minimal_masks_in_table(const std::vector<std::uint8_t>& present,
                                                  int n) {
  std::vector<std::uint8_t> closure = present;
  close_upward(closure, n);
  std::vector<std::uint64_t> result;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (!present[m]) continue;
    bool minimal = true;
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
      if (closure[m ^ (rest & (~rest + 1))]) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.push_back(m);
  }
  return result;
}

std::vector<std::uint64_t> minimal_masks(const std::vector<std::uint64_t>& family, int n) {
  std::vector<std::uint64_t> unique = family;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  if (unique.size() > 1024 && n <= kMaxEnumerationUniverse) {
    std::vector<std::uint8_t> present(std::size_t{1} << n, 0);
    for (std::uint64_t m : unique) present[m] = 1;
    return minimal_masks_in_table(present, n);
  }

  std::vector<std::uint64_t> by_size = unique;
  std::sort(by_size.begin(), by_size.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::uint64_t> kept;
  for (std::uint64_t m : by_size) {
    bool minimal = std::none_of(kept.begin(), kept.end(), [m](std::uint64_t below) {
      return (below & m) == below && below != m;
    });
    if (minimal) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace sigkit::detail
