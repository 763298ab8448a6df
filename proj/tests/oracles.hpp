// Brute-force reference implementations used to cross-check the library.
// Everything here works on raw bitmasks and deliberately shares no code with
// the classes under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracles {

enum class FamilyKind { not_filter, filter, ultrafilter };

// Checks the filter axioms by exhaustive enumeration. Upward closure is
// checked against every superset of every member, not via one-point steps.
inline FamilyKind classify_family(std::size_t n,
                                  const std::set<std::uint64_t>& members) {
  const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1ull);
  if (members.empty()) return FamilyKind::not_filter;
  if (members.count(0)) return FamilyKind::not_filter;
  if (!members.count(full)) return FamilyKind::not_filter;
  for (std::uint64_t a : members) {
    for (std::uint64_t b : members) {
      if (!members.count(a & b)) return FamilyKind::not_filter;
    }
  }
  for (std::uint64_t a : members) {
    for (std::uint64_t s = 0; s <= full; ++s) {
      if ((s & a) == a && !members.count(s)) return FamilyKind::not_filter;
    }
  }
  for (std::uint64_t s = 0; s <= full; ++s) {
    const bool in = members.count(s) != 0;
    const bool co = members.count(full & ~s) != 0;
    if (in != co) continue;
    return FamilyKind::filter;  // some subset with neither or both present
  }
  return FamilyKind::ultrafilter;
}

// Kernel of a family that classify_family accepted.
inline std::uint64_t family_kernel(std::size_t n,
                                   const std::set<std::uint64_t>& members) {
  std::uint64_t kernel = (n == 64) ? ~0ull : ((1ull << n) - 1ull);
  for (std::uint64_t a : members) kernel &= a;
  return kernel;
}

// All partitions of {0, ..., n-1} as block lists (restricted growth strings).
// Blocks are ordered by their smallest element.
inline std::vector<std::vector<std::uint64_t>> all_partitions(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::size_t> assign(n, 0);
  bool more = true;
  while (more) {
    std::size_t nblocks = 0;
    for (std::size_t a : assign) nblocks = std::max(nblocks, a + 1);
    std::vector<std::uint64_t> blocks(nblocks, 0);
    for (std::size_t i = 0; i < n; ++i) blocks[assign[i]] |= 1ull << i;
    out.push_back(blocks);

    more = false;
    for (std::size_t i = n; i-- > 1;) {
      std::size_t cap = 0;
      for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, assign[j] + 1);
      if (assign[i] < cap) {
        ++assign[i];
        std::fill(assign.begin() + i + 1, assign.end(), 0);
        more = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace oracles
