#pragma once

#include <cstdint>
#include <vector>

#include "lcpf/textcore.hpp"

namespace lcpf {

// Suffix array over the sentinel-terminated text: sa[r] is the start of the
// r-th smallest suffix.  The sentinel suffix is the smallest, so sa[0] == n-1.
struct SuffixArray {
  std::vector<std::uint32_t> sa;
  std::uint32_t n() const { return static_cast<std::uint32_t>(sa.size()); }
};

// isa[j] is the rank of the suffix starting at j, i.e. isa[sa[r]] == r.
struct InverseSuffixArray {
  std::vector<std::uint32_t> isa;
};

// Linear-time construction by induced sorting.
SuffixArray build_suffix_array(const Text& t);

InverseSuffixArray invert(const SuffixArray& sa);

// Full check: permutation of [0, n) with strictly increasing suffixes.
// O(n^2) worst case; intended for tests and the verify command.
bool verify_suffix_array(const Text& t, const SuffixArray& sa);

}  // namespace lcpf
