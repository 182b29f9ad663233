#pragma once

#include <cstdint>
#include <vector>

#include "lcpf/metrics.hpp"
#include "lcpf/sarray.hpp"
#include "lcpf/textcore.hpp"

namespace lcpf {

// All lcp arrays in this library have n + 1 entries with the boundary
// convention lcp[0] == lcp[n] == -1; lcp[i] for 0 < i < n is the length of
// the longest common prefix of the suffixes ranked i - 1 and i.

// Reference oracle: independent pairwise comparison of adjacent suffixes.
std::vector<std::int32_t> lcp_brute(const Text& t, const SuffixArray& sa, Metrics* m = nullptr);

// Text-order construction using the inverse suffix array (linear time).
std::vector<std::int32_t> lcp_kasai(const Text& t, const SuffixArray& sa,
                                    const InverseSuffixArray& isa, Metrics* m = nullptr);

// Permuted lcp values: plcp[j] is the lcp value of the suffix starting at
// text position j, and phi[j] is the start of its lexicographic predecessor
// (phi[sa[0]] points to itself; its plcp is 0).
struct PlcpArray {
  std::vector<std::uint32_t> phi;
  std::vector<std::uint32_t> plcp;
};

PlcpArray build_plcp(const Text& t, const SuffixArray& sa, Metrics* m = nullptr);

// Rank-order lcp array obtained through the permuted representation.
std::vector<std::int32_t> lcp_phi(const Text& t, const SuffixArray& sa, Metrics* m = nullptr);

}  // namespace lcpf
