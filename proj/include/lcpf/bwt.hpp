#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcpf/sarray.hpp"
#include "lcpf/textcore.hpp"

namespace lcpf {

// Last column of the sorted-rotation matrix: bwt[i] is the character
// preceding suffix sa[i] (the sentinel when sa[i] == 0).
std::vector<std::uint8_t> build_bwt(const Text& t, const SuffixArray& sa);

// Last-to-first mapping: lf[i] is the row whose suffix is one character
// longer than row i's, i.e. it starts with bwt[i].  Row 0 maps to itself.
std::vector<std::uint32_t> build_lf(std::span<const std::uint8_t> bwt, const CArray& c);

// Number of maximal runs of equal characters (0 for an empty span).
std::uint64_t bwt_run_count(std::span<const std::uint8_t> bwt);

}  // namespace lcpf
