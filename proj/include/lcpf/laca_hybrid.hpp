#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lcpf/io.hpp"
#include "lcpf/laca_go.hpp"
#include "lcpf/metrics.hpp"
#include "lcpf/rankbv.hpp"
#include "lcpf/sarray.hpp"
#include "lcpf/textcore.hpp"

namespace lcpf {

// Capped lcp values, one byte per rank: exact when <= m, and m+1 as the
// marker for "true value exceeds m".  Entry 0 carries the -1 boundary
// semantics but is stored as byte 0.
struct ByteLcp {
  std::uint8_t m = 0;
  std::vector<std::uint8_t> vals;

  std::uint8_t marker() const { return static_cast<std::uint8_t>(m + 1); }
};

struct Phase1Result {
  ByteLcp lcp8;
  MarkBits marks;  // text positions whose lcp value exceeds m
};

// Threshold bounds: the marker m+1 must fit a byte.
inline constexpr std::uint8_t kMinThreshold = 1;
inline constexpr std::uint8_t kMaxThreshold = 254;

// First phase: the streaming scan with every lcp value capped at m+1.
// sa and bwt are consumed exactly once; resident state is the text, the byte
// array, and the mark bits.
Phase1Result hybrid_phase1(const Text& t, U32Source& sa, ByteSource& bwt, const CArray& c,
                           std::uint8_t m, Metrics* metrics = nullptr, const GoOptions& opt = {});

// In-memory convenience overload.
Phase1Result hybrid_phase1(const Text& t, const SuffixArray& sa, std::span<const std::uint8_t> bwt,
                           const CArray& c, std::uint8_t m, Metrics* metrics = nullptr,
                           const GoOptions& opt = {});

// Second phase: resolves the marked entries through a sparse text-order
// predecessor table, skipping character comparisons wherever the value is
// forced to be one less than its left neighbour's, then emits the full lcp
// array (n values, ranks 0..n-1) in rank order.  sa is consumed twice and
// bwt once; both are reset internally before each pass.
void hybrid_phase2(const Text& t, U32Source& sa, ByteSource& bwt, const ByteLcp& lcp8,
                   const MarkBits& marks, const RankSupport& rank, I32Sink& out,
                   Metrics* metrics = nullptr);

// Both phases over streams; writes n values to `out` in rank order.
void lcp_hybrid_stream(const Text& t, U32Source& sa, ByteSource& bwt, const CArray& c,
                       std::uint8_t m, I32Sink& out, Metrics* metrics = nullptr,
                       const GoOptions& opt = {});

// In-memory wrapper: derives bwt internally and returns the n+1-entry array.
std::vector<std::int32_t> lcp_hybrid(const Text& t, const SuffixArray& sa, std::uint8_t m = 254,
                                     Metrics* metrics = nullptr, const GoOptions& opt = {});

void save_byte_lcp(const ByteLcp& b, const std::filesystem::path& path);
ByteLcp load_byte_lcp(const std::filesystem::path& path);

}  // namespace lcpf
