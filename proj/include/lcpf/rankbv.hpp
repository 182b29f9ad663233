#pragma once

#include <cstdint>
#include <vector>

namespace lcpf {

// Plain bit vector addressed by position, packed into 64-bit words.
class MarkBits {
 public:
  MarkBits() = default;
  explicit MarkBits(std::uint64_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::uint64_t size() const { return n_; }
  std::uint64_t ones() const { return ones_; }
  std::uint64_t size_bytes() const { return words_.size() * 8; }

  void set(std::uint64_t pos);
  bool test(std::uint64_t pos) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::uint64_t n_ = 0;
  std::uint64_t ones_ = 0;
  std::vector<std::uint64_t> words_;
};

// Constant-time rank over a frozen MarkBits: one cumulative 32-bit count per
// 512-bit block plus word popcounts on query.
class RankSupport {
 public:
  explicit RankSupport(const MarkBits& bits);

  // Number of set bits in [0, pos).  pos may equal size().
  std::uint64_t rank1_excl(std::uint64_t pos) const;

  std::uint64_t size_bytes() const { return blocks_.size() * 4; }

 private:
  const MarkBits* bits_;
  std::vector<std::uint32_t> blocks_;
};

}  // namespace lcpf
