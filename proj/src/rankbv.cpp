#include "lcpf/rankbv.hpp"

#include <algorithm>
#include <bit>

#include "lcpf/error.hpp"

namespace lcpf {

void MarkBits::set(std::uint64_t pos) {
  if (pos >= n_) raise(Errc::out_of_range, "bit position out of range");
  const std::uint64_t mask = 1ull << (pos & 63);
  if (!(words_[pos >> 6] & mask)) {
    words_[pos >> 6] |= mask;
    ++ones_;
  }
}

bool MarkBits::test(std::uint64_t pos) const {
  if (pos >= n_) raise(Errc::out_of_range, "bit position out of range");
  return (words_[pos >> 6] >> (pos & 63)) & 1;
}

RankSupport::RankSupport(const MarkBits& bits) : bits_(&bits) {
  const auto& words = bits.words();
  blocks_.assign((bits.size() >> 9) + 1, 0);
  std::uint64_t acc = 0;
  std::uint64_t w = 0;
  for (std::uint64_t blk = 0; blk < blocks_.size(); ++blk) {
    blocks_[blk] = static_cast<std::uint32_t>(acc);
    const std::uint64_t end = std::min<std::uint64_t>((blk + 1) * 8, words.size());
    for (; w < end; ++w) acc += std::popcount(words[w]);
  }
}

std::uint64_t RankSupport::rank1_excl(std::uint64_t pos) const {
  if (pos > bits_->size()) raise(Errc::out_of_range, "rank position out of range");
  const auto& words = bits_->words();
  std::uint64_t r = blocks_[pos >> 9];
  const std::uint64_t first_word = (pos >> 9) << 3;
  const std::uint64_t last_word = pos >> 6;
  for (std::uint64_t w = first_word; w < last_word; ++w) r += std::popcount(words[w]);
  const std::uint64_t rem = pos & 63;
  if (rem != 0) r += std::popcount(words[last_word] & ((1ull << rem) - 1));
  return r;
}

}  // namespace lcpf
