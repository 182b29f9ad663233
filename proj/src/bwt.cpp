#include "lcpf/bwt.hpp"

#include "lcpf/error.hpp"

namespace lcpf {

std::vector<std::uint8_t> build_bwt(const Text& t, const SuffixArray& sa) {
  const std::uint32_t n = t.n();
  if (sa.n() != n) raise(Errc::inconsistent_inputs, "suffix array length mismatch");
  std::vector<std::uint8_t> bwt(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t j = sa.sa[i];
    if (j >= n) raise(Errc::inconsistent_inputs, "suffix array entry out of range");
    bwt[i] = (j == 0) ? t.bytes[n - 1] : t.bytes[j - 1];
  }
  return bwt;
}

std::vector<std::uint32_t> build_lf(std::span<const std::uint8_t> bwt, const CArray& c) {
  std::vector<std::uint32_t> lf(bwt.size());
  std::array<std::uint32_t, 256> cnt{};
  for (std::size_t i = 0; i < bwt.size(); ++i) {
    const std::uint8_t b = bwt[i];
    lf[i] = c.c[b] + cnt[b]++;
  }
  return lf;
}

std::uint64_t bwt_run_count(std::span<const std::uint8_t> bwt) {
  std::uint64_t runs = 0;
  for (std::size_t i = 0; i < bwt.size(); ++i)
    if (i == 0 || bwt[i] != bwt[i - 1]) ++runs;
  return runs;
}

}  // namespace lcpf
