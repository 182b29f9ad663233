#include "lcpf/sarray.hpp"

#include <algorithm>

#include "lcpf/error.hpp"

namespace lcpf {
namespace {

constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

// Induced-sorting construction (SA-IS).  Requirements on the input string:
// s[n-1] is the unique smallest character, values are < sigma, n >= 1.

template <class CharT>
bool lms_equal(const CharT* s, const std::uint8_t* stype, std::uint32_t a, std::uint32_t b) {
  // Both a and b are leftmost-S positions.  Their substrings run up to and
  // including the next leftmost-S position.  Equal length + equal characters
  // forces equal types, so comparing characters suffices.
  auto is_lms = [&](std::uint32_t i) { return stype[i] && !stype[i - 1]; };
  for (std::uint32_t d = 0;; ++d) {
    if (s[a + d] != s[b + d]) return false;
    if (d > 0) {
      const bool alms = is_lms(a + d), blms = is_lms(b + d);
      if (alms || blms) return alms && blms;
    }
  }
}

template <class CharT>
void sais(const CharT* s, std::uint32_t n, std::uint32_t sigma, std::uint32_t* sa) {
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  // Type classification: S-type = suffix smaller than its successor.
  std::vector<std::uint8_t> stype(n);
  stype[n - 1] = 1;
  for (std::uint32_t i = n - 1; i-- > 0;)
    stype[i] = (s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1])) ? 1 : 0;
  auto is_lms = [&](std::uint32_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

  // Bucket boundaries: bkt[x] = head of bucket x, bkt[x+1] = one past its tail.
  std::vector<std::uint32_t> bkt(sigma + 1, 0);
  for (std::uint32_t i = 0; i < n; ++i) ++bkt[static_cast<std::uint32_t>(s[i]) + 1];
  for (std::uint32_t x = 0; x < sigma; ++x) bkt[x + 1] += bkt[x];

  std::vector<std::uint32_t> cur(sigma);

  auto induce = [&] {
    // L-type, left to right from bucket heads.
    for (std::uint32_t x = 0; x < sigma; ++x) cur[x] = bkt[x];
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t j = sa[k];
      if (j == kEmpty || j == 0) continue;
      if (!stype[j - 1]) sa[cur[s[j - 1]]++] = j - 1;
    }
    // S-type, right to left from bucket tails.
    for (std::uint32_t x = 0; x < sigma; ++x) cur[x] = bkt[x + 1];
    for (std::uint32_t k = n; k-- > 0;) {
      const std::uint32_t j = sa[k];
      if (j == kEmpty || j == 0) continue;
      if (stype[j - 1]) sa[--cur[s[j - 1]]] = j - 1;
    }
  };

  // Round 1: seed leftmost-S positions in text order, induce, which sorts
  // them by their substrings.
  std::fill(sa, sa + n, kEmpty);
  for (std::uint32_t x = 0; x < sigma; ++x) cur[x] = bkt[x + 1];
  for (std::uint32_t i = 1; i < n; ++i)
    if (is_lms(i)) sa[--cur[s[i]]] = i;
  induce();

  std::uint32_t n1 = 0;
  for (std::uint32_t k = 0; k < n; ++k)
    if (sa[k] != kEmpty && is_lms(sa[k])) sa[n1++] = sa[k];

  // Name the substrings in sorted order; names go to sa[n1 + pos/2]
  // (leftmost-S positions are at least two apart, so slots are distinct).
  std::fill(sa + n1, sa + n, kEmpty);
  std::uint32_t names = 0;
  std::uint32_t prev = kEmpty;
  for (std::uint32_t k = 0; k < n1; ++k) {
    const std::uint32_t pos = sa[k];
    if (prev == kEmpty || !lms_equal(s, stype.data(), prev, pos)) ++names;
    prev = pos;
    sa[n1 + pos / 2] = names - 1;
  }

  // Compact names into the reduced string (text order of leftmost-S
  // positions).  Right to left: the write cursor stays at or above the read
  // cursor, so no unread slot is overwritten.
  std::uint32_t* const s1 = sa + (n - n1);
  {
    std::uint32_t w = n;
    for (std::uint32_t k = n; k-- > n1;)
      if (sa[k] != kEmpty) sa[--w] = sa[k];
  }

  if (names < n1) {
    sais<std::uint32_t>(s1, n1, names, sa);
  } else {
    for (std::uint32_t k = 0; k < n1; ++k) sa[s1[k]] = k;
  }

  // Map ranks back to text positions.
  {
    std::uint32_t w = 0;
    for (std::uint32_t i = 1; i < n; ++i)
      if (is_lms(i)) s1[w++] = i;
  }
  for (std::uint32_t k = 0; k < n1; ++k) sa[k] = s1[sa[k]];

  // Round 2: seed the now fully sorted leftmost-S suffixes and induce the rest.
  std::fill(sa + n1, sa + n, kEmpty);
  for (std::uint32_t x = 0; x < sigma; ++x) cur[x] = bkt[x + 1];
  for (std::uint32_t k = n1; k-- > 0;) {
    const std::uint32_t j = sa[k];
    sa[k] = kEmpty;
    sa[--cur[s[j]]] = j;
  }
  induce();
}

}  // namespace

SuffixArray build_suffix_array(const Text& t) {
  SuffixArray out;
  out.sa.assign(t.n(), 0);
  sais<std::uint8_t>(t.bytes.data(), t.n(), 256, out.sa.data());
  return out;
}

InverseSuffixArray invert(const SuffixArray& sa) {
  const std::uint32_t n = sa.n();
  InverseSuffixArray out;
  out.isa.assign(n, kEmpty);
  for (std::uint32_t r = 0; r < n; ++r) {
    if (sa.sa[r] >= n) raise(Errc::inconsistent_inputs, "suffix array entry out of range");
    out.isa[sa.sa[r]] = r;
  }
  for (std::uint32_t j = 0; j < n; ++j)
    if (out.isa[j] == kEmpty) raise(Errc::inconsistent_inputs, "suffix array is not a permutation");
  return out;
}

bool verify_suffix_array(const Text& t, const SuffixArray& sa) {
  const std::uint32_t n = t.n();
  if (sa.n() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::uint32_t r = 0; r < n; ++r) {
    if (sa.sa[r] >= n || seen[sa.sa[r]]) return false;
    seen[sa.sa[r]] = true;
  }
  const std::uint8_t* b = t.bytes.data();
  for (std::uint32_t r = 1; r < n; ++r) {
    const std::uint32_t x = sa.sa[r - 1], y = sa.sa[r];
    if (!std::lexicographical_compare(b + x, b + n, b + y, b + n)) return false;
  }
  return true;
}

}  // namespace lcpf
