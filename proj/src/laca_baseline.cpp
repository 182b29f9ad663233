#include "lcpf/laca_baseline.hpp"

#include "lcpf/error.hpp"

namespace lcpf {
namespace {

void check_lengths(const Text& t, const SuffixArray& sa) {
  if (sa.n() != t.n() || t.n() == 0) raise(Errc::inconsistent_inputs, "suffix array length mismatch");
}

// Hints that hide DRAM latency on the rank-indirected array accesses; purely
// advisory, no effect on results or instrumentation counts.
inline void prefetch_read(const void* p) {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_prefetch(p, 0, 1);
#else
  (void)p;
#endif
}

inline void prefetch_write(const void* p) {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_prefetch(p, 1, 1);
#else
  (void)p;
#endif
}

}  // namespace

std::vector<std::int32_t> lcp_brute(const Text& t, const SuffixArray& sa, Metrics* m) {
  check_lengths(t, sa);
  const std::uint32_t n = t.n();
  LedgerScope text_mem(m, "text", n);
  LedgerScope lcp_mem(m, "lcp", (static_cast<std::uint64_t>(n) + 1) * 4);
  std::vector<std::int32_t> lcp(n + 1, -1);
  for (std::uint32_t i = 1; i < n; ++i) {
    const std::uint32_t a = sa.sa[i - 1], b = sa.sa[i];
    std::uint32_t l = 0;
    for (;;) {
      if (m) {
        ++m->char_cmps;
        m->text_accesses += 2;
      }
      if (t.bytes[a + l] != t.bytes[b + l]) break;
      ++l;
    }
    lcp[i] = static_cast<std::int32_t>(l);
  }
  return lcp;
}

std::vector<std::int32_t> lcp_kasai(const Text& t, const SuffixArray& sa,
                                    const InverseSuffixArray& isa, Metrics* m) {
  check_lengths(t, sa);
  const std::uint32_t n = t.n();
  if (isa.isa.size() != n) raise(Errc::inconsistent_inputs, "inverse suffix array length mismatch");
  LedgerScope text_mem(m, "text", n);
  LedgerScope sa_mem(m, "sa", static_cast<std::uint64_t>(n) * 4);
  LedgerScope isa_mem(m, "isa", static_cast<std::uint64_t>(n) * 4);
  LedgerScope lcp_mem(m, "lcp", (static_cast<std::uint64_t>(n) + 1) * 4);
  std::vector<std::int32_t> lcp(n + 1, -1);
  std::uint32_t h = 0;
  // The scan reads isa sequentially, so the ranks a few steps ahead are known
  // early; fetching their sa/lcp lines (and, once sa has arrived, the other
  // suffix's text window) overlaps the cache misses of later iterations.
  constexpr std::uint32_t kFar = 24, kNear = 6;
  for (std::uint32_t j = 0; j < n; ++j) {
    if (j + kFar < n) {
      const std::uint32_t r = isa.isa[j + kFar];
      prefetch_read(&sa.sa[r == 0 ? 0 : r - 1]);
      prefetch_write(&lcp[r]);
    }
    if (j + kNear < n) {
      const std::uint32_t r = isa.isa[j + kNear];
      if (r != 0) prefetch_read(&t.bytes[sa.sa[r - 1] + h]);
    }
    const std::uint32_t i = isa.isa[j];
    if (i == 0) {
      h = 0;
      continue;
    }
    const std::uint32_t k = sa.sa[i - 1];
    for (;;) {
      if (m) {
        ++m->char_cmps;
        m->text_accesses += 2;
      }
      if (t.bytes[j + h] != t.bytes[k + h]) break;
      ++h;
    }
    lcp[i] = static_cast<std::int32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

PlcpArray build_plcp(const Text& t, const SuffixArray& sa, Metrics* m) {
  check_lengths(t, sa);
  const std::uint32_t n = t.n();
  LedgerScope text_mem(m, "text", n);
  LedgerScope sa_mem(m, "sa", static_cast<std::uint64_t>(n) * 4);
  LedgerScope phi_mem(m, "phi", static_cast<std::uint64_t>(n) * 4);
  LedgerScope plcp_mem(m, "plcp", static_cast<std::uint64_t>(n) * 4);
  PlcpArray out;
  out.phi.assign(n, 0);
  out.plcp.assign(n, 0);
  out.phi[sa.sa[0]] = sa.sa[0];
  for (std::uint32_t i = 1; i < n; ++i) out.phi[sa.sa[i]] = sa.sa[i - 1];
  std::uint32_t l = 0;
  for (std::uint32_t j = 0; j < n; ++j) {
    const std::uint32_t p = out.phi[j];
    if (p == j) {
      out.plcp[j] = 0;
      continue;
    }
    for (;;) {
      if (m) {
        ++m->char_cmps;
        m->text_accesses += 2;
      }
      if (t.bytes[j + l] != t.bytes[p + l]) break;
      ++l;
    }
    out.plcp[j] = l;
    if (l > 0) --l;
  }
  return out;
}

std::vector<std::int32_t> lcp_phi(const Text& t, const SuffixArray& sa, Metrics* m) {
  PlcpArray p = build_plcp(t, sa, m);
  const std::uint32_t n = t.n();
  LedgerScope lcp_mem(m, "lcp", (static_cast<std::uint64_t>(n) + 1) * 4);
  std::vector<std::int32_t> lcp(n + 1, -1);
  for (std::uint32_t i = 1; i < n; ++i) lcp[i] = static_cast<std::int32_t>(p.plcp[sa.sa[i]]);
  return lcp;
}

}  // namespace lcpf
