#include "lcpf/laca_hybrid.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>

#include "lcpf/bwt.hpp"
#include "lcpf/error.hpp"

namespace lcpf {
namespace {

void check_threshold(std::uint8_t m) {
  if (m < kMinThreshold || m > kMaxThreshold)
    raise(Errc::out_of_range, "threshold must lie in [1, 254]");
}

}  // namespace

Phase1Result hybrid_phase1(const Text& t, U32Source& sa, ByteSource& bwt, const CArray& c,
                           std::uint8_t m, Metrics* metrics, const GoOptions& opt) {
  check_threshold(m);
  const std::uint32_t n = t.n();
  if (sa.size() != n || bwt.size() != n)
    raise(Errc::inconsistent_inputs, "stream lengths disagree with the text");
  sa.reset();
  bwt.reset();

  LedgerScope text_mem(metrics, "text", n);
  LedgerScope lcp8_mem(metrics, "lcp8", n);

  Phase1Result res;
  res.lcp8.m = m;
  res.lcp8.vals.assign(n, 0);
  res.marks = MarkBits(n);
  LedgerScope marks_mem(metrics, "marks", res.marks.size_bytes());

  const std::int32_t marker = static_cast<std::int32_t>(m) + 1;
  std::vector<std::uint8_t>& vals = res.lcp8.vals;

  RmqStack stack;
  LastOcc lo;
  UndefCounters u;
  std::uint32_t f = 0;
  std::uint8_t prev_b = 0;
  std::uint32_t prev_sa = 0;
  std::uint32_t pushes = 0;

  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint8_t b = bwt.next();
    const std::uint32_t sa_i = sa.next();
    const std::uint32_t lfi = c.c[b] + static_cast<std::uint32_t>(u.cnt[b]);
    if (sa_i >= n || lfi >= n) raise(Errc::inconsistent_inputs, "stream value out of range");
    if (i > 0 && lfi == i) raise(Errc::inconsistent_inputs, "last-to-first mapping has a fixed point");
    while (i >= c.c[f + 1]) ++f;
    const bool defined = is_defined(i, static_cast<std::uint8_t>(f), b, c, u);

    std::int32_t cur;
    if (i == 0) {
      cur = -1;  // stored as byte 0; the boundary never looks like the marker
    } else if (defined) {
      cur = vals[i];  // written by an earlier capped forwarding step
    } else {
      std::int32_t l = 0;
      bool exact = false;
      if (lfi < i) {
        const std::int32_t seed = (lfi == 0) ? -1 : static_cast<std::int32_t>(vals[lfi]);
        l = std::max(seed - 1, 0);
        // Run continuation gives the exact value only while it stays below
        // the cap; a capped seed means "at least m match", so fall through
        // to (at most one) comparison at the cap boundary.
        exact = (b == prev_b) && (l < m);
      }
      if (!exact) {
        while (l < marker) {
          if (metrics) {
            ++metrics->char_cmps;
            metrics->text_accesses += 2;
          }
          if (t.bytes[sa_i + l] != t.bytes[prev_sa + l]) break;
          ++l;
        }
      }
      cur = l;
    }

    if (i > 0) {
      vals[i] = static_cast<std::uint8_t>(cur);
      if (cur == marker) res.marks.set(sa_i);
    }

    stack.push(i, cur);
    if (lfi > i) {
      const std::int32_t ans = stack.query(static_cast<std::uint32_t>(lo.last[b] + 1));
      const std::int32_t v = std::min(ans + 1, marker);
      vals[lfi] = static_cast<std::uint8_t>(v);
      if (v == marker) {
        if (sa_i == 0) raise(Errc::inconsistent_inputs, "forwarding target for the sentinel row");
        res.marks.set(sa_i - 1);
      }
    }
    lo.last[b] = i;
    ++u.cnt[b];
    prev_b = b;
    prev_sa = sa_i;
    if (opt.trim_interval != 0 && ++pushes >= opt.trim_interval) {
      stack.trim(lo.last);
      pushes = 0;
    }
  }

  if (metrics) metrics->checkpoints["phase1_peak_bytes"] = metrics->ledger.peak();
  return res;
}

Phase1Result hybrid_phase1(const Text& t, const SuffixArray& sa, std::span<const std::uint8_t> bwt,
                           const CArray& c, std::uint8_t m, Metrics* metrics, const GoOptions& opt) {
  MemU32Source sa_src(sa.sa);
  MemByteSource bwt_src(bwt);
  return hybrid_phase1(t, sa_src, bwt_src, c, m, metrics, opt);
}

void hybrid_phase2(const Text& t, U32Source& sa, ByteSource& bwt, const ByteLcp& lcp8,
                   const MarkBits& marks, const RankSupport& rank, I32Sink& out, Metrics* metrics) {
  check_threshold(lcp8.m);
  const std::uint32_t n = t.n();
  if (sa.size() != n || bwt.size() != n || lcp8.vals.size() != n || marks.size() != n)
    raise(Errc::inconsistent_inputs, "phase inputs disagree with the text");

  const std::uint8_t marker = lcp8.marker();
  const std::uint32_t bot = n - 1;  // never a real predecessor of a marked position
  const std::uint64_t nn = marks.ones();

  LedgerScope text_mem(metrics, "text", n);
  LedgerScope lcp8_mem(metrics, "lcp8", n);
  LedgerScope marks_mem(metrics, "marks", marks.size_bytes());
  LedgerScope rank_mem(metrics, "rank", rank.size_bytes());
  LedgerScope phi_mem(metrics, "sparse-phi", nn * 4);
  LedgerScope plcp_mem(metrics, "sparse-plcp", nn * 4);

  // Pass 1: collect predecessors for the marked positions whose value cannot
  // be derived from the left neighbour (irreducible entries).
  std::vector<std::uint32_t> phi(nn, bot);
  sa.reset();
  bwt.reset();
  std::uint8_t prev_b = 0;
  std::uint32_t prev_sa = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint8_t b = bwt.next();
    const std::uint32_t sa_i = sa.next();
    if (sa_i >= n) raise(Errc::inconsistent_inputs, "stream value out of range");
    const bool marked = lcp8.vals[i] == marker;
    if (marked != marks.test(sa_i))
      raise(Errc::inconsistent_inputs, "mark bits disagree with the byte lcp array");
    if (marked && b != prev_b) phi[rank.rank1_excl(sa_i)] = prev_sa;
    prev_b = b;
    prev_sa = sa_i;
  }

  // Text-order sweep over marked positions.
  std::vector<std::uint32_t> plcp(nn, 0);
  {
    const auto& words = marks.words();
    std::int64_t l = 0;
    std::uint64_t jI = 0;
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t word = words[w];
      while (word != 0) {
        const std::uint64_t j = (static_cast<std::uint64_t>(w) << 6) +
                                static_cast<std::uint64_t>(std::countr_zero(word));
        word &= word - 1;
        const bool prev_marked = j > 0 && marks.test(j - 1);
        l = prev_marked ? l - 1 : static_cast<std::int64_t>(marker);
        const std::uint32_t p = phi[jI];
        if (p != bot) {
          for (;;) {
            if (metrics) {
              ++metrics->char_cmps;
              metrics->text_accesses += 2;
            }
            if (t.bytes[j + static_cast<std::uint64_t>(l)] != t.bytes[p + static_cast<std::uint64_t>(l)])
              break;
            ++l;
          }
        } else {
          // Forced value: one less than the left neighbour's.  A marked
          // position can only lack a predecessor entry when its left
          // neighbour is marked too (its value is strictly larger).
          const std::uint64_t cmps_before = metrics ? metrics->char_cmps : 0;
          if (!prev_marked)
            raise(Errc::inconsistent_inputs, "derived entry without a marked left neighbour");
          if (metrics) metrics->phase2_reducible_cmps += metrics->char_cmps - cmps_before;
        }
        plcp[jI] = static_cast<std::uint32_t>(l);
        ++jI;
      }
    }
  }

  // Pass 2: emit, replacing markers by the resolved values.
  sa.reset();
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t sa_i = sa.next();
    if (i == 0)
      out.put(-1);
    else if (lcp8.vals[i] == marker)
      out.put(static_cast<std::int32_t>(plcp[rank.rank1_excl(sa_i)]));
    else
      out.put(static_cast<std::int32_t>(lcp8.vals[i]));
  }
}

void lcp_hybrid_stream(const Text& t, U32Source& sa, ByteSource& bwt, const CArray& c,
                       std::uint8_t m, I32Sink& out, Metrics* metrics, const GoOptions& opt) {
  Phase1Result p1 = hybrid_phase1(t, sa, bwt, c, m, metrics, opt);
  const RankSupport rank(p1.marks);
  hybrid_phase2(t, sa, bwt, p1.lcp8, p1.marks, rank, out, metrics);
}

std::vector<std::int32_t> lcp_hybrid(const Text& t, const SuffixArray& sa, std::uint8_t m,
                                     Metrics* metrics, const GoOptions& opt) {
  const std::vector<std::uint8_t> bwt = build_bwt(t, sa);
  const CArray c = build_c_array(t);
  MemU32Source sa_src(sa.sa);
  MemByteSource bwt_src(bwt);
  VecI32Sink sink;
  sink.out.reserve(t.n() + 1);
  lcp_hybrid_stream(t, sa_src, bwt_src, c, m, sink, metrics, opt);
  sink.out.push_back(-1);
  return std::move(sink.out);
}

void save_byte_lcp(const ByteLcp& b, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(Errc::io_error, "cannot create " + path.string());
  std::uint8_t hdr[17];
  std::memcpy(hdr, kByteLcpMagic, 8);
  hdr[8] = b.m;
  const std::uint64_t n = b.vals.size();
  for (int k = 0; k < 8; ++k) hdr[9 + k] = static_cast<std::uint8_t>(n >> (8 * k));
  if (!out.write(reinterpret_cast<const char*>(hdr), 17))
    raise(Errc::io_error, "write failed on " + path.string());
  if (n > 0 && !out.write(reinterpret_cast<const char*>(b.vals.data()),
                          static_cast<std::streamsize>(n)))
    raise(Errc::io_error, "write failed on " + path.string());
  if (!out.flush()) raise(Errc::io_error, "flush failed on " + path.string());
}

ByteLcp load_byte_lcp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open " + path.string());
  std::uint8_t hdr[17];
  if (!in.read(reinterpret_cast<char*>(hdr), 17)) raise(Errc::bad_format, "truncated header in " + path.string());
  if (std::memcmp(hdr, kByteLcpMagic, 8) != 0) raise(Errc::bad_format, "wrong magic in " + path.string());
  ByteLcp b;
  b.m = hdr[8];
  std::uint64_t n = 0;
  for (int k = 0; k < 8; ++k) n |= static_cast<std::uint64_t>(hdr[9 + k]) << (8 * k);
  if (n > kMaxTextLen) raise(Errc::bad_format, "count too large in " + path.string());
  b.vals.resize(n);
  if (n > 0 && !in.read(reinterpret_cast<char*>(b.vals.data()), static_cast<std::streamsize>(n)))
    raise(Errc::bad_format, "truncated payload in " + path.string());
  return b;
}

}  // namespace lcpf
