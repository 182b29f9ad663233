#include "lcpf/laca_go.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "lcpf/error.hpp"

namespace lcpf {

void RmqStack::push(std::uint32_t i, std::int32_t v) {
  while (!entries_.empty() && entries_.back().val >= v) entries_.pop_back();
  entries_.push_back({i, v});
  if (entries_.size() > 512)
    raise(Errc::inconsistent_inputs, "range-minimum stack exceeded its 2*sigma bound");
}

std::int32_t RmqStack::query(std::uint32_t from) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), from,
                                   [](const Entry& e, std::uint32_t x) { return e.idx < x; });
  if (it == entries_.end()) raise(Errc::not_found, "range-minimum query beyond stack top");
  return it->val;
}

void RmqStack::trim(const std::array<std::int64_t, 256>& lastocc) {
  if (entries_.size() <= 256) return;
  std::vector<char> keep(entries_.size(), 0);
  for (int ch = 0; ch < 256; ++ch) {
    const std::uint64_t from = static_cast<std::uint64_t>(lastocc[ch] + 1);
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), from,
                                     [](const Entry& e, std::uint64_t x) { return e.idx < x; });
    if (it != entries_.end()) keep[static_cast<std::size_t>(it - entries_.begin())] = 1;
  }
  std::size_t w = 0;
  for (std::size_t r = 0; r < entries_.size(); ++r)
    if (keep[r]) entries_[w++] = entries_[r];
  entries_.resize(w);
}

bool is_defined(std::uint32_t i, std::uint8_t first_char, std::uint8_t /*bwt_char*/, const CArray& c,
                const UndefCounters& u) {
  return static_cast<std::uint64_t>(i) < c.c[first_char] + u.cnt[first_char];
}

namespace {

std::filesystem::path unique_queue_dir(const std::filesystem::path& root) {
  std::random_device rd;
  const std::uint64_t tag = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  char name[32];
  std::snprintf(name, sizeof name, "lcpf-q-%016llx", static_cast<unsigned long long>(tag));
  return root / name;
}

}  // namespace

CharQueues::CharQueues(std::uint64_t buf_bytes, std::filesystem::path tmp_dir, Metrics* metrics)
    : cap_(std::max<std::uint64_t>(1, buf_bytes / 8)),
      tmp_root_(std::move(tmp_dir)),
      metrics_(metrics),
      budget_(metrics, "queue-buffers", 256 * buf_bytes) {}

CharQueues::~CharQueues() {
  for (auto& q : qs_) q.file.reset();
  if (!dir_.empty()) {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
}

std::fstream& CharQueues::file_for(Q& q, std::uint8_t c) {
  if (!q.file) {
    if (dir_.empty()) {
      const std::filesystem::path root =
          tmp_root_.empty() ? std::filesystem::temp_directory_path() : tmp_root_;
      std::filesystem::create_directories(root);
      for (int attempt = 0; attempt < 16 && dir_.empty(); ++attempt) {
        const auto cand = unique_queue_dir(root);
        std::error_code ec;
        if (std::filesystem::create_directory(cand, ec)) dir_ = cand;
      }
      if (dir_.empty()) raise(Errc::io_error, "cannot create queue spill directory");
    }
    char name[16];
    std::snprintf(name, sizeof name, "q%03u.bin", static_cast<unsigned>(c));
    const auto p = dir_ / name;
    q.file = std::make_unique<std::fstream>(
        p, std::ios::in | std::ios::out | std::ios::trunc | std::ios::binary);
    if (!*q.file) raise(Errc::io_error, "cannot create queue spill file " + p.string());
  }
  return *q.file;
}

void CharQueues::spill(Q& q, std::uint8_t c) {
  std::fstream& f = file_for(q, c);
  f.clear();
  f.seekp(static_cast<std::streamoff>(q.file_wr * 4));
  if (!f.write(reinterpret_cast<const char*>(q.tail.data()),
               static_cast<std::streamsize>(q.tail.size() * 4)))
    raise(Errc::io_error, "queue spill write failed");
  f.flush();
  q.file_wr += q.tail.size();
  spilled_ += q.tail.size();
  q.tail.clear();
}

void CharQueues::refill(Q& q) {
  q.head.clear();
  q.head_pos = 0;
  if (q.file_rd < q.file_wr) {
    const std::uint64_t k = std::min<std::uint64_t>(cap_, q.file_wr - q.file_rd);
    q.head.resize(static_cast<std::size_t>(k));
    std::fstream& f = *q.file;
    f.clear();
    f.seekg(static_cast<std::streamoff>(q.file_rd * 4));
    if (!f.read(reinterpret_cast<char*>(q.head.data()), static_cast<std::streamsize>(k * 4)))
      raise(Errc::io_error, "queue spill read failed");
    q.file_rd += k;
    if (q.file_rd == q.file_wr) q.file_rd = q.file_wr = 0;  // spill file drained; reuse it
  } else {
    q.head.swap(q.tail);
  }
}

void CharQueues::enqueue(std::uint8_t c, std::int32_t v) {
  Q& q = qs_[c];
  if (q.tail.size() >= cap_) {
    if (q.head_pos >= q.head.size() && q.file_rd == q.file_wr) {
      // Queue content is just the tail: promote it instead of touching disk.
      q.head.swap(q.tail);
      q.head_pos = 0;
      q.tail.clear();
    } else {
      spill(q, c);
    }
  }
  q.tail.push_back(v);
  ++enq_;
  if (metrics_) ++metrics_->queue_enqueues;
}

std::int32_t CharQueues::dequeue(std::uint8_t c) {
  Q& q = qs_[c];
  if (q.head_pos >= q.head.size()) refill(q);
  if (q.head_pos >= q.head.size()) raise(Errc::queue_underflow, "dequeue from empty character queue");
  ++deq_;
  if (metrics_) ++metrics_->queue_dequeues;
  return q.head[q.head_pos++];
}

void CharQueues::require_drained() const {
  for (const auto& q : qs_)
    if (q.head_pos < q.head.size() || q.file_rd < q.file_wr || !q.tail.empty())
      raise(Errc::queue_residue, "character queue not drained at end of run");
}

std::vector<std::int32_t> lcp_go(const Text& t, const SuffixArray& sa,
                                 std::span<const std::uint8_t> bwt,
                                 std::span<const std::uint32_t> lf, Metrics* metrics,
                                 const GoOptions& opt) {
  const std::uint32_t n = t.n();
  if (sa.n() != n || bwt.size() != n || lf.size() != n)
    raise(Errc::inconsistent_inputs, "input lengths disagree with the text");
  LedgerScope text_mem(metrics, "text", n);
  LedgerScope sa_mem(metrics, "sa", static_cast<std::uint64_t>(n) * 4);
  LedgerScope bwt_mem(metrics, "bwt", n);
  LedgerScope lf_mem(metrics, "lf", static_cast<std::uint64_t>(n) * 4);
  LedgerScope lcp_mem(metrics, "lcp", (static_cast<std::uint64_t>(n) + 1) * 4);

  std::vector<std::int32_t> lcp(n + 1, kLcpUndef);
  lcp[0] = -1;
  lcp[n] = -1;

  RmqStack stack;
  LastOcc lo;
  std::uint32_t pushes = 0;

  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint8_t b = bwt[i];
    const std::uint32_t lfi = lf[i];
    if (lfi >= n || (i > 0 && lfi == i))
      raise(Errc::inconsistent_inputs, "last-to-first mapping out of range or fixed");

    std::int32_t cur = lcp[i];
    if (cur == kLcpUndef) {
      std::int32_t l = 0;
      bool done = false;
      if (lfi < i) {
        l = std::max(lcp[lfi] - 1, 0);
        if (b == bwt[i - 1]) {
          // Same preceding character as the previous row: the two suffixes
          // one position left are adjacent in rank, so the value is exact.
          done = true;
        }
      }
      if (!done) {
        const std::uint32_t a = sa.sa[i], p = sa.sa[i - 1];
        for (;;) {
          if (metrics) {
            ++metrics->char_cmps;
            metrics->text_accesses += 2;
          }
          if (t.bytes[a + l] != t.bytes[p + l]) break;
          ++l;
        }
      }
      cur = l;
      lcp[i] = cur;
    }

    stack.push(i, cur);
    if (lfi > i) {
      const std::int64_t from = lo.last[b] + 1;
      const std::int32_t ans = stack.query(static_cast<std::uint32_t>(from));
      if (opt.on_rmq) opt.on_rmq(from, i, ans);
      lcp[lfi] = ans + 1;
    }
    lo.last[b] = i;
    if (opt.trim_interval != 0 && ++pushes >= opt.trim_interval) {
      stack.trim(lo.last);
      pushes = 0;
    }
  }
  return lcp;
}

void lcp_go2(const Text& t, U32Source& sa, ByteSource& bwt, U32Source& lf, CharQueues& queues,
             UndefCounters& u, const CArray& c, I32Sink& out, Metrics* metrics,
             const GoOptions& opt) {
  const std::uint32_t n = t.n();
  if (sa.size() != n || bwt.size() != n || lf.size() != n)
    raise(Errc::inconsistent_inputs, "stream lengths disagree with the text");
  queues.require_drained();
  LedgerScope text_mem(metrics, "text", n);
  sa.reset();
  bwt.reset();
  lf.reset();
  u.cnt.fill(0);

  RmqStack stack;
  LastOcc lo;
  std::uint32_t f = 0;  // first character of row i, advanced along bucket boundaries
  std::uint8_t prev_b = 0;
  std::uint32_t prev_sa = 0;
  std::uint32_t pushes = 0;

  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint8_t b = bwt.next();
    const std::uint32_t sa_i = sa.next();
    const std::uint32_t lfi = lf.next();
    if (sa_i >= n || lfi >= n) raise(Errc::inconsistent_inputs, "stream value out of range");
    if (lfi != c.c[b] + u.cnt[b])
      raise(Errc::inconsistent_inputs, "lf stream disagrees with the bwt stream");
    if (i > 0 && lfi == i) raise(Errc::inconsistent_inputs, "last-to-first mapping has a fixed point");
    while (i >= c.c[f + 1]) ++f;
    const bool defined = is_defined(i, static_cast<std::uint8_t>(f), b, c, u);

    std::int32_t cur;
    if (i == 0) {
      cur = -1;
    } else {
      std::int32_t arriving = kLcpUndef;
      if (lfi < i) {
        // Row lfi's value leaves the pipeline here: it seeds the comparison
        // when row i is still unknown, and is consumed-and-dropped otherwise
        // to keep the queue aligned.  Row 0's value is the constant -1 and
        // never travelled through a queue.
        arriving = (lfi == 0) ? -1 : queues.dequeue(b);
      }
      if (defined) {
        cur = queues.dequeue(static_cast<std::uint8_t>(f));
      } else {
        std::int32_t l = (lfi < i) ? std::max(arriving - 1, 0) : 0;
        const bool run_exact = (lfi < i) && (b == prev_b);
        if (!run_exact) {
          for (;;) {
            if (metrics) {
              ++metrics->char_cmps;
              metrics->text_accesses += 2;
            }
            if (t.bytes[sa_i + l] != t.bytes[prev_sa + l]) break;
            ++l;
          }
        }
        cur = l;
        // The row one text position left of this suffix is reached later in
        // the scan; park the fresh value in its first character's queue.
        queues.enqueue(static_cast<std::uint8_t>(f), cur);
      }
    }

    stack.push(i, cur);
    if (lfi > i) {
      const std::int64_t from = lo.last[b] + 1;
      const std::int32_t ans = stack.query(static_cast<std::uint32_t>(from));
      if (opt.on_rmq) opt.on_rmq(from, i, ans);
      queues.enqueue(b, ans + 1);
    }
    out.put(cur);
    lo.last[b] = i;
    ++u.cnt[b];
    prev_b = b;
    prev_sa = sa_i;
    if (opt.trim_interval != 0 && ++pushes >= opt.trim_interval) {
      stack.trim(lo.last);
      pushes = 0;
    }
  }
  queues.require_drained();
}

std::vector<std::int32_t> lcp_go2_mem(const Text& t, const SuffixArray& sa,
                                      std::span<const std::uint8_t> bwt, const CArray& c,
                                      std::uint64_t queue_buf_bytes,
                                      const std::filesystem::path& tmp_dir, Metrics* metrics,
                                      const GoOptions& opt) {
  MemU32Source sa_src(sa.sa);
  MemByteSource bwt_src(bwt);
  MemByteSource bwt_for_lf(bwt);
  LfSource lf_src(bwt_for_lf, c);
  CharQueues queues(queue_buf_bytes, tmp_dir, metrics);
  UndefCounters u;
  VecI32Sink sink;
  sink.out.reserve(t.n() + 1);
  lcp_go2(t, sa_src, bwt_src, lf_src, queues, u, c, sink, metrics, opt);
  sink.out.push_back(-1);
  return std::move(sink.out);
}

}  // namespace lcpf
