#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "lcpf/io.hpp"
#include "lcpf/metrics.hpp"
#include "lcpf/sarray.hpp"
#include "lcpf/textcore.hpp"

namespace lcpf {

// Interior lcp entries start out in this state; boundary entries are -1 from
// the beginning and therefore never look undefined.
inline constexpr std::int32_t kLcpUndef = -2;

// Monotone stack answering "minimum lcp value at index >= x" over the prefix
// of positions pushed so far.  Entries are strictly increasing in both index
// and value, so a binary search on the index component answers queries.
class RmqStack {
 public:
  struct Entry {
    std::uint32_t idx;
    std::int32_t val;
  };

  // Pops every entry with value >= v, then pushes (i, v).
  void push(std::uint32_t i, std::int32_t v);

  // Value of the entry with minimal index >= from; equals the minimum of all
  // values pushed for indices in [from, top index].
  std::int32_t query(std::uint32_t from) const;

  // Keeps, for every character c, the entry with minimal index >= lastocc[c]+1
  // (the only entry that can still answer a future query for c); drops the rest.
  void trim(const std::array<std::int64_t, 256>& lastocc);

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

// lastocc[c] = latest position strictly before the current one whose BWT
// character is c, or -1 when c has not occurred yet.
struct LastOcc {
  std::array<std::int64_t, 256> last;
  LastOcc() { last.fill(-1); }
};

// Running character counts over the consumed BWT prefix: at iteration i,
// cnt[c] = number of occurrences of c among bwt[0..i-1].
struct UndefCounters {
  std::array<std::uint64_t, 256> cnt{};
};

// Streaming replacement for "lcp[i] still undefined".  Row i's value has
// already been produced by an earlier iteration exactly when the row one
// text position further left sits above it, i.e. when first_char's bucket
// has already covered row i:  i < c[first_char] + cnt[first_char].
// first_char is the first character of row i (the F column); bwt_char is
// accepted for signature completeness but does not enter the test: counting
// occurrences of bwt_char instead misclassifies rows where the two characters
// differ (caught by cross-checking against the array-based variant).
bool is_defined(std::uint32_t i, std::uint8_t first_char, std::uint8_t bwt_char, const CArray& c,
                const UndefCounters& u);

// One FIFO queue per character with a bounded in-memory buffer and disk
// spill.  buf_bytes is the per-character budget, split between an enqueue
// and a dequeue buffer; total resident memory is 256 * buf_bytes.
class CharQueues {
 public:
  explicit CharQueues(std::uint64_t buf_bytes = 65536, std::filesystem::path tmp_dir = {},
                      Metrics* metrics = nullptr);
  ~CharQueues();
  CharQueues(const CharQueues&) = delete;
  CharQueues& operator=(const CharQueues&) = delete;

  void enqueue(std::uint8_t c, std::int32_t v);
  std::int32_t dequeue(std::uint8_t c);

  // Every queue must be empty once a run finishes; residue means misrouting.
  void require_drained() const;

  std::uint64_t enqueued() const { return enq_; }
  std::uint64_t dequeued() const { return deq_; }
  std::uint64_t spilled() const { return spilled_; }

 private:
  struct Q {
    std::vector<std::int32_t> head;  // oldest values, consumed from head_pos
    std::vector<std::int32_t> tail;  // newest values
    std::size_t head_pos = 0;
    std::uint64_t file_rd = 0, file_wr = 0;  // element offsets into the spill file
    std::unique_ptr<std::fstream> file;
  };

  void spill(Q& q, std::uint8_t c);
  void refill(Q& q);
  std::fstream& file_for(Q& q, std::uint8_t c);

  std::uint64_t cap_;  // elements per buffer
  std::filesystem::path tmp_root_;
  std::filesystem::path dir_;  // created lazily on first spill
  std::array<Q, 256> qs_;
  Metrics* metrics_;
  LedgerScope budget_;
  std::uint64_t enq_ = 0, deq_ = 0, spilled_ = 0;
};

struct GoOptions {
  // The stack is compacted after this many pushes (one per lcp position).
  std::uint32_t trim_interval = 256;
  // Test instrumentation: observes every stack query as (from, i, answer),
  // where the answer is the minimum lcp value over ranks [from, i].
  std::function<void(std::int64_t from, std::uint32_t i, std::int32_t answer)> on_rmq;
};

// In-memory construction driven by the last-to-first mapping: values are
// seeded from already-known entries (one filled row per iteration), extended
// by direct comparison only when unavoidable, and forwarded to later rows
// through the range-minimum stack.
std::vector<std::int32_t> lcp_go(const Text& t, const SuffixArray& sa,
                                 std::span<const std::uint8_t> bwt,
                                 std::span<const std::uint32_t> lf, Metrics* metrics = nullptr,
                                 const GoOptions& opt = {});

// Semi-external variant: sa/bwt/lf arrive as single-pass streams, finished
// values leave through `out` in rank order, and values needed again later
// travel through per-character queues.  Only the text is accessed randomly.
void lcp_go2(const Text& t, U32Source& sa, ByteSource& bwt, U32Source& lf, CharQueues& queues,
             UndefCounters& u, const CArray& c, I32Sink& out, Metrics* metrics = nullptr,
             const GoOptions& opt = {});

// Convenience wrapper: memory-backed streams, fresh queues, collected result.
std::vector<std::int32_t> lcp_go2_mem(const Text& t, const SuffixArray& sa,
                                      std::span<const std::uint8_t> bwt, const CArray& c,
                                      std::uint64_t queue_buf_bytes = 65536,
                                      const std::filesystem::path& tmp_dir = {},
                                      Metrics* metrics = nullptr, const GoOptions& opt = {});

}  // namespace lcpf
