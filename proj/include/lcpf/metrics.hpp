#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace lcpf {

// Byte accounting for the arrays an algorithm keeps resident. Only explicit
// add/drop calls are counted, so the numbers are deterministic and reflect
// what the algorithm needs at hand, not allocator or OS behaviour. Inputs
// that are consumed strictly sequentially are not registered.
class MemoryLedger {
 public:
  void add(const std::string& label, std::uint64_t bytes) {
    live_[label] += bytes;
    current_ += bytes;
    if (current_ > peak_) {
      peak_ = current_;
      peak_live_ = live_;
    }
  }
  void drop(const std::string& label) {
    auto it = live_.find(label);
    if (it == live_.end()) return;
    current_ -= it->second;
    live_.erase(it);
  }
  std::uint64_t current() const { return current_; }
  std::uint64_t peak() const { return peak_; }
  const std::map<std::string, std::uint64_t>& live() const { return live_; }
  const std::map<std::string, std::uint64_t>& peak_breakdown() const { return peak_live_; }

 private:
  std::map<std::string, std::uint64_t> live_, peak_live_;
  std::uint64_t current_ = 0, peak_ = 0;
};

// Shared instrumentation. char_cmps counts character comparisons performed by
// extension loops, text_accesses the byte reads those comparisons do.
// phase2_reducible_cmps attributes comparisons to entries whose value is
// derived without comparing (it must stay 0).
struct Metrics {
  std::uint64_t char_cmps = 0;
  std::uint64_t text_accesses = 0;
  std::uint64_t queue_enqueues = 0;
  std::uint64_t queue_dequeues = 0;
  std::uint64_t phase2_reducible_cmps = 0;
  MemoryLedger ledger;
  std::map<std::string, std::uint64_t> checkpoints;
};

// RAII ledger entry; inert when metrics is null.
class LedgerScope {
 public:
  LedgerScope(Metrics* m, std::string label, std::uint64_t bytes) : m_(m), label_(std::move(label)) {
    if (m_) m_->ledger.add(label_, bytes);
  }
  ~LedgerScope() {
    if (m_) m_->ledger.drop(label_);
  }
  LedgerScope(const LedgerScope&) = delete;
  LedgerScope& operator=(const LedgerScope&) = delete;

 private:
  Metrics* m_;
  std::string label_;
};

}  // namespace lcpf
