#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcpf/sarray.hpp"
#include "lcpf/textcore.hpp"

namespace lcpf {

// Sequential single-pass readers and writers.  Algorithms that advertise
// streaming consume their big arrays only through these interfaces; the
// memory-backed variants exist for tests and in-memory convenience wrappers.

class U32Source {
 public:
  virtual ~U32Source() = default;
  virtual std::uint32_t next() = 0;
  virtual void reset() = 0;
  virtual std::uint64_t size() const = 0;
};

class ByteSource {
 public:
  virtual ~ByteSource() = default;
  virtual std::uint8_t next() = 0;
  virtual void reset() = 0;
  virtual std::uint64_t size() const = 0;
};

class I32Sink {
 public:
  virtual ~I32Sink() = default;
  virtual void put(std::int32_t v) = 0;
};

class MemU32Source final : public U32Source {
 public:
  explicit MemU32Source(std::span<const std::uint32_t> data) : data_(data) {}
  std::uint32_t next() override;
  void reset() override { pos_ = 0; }
  std::uint64_t size() const override { return data_.size(); }

 private:
  std::span<const std::uint32_t> data_;
  std::uint64_t pos_ = 0;
};

class MemByteSource final : public ByteSource {
 public:
  explicit MemByteSource(std::span<const std::uint8_t> data) : data_(data) {}
  std::uint8_t next() override;
  void reset() override { pos_ = 0; }
  std::uint64_t size() const override { return data_.size(); }

 private:
  std::span<const std::uint8_t> data_;
  std::uint64_t pos_ = 0;
};

class VecI32Sink final : public I32Sink {
 public:
  void put(std::int32_t v) override { out.push_back(v); }
  std::vector<std::int32_t> out;
};

// Streams the last-to-first mapping for a BWT stream without materializing
// it: lf[i] = c[b] + (occurrences of b strictly before position i).
class LfSource final : public U32Source {
 public:
  LfSource(ByteSource& bwt, const CArray& c) : bwt_(&bwt), c_(&c) {}
  std::uint32_t next() override;
  void reset() override;
  std::uint64_t size() const override { return bwt_->size(); }

 private:
  ByteSource* bwt_;
  const CArray* c_;
  std::array<std::uint32_t, 256> cnt_{};
};

// File formats (integers little-endian):
//   suffix array  "LCPFSA01" + u64 count + count x u32
//   bwt           "LCPFBW01" + u64 count + count raw bytes
//   lcp           "LCPFLC01" + u64 count + count x i32
//                 (stores lcp[0..n-1]; the trailing lcp[n] = -1 is implicit)
//   byte lcp      "LCPFL801" + u8 threshold + u64 count + count raw bytes

inline constexpr char kSaMagic[9] = "LCPFSA01";
inline constexpr char kBwtMagic[9] = "LCPFBW01";
inline constexpr char kLcpMagic[9] = "LCPFLC01";
inline constexpr char kByteLcpMagic[9] = "LCPFL801";

void save_suffix_array(const SuffixArray& sa, const std::filesystem::path& path);
SuffixArray load_suffix_array(const std::filesystem::path& path);

void save_bwt(std::span<const std::uint8_t> bwt, const std::filesystem::path& path);
std::vector<std::uint8_t> load_bwt(const std::filesystem::path& path);

// Takes the full n+1-entry array and stores the first n entries.
void save_lcp(std::span<const std::int32_t> lcp, const std::filesystem::path& path);
// Returns the full n+1-entry array (appends the implicit -1).
std::vector<std::int32_t> load_lcp(const std::filesystem::path& path);

// Element count from the header of any format above; nullopt when the file
// is unreadable or carries an unknown magic.
std::optional<std::uint64_t> stored_n(const std::filesystem::path& path);

class FileU32Source final : public U32Source {
 public:
  explicit FileU32Source(const std::filesystem::path& path);
  std::uint32_t next() override;
  void reset() override;
  std::uint64_t size() const override { return n_; }

 private:
  void refill();
  std::filesystem::path path_;
  std::ifstream in_;
  std::uint64_t n_ = 0;
  std::uint64_t pos_ = 0;
  std::vector<std::uint8_t> buf_;
  std::size_t buf_pos_ = 0, buf_len_ = 0;
};

class FileByteSource final : public ByteSource {
 public:
  explicit FileByteSource(const std::filesystem::path& path);
  std::uint8_t next() override;
  void reset() override;
  std::uint64_t size() const override { return n_; }

 private:
  void refill();
  std::filesystem::path path_;
  std::ifstream in_;
  std::uint64_t n_ = 0;
  std::uint64_t pos_ = 0;
  std::vector<std::uint8_t> buf_;
  std::size_t buf_pos_ = 0, buf_len_ = 0;
};

// Writes the lcp file format; expects exactly the count given at construction.
class FileLcpSink final : public I32Sink {
 public:
  FileLcpSink(const std::filesystem::path& path, std::uint64_t count);
  void put(std::int32_t v) override;
  // Flushes and validates that exactly `count` values were written.
  void finish();

 private:
  std::ofstream out_;
  std::filesystem::path path_;
  std::uint64_t expect_ = 0, written_ = 0;
  std::vector<std::uint8_t> buf_;
};

}  // namespace lcpf
