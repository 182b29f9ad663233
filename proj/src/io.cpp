#include "lcpf/io.hpp"

#include <cstring>

#include "lcpf/error.hpp"

namespace lcpf {
namespace {

constexpr std::size_t kIoBufBytes = 1 << 16;

void put_u64(std::vector<std::uint8_t>& b, std::uint64_t v) {
  for (int k = 0; k < 8; ++k) b.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

void put_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) b.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

std::uint64_t get_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(p[k]) << (8 * k);
  return v;
}

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(p[k]) << (8 * k);
  return v;
}

void write_all(std::ofstream& out, const std::vector<std::uint8_t>& b, const std::filesystem::path& p) {
  if (b.empty()) return;
  if (!out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size())))
    raise(Errc::io_error, "write failed on " + p.string());
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) raise(Errc::io_error, "cannot create " + p.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open " + p.string());
  return in;
}

// Reads and validates "magic + u64 count"; returns the count.
std::uint64_t read_header(std::ifstream& in, const char* magic, const std::filesystem::path& p) {
  std::uint8_t hdr[16];
  if (!in.read(reinterpret_cast<char*>(hdr), 16)) raise(Errc::bad_format, "truncated header in " + p.string());
  if (std::memcmp(hdr, magic, 8) != 0) raise(Errc::bad_format, "wrong magic in " + p.string());
  return get_u64(hdr + 8);
}

}  // namespace

std::uint32_t MemU32Source::next() {
  if (pos_ >= data_.size()) raise(Errc::io_error, "read past end of memory stream");
  return data_[pos_++];
}

std::uint8_t MemByteSource::next() {
  if (pos_ >= data_.size()) raise(Errc::io_error, "read past end of memory stream");
  return data_[pos_++];
}

std::uint32_t LfSource::next() {
  const std::uint8_t b = bwt_->next();
  return c_->c[b] + cnt_[b]++;
}

void LfSource::reset() {
  bwt_->reset();
  cnt_.fill(0);
}

void save_suffix_array(const SuffixArray& sa, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  std::vector<std::uint8_t> buf;
  buf.reserve(kIoBufBytes + 16);
  buf.insert(buf.end(), kSaMagic, kSaMagic + 8);
  put_u64(buf, sa.n());
  for (std::uint32_t v : sa.sa) {
    put_u32(buf, v);
    if (buf.size() >= kIoBufBytes) {
      write_all(out, buf, path);
      buf.clear();
    }
  }
  write_all(out, buf, path);
  if (!out.flush()) raise(Errc::io_error, "flush failed on " + path.string());
}

SuffixArray load_suffix_array(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  const std::uint64_t n = read_header(in, kSaMagic, path);
  if (n > kMaxTextLen) raise(Errc::bad_format, "count too large in " + path.string());
  SuffixArray sa;
  sa.sa.resize(n);
  std::vector<std::uint8_t> raw(n * 4);
  if (n > 0 && !in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size())))
    raise(Errc::bad_format, "truncated payload in " + path.string());
  for (std::uint64_t i = 0; i < n; ++i) sa.sa[i] = get_u32(raw.data() + i * 4);
  return sa;
}

void save_bwt(std::span<const std::uint8_t> bwt, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  std::vector<std::uint8_t> buf;
  buf.insert(buf.end(), kBwtMagic, kBwtMagic + 8);
  put_u64(buf, bwt.size());
  write_all(out, buf, path);
  if (!bwt.empty() &&
      !out.write(reinterpret_cast<const char*>(bwt.data()), static_cast<std::streamsize>(bwt.size())))
    raise(Errc::io_error, "write failed on " + path.string());
  if (!out.flush()) raise(Errc::io_error, "flush failed on " + path.string());
}

std::vector<std::uint8_t> load_bwt(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  const std::uint64_t n = read_header(in, kBwtMagic, path);
  if (n > kMaxTextLen) raise(Errc::bad_format, "count too large in " + path.string());
  std::vector<std::uint8_t> bwt(n);
  if (n > 0 && !in.read(reinterpret_cast<char*>(bwt.data()), static_cast<std::streamsize>(n)))
    raise(Errc::bad_format, "truncated payload in " + path.string());
  return bwt;
}

void save_lcp(std::span<const std::int32_t> lcp, const std::filesystem::path& path) {
  if (lcp.empty()) raise(Errc::inconsistent_inputs, "lcp array must have n+1 entries");
  const std::uint64_t n = lcp.size() - 1;
  std::ofstream out = open_out(path);
  std::vector<std::uint8_t> buf;
  buf.reserve(kIoBufBytes + 16);
  buf.insert(buf.end(), kLcpMagic, kLcpMagic + 8);
  put_u64(buf, n);
  for (std::uint64_t i = 0; i < n; ++i) {
    put_u32(buf, static_cast<std::uint32_t>(lcp[i]));
    if (buf.size() >= kIoBufBytes) {
      write_all(out, buf, path);
      buf.clear();
    }
  }
  write_all(out, buf, path);
  if (!out.flush()) raise(Errc::io_error, "flush failed on " + path.string());
}

std::vector<std::int32_t> load_lcp(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  const std::uint64_t n = read_header(in, kLcpMagic, path);
  if (n > kMaxTextLen) raise(Errc::bad_format, "count too large in " + path.string());
  std::vector<std::int32_t> lcp(n + 1);
  std::vector<std::uint8_t> raw(n * 4);
  if (n > 0 && !in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size())))
    raise(Errc::bad_format, "truncated payload in " + path.string());
  for (std::uint64_t i = 0; i < n; ++i)
    lcp[i] = static_cast<std::int32_t>(get_u32(raw.data() + i * 4));
  lcp[n] = -1;
  return lcp;
}

std::optional<std::uint64_t> stored_n(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::uint8_t hdr[17];
  if (!in.read(reinterpret_cast<char*>(hdr), 16)) return std::nullopt;
  if (std::memcmp(hdr, kSaMagic, 8) == 0 || std::memcmp(hdr, kBwtMagic, 8) == 0 ||
      std::memcmp(hdr, kLcpMagic, 8) == 0)
    return get_u64(hdr + 8);
  if (std::memcmp(hdr, kByteLcpMagic, 8) == 0) {
    if (!in.read(reinterpret_cast<char*>(hdr + 16), 1)) return std::nullopt;
    return get_u64(hdr + 9);
  }
  return std::nullopt;
}

FileU32Source::FileU32Source(const std::filesystem::path& path) : path_(path), in_(open_in(path)) {
  n_ = read_header(in_, kSaMagic, path_);
  buf_.resize(kIoBufBytes);
}

void FileU32Source::refill() {
  const std::uint64_t remaining = (n_ - pos_) * 4;
  const std::size_t want = static_cast<std::size_t>(std::min<std::uint64_t>(buf_.size(), remaining));
  if (want == 0) raise(Errc::io_error, "read past end of " + path_.string());
  if (!in_.read(reinterpret_cast<char*>(buf_.data()), static_cast<std::streamsize>(want)))
    raise(Errc::bad_format, "truncated payload in " + path_.string());
  buf_pos_ = 0;
  buf_len_ = want;
}

std::uint32_t FileU32Source::next() {
  if (pos_ >= n_) raise(Errc::io_error, "read past end of " + path_.string());
  if (buf_pos_ + 4 > buf_len_) refill();
  const std::uint32_t v = get_u32(buf_.data() + buf_pos_);
  buf_pos_ += 4;
  ++pos_;
  return v;
}

void FileU32Source::reset() {
  in_.clear();
  if (!in_.seekg(16)) raise(Errc::io_error, "seek failed on " + path_.string());
  pos_ = 0;
  buf_pos_ = buf_len_ = 0;
}

FileByteSource::FileByteSource(const std::filesystem::path& path) : path_(path), in_(open_in(path)) {
  n_ = read_header(in_, kBwtMagic, path_);
  buf_.resize(kIoBufBytes);
}

void FileByteSource::refill() {
  const std::uint64_t remaining = n_ - pos_;
  const std::size_t want = static_cast<std::size_t>(std::min<std::uint64_t>(buf_.size(), remaining));
  if (want == 0) raise(Errc::io_error, "read past end of " + path_.string());
  if (!in_.read(reinterpret_cast<char*>(buf_.data()), static_cast<std::streamsize>(want)))
    raise(Errc::bad_format, "truncated payload in " + path_.string());
  buf_pos_ = 0;
  buf_len_ = want;
}

std::uint8_t FileByteSource::next() {
  if (pos_ >= n_) raise(Errc::io_error, "read past end of " + path_.string());
  if (buf_pos_ >= buf_len_) refill();
  ++pos_;
  return buf_[buf_pos_++];
}

void FileByteSource::reset() {
  in_.clear();
  if (!in_.seekg(16)) raise(Errc::io_error, "seek failed on " + path_.string());
  pos_ = 0;
  buf_pos_ = buf_len_ = 0;
}

FileLcpSink::FileLcpSink(const std::filesystem::path& path, std::uint64_t count)
    : out_(open_out(path)), path_(path), expect_(count) {
  buf_.reserve(kIoBufBytes + 16);
  buf_.insert(buf_.end(), kLcpMagic, kLcpMagic + 8);
  put_u64(buf_, count);
}

void FileLcpSink::put(std::int32_t v) {
  ++written_;
  if (written_ > expect_) raise(Errc::io_error, "more lcp values than declared for " + path_.string());
  put_u32(buf_, static_cast<std::uint32_t>(v));
  if (buf_.size() >= kIoBufBytes) {
    write_all(out_, buf_, path_);
    buf_.clear();
  }
}

void FileLcpSink::finish() {
  if (written_ != expect_) raise(Errc::io_error, "fewer lcp values than declared for " + path_.string());
  write_all(out_, buf_, path_);
  buf_.clear();
  if (!out_.flush()) raise(Errc::io_error, "flush failed on " + path_.string());
}

}  // namespace lcpf
