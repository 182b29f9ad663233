#include "lcpf/textcore.hpp"

#include <cstring>
#include <fstream>

namespace lcpf {

Text load_text(std::span<const std::uint8_t> raw) {
  if (raw.size() > kMaxTextLen - 1) raise(Errc::too_large, "input longer than 2^32-3 bytes");
  if (!raw.empty() && std::memchr(raw.data(), kSentinel, raw.size()) != nullptr)
    raise(Errc::embedded_sentinel, "input contains the 0x00 sentinel byte");
  Text t;
  t.bytes.reserve(raw.size() + 1);
  t.bytes.assign(raw.begin(), raw.end());
  t.bytes.push_back(kSentinel);
  return t;
}

Text load_text(std::string_view raw) {
  return load_text(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
}

Text load_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open " + path.string());
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (ec) raise(Errc::io_error, "cannot stat " + path.string());
  if (size > kMaxTextLen - 1) raise(Errc::too_large, "input longer than 2^32-3 bytes");
  std::vector<std::uint8_t> raw(static_cast<std::size_t>(size));
  if (size > 0 && !in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(size)))
    raise(Errc::io_error, "short read on " + path.string());
  return load_text(std::span<const std::uint8_t>(raw));
}

CArray build_c_array(const Text& t) {
  std::array<std::uint32_t, 256> freq{};
  for (std::uint8_t b : t.bytes) ++freq[b];
  CArray out;
  std::uint32_t sum = 0;
  for (std::uint32_t x = 0; x < 256; ++x) {
    out.c[x] = sum;
    sum += freq[x];
  }
  out.c[256] = sum;
  return out;
}

std::uint32_t CArray::sigma_effective() const {
  std::uint32_t k = 0;
  for (std::uint32_t x = 0; x < 256; ++x)
    if (c[x + 1] != c[x]) ++k;
  return k;
}

}  // namespace lcpf
