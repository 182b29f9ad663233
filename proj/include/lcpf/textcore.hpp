#pragma once

// Input text handling: sentinel-terminated byte texts and cumulative
// character counts.

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "lcpf/error.hpp"

namespace lcpf {

inline constexpr std::uint8_t kSentinel = 0x00;
// Total length including the sentinel; keeps every index in 32 bits.
inline constexpr std::uint64_t kMaxTextLen = (std::uint64_t{1} << 32) - 2;

// The input bytes plus one appended sentinel, which is the unique smallest
// byte of the text and occurs only at the end. n counts the sentinel.
struct Text {
  std::vector<std::uint8_t> bytes;

  std::uint32_t n() const { return static_cast<std::uint32_t>(bytes.size()); }
  std::uint8_t operator[](std::uint32_t i) const { return bytes[i]; }
};

// c[x] = number of text positions holding a byte smaller than x,
// so c[0] = 0 and c[256] = n. Suffixes starting with byte x occupy the
// suffix-array interval [c[x], c[x+1]).
struct CArray {
  std::array<std::uint32_t, 257> c{};

  std::uint32_t freq(std::uint8_t x) const { return c[x + 1u] - c[x]; }
  std::uint32_t sigma_effective() const;
};

Text load_text(std::span<const std::uint8_t> raw);
Text load_text(std::string_view raw);
Text load_text_file(const std::filesystem::path& path);

CArray build_c_array(const Text& t);

}  // namespace lcpf
