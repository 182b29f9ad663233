#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string_view>

#include "lcpf/error.hpp"
#include "lcpf/textcore.hpp"

#include "testutil.hpp"

using namespace lcpf;

TEST_CASE("load_text appends the sentinel") {
  const Text t = load_text(std::string_view("banana"));
  CHECK(t.n() == 7);
  CHECK(t[0] == 'b');
  CHECK(t[5] == 'a');
  CHECK(t[6] == kSentinel);
}

TEST_CASE("empty input becomes the lone sentinel") {
  const Text t = load_text(std::string_view(""));
  CHECK(t.n() == 1);
  CHECK(t[0] == kSentinel);
}

TEST_CASE("embedded 0x00 byte is rejected") {
  const std::string s("ab\0c", 4);
  CHECK_THROWS_AS(load_text(std::string_view(s)), Error);
  try {
    load_text(std::string_view(s));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::embedded_sentinel);
  }
}

TEST_CASE("c array for banana") {
  const Text t = load_text(std::string_view(testutil::kBanana));
  const CArray c = build_c_array(t);
  CHECK(c.c[0] == 0);
  CHECK(c.c['a'] == 1);
  CHECK(c.c['b'] == 4);
  CHECK(c.c['n'] == 5);
  CHECK(c.c['n' + 1] == 7);
  CHECK(c.c[256] == 7);
  CHECK(c.freq('a') == 3);
  CHECK(c.freq('b') == 1);
  CHECK(c.freq('n') == 2);
  CHECK(c.freq(kSentinel) == 1);
  CHECK(c.freq('z') == 0);
  CHECK(c.sigma_effective() == 4);
}

TEST_CASE("c array for the worked example") {
  const Text t = load_text(std::string_view(testutil::kElAnele));
  const CArray c = build_c_array(t);
  CHECK(c.c[0] == 0);
  CHECK(c.c['_'] == 1);
  CHECK(c.c['a'] == 3);
  CHECK(c.c['e'] == 5);
  CHECK(c.c['l'] == 11);
  CHECK(c.c['n'] == 15);
  CHECK(c.c['p'] == 18);
  CHECK(c.c[256] == 19);
  CHECK(c.sigma_effective() == 7);
}

TEST_CASE("load_text_file round trip") {
  namespace fs = std::filesystem;
  const fs::path p = fs::temp_directory_path() / "lcpf_textcore_test.bin";
  {
    std::ofstream f(p, std::ios::binary);
    f << "mississippi";
  }
  const Text t = load_text_file(p);
  CHECK(t.n() == 12);
  CHECK(t[0] == 'm');
  CHECK(t[10] == 'i');
  CHECK(t[11] == kSentinel);
  fs::remove(p);
}

TEST_CASE("load_text_file on an empty file") {
  namespace fs = std::filesystem;
  const fs::path p = fs::temp_directory_path() / "lcpf_textcore_empty.bin";
  { std::ofstream f(p, std::ios::binary); }
  const Text t = load_text_file(p);
  CHECK(t.n() == 1);
  CHECK(t[0] == kSentinel);
  fs::remove(p);
}

TEST_CASE("load_text_file on a missing file raises") {
  CHECK_THROWS_AS(load_text_file("/nonexistent/lcpf/file.bin"), Error);
}
