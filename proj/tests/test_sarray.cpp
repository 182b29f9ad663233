#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string_view>

#include "lcpf/error.hpp"
#include "lcpf/sarray.hpp"
#include "lcpf/textcore.hpp"

#include "testutil.hpp"

using namespace lcpf;

TEST_CASE("suffix array of banana") {
  const Text t = load_text(std::string_view(testutil::kBanana));
  const SuffixArray sa = build_suffix_array(t);
  CHECK(sa.sa == testutil::kBananaSa);
  CHECK(invert(sa).isa == testutil::kBananaIsa);
  CHECK(verify_suffix_array(t, sa));
}

TEST_CASE("suffix array of the worked example") {
  const Text t = load_text(std::string_view(testutil::kElAnele));
  const SuffixArray sa = build_suffix_array(t);
  CHECK(sa.sa == testutil::kElAneleSa);
  const InverseSuffixArray isa = invert(sa);
  CHECK(isa.isa[18] == 0);
  CHECK(isa.isa[2] == 1);
  CHECK(isa.isa[0] == 6);
  CHECK(verify_suffix_array(t, sa));
}

TEST_CASE("suffix array of the empty text") {
  const Text t = load_text(std::string_view(""));
  const SuffixArray sa = build_suffix_array(t);
  REQUIRE(sa.sa.size() == 1);
  CHECK(sa.sa[0] == 0);
  CHECK(verify_suffix_array(t, sa));
}

TEST_CASE("unary text sorts suffixes by decreasing start") {
  const Text t = testutil::unary_text(50);
  const SuffixArray sa = build_suffix_array(t);
  for (std::uint32_t i = 0; i < t.n(); ++i) CHECK(sa.sa[i] == t.n() - 1 - i);
}

TEST_CASE("matches brute-force sort on random texts") {
  std::uint64_t seed = 1;
  for (std::uint32_t sigma : {1u, 2u, 4u, 26u, 255u}) {
    for (std::uint32_t len : {1u, 2u, 3u, 7u, 40u, 257u, 1000u}) {
      const Text t = testutil::random_text(len, sigma, seed++);
      const SuffixArray sa = build_suffix_array(t);
      CHECK(sa.sa == testutil::brute_suffix_sort(t).sa);
      CHECK(verify_suffix_array(t, sa));
    }
  }
}

TEST_CASE("matches brute-force sort on structured texts") {
  for (const Text& t : {testutil::ab_repeat(500), testutil::de_bruijn(2, 9),
                        testutil::de_bruijn(3, 5)}) {
    const SuffixArray sa = build_suffix_array(t);
    CHECK(sa.sa == testutil::brute_suffix_sort(t).sa);
    CHECK(verify_suffix_array(t, sa));
  }
}

TEST_CASE("verify_suffix_array rejects corruption") {
  const Text t = load_text(std::string_view(testutil::kBanana));
  SuffixArray sa = build_suffix_array(t);
  std::swap(sa.sa[2], sa.sa[3]);
  CHECK_FALSE(verify_suffix_array(t, sa));
}

TEST_CASE("invert rejects a non-permutation") {
  SuffixArray sa;
  sa.sa = {0, 2, 2};
  CHECK_THROWS_AS(invert(sa), Error);
  SuffixArray oob;
  oob.sa = {0, 5};
  CHECK_THROWS_AS(invert(oob), Error);
}
