#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string_view>
#include <vector>

#include "lcpf/bwt.hpp"
#include "lcpf/sarray.hpp"
#include "lcpf/textcore.hpp"

#include "testutil.hpp"

using namespace lcpf;

namespace {

std::vector<std::uint8_t> as_bytes(const std::string& s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

}  // namespace

TEST_CASE("bwt, lf, and run count of banana") {
  const Text t = load_text(std::string_view(testutil::kBanana));
  const SuffixArray sa = build_suffix_array(t);
  const std::vector<std::uint8_t> bwt = build_bwt(t, sa);
  CHECK(bwt == as_bytes(testutil::kBananaBwt));
  CHECK(build_lf(bwt, build_c_array(t)) == testutil::kBananaLf);
  CHECK(bwt_run_count(bwt) == testutil::kBananaBwtRuns);
}

TEST_CASE("bwt, lf, and run count of the worked example") {
  const Text t = load_text(std::string_view(testutil::kElAnele));
  const SuffixArray sa = build_suffix_array(t);
  const std::vector<std::uint8_t> bwt = build_bwt(t, sa);
  CHECK(bwt == as_bytes(testutil::kElAneleBwt));
  CHECK(build_lf(bwt, build_c_array(t)) == testutil::kElAneleLf);
  CHECK(bwt_run_count(bwt) == testutil::kElAneleBwtRuns);
}

TEST_CASE("empty text") {
  const Text t = load_text(std::string_view(""));
  const SuffixArray sa = build_suffix_array(t);
  const std::vector<std::uint8_t> bwt = build_bwt(t, sa);
  REQUIRE(bwt.size() == 1);
  CHECK(bwt[0] == kSentinel);
  const std::vector<std::uint32_t> lf = build_lf(bwt, build_c_array(t));
  REQUIRE(lf.size() == 1);
  CHECK(lf[0] == 0);
  CHECK(bwt_run_count(bwt) == 1);
}

TEST_CASE("iterating lf from the sentinel row spells the text backwards") {
  std::uint64_t seed = 77;
  for (std::uint32_t len : {1u, 2u, 13u, 400u}) {
    const Text t = testutil::random_text(len, 5, seed++);
    const SuffixArray sa = build_suffix_array(t);
    const std::vector<std::uint8_t> bwt = build_bwt(t, sa);
    const std::vector<std::uint32_t> lf = build_lf(bwt, build_c_array(t));
    // Row 0 holds the sentinel suffix; bwt[row] walks t[n-2], t[n-3], ...
    std::uint32_t row = 0;
    for (std::uint32_t k = 0; k + 1 < t.n(); ++k) {
      CHECK(bwt[row] == t[t.n() - 2 - k]);
      row = lf[row];
    }
    CHECK(bwt[row] == kSentinel);
    CHECK(lf[row] == 0);
  }
}

TEST_CASE("lf maps row i to the row of suffix sa[i]-1") {
  const Text t = testutil::random_text(300, 3, 9);
  const SuffixArray sa = build_suffix_array(t);
  const InverseSuffixArray isa = invert(sa);
  const std::vector<std::uint32_t> lf = build_lf(build_bwt(t, sa), build_c_array(t));
  for (std::uint32_t i = 0; i < t.n(); ++i) {
    const std::uint32_t j = sa.sa[i];
    const std::uint32_t expect = j == 0 ? 0 : isa.isa[j - 1];
    CHECK(lf[i] == expect);
  }
}
