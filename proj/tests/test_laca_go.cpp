#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string_view>
#include <vector>

#include "lcpf/bwt.hpp"
#include "lcpf/error.hpp"
#include "lcpf/io.hpp"
#include "lcpf/laca_baseline.hpp"
#include "lcpf/laca_go.hpp"
#include "lcpf/sarray.hpp"
#include "lcpf/textcore.hpp"

#include "testutil.hpp"

using namespace lcpf;

namespace {

struct Prepared {
  Text t;
  SuffixArray sa;
  CArray c;
  std::vector<std::uint8_t> bwt;
  std::vector<std::uint32_t> lf;
  std::vector<std::int32_t> want;
};

Prepared prepare(Text text) {
  Prepared p;
  p.t = std::move(text);
  p.sa = build_suffix_array(p.t);
  p.c = build_c_array(p.t);
  p.bwt = build_bwt(p.t, p.sa);
  p.lf = build_lf(p.bwt, p.c);
  p.want = testutil::naive_lcp(p.t, p.sa);
  return p;
}

}  // namespace

TEST_CASE("rmq stack push pops values greater or equal") {
  RmqStack k;
  k.push(0, -1);
  REQUIRE(k.size() == 1);
  k.push(1, 0);
  REQUIRE(k.size() == 2);
  CHECK(k.entries()[1].idx == 1);
  CHECK(k.entries()[1].val == 0);

  RmqStack k2;
  k2.push(0, -1);
  k2.push(3, 0);
  k2.push(4, 5);
  k2.push(5, 0);  // removes (4,5) and the equal-valued (3,0)
  REQUIRE(k2.size() == 2);
  CHECK(k2.entries()[0].idx == 0);
  CHECK(k2.entries()[0].val == -1);
  CHECK(k2.entries()[1].idx == 5);
  CHECK(k2.entries()[1].val == 0);
}

TEST_CASE("rmq stack query finds the minimal index at or after x") {
  RmqStack k;
  k.push(0, -1);
  k.push(3, 0);
  k.push(4, 5);
  CHECK(k.query(4) == 5);
  CHECK(k.query(1) == 0);
  CHECK(k.query(0) == -1);
  CHECK_THROWS_AS(k.query(5), Error);

  RmqStack single;
  single.push(0, -1);
  CHECK(single.query(0) == -1);
}

TEST_CASE("rmq stack trim keeps exactly the possible future answers") {
  std::array<std::int64_t, 256> lastocc;
  lastocc.fill(-1);

  SUBCASE("a stack within the size bound is left alone") {
    RmqStack k;
    k.push(2, 1);
    k.push(7, 3);
    k.push(9, 6);
    k.push(12, 8);
    k.trim(lastocc);
    CHECK(k.size() == 4);
  }

  // The sweep only runs once the stack outgrows the alphabet bound, so build
  // 300 strictly increasing entries.
  RmqStack k;
  for (std::uint32_t i = 0; i < 300; ++i) k.push(i, static_cast<std::int32_t>(i));

  SUBCASE("all characters unseen: every query starts at 0, bottom survives") {
    k.trim(lastocc);
    REQUIRE(k.size() == 1);
    CHECK(k.entries()[0].idx == 0);
    CHECK(k.entries()[0].val == 0);
  }
  SUBCASE("each seen character keeps its own candidate entry") {
    lastocc['a'] = 149;  // candidate: idx 150
    lastocc['b'] = 298;  // candidate: idx 299
    k.trim(lastocc);     // plus idx 0 for the unseen characters
    REQUIRE(k.size() == 3);
    CHECK(k.entries()[0].idx == 0);
    CHECK(k.entries()[1].idx == 150);
    CHECK(k.entries()[2].idx == 299);
  }
  SUBCASE("queries behave identically before and after a trim") {
    lastocc['x'] = 17;
    lastocc['y'] = 203;
    RmqStack before = k;
    k.trim(lastocc);
    for (int c : {'x', 'y'}) {
      const auto from = static_cast<std::uint32_t>(lastocc[c] + 1);
      CHECK(k.query(from) == before.query(from));
    }
    CHECK(k.query(0) == before.query(0));
  }
}

TEST_CASE("definedness test against the inverse mapping oracle") {
  for (const std::string& s : {testutil::kElAnele, testutil::kBanana}) {
    const Prepared p = prepare(load_text(std::string_view(s)));
    const std::uint32_t n = p.t.n();
    // psi[k] = the row that maps to k; row i is defined iff psi[i] < i,
    // i.e. some earlier iteration already produced its value.
    std::vector<std::uint32_t> psi(n);
    for (std::uint32_t j = 0; j < n; ++j) psi[p.lf[j]] = j;

    UndefCounters u;
    std::uint32_t f = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      while (i >= p.c.c[f + 1]) ++f;
      if (i > 0) {
        const bool defined =
            is_defined(i, static_cast<std::uint8_t>(f), p.bwt[i], p.c, u);
        CHECK(defined == (psi[i] < i));
      }
      ++u.cnt[p.bwt[i]];
    }
  }
}

TEST_CASE("go reproduces the worked example") {
  const Prepared p = prepare(load_text(std::string_view(testutil::kElAnele)));
  CHECK(lcp_go(p.t, p.sa, p.bwt, p.lf) == testutil::kElAneleLcp);
  CHECK(p.want == testutil::kElAneleLcp);
}

TEST_CASE("go trace: iteration 1 installs both rank-1 and rank-11 values") {
  const Prepared p = prepare(load_text(std::string_view(testutil::kElAnele)));
  // At i=1 the stack query spans [0,1] and answers -1; line 14 then writes
  // lcp[lf[1]] = lcp[11] = 0, while the extension loop settled lcp[1] = 0.
  bool saw_i1 = false;
  GoOptions opt;
  opt.on_rmq = [&](std::int64_t from, std::uint32_t i, std::int32_t answer) {
    if (i == 1) {
      saw_i1 = true;
      CHECK(from == 0);
      CHECK(answer == -1);
    }
  };
  const std::vector<std::int32_t> lcp = lcp_go(p.t, p.sa, p.bwt, p.lf, nullptr, opt);
  CHECK(saw_i1);
  CHECK(lcp[1] == 0);
  CHECK(lcp[11] == 0);
}

TEST_CASE("every stack query equals a naive range minimum") {
  std::uint64_t seed = 900;
  for (std::uint32_t sigma : {2u, 4u, 26u}) {
    const Prepared p = prepare(testutil::random_text(600, sigma, seed++));
    GoOptions opt;
    std::uint64_t queries = 0;
    opt.on_rmq = [&](std::int64_t from, std::uint32_t i, std::int32_t answer) {
      ++queries;
      CHECK(answer == testutil::naive_range_min(p.want, static_cast<std::uint64_t>(from), i));
    };
    CHECK(lcp_go(p.t, p.sa, p.bwt, p.lf, nullptr, opt) == p.want);
    CHECK(queries > 0);
  }
}

TEST_CASE("go matches the oracle on random and structured texts") {
  std::uint64_t seed = 33;
  for (std::uint32_t sigma : {1u, 2u, 4u, 26u, 255u}) {
    for (std::uint32_t len : {1u, 2u, 3u, 17u, 301u, 4096u}) {
      const Prepared p = prepare(testutil::random_text(len, sigma, seed++));
      CHECK(lcp_go(p.t, p.sa, p.bwt, p.lf) == p.want);
    }
  }
  for (Text t : {testutil::ab_repeat(2000), testutil::unary_text(1500),
                 testutil::de_bruijn(2, 11)}) {
    const Prepared p = prepare(std::move(t));
    CHECK(lcp_go(p.t, p.sa, p.bwt, p.lf) == p.want);
  }
}

TEST_CASE("trim interval does not change results") {
  std::uint64_t seed = 55;
  for (std::uint32_t interval : {1u, 2u, 7u, 256u, 1u << 30}) {
    const Prepared p = prepare(testutil::random_text(701, 3, seed));
    GoOptions opt;
    opt.trim_interval = interval;
    CHECK(lcp_go(p.t, p.sa, p.bwt, p.lf, nullptr, opt) == p.want);
    CHECK(lcp_go2_mem(p.t, p.sa, p.bwt, p.c, 64, {}, nullptr, opt) == p.want);
  }
}

TEST_CASE("empty text") {
  const Prepared p = prepare(load_text(std::string_view("")));
  const std::vector<std::int32_t> expect = {-1, -1};
  CHECK(lcp_go(p.t, p.sa, p.bwt, p.lf) == expect);
  Metrics m;
  CHECK(lcp_go2_mem(p.t, p.sa, p.bwt, p.c, 65536, {}, &m) == expect);
  CHECK(m.queue_enqueues == 0);
  CHECK(m.queue_dequeues == 0);
}

TEST_CASE("character queues are fifo per character, including across spills") {
  Metrics m;
  CharQueues q(16, {}, &m);  // 4-element buffers force spilling
  for (std::int32_t v = 0; v < 100; ++v) q.enqueue('x', v);
  for (std::int32_t v = 0; v < 50; ++v) q.enqueue('y', 1000 + v);
  CHECK(q.spilled() > 0);
  for (std::int32_t v = 0; v < 100; ++v) CHECK(q.dequeue('x') == v);
  for (std::int32_t v = 0; v < 50; ++v) CHECK(q.dequeue('y') == 1000 + v);
  q.require_drained();
  CHECK(m.queue_enqueues == 150);
  CHECK(m.queue_dequeues == 150);
}

TEST_CASE("queue misuse raises typed errors") {
  CharQueues q(64);
  try {
    q.dequeue('a');
    FAIL("expected underflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::queue_underflow);
  }
  q.enqueue('a', 1);
  try {
    q.require_drained();
    FAIL("expected residue");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::queue_residue);
  }
  CHECK(q.dequeue('a') == 1);
  q.require_drained();
}

TEST_CASE("interleaved enqueue/dequeue with live spill files") {
  CharQueues q(8);  // 2-element buffers
  std::int32_t next_in = 0, next_out = 0;
  for (int round = 0; round < 40; ++round) {
    for (int k = 0; k < 7; ++k) q.enqueue('z', next_in++);
    for (int k = 0; k < 5; ++k) CHECK(q.dequeue('z') == next_out++);
  }
  while (next_out < next_in) CHECK(q.dequeue('z') == next_out++);
  q.require_drained();
}

TEST_CASE("go2 equals go and the oracle, with and without spilling") {
  std::uint64_t seed = 71;
  for (std::uint64_t buf : {8u, 64u, 65536u}) {
    for (std::uint32_t sigma : {2u, 26u}) {
      const Prepared p = prepare(testutil::random_text(1200, sigma, seed++));
      Metrics m;
      CHECK(lcp_go2_mem(p.t, p.sa, p.bwt, p.c, buf, {}, &m) == p.want);
      CHECK(m.queue_enqueues == p.t.n() - 1);
      CHECK(m.queue_dequeues == p.t.n() - 1);
      if (buf == 8) CHECK(m.ledger.peak() >= 256 * buf);
    }
  }
}

TEST_CASE("go2 on the worked example routes every value through a queue") {
  const Prepared p = prepare(load_text(std::string_view(testutil::kElAnele)));
  Metrics m;
  CHECK(lcp_go2_mem(p.t, p.sa, p.bwt, p.c, 65536, {}, &m) == testutil::kElAneleLcp);
  CHECK(m.queue_enqueues == 18);
  CHECK(m.queue_dequeues == 18);
}

TEST_CASE("go2 cross-checks the lf stream against the bwt stream") {
  const Prepared p = prepare(load_text(std::string_view(testutil::kBanana)));
  std::vector<std::uint32_t> corrupt = p.lf;
  std::swap(corrupt[2], corrupt[5]);
  MemU32Source sa_src(p.sa.sa);
  MemByteSource bwt_src(p.bwt);
  MemU32Source lf_src(corrupt);
  CharQueues q;
  UndefCounters u;
  VecI32Sink sink;
  try {
    lcp_go2(p.t, sa_src, bwt_src, lf_src, q, u, p.c, sink);
    FAIL("expected inconsistent_inputs");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inconsistent_inputs);
  }
}

TEST_CASE("go and go2 count comparisons identically") {
  const Prepared p = prepare(testutil::random_text(900, 4, 13));
  Metrics a, b;
  CHECK(lcp_go(p.t, p.sa, p.bwt, p.lf, &a) == p.want);
  CHECK(lcp_go2_mem(p.t, p.sa, p.bwt, p.c, 64, {}, &b) == p.want);
  CHECK(a.char_cmps == b.char_cmps);
  CHECK(a.char_cmps > 0);
}
