// Command-line front end: build lcp arrays with any of the six construction
// paths, verify outputs against an independent recomputation, report corpus
// statistics, and benchmark the algorithms with CSV output.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lcpf/bwt.hpp"
#include "lcpf/error.hpp"
#include "lcpf/io.hpp"
#include "lcpf/laca_baseline.hpp"
#include "lcpf/laca_go.hpp"
#include "lcpf/laca_hybrid.hpp"
#include "lcpf/metrics.hpp"
#include "lcpf/sarray.hpp"
#include "lcpf/textcore.hpp"

namespace {

using namespace lcpf;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const std::vector<std::string> kAllAlgos = {"brute", "kasai", "phi", "go", "go2", "hybrid"};

fs::path sidecar(const fs::path& input, const char* ext) {
  fs::path p = input;
  p += ext;
  return p;
}

// Builds or reuses the .sa/.bwt sidecar files; returns the loaded text.
Text prepare_sidecars(const fs::path& input) {
  Text t = load_text_file(input);
  const fs::path sa_path = sidecar(input, ".sa");
  const fs::path bwt_path = sidecar(input, ".bwt");
  const auto sa_n = stored_n(sa_path);
  const auto bwt_n = stored_n(bwt_path);
  if (!sa_n || *sa_n != t.n() || !bwt_n || *bwt_n != t.n()) {
    const SuffixArray sa = build_suffix_array(t);
    save_suffix_array(sa, sa_path);
    save_bwt(build_bwt(t, sa), bwt_path);
  }
  return t;
}

std::uint64_t fnv1a(std::span<const std::int32_t> values) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int32_t v : values) {
    const std::uint32_t u = static_cast<std::uint32_t>(v);
    for (int k = 0; k < 4; ++k) {
      h ^= (u >> (8 * k)) & 0xFF;
      h *= 1099511628211ull;
    }
  }
  return h;
}

struct RunResult {
  std::vector<std::int32_t> lcp;  // n+1 entries
  double seconds = 0.0;
  Metrics metrics;
};

// Runs one construction; the timed section covers only the lcp computation,
// not text/array loading.
RunResult run_algo(const std::string& algo, const Text& t, const fs::path& input, std::uint8_t m,
                   std::uint64_t queue_buf, const fs::path& tmp_dir) {
  RunResult r;
  const CArray c = build_c_array(t);
  if (algo == "go2") {
    FileU32Source sa_src(sidecar(input, ".sa"));
    FileByteSource bwt_src(sidecar(input, ".bwt"));
    FileByteSource bwt_for_lf(sidecar(input, ".bwt"));
    LfSource lf_src(bwt_for_lf, c);
    VecI32Sink sink;
    sink.out.reserve(t.n() + 1);
    UndefCounters u;
    const auto t0 = Clock::now();
    CharQueues queues(queue_buf, tmp_dir, &r.metrics);
    lcp_go2(t, sa_src, bwt_src, lf_src, queues, u, c, sink, &r.metrics);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    sink.out.push_back(-1);
    r.lcp = std::move(sink.out);
    return r;
  }
  if (algo == "hybrid") {
    FileU32Source sa_src(sidecar(input, ".sa"));
    FileByteSource bwt_src(sidecar(input, ".bwt"));
    VecI32Sink sink;
    sink.out.reserve(t.n() + 1);
    const auto t0 = Clock::now();
    lcp_hybrid_stream(t, sa_src, bwt_src, c, m, sink, &r.metrics);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    sink.out.push_back(-1);
    r.lcp = std::move(sink.out);
    return r;
  }

  const SuffixArray sa = load_suffix_array(sidecar(input, ".sa"));
  if (algo == "brute") {
    const auto t0 = Clock::now();
    r.lcp = lcp_brute(t, sa, &r.metrics);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  } else if (algo == "kasai") {
    const InverseSuffixArray isa = invert(sa);
    const auto t0 = Clock::now();
    r.lcp = lcp_kasai(t, sa, isa, &r.metrics);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  } else if (algo == "phi") {
    const auto t0 = Clock::now();
    r.lcp = lcp_phi(t, sa, &r.metrics);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  } else if (algo == "go") {
    const std::vector<std::uint8_t> bwt = load_bwt(sidecar(input, ".bwt"));
    const std::vector<std::uint32_t> lf = build_lf(bwt, c);
    const auto t0 = Clock::now();
    r.lcp = lcp_go(t, sa, bwt, lf, &r.metrics);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  } else {
    raise(Errc::out_of_range, "unknown algorithm: " + algo);
  }
  return r;
}

void print_ledger(const Metrics& m) {
  std::cout << "peak_resident_bytes " << m.ledger.peak() << "\n";
  for (const auto& [label, bytes] : m.ledger.peak_breakdown())
    std::cout << "  " << label << " " << bytes << "\n";
}

int cmd_build(const fs::path& input, const std::string& algo, std::uint8_t m,
              std::uint64_t queue_buf, const fs::path& tmp_dir, fs::path out_path) {
  if (out_path.empty()) out_path = sidecar(input, ".lcp");
  const Text t = prepare_sidecars(input);

  double seconds = 0.0;
  Metrics metrics;
  if (algo == "go2" || algo == "hybrid") {
    // Semi-external paths stream the output straight to disk.
    FileU32Source sa_src(sidecar(input, ".sa"));
    FileByteSource bwt_src(sidecar(input, ".bwt"));
    FileLcpSink sink(out_path, t.n());
    const auto t0 = Clock::now();
    if (algo == "go2") {
      const CArray c = build_c_array(t);
      FileByteSource bwt_for_lf(sidecar(input, ".bwt"));
      LfSource lf_src(bwt_for_lf, c);
      UndefCounters u;
      CharQueues queues(queue_buf, tmp_dir, &metrics);
      lcp_go2(t, sa_src, bwt_src, lf_src, queues, u, c, sink, &metrics);
    } else {
      lcp_hybrid_stream(t, sa_src, bwt_src, build_c_array(t), m, sink, &metrics);
    }
    sink.finish();
    seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  } else {
    RunResult r = run_algo(algo, t, input, m, queue_buf, tmp_dir);
    save_lcp(r.lcp, out_path);
    seconds = r.seconds;
    metrics = std::move(r.metrics);
  }

  std::cout << "algo " << algo << "\n"
            << "n " << t.n() << "\n"
            << "wall_seconds " << std::setprecision(6) << std::fixed << seconds << "\n"
            << "char_cmps " << metrics.char_cmps << "\n"
            << "text_accesses " << metrics.text_accesses << "\n";
  print_ledger(metrics);
  std::cout << "output " << out_path.string() << "\n";
  return 0;
}

int cmd_verify(const fs::path& input, const fs::path& lcp_path) {
  const Text t = load_text_file(input);
  const std::vector<std::int32_t> got = load_lcp(lcp_path);
  const SuffixArray sa = build_suffix_array(t);
  std::vector<std::int32_t> want;
  if (t.n() <= 4096) {
    want = lcp_brute(t, sa);
  } else {
    want = lcp_kasai(t, sa, invert(sa));
  }
  if (got.size() != want.size()) {
    std::cout << "MISMATCH: entry count " << got.size() << " vs expected " << want.size() << "\n";
    return 1;
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (got[i] != want[i]) {
      std::cout << "MISMATCH at index " << i << ": got " << got[i] << ", expected " << want[i]
                << "\n";
      return 1;
    }
  }
  std::cout << "OK: " << lcp_path.string() << " matches the recomputed lcp array (n=" << t.n()
            << ")\n";
  return 0;
}

int cmd_stats(const fs::path& input, std::vector<std::uint32_t> m_list, bool csv) {
  const Text t = load_text_file(input);
  const CArray c = build_c_array(t);
  const SuffixArray sa = build_suffix_array(t);
  const std::vector<std::uint8_t> bwt = build_bwt(t, sa);
  const std::vector<std::int32_t> lcp = lcp_kasai(t, sa, invert(sa));
  const std::uint32_t n = t.n();

  const std::uint64_t runs = bwt_run_count(bwt);
  std::uint64_t irreducible = 0;
  for (std::uint32_t i = 0; i < n; ++i)
    if (i == 0 || bwt[i] != bwt[i - 1]) ++irreducible;

  std::int64_t max_lcp = 0;
  double mean_lcp = 0.0;
  const std::uint64_t interior = n >= 2 ? n - 1 : 0;
  if (interior > 0) {
    std::int64_t sum = 0;
    for (std::uint32_t i = 1; i < n; ++i) {
      max_lcp = std::max<std::int64_t>(max_lcp, lcp[i]);
      sum += lcp[i];
    }
    mean_lcp = static_cast<double>(sum) / static_cast<double>(interior);
  }

  if (m_list.empty()) m_list.push_back(254);
  std::sort(m_list.begin(), m_list.end());
  m_list.erase(std::unique(m_list.begin(), m_list.end()), m_list.end());

  std::vector<std::pair<std::uint32_t, std::uint64_t>> above;
  for (std::uint32_t m : m_list) {
    std::uint64_t k = 0;
    for (std::uint32_t i = 1; i < n; ++i)
      if (lcp[i] > static_cast<std::int64_t>(m)) ++k;
    above.emplace_back(m, k);
  }

  if (csv) {
    std::cout << "key,value\n"
              << "n," << n << "\n"
              << "sigmaEffective," << c.sigma_effective() << "\n"
              << "bwtRuns," << runs << "\n"
              << "irreducibleCount," << irreducible << "\n"
              << "maxLcp," << max_lcp << "\n"
              << "meanLcp," << mean_lcp << "\n";
    for (const auto& [m, k] : above) {
      std::cout << "fractionLcpAboveM.m=" << m << ","
                << (interior ? static_cast<double>(k) / static_cast<double>(interior) : 0.0) << "\n";
    }
  } else {
    std::cout << "n                 " << n << "\n"
              << "sigmaEffective    " << c.sigma_effective() << "\n"
              << "bwtRuns           " << runs << "\n"
              << "irreducibleCount  " << irreducible << "\n"
              << "maxLcp            " << max_lcp << "\n"
              << "meanLcp           " << mean_lcp << "\n";
    for (const auto& [m, k] : above) {
      std::cout << "fractionLcpAboveM m=" << m << ": " << k << "/" << interior << " ("
                << (interior ? static_cast<double>(k) / static_cast<double>(interior) : 0.0)
                << ")\n";
    }
  }
  return 0;
}

int cmd_bench(const fs::path& input, std::vector<std::string> algos, int repeat, std::uint8_t m,
              std::uint64_t queue_buf, const fs::path& tmp_dir, bool parallel) {
  if (algos.empty()) algos = kAllAlgos;
  const Text t = prepare_sidecars(input);

  struct Row {
    std::string algo;
    double seconds = 0.0;
    Metrics metrics;
    std::uint64_t hash = 0;
    std::string error;
  };
  std::vector<Row> rows(algos.size());

  auto bench_one = [&](std::size_t idx) {
    Row& row = rows[idx];
    row.algo = algos[idx];
    try {
      std::vector<double> times;
      for (int rep = 0; rep < repeat; ++rep) {
        RunResult r = run_algo(row.algo, t, input, m, queue_buf, tmp_dir);
        times.push_back(r.seconds);
        if (rep + 1 == repeat) {
          row.hash = fnv1a(r.lcp);
          row.metrics = std::move(r.metrics);
        }
      }
      std::sort(times.begin(), times.end());
      const std::size_t h = times.size() / 2;
      row.seconds = times.size() % 2 ? times[h] : (times[h - 1] + times[h]) / 2.0;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };

  if (parallel) {
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < algos.size(); ++i) workers.emplace_back(bench_one, i);
    for (auto& w : workers) w.join();
  } else {
    for (std::size_t i = 0; i < algos.size(); ++i) bench_one(i);
  }

  std::cout << "algo,n,seconds,char_cmps,text_accesses,peak_bytes,lcp_hash\n";
  bool failed = false;
  for (const Row& row : rows) {
    if (!row.error.empty()) {
      std::cerr << "error: " << row.algo << ": " << row.error << "\n";
      failed = true;
      continue;
    }
    std::cout << row.algo << "," << t.n() << "," << std::setprecision(6) << std::fixed
              << row.seconds << "," << row.metrics.char_cmps << "," << row.metrics.text_accesses
              << "," << row.metrics.ledger.peak() << "," << std::hex << row.hash << std::dec
              << "\n";
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lcp array construction toolkit"};
  app.require_subcommand(1);

  std::string input, algo = "hybrid", out;
  std::vector<std::string> algos;
  std::vector<std::uint32_t> m_list;
  std::uint32_t m = 254;
  std::uint64_t queue_buf = 65536;
  std::string tmp;
  int repeat = 3;
  bool csv = false, parallel = false;

  CLI::App* build = app.add_subcommand("build", "construct an lcp array and write it to disk");
  build->add_option("input", input, "input text file (raw bytes, no 0x00)")
      ->required()
      ->check(CLI::ExistingFile);
  build->add_option("--algo", algo, "one of: brute kasai phi go go2 hybrid")
      ->check(CLI::IsMember(kAllAlgos));
  build->add_option("--m", m, "byte-cap threshold for hybrid")->check(CLI::Range(1u, 254u));
  build->add_option("--queue-buf", queue_buf, "per-character queue buffer bytes for go2");
  build->add_option("--tmp", tmp, "directory for queue spill files");
  build->add_option("--out", out, "output path (default: <input>.lcp)");

  CLI::App* verify = app.add_subcommand("verify", "recompute and compare an lcp file");
  std::string lcp_file;
  verify->add_option("input", input, "input text file")->required()->check(CLI::ExistingFile);
  verify->add_option("lcp", lcp_file, "lcp file to check")->required()->check(CLI::ExistingFile);

  CLI::App* stats = app.add_subcommand("stats", "corpus statistics");
  stats->add_option("input", input, "input text file")->required()->check(CLI::ExistingFile);
  stats->add_option("--m", m_list, "threshold(s) for the large-value fraction")
      ->check(CLI::Range(0u, 1u << 30));
  stats->add_flag("--csv", csv, "emit key,value CSV instead of aligned text");

  CLI::App* bench = app.add_subcommand("bench", "benchmark construction algorithms (CSV)");
  bench->add_option("input", input, "input text file")->required()->check(CLI::ExistingFile);
  bench->add_option("--algo", algos, "algorithms to run (default: all)")
      ->check(CLI::IsMember(kAllAlgos));
  bench->add_option("--repeat", repeat, "repetitions per algorithm (median reported)")
      ->check(CLI::Range(1, 1000));
  bench->add_option("--m", m, "byte-cap threshold for hybrid")->check(CLI::Range(1u, 254u));
  bench->add_option("--queue-buf", queue_buf, "per-character queue buffer bytes for go2");
  bench->add_option("--tmp", tmp, "directory for queue spill files");
  bench->add_flag("--parallel", parallel, "run the algorithms concurrently");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed())
      return cmd_build(input, algo, static_cast<std::uint8_t>(m), queue_buf, tmp, out);
    if (verify->parsed()) return cmd_verify(input, lcp_file);
    if (stats->parsed()) return cmd_stats(input, m_list, csv);
    if (bench->parsed())
      return cmd_bench(input, algos, repeat, static_cast<std::uint8_t>(m), queue_buf, tmp,
                       parallel);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
