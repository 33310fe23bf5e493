// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance --only N   run criterion N

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bifixgray/cli.hpp"
#include "bifixgray/crossbifix.hpp"
#include "bifixgray/expansion.hpp"
#include "bifixgray/fib_words.hpp"
#include "bifixgray/oracle.hpp"
#include "bifixgray/reflected_gray.hpp"
#include "support/helpers.hpp"

namespace {

using namespace bifixgray;
using bifixgray::testing::collect;
using bifixgray::testing::L;
using bifixgray::testing::render;
using bifixgray::testing::W;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures; keeps the first few messages.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_ += (messages_.empty() ? "" : "; ") + what;
  }
  std::uint64_t failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed: " << messages_;
    return {failures_ == 0, s.str()};
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string messages_;
};

struct GridPoint {
  int n, q, k;
  std::string name() const {
    return "S(" + std::to_string(n) + "," + std::to_string(q) + "," + std::to_string(k) + ")";
  }
};

// q in {2,3,4}, k in {2,3,4}, k+2 <= n, q^n <= 2^20.
std::vector<GridPoint> grid() {
  std::vector<GridPoint> out;
  for (int q : {2, 3, 4}) {
    for (int k : {2, 3, 4}) {
      std::uint64_t size = 1;
      for (int n = 1;; ++n) {
        size *= static_cast<std::uint64_t>(q);
        if (size > (std::uint64_t{1} << 20)) break;
        if (n >= k + 2) out.push_back({n, q, k});
      }
    }
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome exact_lists() {
  Tally t;
  t.expect(render(build_gray_list(3, 3)) ==
               std::vector<std::string>{"111", "112", "122", "121", "221", "222", "212", "211"},
           "G(3,3)");
  t.expect(build_f_list(3, 3) == L({"100", "101", "111", "110", "010", "011", "001"}), "F_3^(3)");
  t.expect(expand_list(W("01011"), 3) ==
               L({"01011", "01012", "01022", "01021", "02021", "02022", "02012", "02011"}),
           "expansion of 01011");
  const WordList s823 = L({"00011001", "00011011", "00011111", "00011101", "00010101", "00010111", "00010011"});
  t.expect(build_s_list(8, 2, 3) == s823, "S(8,2,3)");
  t.expect(collect([](auto emit) { stream_s(8, 2, 3, emit); }) == s823, "S(8,2,3) streamed");

  const auto s833 = render(build_s_list(8, 3, 3));
  const std::vector<std::string> head{"00011001", "00011002", "00012002", "00012001",
                                      "00022001", "00022002", "00021002", "00021001"};
  const std::vector<std::string> tail{"00010011", "00010012", "00010022", "00010021",
                                      "00020021", "00020022", "00020012", "00020011"};
  t.expect(s833.size() >= 16 && std::equal(head.begin(), head.end(), s833.begin()), "S(8,3,3) head");
  t.expect(s833.size() >= 16 && std::equal(tail.begin(), tail.end(), s833.end() - 8), "S(8,3,3) tail");
  return t.outcome("5 printed listings");
}

Outcome oracle_equivalence() {
  Tally t;
  const auto points = grid();
  for (const auto& p : points) {
    const WordList s = build_s_list(p.n, p.q, p.k);
    const WordList brute = oracle::brute_force_s(p.n, p.q, p.k, Execution::parallel);
    t.expect(oracle::sorted(s) == brute, p.name() + " set differs from brute force");
    t.expect(s.size() == count_s(p.n, p.q, p.k), p.name() + " size differs from count");
  }
  return t.outcome(std::to_string(points.size()) + " grid points");
}

Outcome gray_properties() {
  Tally t;
  auto gray = [&](const WordList& list, const std::string& name) {
    const auto report = oracle::verify_gray(list);
    t.expect(report.ok, name + " max distance " + std::to_string(report.max_distance));
  };
  for (int n = 1; n <= 20; ++n) gray(build_c_list(n), "C_" + std::to_string(n));
  for (int k : {2, 3, 4}) {
    for (int n = 1; n <= 20; ++n) gray(build_f_list(n, k), "F_" + std::to_string(n) + "^" + std::to_string(k));
  }
  for (int q : {3, 4}) {
    for (int tt = 1; tt <= 8; ++tt) {
      const WordList g = build_gray_list(tt, q);
      gray(g, "G(" + std::to_string(tt) + "," + std::to_string(q) + ")");
      t.expect(!oracle::first_non_unit_step(g), "G step not +-1");
    }
  }
  const auto points = grid();
  for (const auto& p : points) {
    const WordList h = build_h_list(p.n - p.k, p.q, p.k);
    gray(h, "H for " + p.name());
    t.expect(!oracle::first_non_unit_step(h), "H for " + p.name() + " step not +-1");
    const WordList s = build_s_list(p.n, p.q, p.k);
    gray(s, p.name());
    t.expect(!oracle::first_non_unit_step(s), p.name() + " step not +-1");
  }
  return t.outcome("C, F, G, H and S lists");
}

Outcome cross_bifix_freeness() {
  Tally t;
  const auto points = grid();
  std::size_t cross_checked = 0;
  for (const auto& p : points) {
    const WordList s = build_s_list(p.n, p.q, p.k);
    const auto result = check_cross_bifix_free_set(s, Execution::parallel);
    std::string where = p.name();
    if (result.first_overlap) {
      where += " overlap (" + std::to_string(result.first_overlap->prefix_owner) + "," +
               std::to_string(result.first_overlap->suffix_owner) + "," +
               std::to_string(result.first_overlap->length) + ")";
    }
    t.expect(result.ok, where);
    if (s.size() <= 2000) {
      t.expect(check_cross_bifix_free_set_reference(s).ok, p.name() + " pair grid");
      ++cross_checked;
    }
  }
  return t.outcome(std::to_string(points.size()) + " S lists, " + std::to_string(cross_checked) +
                   " also by pair grid");
}

Outcome transition_positions() {
  Tally t;
  std::uint64_t pairs = 0;
  for (int k : {2, 3, 4}) {
    for (int n = 1; n <= 20; ++n) {
      const WordList f = build_f_list(n, k);
      for (std::size_t i = 0; i + 1 < f.size(); ++i, ++pairs) {
        const Word& a = f[i];
        const Word& b = f[i + 1];
        std::size_t l = 0;
        while (l < a.size() && a[l] == b[l]) ++l;
        const bool ok = l < a.size() && (l + 1 == a.size() || (a[l + 1] == 1 && b[l + 1] == 1));
        t.expect(ok, ok ? std::string() : "F_" + std::to_string(n) + "^" + std::to_string(k) + " pair " + std::to_string(i));
      }
    }
  }
  return t.outcome(std::to_string(pairs) + " adjacent pairs");
}

Outcome trace_partitioning() {
  Tally t;
  std::size_t lists = 0;
  for (const auto& p : grid()) {
    if (p.q < 3) continue;
    ++lists;
    const WordList s = build_s_list(p.n, p.q, p.k);
    const auto report = trace_partition(s);
    const int inner = p.n - p.k - 2;
    t.expect(report.block_count == fib_count(inner, p.k), p.name() + " block count");

    WordList expected_traces = prepend(Word(static_cast<std::size_t>(p.k), 0), prepend(Word{1}, build_f_list(inner, p.k)));
    expected_traces = append(expected_traces, Word{1});
    t.expect(report.block_traces == expected_traces, p.name() + " trace sequence");

    bool sizes_ok = report.block_sizes.size() == report.block_traces.size();
    for (std::size_t b = 0; sizes_ok && b < report.block_sizes.size(); ++b) {
      sizes_ok = report.block_sizes[b] == ipow(static_cast<std::uint64_t>(p.q - 1), count_nonzero(report.block_traces[b]));
    }
    t.expect(sizes_ok, p.name() + " block sizes");
  }
  const auto spot = trace_partition(build_s_list(8, 3, 3));
  t.expect(spot.block_sizes == std::vector<std::size_t>{8, 16, 32, 16, 8, 16, 8}, "S(8,3,3) block sizes");
  std::size_t total = 0;
  for (auto b : spot.block_sizes) total += b;
  t.expect(total == 104, "S(8,3,3) total");
  return t.outcome(std::to_string(lists) + " S lists with q >= 3, spot S(8,3,3)");
}

Outcome odometer_cost() {
  Tally t;
  std::size_t exact = 0, points = 0;
  for (int q : {3, 4, 5}) {
    for (int tt = 1; tt <= 10; ++tt, ++points) {
      const auto ops = gen_tuple_stream(tt, q, [](auto) {});
      const std::uint64_t closed = expected_ops(tt, q);
      if (ops.inner_steps == closed) ++exact;
      t.expect(ops.inner_steps == closed, "q=" + std::to_string(q) + " t=" + std::to_string(tt) + " counted " +
                                              std::to_string(ops.inner_steps) + " vs " + std::to_string(closed));
      t.expect(ops.steps_per_word() <= static_cast<double>(q) / (q - 1),
               "q=" + std::to_string(q) + " t=" + std::to_string(tt) + " steps/word above q/(q-1)");
    }
  }
  return t.outcome("closed form exact at " + std::to_string(exact) + "/" + std::to_string(points) + " points");
}

Outcome cat_boundedness() {
  constexpr double kBudgetSeconds = 120.0;
  constexpr double kBound = 16.0;
  constexpr double kMaxDrift = 0.25;
  const auto start = Clock::now();
  Tally t;
  std::ostringstream table;
  for (auto [q, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
    std::vector<double> per_word;
    double ns_per_word = 0.0;
    for (int n : {10, 15, 20, 25, 30}) {
      const std::string where = "(" + std::to_string(q) + "," + std::to_string(k) + ") n=" + std::to_string(n);
      const std::uint64_t words = count_s(n, q, k);
      const double projected = ns_per_word * static_cast<double>(words) * 1e-9;
      if (seconds_since(start) + projected > kBudgetSeconds) {
        char buf[96];
        std::snprintf(buf, sizeof buf, " not run, %llu words, projected %.0f s",
                      static_cast<unsigned long long>(words), projected);
        t.expect(false, where + buf);
        table << "  " << where << buf << "\n";
        continue;
      }
      const auto t0 = Clock::now();
      const auto ops = stream_s(n, q, k, [](auto) {});
      const double elapsed = seconds_since(t0);
      ns_per_word = elapsed * 1e9 / static_cast<double>(ops.words_emitted);
      const double opw = ops.ops_per_word();
      per_word.push_back(opw);
      t.expect(ops.words_emitted == words, where + " word count");
      t.expect(opw <= kBound, where + " ops/word above bound");
      char buf[96];
      std::snprintf(buf, sizeof buf, " words=%llu ops/word=%.4f time=%.2fs",
                    static_cast<unsigned long long>(ops.words_emitted), opw, elapsed);
      table << "  " << where << buf << "\n";
    }
    if (per_word.size() >= 2) {
      t.expect(per_word.back() - per_word.front() <= kMaxDrift,
               "(" + std::to_string(q) + "," + std::to_string(k) + ") ops/word drifts upward");
    }
  }
  char total[64];
  std::snprintf(total, sizeof total, "sweep took %.1f s of %.0f s", seconds_since(start), kBudgetSeconds);
  std::cout << table.str();
  return t.outcome(total);
}

Outcome stream_equivalence() {
  Tally t;
  const auto points = grid();
  for (const auto& p : points) {
    const WordList s = build_s_list(p.n, p.q, p.k);
    t.expect(collect([&](auto emit) { stream_s(p.n, p.q, p.k, emit); }) == s, p.name() + " stream differs");

    auto run_cli = [&](bool stream) {
      std::vector<std::string> args{"bifixgray", "gen", "--list", "s", "--n", std::to_string(p.n),
                                    "--q", std::to_string(p.q), "--k", std::to_string(p.k)};
      if (stream) args.push_back("--stream");
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
      return std::make_pair(code, out.str());
    };
    const auto materialized = run_cli(false);
    const auto streamed = run_cli(true);
    t.expect(materialized.first == 0 && streamed.first == 0, p.name() + " CLI exit code");
    t.expect(!materialized.second.empty() && materialized.second == streamed.second, p.name() + " CLI bytes differ");
  }
  return t.outcome(std::to_string(points.size()) + " grid points, library and CLI");
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"exact-list reproduction", exact_lists},
      {"oracle equivalence", oracle_equivalence},
      {"gray properties", gray_properties},
      {"cross-bifix-freeness", cross_bifix_freeness},
      {"transition position property", transition_positions},
      {"trace partitioning", trace_partitioning},
      {"exact odometer cost", odometer_cost},
      {"CAT boundedness", cat_boundedness},
      {"stream/reference equivalence", stream_equivalence},
  };

  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, static_cast<int>(criteria.size())));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(start));
    std::cout << "criterion " << i + 1 << " " << (outcome.pass ? "PASS" : "FAIL") << " [" << timing << "] "
              << criteria[i].title << ": " << outcome.detail << std::endl;
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
