#include "bifixgray/cli.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bifixgray/crossbifix.hpp"
#include "bifixgray/expansion.hpp"
#include "bifixgray/fib_words.hpp"
#include "bifixgray/reflected_gray.hpp"

namespace bifixgray::cli {

namespace {

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kPropertyFailure;
  }
}

class LineWriter {
 public:
  LineWriter(Format format, std::ostream& out) : format_(format), out_(out) {}

  void operator()(std::span<const Symbol> w) {
    out_ << (format_ == Format::digits ? to_digits(w) : to_csv(w)) << '\n';
  }

  void write_all(const WordList& list) {
    for (const Word& w : list) (*this)(w);
  }

 private:
  Format format_;
  std::ostream& out_;
};

Format resolve_format(std::optional<Format> requested, int render_q) {
  if (!requested) return render_q > 10 ? Format::csv : Format::digits;
  if (*requested == Format::digits && render_q > 10) {
    throw std::invalid_argument("digits format needs q <= 10; use --format csv");
  }
  return *requested;
}

void require(bool present, const char* flag, const char* list) {
  if (!present) throw std::invalid_argument(std::string("gen --list ") + list + " requires " + flag);
}

}  // namespace

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const bool binary = o.list == ListKind::f || o.list == ListKind::c;
    LineWriter write(resolve_format(o.format, binary ? 2 : o.q), out);
    switch (o.list) {
      case ListKind::s:
        require(o.n >= 0, "--n", "s");
        require(o.k >= 0, "--k", "s");
        if (o.stream) {
          stream_s(o.n, o.q, o.k, write);
        } else {
          write.write_all(build_s_list(o.n, o.q, o.k, o.cap));
        }
        break;
      case ListKind::h:
        require(o.n >= 0, "--n", "h");
        require(o.k >= 0, "--k", "h");
        if (o.stream) {
          stream_h(o.n, o.q, o.k, write);
        } else {
          write.write_all(build_h_list(o.n, o.q, o.k, o.cap));
        }
        break;
      case ListKind::f:
        require(o.n >= 0, "--n", "f");
        require(o.k >= 0, "--k", "f");
        if (o.stream) {
          if (o.k < 2) throw std::invalid_argument("F lists need k >= 2");
          stream_f_list(o.n, o.k, write);
        } else {
          write.write_all(build_f_list(o.n, o.k, o.cap));
        }
        break;
      case ListKind::c:
        require(o.n >= 0, "--n", "c");
        if (o.stream) {
          stream_c_list(o.n, write);
        } else {
          write.write_all(build_c_list(o.n, o.cap));
        }
        break;
      case ListKind::g:
        require(o.n >= 0, "--n", "g");
        if (o.stream) {
          gen_tuple_stream(o.n, o.q, write);
        } else {
          write.write_all(build_gray_list(o.n, o.q, o.cap));
        }
        break;
      case ListKind::expansion: {
        require(!o.trace.empty(), "--trace", "expansion");
        const Trace beta = parse_digits(o.trace);
        if (o.stream) {
          for (Symbol s : beta) {
            if (s > 1) throw std::invalid_argument("trace must be binary");
          }
          ExpandState state(beta, 0, o.q);
          OpsReport ops;
          state.run(write, ops);
        } else {
          write.write_all(expand_list(beta, o.q, o.cap));
        }
        break;
      }
    }
    return int{kOk};
  });
}

int cmd_count(int n, int q, int k, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << count_s(n, q, k) << '\n';
    return int{kOk};
  });
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Params p = Params::generator(o.n, o.q, o.k);
    const Execution exec = o.parallel ? Execution::parallel : Execution::serial;
    const WordList brute = oracle::brute_force_s(p.n(), p.q(), p.k(), exec, o.bound);
    const WordList list = build_s_list(p.n(), p.q(), p.k());

    bool all = true;
    auto report = [&](const char* name, bool ok, const std::string& detail) {
      out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
      all = all && ok;
    };

    report("set-equivalence", oracle::sorted(list) == brute,
           std::to_string(list.size()) + " listed, " + std::to_string(brute.size()) + " by brute force");

    const std::uint64_t expected = count_s(p.n(), p.q(), p.k());
    report("cardinality", list.size() == expected, "count " + std::to_string(expected));

    const auto gray = oracle::verify_gray(list);
    const auto step = oracle::first_non_unit_step(list);
    std::string gray_detail = "max distance " + std::to_string(gray.max_distance);
    if (gray.first_violation) gray_detail += ", first violation at word " + std::to_string(gray.first_violation->index + 1);
    if (step) gray_detail += ", non-unit step at word " + std::to_string(*step + 1);
    report("gray", gray.ok && !step, gray_detail);

    const auto bifix = check_cross_bifix_free_set(list, exec);
    std::string bifix_detail = "all ordered pairs";
    if (bifix.first_overlap) {
      const auto& v = *bifix.first_overlap;
      bifix_detail = "prefix of word " + std::to_string(v.prefix_owner + 1) + " equals suffix of word " +
                     std::to_string(v.suffix_owner + 1) + " at length " + std::to_string(v.length);
    }
    report("cross-bifix-free", bifix.ok, bifix_detail);

    const auto blocks = trace_partition(list);
    const WordList traces =
        prepend(Word(static_cast<std::size_t>(p.k()), 0),
                append(prepend(Word{1}, build_f_list(p.inner_length(), p.k())), Word{1}));
    bool blocks_ok = blocks.block_traces == traces;
    for (std::size_t i = 0; blocks_ok && i < blocks.block_count; ++i) {
      std::uint64_t size = 1;
      for (std::size_t j = 0; j < count_nonzero(blocks.block_traces[i]); ++j) size *= static_cast<std::uint64_t>(p.q() - 1);
      blocks_ok = blocks.block_sizes[i] == size;
    }
    report("trace-partition", blocks_ok, std::to_string(blocks.block_count) + " blocks");

    WordList streamed;
    stream_s(p.n(), p.q(), p.k(), [&](std::span<const Symbol> w) { streamed.emplace_back(w.begin(), w.end()); });
    report("stream-equivalence", streamed == list, std::to_string(streamed.size()) + " streamed");

    return int{all ? kOk : kPropertyFailure};
  });
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.step < 1 || o.from > o.to) throw std::invalid_argument("bench: empty sweep");
    std::vector<int> sizes;
    for (int s = o.from; s <= o.to; s += o.step) sizes.push_back(s);
    const auto points = oracle::measure_cat(o.target, o.q, o.k, sizes);

    const bool tuple = o.target == oracle::CatTarget::gen_tuple;
    out << std::left << std::setw(6) << (tuple ? "t" : "n") << std::setw(14) << "words" << std::setw(14)
        << "steps" << std::setw(12) << "steps/word";
    if (tuple) out << std::setw(14) << "expected_ops" << "check";
    out << '\n';
    for (const auto& pt : points) {
      // gen_tuple: scan moves; gen_fib: recursive calls; stream_s: all counters.
      const std::uint64_t steps = tuple ? pt.ops.inner_steps : pt.ops.elementary_ops();
      const double per_word = static_cast<double>(steps) / static_cast<double>(pt.ops.words_emitted);
      std::ostringstream ratio;
      ratio << std::fixed << std::setprecision(4) << per_word;
      out << std::setw(6) << pt.size << std::setw(14) << pt.ops.words_emitted << std::setw(14) << steps
          << std::setw(12) << ratio.str();
      if (tuple) {
        const std::uint64_t expected = expected_ops(pt.size, o.q);
        out << std::setw(14) << expected << (expected == steps ? "EXACT" : "MISMATCH");
      }
      out << '\n';
    }
    return int{kOk};
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace-partitioned Gray codes for cross-bifix-free sets"};
  app.require_subcommand(1);

  const std::map<std::string, ListKind> list_names{{"s", ListKind::s}, {"f", ListKind::f},
                                                   {"h", ListKind::h}, {"c", ListKind::c},
                                                   {"g", ListKind::g}, {"expansion", ListKind::expansion}};
  const std::map<std::string, Format> format_names{{"digits", Format::digits}, {"csv", Format::csv}};
  const std::map<std::string, oracle::CatTarget> target_names{{"gen_tuple", oracle::CatTarget::gen_tuple},
                                                              {"gen_fib", oracle::CatTarget::gen_fib},
                                                              {"stream_s", oracle::CatTarget::stream_s}};

  GenOptions gen;
  Format gen_format = Format::digits;
  auto* gen_cmd = app.add_subcommand("gen", "Print a list, one word per line");
  gen_cmd->add_option("--list", gen.list, "s, f, h, c, g or expansion")
      ->required()
      ->transform(CLI::CheckedTransformer(list_names, CLI::ignore_case));
  gen_cmd->add_option("--n", gen.n, "Word length (t for g)");
  gen_cmd->add_option("--q", gen.q, "Alphabet size")->capture_default_str();
  gen_cmd->add_option("--k", gen.k, "Zero-run bound");
  gen_cmd->add_option("--trace", gen.trace, "Binary trace for --list expansion");
  auto* gen_format_opt = gen_cmd->add_option("--format", gen_format, "digits or csv")
                             ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  gen_cmd->add_flag("--stream", gen.stream, "Use the streaming generator instead of the list builder");
  gen_cmd->add_option("--cap", gen.cap, "Maximum words a list builder may materialize")->capture_default_str();

  int count_n = -1, count_q = 2, count_k = -1;
  auto* count_cmd = app.add_subcommand("count", "Print |S(n,q,k)|");
  count_cmd->add_option("--n", count_n)->required();
  count_cmd->add_option("--q", count_q)->capture_default_str();
  count_cmd->add_option("--k", count_k)->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check S(n,q,k) against brute force");
  verify_cmd->add_option("--n", verify.n)->required();
  verify_cmd->add_option("--q", verify.q)->capture_default_str();
  verify_cmd->add_option("--k", verify.k)->required();
  verify_cmd->add_flag("--parallel", verify.parallel, "Use the OpenMP kernels");
  verify_cmd->add_option("--cap", verify.bound, "Largest q^n the brute force may enumerate")->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts per emitted word");
  bench_cmd->add_option("--target", bench.target, "gen_tuple, gen_fib or stream_s")
      ->required()
      ->transform(CLI::CheckedTransformer(target_names, CLI::ignore_case));
  bench_cmd->add_option("--q", bench.q)->capture_default_str();
  bench_cmd->add_option("--k", bench.k)->capture_default_str();
  bench_cmd->add_option("--from", bench.from)->capture_default_str();
  bench_cmd->add_option("--to", bench.to)->capture_default_str();
  bench_cmd->add_option("--step", bench.step)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (*gen_cmd) {
    if (*gen_format_opt) gen.format = gen_format;
    return cmd_gen(gen, out, err);
  }
  if (*count_cmd) return cmd_count(count_n, count_q, count_k, out, err);
  if (*verify_cmd) return cmd_verify(verify, out, err);
  return cmd_bench(bench, out, err);
}

}  // namespace bifixgray::cli
