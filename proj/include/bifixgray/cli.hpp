#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "bifixgray/oracle.hpp"

namespace bifixgray::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kUsageError = 2,
  kCapacityError = 3,
};

enum class ListKind { s, f, h, c, g, expansion };
enum class Format { digits, csv };

struct GenOptions {
  ListKind list = ListKind::s;
  int n = -1;
  int q = 2;
  int k = -1;
  std::string trace;
  std::optional<Format> format;
  bool stream = false;
  std::uint64_t cap = kDefaultListCap;
};

struct VerifyOptions {
  int n = -1;
  int q = 2;
  int k = -1;
  bool parallel = false;
  std::uint64_t bound = oracle::kDefaultBruteForceBound;
};

struct BenchOptions {
  oracle::CatTarget target = oracle::CatTarget::stream_s;
  int q = 3;
  int k = 2;
  int from = 1;
  int to = 10;
  int step = 1;
};

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_count(int n, int q, int k, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bifixgray::cli
