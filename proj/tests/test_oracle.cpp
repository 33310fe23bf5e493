#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "bifixgray/crossbifix.hpp"
#include "bifixgray/oracle.hpp"
#include "bifixgray/reflected_gray.hpp"
#include "support/helpers.hpp"

namespace bifixgray {
namespace {

using testing::L;

TEST(BruteForceS, Examples) {
  EXPECT_EQ(oracle::brute_force_s(8, 2, 3),
            oracle::sorted(L({"00011001", "00011011", "00011111", "00011101", "00010101", "00010111", "00010011"})));
  EXPECT_EQ(oracle::brute_force_s(8, 3, 3).size(), 104u);
  for (int q : {2, 3}) {
    for (int k : {1, 2, 3}) EXPECT_TRUE(oracle::brute_force_s(k + 1, q, k).empty());
  }
  EXPECT_THROW(oracle::brute_force_s(30, 3, 2), CapacityError);
  EXPECT_THROW(oracle::brute_force_s(10, 2, 2, Execution::serial, 512), CapacityError);
}

TEST(BruteForceS, SortedDistinctAndParallelIdentical) {
  for (auto [n, q, k] : {std::tuple{12, 2, 2}, std::tuple{9, 3, 2}, std::tuple{8, 4, 3}, std::tuple{7, 5, 1}}) {
    const WordList serial = oracle::brute_force_s(n, q, k, Execution::serial);
    const WordList parallel = oracle::brute_force_s(n, q, k, Execution::parallel);
    EXPECT_EQ(serial, parallel);
    EXPECT_TRUE(std::is_sorted(serial.begin(), serial.end()));
    EXPECT_EQ(std::set<Word>(serial.begin(), serial.end()).size(), serial.size());
  }
}

TEST(BruteForceS, OutputIsCrossBifixFree) {
  for (int q : {2, 3}) {
    for (int k = 1; k <= 3; ++k) {
      for (int n = k + 2; n <= 10; ++n) {
        EXPECT_TRUE(check_cross_bifix_free_set_reference(oracle::brute_force_s(n, q, k)).ok)
            << "n=" << n << " q=" << q << " k=" << k;
      }
    }
  }
}

TEST(VerifyGray, Examples) {
  EXPECT_TRUE(oracle::verify_gray(L({"100", "101", "111", "110", "010", "011", "001"})).ok);
  EXPECT_TRUE(oracle::verify_gray(build_s_list(8, 3, 3)).ok);

  const auto bad = oracle::verify_gray(L({"00", "11"}));
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.first_violation);
  EXPECT_EQ(bad.first_violation->index, 0u);
  EXPECT_EQ(bad.first_violation->distance, 2u);
  EXPECT_EQ(bad.max_distance, 2u);

  const auto repeated = oracle::verify_gray(L({"01", "00", "00"}));
  EXPECT_FALSE(repeated.ok);
  EXPECT_EQ(repeated.first_violation->index, 1u);
  EXPECT_EQ(repeated.max_distance, 1u);

  EXPECT_TRUE(oracle::verify_gray(L({"0"})).ok);
}

TEST(VerifyGray, AgreesWithHammingRecount) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    WordList list;
    for (int i = 0; i < 6; ++i) list.push_back(Word{Symbol(rng() % 2), Symbol(rng() % 2), Symbol(rng() % 2)});
    bool ok = true;
    std::size_t max_d = 0;
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
      ok = ok && hamming(list[i], list[i + 1]) == 1;
      max_d = std::max(max_d, hamming(list[i], list[i + 1]));
    }
    const auto report = oracle::verify_gray(list);
    EXPECT_EQ(report.ok, ok);
    EXPECT_EQ(report.max_distance, max_d);
  }
}

TEST(FirstNonUnitStep, DetectsJumps) {
  EXPECT_FALSE(oracle::first_non_unit_step(L({"0110", "0120", "0220"})).has_value());
  EXPECT_EQ(oracle::first_non_unit_step(L({"0110", "0130"})), 0u);
  // A trace change is not an in-block step.
  EXPECT_FALSE(oracle::first_non_unit_step(L({"0130", "0030"})).has_value());
}

TEST(MeasureCat, GenTupleSweep) {
  const std::vector<int> sweep{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto points = oracle::measure_cat(oracle::CatTarget::gen_tuple, 3, 0, sweep);
  ASSERT_EQ(points.size(), sweep.size());
  for (const auto& p : points) {
    EXPECT_EQ(p.ops.words_emitted, std::uint64_t{1} << p.size);
    EXPECT_EQ(p.ops.inner_steps, (std::uint64_t{1} << p.size) - 1);
  }
}

TEST(MeasureCat, GenFibAndStreamSBounded) {
  std::vector<int> fib_sweep;
  for (int n = 5; n <= 20; ++n) fib_sweep.push_back(n);
  for (const auto& p : oracle::measure_cat(oracle::CatTarget::gen_fib, 0, 2, fib_sweep)) {
    EXPECT_LE(static_cast<double>(p.ops.recursive_calls) / static_cast<double>(p.ops.words_emitted), 4.0);
  }
  const std::vector<int> s_sweep{10, 15, 20};
  for (const auto& p : oracle::measure_cat(oracle::CatTarget::stream_s, 3, 2, s_sweep)) {
    EXPECT_EQ(p.ops.words_emitted, count_s(p.size, 3, 2));
    EXPECT_LE(p.ops.ops_per_word(), 16.0);
  }
}

}  // namespace
}  // namespace bifixgray
