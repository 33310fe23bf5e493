#pragma once

#include <cstdint>

namespace bifixgray {

/// Instrumentation counters for the generators.
///
/// `inner_steps` counts pointer moves in the saturation scan: `i := i - 1` in
/// the odometer, `i := prec[i]` in the expansion walk.
struct OpsReport {
  std::uint64_t words_emitted = 0;
  std::uint64_t inner_steps = 0;
  std::uint64_t recursive_calls = 0;
  std::uint64_t link_updates = 0;

  std::uint64_t elementary_ops() const { return inner_steps + recursive_calls + link_updates; }

  double steps_per_word() const {
    return words_emitted ? static_cast<double>(inner_steps) / static_cast<double>(words_emitted) : 0.0;
  }

  double ops_per_word() const {
    return words_emitted ? static_cast<double>(elementary_ops()) / static_cast<double>(words_emitted) : 0.0;
  }
};

}  // namespace bifixgray
