#pragma once

#include <array>
#include <cstdint>

namespace macrofin {

/// Philox4x32-10 block function (Salmon et al., SC'11). Pure function of
/// (counter, key).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;
PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key);

/// Counter-based stream keyed by (seed, run_index). Every variate is a pure
/// function of (seed, run_index, step, slot), so paths are reproducible no
/// matter how runs are scheduled across threads. The sequential interface
/// (`draw_*`) walks slots within the current step; `seek` moves to a step and
/// resets the slot.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t run_index);

  void seek(std::uint64_t step) noexcept {
    step_ = step;
    slot_ = 0;
  }
  std::uint64_t step() const noexcept { return step_; }

  /// Uniform on the open interval (0, 1).
  double draw_uniform() noexcept { return uniform_at(step_, slot_++); }
  /// Standard normal.
  double draw_gaussian() noexcept { return gaussian_at(step_, slot_++); }

  double uniform_at(std::uint64_t step, std::uint32_t slot) const noexcept;
  double gaussian_at(std::uint64_t step, std::uint32_t slot) const noexcept;

 private:
  PhiloxCounter block(std::uint64_t step, std::uint32_t slot) const noexcept;

  PhiloxKey key_;
  std::uint32_t run_;
  std::uint64_t step_ = 0;
  std::uint32_t slot_ = 0;
};

}  // namespace macrofin
