#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace csp {

enum class TimingMode { wall, virtual_time };

TimingMode parse_timing_mode(std::string_view text);
std::string_view to_string(TimingMode mode);

/// Seconds charged per unit of work in virtual-time mode. One unit is one
/// per-string comparison (scoring a child against one input string, or one
/// distance update in local search).
inline constexpr double kVirtualSecondsPerUnit = 1e-6;

/// Elapsed-time source for a single solver stage.
///
/// In wall mode `charge` is ignored and time comes from a steady clock. In
/// virtual mode time advances only through `charge`, so budgets and beam
/// width trajectories depend on the work done and not on machine speed.
class Stopwatch {
 public:
  explicit Stopwatch(TimingMode mode = TimingMode::wall)
      : mode_(mode), start_(std::chrono::steady_clock::now()) {}

  TimingMode mode() const { return mode_; }

  void charge(std::uint64_t units) { units_ += units; }

  double seconds() const {
    if (mode_ == TimingMode::virtual_time) return static_cast<double>(units_) * kVirtualSecondsPerUnit;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  TimingMode mode_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t units_ = 0;
};

/// Default total time limit by string length: 30 s below 400, 60 s below
/// 1000, 120 s otherwise.
double default_time_limit(std::size_t length);

}  // namespace csp
