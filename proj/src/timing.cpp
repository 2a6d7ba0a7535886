#include "csp/timing.hpp"

#include <stdexcept>
#include <string>

namespace csp {

TimingMode parse_timing_mode(std::string_view text) {
  if (text == "wall") return TimingMode::wall;
  if (text == "virtual") return TimingMode::virtual_time;
  throw std::invalid_argument("unknown timing mode '" + std::string(text) + "'");
}

std::string_view to_string(TimingMode mode) { return mode == TimingMode::wall ? "wall" : "virtual"; }

double default_time_limit(std::size_t length) {
  if (length < 400) return 30.0;
  if (length < 1000) return 60.0;
  return 120.0;
}

}  // namespace csp
