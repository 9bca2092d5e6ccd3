#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace kgx {

// Malformed input or violated precondition.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap (edge count, removal size, time budget, solver
// width) would be exceeded. Distinct from Error so callers can map it to a
// separate exit code.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

using Clock = std::chrono::steady_clock;

struct EngineLimits {
  std::uint64_t max_edges = 10'000'000;
  std::optional<int> max_defect_size;
  std::optional<Clock::time_point> deadline;
  int threads = 1;

  void check_deadline(const char* where) const {
    if (deadline && Clock::now() > *deadline)
      throw CapExceeded(std::string("time budget exceeded in ") + where);
  }

  EngineLimits& with_budget_seconds(double seconds) {
    deadline = Clock::now() +
               std::chrono::duration_cast<Clock::duration>(
                   std::chrono::duration<double>(seconds));
    return *this;
  }
};

}  // namespace kgx
