#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "fcd/graph.hpp"

namespace fcd {

/// Thrown when an enumerative solver exhausts its work budget or deadline.
/// This is never a NO answer: the instance was not decided.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultWorkBudget = 200'000'000;

/// Cooperative work counter.  Solvers call charge() inside their enumeration
/// loops; the deadline is polled every few thousand units.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t limit = kDefaultWorkBudget,
                      std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt)
      : limit_(limit), deadline_(deadline) {}

  static WorkBudget unlimited() { return WorkBudget(UINT64_MAX); }

  void charge(std::uint64_t units = 1) {
    used_ += units;
    if (used_ > limit_)
      throw BudgetExceeded("work budget of " + std::to_string(limit_) + " units exceeded");
    if (deadline_ && (used_ - last_poll_) >= 4096) {
      last_poll_ = used_;
      if (std::chrono::steady_clock::now() > *deadline_) throw BudgetExceeded("timeout");
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::uint64_t last_poll_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

/// Decision of a solver plus an optional certificate.  `work` reports the
/// solver-specific effort (table cells, guesses, DP states).
struct SolveResult {
  bool feasible = false;
  std::optional<Districting> witness;
  std::uint64_t work = 0;
};

}  // namespace fcd
