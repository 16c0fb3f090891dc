#pragma once

#include <cstdint>

#include "homlab/errors.hpp"

namespace homlab {

// Work budget measured in explored states (search nodes, counted maps),
// never in wall time, so that results are machine independent.
class Budget {
 public:
  static constexpr std::uint64_t kUnlimited = UINT64_MAX;

  explicit Budget(std::uint64_t limit = kUnlimited) : limit_(limit) {}

  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return used_; }
  bool exhausted() const { return used_ >= limit_; }

  // Records n units of work; returns false once the budget is gone.
  bool charge(std::uint64_t n = 1) {
    used_ += n;
    return used_ <= limit_;
  }

  // Same, but throws. For operations whose contract is a hard error.
  void charge_or_throw(std::uint64_t n = 1) {
    if (!charge(n)) throw BudgetError("work budget exhausted");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace homlab
