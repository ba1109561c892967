#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperzeta {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (non-prime characteristic, zero inverse,
/// character index out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration or table would exceed its configured size cap.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t budget)
      : Error(what + ": requires " + format_count(required) + " evaluations, budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  static std::string format_count(std::uint64_t n) {
    return n == UINT64_MAX ? std::string(">=2^64") : std::to_string(n);
  }

  std::uint64_t required_;
  std::uint64_t budget_;
};

/// A noncommutative rational expression is evaluated outside its chart.
class ChartUndefined : public Error {
 public:
  explicit ChartUndefined(std::string condition)
      : Error("chart undefined: " + condition), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must hold by construction was violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? UINT64_MAX : r;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

}  // namespace hyperzeta
