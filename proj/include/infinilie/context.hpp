#pragma once

#include <cstdint>

#include "infinilie/exponent.hpp"

namespace infinilie {

/// Per-thread computation context: the precision cap for freshly created
/// series, the bound on exponent denominators, and the single quadratic
/// radicand that square roots may adjoin (1 means plain ℚ).
struct Context {
  Exponent trunc{8};
  std::int64_t ramification = 12;
  std::int64_t radicand = 1;
};

Context& current_context();

/// Installs a context for the lifetime of the guard and restores the
/// previous one afterwards.
class ContextGuard {
 public:
  explicit ContextGuard(const Context& ctx) : saved_(current_context()) {
    current_context() = ctx;
  }
  ~ContextGuard() { current_context() = saved_; }
  ContextGuard(const ContextGuard&) = delete;
  ContextGuard& operator=(const ContextGuard&) = delete;

 private:
  Context saved_;
};

}  // namespace infinilie
