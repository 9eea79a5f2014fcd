#pragma once

#include <stdexcept>
#include <string>

namespace linhyp {

// Base error for all library failures.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Exact division requested but the divisor does not divide.
class not_divisible : public error {
 public:
  explicit not_divisible(const std::string& what = "not divisible") : error(what) {}
};

// Operands belong to different fields or variable contexts.
class field_mismatch : public error {
 public:
  explicit field_mismatch(const std::string& what = "field mismatch") : error(what) {}
};

// A bounded search or randomized procedure ran out of budget.
class inconclusive_error : public error {
 public:
  explicit inconclusive_error(const std::string& what) : error(what) {}
};

}  // namespace linhyp
