#pragma once

#include <stdexcept>
#include <string>

namespace jinf {

// Base for every typed error thrown by this library. Each failure mode gets
// its own subclass so callers can dispatch on type; witnesses (the offending
// points, values, positions) ride along as fields on the subclass.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An argument outside the domain of the operation, e.g. a point below 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A raw description that does not denote anything: empty period block,
// patch key above the threshold, image below 1, and so on.
class MalformedRepresentation : public Error {
 public:
  using Error::Error;
};

// Guard against combinatorial blowup when aligning periodic data. Boolean
// set operations and compositions work over lcm of the operand periods; the
// lcm is rejected above this bound instead of allocating huge blocks.
inline constexpr std::uint64_t kPeriodLimit = 1u << 16;

class PeriodLimitExceeded : public Error {
 public:
  PeriodLimitExceeded(std::uint64_t a, std::uint64_t b)
      : Error("period alignment exceeds limit " + std::to_string(kPeriodLimit) +
              ": lcm(" + std::to_string(a) + ", " + std::to_string(b) + ")"),
        lhs(a),
        rhs(b) {}
  std::uint64_t lhs;
  std::uint64_t rhs;
};

}  // namespace jinf
