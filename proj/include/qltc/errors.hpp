#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qltc {

/// Operand shapes do not conform (mul, add, block, solve).
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed PCM text, complex JSON or job file.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A complex or code view that breaks its structural contract
/// (wrong arity, failed chain condition, out-of-range window).
class InvalidComplex : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed the configured cap.
class CapExceeded : public std::runtime_error {
  public:
    CapExceeded(const std::string& what, std::uint64_t cap)
        : std::runtime_error(what + " exceeds enumeration cap " + std::to_string(cap)), cap_(cap) {}

    std::uint64_t cap() const noexcept { return cap_; }

  private:
    std::uint64_t cap_;
};

/// Classical input to balancing has linearly dependent checks.
class DependentChecks : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A component soundness required by a bound is undefined.
class UndefinedSoundness : public std::runtime_error {
  public:
    UndefinedSoundness(std::string side, const std::string& reason)
        : std::runtime_error("soundness of the " + side + " side is undefined: " + reason),
          side_(std::move(side)) {}

    const std::string& side() const noexcept { return side_; }

  private:
    std::string side_;
};

}  // namespace qltc
