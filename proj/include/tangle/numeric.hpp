#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace tangle {

/// Arbitrary-precision integer used for every count.
using ExactCount =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;

/// Exact rational used for weights and recurrence intermediates.
using ExactRatio =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Raised when a size cap (tree enumeration, brute force) would be exceeded.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what_cap, std::uint64_t requested,
              std::uint64_t cap);

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// A rational sum that must be an integer was not. Only an implementation
/// bug can trigger this.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

ExactCount factorial(std::uint64_t n);

/// (2m-1)!! = 1*3*...*(2m-1); equals 1 for m <= 0.
ExactCount odd_double_factorial(std::int64_t m);

ExactCount binomial(std::uint64_t n, std::uint64_t k);

/// c_n = binomial(2n, n) / (n + 1).
ExactCount catalan(std::uint64_t n);

ExactCount pow(const ExactCount& base, unsigned exponent);
ExactRatio pow(const ExactRatio& base, unsigned exponent);

/// Returns numerator / denominator, throwing IntegralityError when the
/// division leaves a remainder. `context` names the quantity for the message.
ExactCount exact_quotient(const ExactCount& numerator,
                          const ExactCount& denominator,
                          const char* context);

/// Integer value of `r`, throwing IntegralityError if r is not integral.
ExactCount to_integer(const ExactRatio& r, const char* context);

/// In-place exact division by a small divisor (mpz_divexact_ui).
void divide_exact(ExactCount& value, std::uint64_t divisor);

std::string to_decimal(const ExactCount& value);
std::string to_string(const ExactRatio& value);

}  // namespace tangle
