#include "tangle/numeric.hpp"

#include <gmp.h>

namespace tangle {

CapExceeded::CapExceeded(const std::string& what_cap, std::uint64_t requested,
                         std::uint64_t cap)
    : std::length_error(what_cap + " cap exceeded: requested " +
                        std::to_string(requested) + ", cap is " +
                        std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

ExactCount factorial(std::uint64_t n) {
  ExactCount out;
  mpz_fac_ui(out.backend().data(), n);
  return out;
}

ExactCount odd_double_factorial(std::int64_t m) {
  ExactCount out = 1;
  for (std::int64_t j = 1; j <= m; ++j) out *= static_cast<std::uint64_t>(2 * j - 1);
  return out;
}

ExactCount binomial(std::uint64_t n, std::uint64_t k) {
  ExactCount out;
  if (k > n) return out;
  mpz_bin_uiui(out.backend().data(), n, k);
  return out;
}

ExactCount catalan(std::uint64_t n) {
  return exact_quotient(binomial(2 * n, n), ExactCount(n + 1), "catalan");
}

ExactCount pow(const ExactCount& base, unsigned exponent) {
  ExactCount out;
  mpz_pow_ui(out.backend().data(), base.backend().data(), exponent);
  return out;
}

ExactRatio pow(const ExactRatio& base, unsigned exponent) {
  ExactCount num = pow(ExactCount(numerator(base)), exponent);
  ExactCount den = pow(ExactCount(denominator(base)), exponent);
  return ExactRatio(num, den);
}

ExactCount exact_quotient(const ExactCount& numerator,
                          const ExactCount& denominator, const char* context) {
  if (denominator == 0) {
    throw IntegralityError(std::string(context) + ": division by zero");
  }
  ExactCount q;
  ExactCount r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0) {
    throw IntegralityError(std::string(context) +
                           ": sum is not an integer (remainder " +
                           r.str() + ")");
  }
  return q;
}

ExactCount to_integer(const ExactRatio& r, const char* context) {
  if (denominator(r) != 1) {
    throw IntegralityError(std::string(context) + ": value " + r.str() +
                           " is not an integer");
  }
  return ExactCount(numerator(r));
}

void divide_exact(ExactCount& value, std::uint64_t divisor) {
  mpz_divexact_ui(value.backend().data(), value.backend().data(), divisor);
}

std::string to_decimal(const ExactCount& value) { return value.str(); }

std::string to_string(const ExactRatio& value) { return value.str(); }

}  // namespace tangle
