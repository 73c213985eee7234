#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "tangle/numeric.hpp"
#include "tangle/tree.hpp"

namespace tangle {

/// Variable-precision binary float (MPFR). Its precision is set by the
/// functions below from their `precision_bits` argument.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 200;

enum class AsymFamily {
  /// e^{1/8} c_{n-1}^2 n! / 4^{n-1} times the correction series.
  catalan,
  /// 2^{2n-3/2} n^{n-5/2} / (sqrt(pi) e^{n-1/8}) times the correction series.
  stirling,
};

/// Correction series 1 + a_1/n + ... + a_5/n^5 for one family.
struct AsymSeries {
  AsymFamily family;
  std::array<ExactRatio, 6> coefficients;
};

const AsymSeries& asym_series(AsymFamily family);

/// The asymptotic estimate of t_n using the first `terms` coefficients of the
/// family's series; terms = 0 keeps only the leading factor (series = 1,
/// the same value as terms = 1). Throws std::invalid_argument for n < 2 or
/// terms > 6.
Real t_asym(std::uint64_t n, unsigned terms, AsymFamily family,
            unsigned precision_bits = kDefaultPrecisionBits);

/// approx / exact - 1 evaluated at the given precision.
Real relative_error(const Real& approx, const ExactCount& exact,
                    unsigned precision_bits = kDefaultPrecisionBits);

/// f(1/4) for f(x) = x + f(x)^2 / 2 + (x - 1/2) f(x^2), f(0) = 0, through the
/// nested radical f(x) = 1 - sqrt((1 - 2x)(1 + f(x^2))). The radical is cut
/// where x^{2^d} drops below 2^-precision. Throws for precision < 64.
Real f_fixed_point(unsigned precision_bits = kDefaultPrecisionBits);

/// The nested radical cut after `depth` square roots (f(x^{2^depth}) := 0).
/// depth = 0 gives 0.
Real f_fixed_point_truncated(unsigned precision_bits, unsigned depth);

/// sum over T in B_n of 4^{-(leaf_count(T) + symmetry_count(T))}.
ExactRatio generator_weight_sum(std::uint32_t n,
                                std::uint32_t cap = kDefaultTreeCap);

/// Fixed-point decimal rendering with `digits` digits after the point,
/// correctly rounded.
std::string to_fixed(const Real& value, unsigned digits);
/// Scientific rendering with `digits` significant digits.
std::string to_scientific(const Real& value, unsigned digits);

}  // namespace tangle
