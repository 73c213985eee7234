#include "tangle/asym.hpp"

#include <cmath>
#include <stdexcept>

#include <mpfr.h>

namespace tangle {

namespace {

// Sets the MPFR default precision for new Reals and restores it on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    // digits10 -> bits inside boost rounds up, so this never loses bits.
    Real::default_precision(
        static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 2);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const ExactCount& value) {
  Real out;
  mpfr_set_z(out.backend().data(), value.backend().data(), MPFR_RNDN);
  return out;
}

Real to_real(const ExactRatio& value) {
  Real out;
  mpfr_set_q(out.backend().data(), value.backend().data(), MPFR_RNDN);
  return out;
}

Real series_value(const AsymSeries& series, std::uint64_t n, unsigned terms) {
  Real sum = 0;
  if (terms == 0) return Real(1);
  const Real inv_n = Real(1) / Real(n);
  Real power = 1;
  for (unsigned j = 0; j < terms; ++j) {
    sum += to_real(series.coefficients[j]) * power;
    power *= inv_n;
  }
  return sum;
}

}  // namespace

const AsymSeries& asym_series(AsymFamily family) {
  static const AsymSeries kCatalan{
      AsymFamily::catalan,
      {ExactRatio(1), ExactRatio(1, 4), ExactRatio(137, 256),
       ExactRatio(1285, 1024), ExactRatio(456017, 131072),
       ExactRatio(6140329, 524288)}};
  static const AsymSeries kStirling{
      AsymFamily::stirling,
      {ExactRatio(1), ExactRatio(13, 12), ExactRatio(3089, 2304),
       ExactRatio(931423, 414720), ExactRatio(826301423, 159252480),
       ExactRatio(ExactCount(211060350013ULL), ExactCount(13377208320ULL))}};
  return family == AsymFamily::catalan ? kCatalan : kStirling;
}

Real t_asym(std::uint64_t n, unsigned terms, AsymFamily family,
            unsigned precision_bits) {
  if (n < 2) throw std::invalid_argument("t_asym needs n >= 2");
  if (terms > 6) throw std::invalid_argument("t_asym supports at most 6 terms");
  PrecisionScope scope(precision_bits);
  const Real eighth = Real(1) / 8;
  Real leading;
  if (family == AsymFamily::catalan) {
    const ExactCount c = catalan(n - 1);
    leading = to_real(c * c * factorial(n));
    // divide by 4^{n-1} exactly through the exponent
    mpfr_div_2ui(leading.backend().data(), leading.backend().data(),
                 2 * (n - 1), MPFR_RNDN);
    leading *= exp(eighth);
  } else {
    const Real rn(n);
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    leading = exp((Real(2 * n) - Real(3) / 2) * log(Real(2)) +
                  (rn - Real(5) / 2) * log(rn) - (rn - eighth)) /
              sqrt(pi);
  }
  return leading * series_value(asym_series(family), n, terms);
}

Real relative_error(const Real& approx, const ExactCount& exact,
                    unsigned precision_bits) {
  PrecisionScope scope(precision_bits);
  return approx / to_real(exact) - 1;
}

Real f_fixed_point_truncated(unsigned precision_bits, unsigned depth) {
  PrecisionScope scope(precision_bits);
  std::vector<Real> xs;
  Real x = Real(1) / 4;
  for (unsigned d = 0; d < depth; ++d) {
    xs.push_back(x);
    x *= x;
  }
  Real g = 0;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    g = 1 - sqrt((1 - 2 * *it) * (1 + g));
  }
  return g;
}

Real f_fixed_point(unsigned precision_bits) {
  if (precision_bits < 64) {
    throw std::invalid_argument("f_fixed_point needs at least 64 bits");
  }
  // (1/4)^{2^d} = 2^{-2^{d+1}} falls below 2^-precision once 2^{d+1} > bits.
  unsigned depth = 0;
  while ((std::uint64_t{1} << (depth + 1)) <= precision_bits) ++depth;
  return f_fixed_point_truncated(precision_bits, depth + 1);
}

ExactRatio generator_weight_sum(std::uint32_t n, std::uint32_t cap) {
  ExactRatio sum = 0;
  for (const auto& t : enumerate_trees(n, cap)) {
    const auto exponent = static_cast<unsigned>(t.leaf_count() + symmetry_count(t));
    sum += ExactRatio(ExactCount(1), pow(ExactCount(4), exponent));
  }
  return sum;
}

std::string to_fixed(const Real& value, unsigned digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", static_cast<int>(digits), value.backend().data());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string to_scientific(const Real& value, unsigned digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits > 0 ? digits - 1 : 0),
                value.backend().data());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace tangle
