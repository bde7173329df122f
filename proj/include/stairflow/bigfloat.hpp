#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <string>

namespace stairflow {

using BigFloat = boost::multiprecision::mpfr_float;

// Sets the working precision (decimal digits) of newly created BigFloats for
// the lifetime of the guard. Precision is thread local.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
  }
  ~ScopedPrecision() { BigFloat::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

inline BigFloat to_bigfloat(const mpq_class& q) {
  BigFloat out;
  mpfr_set_q(out.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

inline BigFloat big_pi() {
  BigFloat out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

// Fixed-point rendering with `decimals` digits after the point.
inline std::string to_fixed(const BigFloat& v, int decimals) {
  return v.str(decimals, std::ios_base::fixed);
}

}  // namespace stairflow
