#pragma once

#include "stairflow/bigfloat.hpp"
#include "stairflow/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace stairflow {

inline constexpr int kMinSupportedN = 5;
inline constexpr int kMaxSupportedN = 49;

// Throws InputError unless n is odd and within [kMinSupportedN, kMaxSupportedN].
void require_supported_n(int n);

long euler_totient(long n);

// Minimal polynomial of 2cos(pi/n) together with a dyadic isolating interval
// for that root. Shared by every element of the field Q(2cos(pi/n)).
class MinPolySpec {
 public:
  MinPolySpec(int n, IntPolynomial polynomial, std::string root_approx, unsigned base_bits,
              Integer base_numerator, int sign_below_root);
  MinPolySpec(const MinPolySpec&) = delete;
  MinPolySpec& operator=(const MinPolySpec&) = delete;

  int n() const { return n_; }
  int degree() const { return polynomial_.degree(); }
  const IntPolynomial& polynomial() const { return polynomial_; }
  const std::vector<Integer>& coefficients() const { return polynomial_.coefficients(); }
  // 2cos(pi/n) to 60 significant digits.
  const std::string& root_approx() const { return root_approx_; }
  // Isolating interval [root_lo, root_hi] with exactly one root of the polynomial.
  Rational root_lo() const;
  Rational root_hi() const;

  // Returns N with the root strictly inside (N / 2^bits, (N + 1) / 2^bits).
  // bits below the base precision are clamped up. Results are cached.
  Integer root_enclosure(unsigned bits) const;
  unsigned base_bits() const { return base_bits_; }

 private:
  int n_;
  IntPolynomial polynomial_;
  std::string root_approx_;
  unsigned base_bits_;
  int sign_below_root_;
  mutable std::mutex mutex_;
  mutable std::map<unsigned, Integer> enclosures_;
};

using FieldContext = std::shared_ptr<const MinPolySpec>;

// Memoized; the same pointer is returned for repeated calls with the same n.
FieldContext minimal_polynomial(int n);

// Uncached construction, including the factorization and root isolation work.
FieldContext build_minimal_polynomial(int n);

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

// Element of Q(x)/(mu(x)) with x = 2cos(pi/n), stored in the power basis and
// always reduced, so equality is coordinate-wise.
class FieldElement {
 public:
  explicit FieldElement(FieldContext context);

  static FieldElement constant(const FieldContext& context, const Rational& value);
  static FieldElement generator(const FieldContext& context);
  // Reduces coordinates of any length modulo the minimal polynomial.
  static FieldElement from_coords(const FieldContext& context, std::vector<Rational> coords);

  const FieldContext& context() const { return context_; }
  const std::vector<Rational>& coords() const { return coords_; }
  int n() const { return context_->n(); }

  bool is_zero() const;
  bool is_rational() const;
  const Rational& rational_part() const { return coords_.front(); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement& operator*=(const Rational& q);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }
  friend FieldElement operator+(const FieldElement& a, const Rational& q) {
    return a + constant(a.context(), q);
  }
  friend FieldElement operator-(const FieldElement& a, const Rational& q) {
    return a - constant(a.context(), q);
  }

  // Structural equality; contexts must match.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  // Throws DivisionByZero for the zero element.
  FieldElement inverse() const;

  Sign sign() const;

  // Rigorous rational enclosure [lo, hi] of the real value, obtained by
  // interval evaluation on a root enclosure of width 2^-bits.
  std::pair<Rational, Rational> enclosure(unsigned bits) const;

  // Correctly rounded decimal with the given number of significant digits.
  std::string decimal(int significant_digits) const;
  // Correctly rounded decimal with a fixed number of digits after the point.
  std::string fixed(int decimals) const;

  // Non-rigorous high precision value, for numeric cross-checks.
  BigFloat to_bigfloat(unsigned digits) const;
  double to_double() const;

 private:
  void check_context(const FieldElement& o) const;
  FieldContext context_;
  std::vector<Rational> coords_;
};

// Sign of a - b.
Sign compare(const FieldElement& a, const FieldElement& b);
inline bool less(const FieldElement& a, const FieldElement& b) {
  return compare(a, b) == Sign::negative;
}

enum class FieldOp { add, sub, mul, neg };
FieldElement field_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op);
FieldElement field_invert(const FieldElement& a);
Sign field_sign(const FieldElement& a);
std::string field_embed(const FieldElement& a, int digits);

// Decimal rounding helpers shared with the numeric code paths. They return an
// empty string when the enclosure [lo, hi] does not determine the rounding.
std::string round_significant(const Rational& lo, const Rational& hi, int digits);
std::string round_fixed(const Rational& lo, const Rational& hi, int decimals);

}  // namespace stairflow
