#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace stairflow {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense integer polynomial, coefficients in ascending degree. The zero
// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  static IntPolynomial constant(long c);
  static IntPolynomial monomial(long c, int degree);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  Integer coefficient(int i) const;
  Integer leading() const { return is_zero() ? Integer(0) : coefficients_.back(); }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  // Multiplication by x.
  IntPolynomial shifted() const;

  Rational evaluate(const Rational& x) const;

  // `x^4 - x^3 - 3*x^2 + 2*x + 1`
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coefficients_;
};

// Rational polynomial helpers used by the field arithmetic. Vectors are in
// ascending degree and trimmed (no trailing zeros).
namespace ratpoly {

using Poly = std::vector<Rational>;

void trim(Poly& p);
Poly from_int(const IntPolynomial& p);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
// a = q*b + r with deg r < deg b. b must be nonzero.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
// Exact division test over the integers: returns true and sets `quotient`
// when b divides a with integer quotient.
bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient = nullptr);

// Number of distinct real roots of p in the half-open interval (lo, hi], by
// Sturm's theorem. p must be squarefree and nonzero at lo and hi.
int sturm_root_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

}  // namespace ratpoly

}  // namespace stairflow
