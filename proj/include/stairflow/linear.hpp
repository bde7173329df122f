#pragma once

#include "stairflow/numfield.hpp"

#include <optional>
#include <string>

namespace stairflow {

// A direction in the plane with field coordinates.
struct DirectionVector {
  FieldElement dx;
  FieldElement dy;

  // Flips the sign so that dx >= 0, and dy >= 0 when dx = 0. Throws on the zero vector.
  DirectionVector normalized() const;

  friend bool operator==(const DirectionVector&, const DirectionVector&) = default;
};

// Projective slope dy/dx: a field element or infinity. Infinity compares
// greater than every finite slope.
class ExtendedSlope {
 public:
  explicit ExtendedSlope(FieldElement value) : value_(std::move(value)) {}
  static ExtendedSlope infinity() { return ExtendedSlope(); }

  bool is_infinite() const { return !value_; }
  const FieldElement& value() const;

  // "inf" or the field text form.
  std::string text() const;
  // "inf" or a decimal with the given significant digits.
  std::string decimal(int digits) const;

  friend bool operator==(const ExtendedSlope& a, const ExtendedSlope& b);

 private:
  ExtendedSlope() = default;
  std::optional<FieldElement> value_;
};

// Total order: -1, 0, 1.
int compare(const ExtendedSlope& a, const ExtendedSlope& b);
inline bool operator<(const ExtendedSlope& a, const ExtendedSlope& b) { return compare(a, b) < 0; }

ExtendedSlope slope_of(const DirectionVector& v);
// (1, s) for finite s, (0, 1) for infinity.
DirectionVector direction_of(const ExtendedSlope& s, const FieldContext& context);

// 2x2 matrix over the field acting on column vectors.
struct Mat2 {
  FieldElement a, b, c, d;

  static Mat2 identity(const FieldContext& context);
  FieldElement det() const { return a * d - b * c; }
  // Inverse times the determinant; no division.
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 operator*(const Mat2& o) const;
  DirectionVector operator*(const DirectionVector& v) const;
  Mat2 scaled(const FieldElement& k) const { return {a * k, b * k, c * k, d * k}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Linear fractional transformation s -> (a s + b) / (c s + d). Stored in
// projective normal form: the first nonzero coefficient among a, b, c, d is 1,
// which is unique per projective class.
class LFT {
 public:
  // Throws InputError for a singular matrix.
  explicit LFT(const Mat2& m);
  static LFT identity(const FieldContext& context);

  const Mat2& matrix() const { return m_; }
  ExtendedSlope operator()(const ExtendedSlope& s) const;
  // (f * g)(s) = f(g(s))
  LFT operator*(const LFT& o) const { return LFT(m_ * o.m_); }
  LFT inverse() const { return LFT(m_.adjugate()); }
  LFT power(int k) const;

  friend bool operator==(const LFT&, const LFT&) = default;

 private:
  Mat2 m_;
};

inline ExtendedSlope lft_apply(const LFT& t, const ExtendedSlope& s) { return t(s); }

}  // namespace stairflow
