#include "stairflow/linear.hpp"

#include "stairflow/errors.hpp"
#include "stairflow/field_text.hpp"

namespace stairflow {

DirectionVector DirectionVector::normalized() const {
  const Sign sx = dx.sign();
  if (sx == Sign::zero && dy.is_zero()) throw InputError("zero direction vector");
  if (sx == Sign::negative || (sx == Sign::zero && dy.sign() == Sign::negative)) return {-dx, -dy};
  return *this;
}

const FieldElement& ExtendedSlope::value() const {
  if (!value_) throw InputError("infinite slope has no finite value");
  return *value_;
}

std::string ExtendedSlope::text() const { return value_ ? format_field_element(*value_) : "inf"; }

std::string ExtendedSlope::decimal(int digits) const { return value_ ? value_->decimal(digits) : "inf"; }

bool operator==(const ExtendedSlope& a, const ExtendedSlope& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return a.value() == b.value();
}

int compare(const ExtendedSlope& a, const ExtendedSlope& b) {
  if (a.is_infinite()) return b.is_infinite() ? 0 : 1;
  if (b.is_infinite()) return -1;
  return static_cast<int>(compare(a.value(), b.value()));
}

ExtendedSlope slope_of(const DirectionVector& v) {
  if (v.dx.is_zero()) {
    if (v.dy.is_zero()) throw InputError("zero direction vector");
    return ExtendedSlope::infinity();
  }
  return ExtendedSlope(v.dy / v.dx);
}

DirectionVector direction_of(const ExtendedSlope& s, const FieldContext& context) {
  if (s.is_infinite()) return {FieldElement(context), FieldElement::constant(context, 1)};
  return {FieldElement::constant(context, 1), s.value()};
}

Mat2 Mat2::identity(const FieldContext& context) {
  auto one = FieldElement::constant(context, 1);
  FieldElement zero(context);
  return {one, zero, zero, one};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

DirectionVector Mat2::operator*(const DirectionVector& v) const {
  return {a * v.dx + b * v.dy, c * v.dx + d * v.dy};
}

LFT::LFT(const Mat2& m) : m_(m) {
  if (m_.det().is_zero()) throw InputError("singular linear fractional transformation");
  for (const FieldElement* e : {&m_.a, &m_.b, &m_.c, &m_.d}) {
    if (e->is_zero()) continue;
    m_ = m_.scaled(e->inverse());
    break;
  }
}

LFT LFT::identity(const FieldContext& context) { return LFT(Mat2::identity(context)); }

ExtendedSlope LFT::operator()(const ExtendedSlope& s) const {
  if (s.is_infinite()) {
    if (m_.c.is_zero()) return ExtendedSlope::infinity();
    return ExtendedSlope(m_.a / m_.c);
  }
  FieldElement den = m_.c * s.value() + m_.d;
  if (den.is_zero()) return ExtendedSlope::infinity();
  return ExtendedSlope((m_.a * s.value() + m_.b) / den);
}

LFT LFT::power(int k) const {
  if (k < 0) return inverse().power(-k);
  LFT out = identity(m_.a.context());
  for (int i = 0; i < k; ++i) out = *this * out;
  return out;
}

}  // namespace stairflow
