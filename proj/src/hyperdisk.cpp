#include "stairflow/hyperdisk.hpp"

#include "stairflow/chebpoly.hpp"
#include "stairflow/errors.hpp"

namespace stairflow {

namespace {

// Guard digits for the working precision.
constexpr unsigned kGuard = 15;

BigFloat pi_times(const Rational& q) { return big_pi() * to_bigfloat(q); }

BigFloat tan_pi(long num, long den) { return tan(big_pi() * num / den); }

void require_vertex_index(int n, int i, int lo) {
  if (i < lo || i > n - 1) throw InputError("vertex index out of range: " + std::to_string(i));
}

// LFT sending (z1, z2, z3) to (0, inf, 1).
Mat2 to_standard(const ExtendedSlope& z1, const ExtendedSlope& z2, const ExtendedSlope& z3,
                 const FieldContext& ctx) {
  auto one = FieldElement::constant(ctx, 1);
  FieldElement zero(ctx);
  if (z1.is_infinite()) return {zero, z3.value() - z2.value(), one, -z2.value()};
  if (z2.is_infinite()) return {one, -z1.value(), zero, z3.value() - z1.value()};
  if (z3.is_infinite()) return {one, -z1.value(), one, -z2.value()};
  FieldElement p = z3.value() - z2.value(), q = z3.value() - z1.value();
  return {p, -z1.value() * p, q, -z2.value() * q};
}

}  // namespace

BigFloat disk_radius(int n, unsigned digits) {
  require_supported_n(n);
  ScopedPrecision prec(digits + kGuard);
  BigFloat t1 = tan_pi(1, n), th = tan_pi(1, 2L * n);
  return BigFloat(t1 * th / (t1 - th) / 2);
}

BigFloat projection_offset(int n, unsigned digits) {
  ScopedPrecision prec(digits + kGuard);
  BigFloat r = disk_radius(n, digits);
  return BigFloat(2 * r / tan_pi(1, n));
}

std::optional<BigFloat> stereo_project(int n, const Rational& angle_over_pi, unsigned digits) {
  require_supported_n(n);
  if (angle_over_pi <= -1 || angle_over_pi > 1) throw InputError("angle must lie in (-pi, pi]");
  if (angle_over_pi == 1) return std::nullopt;
  ScopedPrecision prec(digits + kGuard);
  BigFloat t = pi_times(angle_over_pi);
  BigFloat r = disk_radius(n, digits);
  return BigFloat(2 * r * sin(t) / (1 + cos(t)) - projection_offset(n, digits));
}

Rational vertex_angle(int n, int i) {
  Rational q(n - 2 * i, n);
  q.canonicalize();
  return q;
}

std::vector<ExtendedSlope> vertex_values(int n) {
  auto ctx = minimal_polynomial(n);
  const auto x = FieldElement::generator(ctx);
  std::vector<ExtendedSlope> out{ExtendedSlope::infinity()};
  for (int i = 1; i <= n - 1; ++i) {
    FieldElement num = evaluate(sine_ratio_poly(i - 2), x);
    FieldElement den = evaluate(sine_ratio_poly(i - 1), x);
    out.emplace_back(-num / den);
  }
  return out;
}

BigFloat vertex_value_sine(int n, int i, unsigned digits) {
  require_vertex_index(n, i, 1);
  ScopedPrecision prec(digits + kGuard);
  return BigFloat(sin(big_pi() * (1 - i) / n) / sin(big_pi() * i / n));
}

DiskGeometry disk_geometry(int n, unsigned digits) {
  return {n, disk_radius(n, digits), projection_offset(n, digits), vertex_values(n)};
}

LFT t_operator(int n) {
  auto ctx = minimal_polynomial(n);
  const auto v = vertex_values(n);
  return LFT(Mat2{v[static_cast<size_t>(n - 1)].value(), FieldElement::constant(ctx, -1),
                  FieldElement::constant(ctx, 1), FieldElement(ctx)});
}

LFT rotation_lft(int n) {
  auto ctx = minimal_polynomial(n);
  const auto v = vertex_values(n);
  const auto prev = [&](int i) { return v[static_cast<size_t>((i + n - 1) % n)]; };
  Mat2 from = to_standard(v[0], v[1], v[2], ctx);
  Mat2 to = to_standard(prev(0), prev(1), prev(2), ctx);
  if (from.det().is_zero() || to.det().is_zero()) throw VerificationError("degenerate vertex correspondence");
  LFT rot(to.adjugate() * from);
  for (int i = 0; i < n; ++i)
    if (!(rot(v[static_cast<size_t>(i)]) == prev(i)))
      throw VerificationError("rotation does not cycle the vertices");
  return rot;
}

LFT reflection_lft(int n) {
  auto ctx = minimal_polynomial(n);
  FieldElement zero(ctx);
  return LFT(Mat2{FieldElement::constant(ctx, -1), zero, zero, FieldElement::constant(ctx, 1)});
}

namespace {

Mat2 raw_s_matrix(int n, int m) {
  if (m < 1 || m > n - 1) throw InputError("S_m needs 1 <= m <= n-1, got m = " + std::to_string(m));
  auto ctx = minimal_polynomial(n);
  const auto v = vertex_values(n);
  FieldElement zero(ctx);
  auto one = FieldElement::constant(ctx, 1);
  const Mat2 t{v[static_cast<size_t>(n - 1)].value(), -one, one, zero};
  Mat2 out{-one, zero, zero, one};
  for (int k = 0; k < m; ++k) out = out * t;
  return out;
}

}  // namespace

LFT s_operator(int n, int m) { return LFT(raw_s_matrix(n, m)); }

Mat2 s_operator_matrix(int n, int m) {
  Mat2 s = raw_s_matrix(n, m);
  auto ctx = s.a.context();
  FieldElement zero(ctx);
  auto one = FieldElement::constant(ctx, 1);
  Mat2 out = s * Mat2{zero, one, one, zero};
  if (!(out.det() == one)) throw VerificationError("S_m matrix does not have determinant one");
  return out;
}

BigFloat tan_identity_lhs(int n, int i, unsigned digits) {
  require_vertex_index(n, i, 2);
  ScopedPrecision prec(digits + kGuard);
  BigFloat t1 = tan_pi(1, n), th = tan_pi(1, 2L * n), ti = tan_pi(i, n);
  return BigFloat(th / (t1 - th) * (t1 / ti - 1));
}

BigFloat tan_identity_rhs(int n, int i, unsigned digits) {
  require_vertex_index(n, i, 2);
  ScopedPrecision prec(digits + kGuard);
  BigFloat t1 = tan_pi(1, n), th = tan_pi(1, 2L * n), tp = tan_pi(i - 1, n);
  return BigFloat(-tp / (t1 + tp) * (t1 / th - 1));
}

}  // namespace stairflow
