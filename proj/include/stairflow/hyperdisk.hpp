#pragma once

#include "stairflow/bigfloat.hpp"
#include "stairflow/linear.hpp"

#include <optional>
#include <vector>

namespace stairflow {

// Disk model of the regular ideal n-gon. Boundary points are sent to a
// tangent number line by stereographic projection from -1, scaled so that the
// vertex after -1 lands on 0 and the midpoint of that arc lands on 1.

// r = (1/2) tan(pi/n) tan(pi/2n) / (tan(pi/n) - tan(pi/2n))
BigFloat disk_radius(int n, unsigned digits = 50);

// Height of the first vertex before the shift: 2r / tan(pi/n).
BigFloat projection_offset(int n, unsigned digits = 50);

// f(e^{i t}) = 2r Im(z) / (1 + Re(z)) - offset, with t = angle_over_pi * pi
// in (-pi, pi]. The point -1 maps to infinity (nullopt).
std::optional<BigFloat> stereo_project(int n, const Rational& angle_over_pi, unsigned digits = 50);

// Angle (as a multiple of pi) of vertex i: 1 - 2i/n.
Rational vertex_angle(int n, int i);

// v_0 = infinity, v_i = -Q_{i-2}(x) / Q_{i-1}(x) exactly, for 1 <= i <= n-1.
std::vector<ExtendedSlope> vertex_values(int n);

// sin((1 - i) pi / n) / sin(i pi / n), the trigonometric form of v_i.
BigFloat vertex_value_sine(int n, int i, unsigned digits = 50);

struct DiskGeometry {
  int n;
  BigFloat r;
  BigFloat offset;
  std::vector<ExtendedSlope> vertex_values;
};
DiskGeometry disk_geometry(int n, unsigned digits = 50);

// T: s -> (v_{n-1} s - 1) / s, the rotation carrying v_i to v_{i-1}.
LFT t_operator(int n);

// The LFT carrying v_i to v_{i-1} (indices mod n), built from three point
// correspondences by cross-ratios and then checked on every vertex.
LFT rotation_lft(int n);

// R: s -> -s
LFT reflection_lft(int n);

// S_m = R T^m for 1 <= m <= n-1.
LFT s_operator(int n, int m);

// Matrix of S_m in the determinant one convention that pairs it with a
// sector matrix: (matrix of R T^m) * [[0, 1], [1, 0]]. Determinant checked.
Mat2 s_operator_matrix(int n, int m);

// The two sides of the tangent identity for v_i:
//   lhs = tan(pi/2n) / (tan(pi/n) - tan(pi/2n)) * (tan(pi/n) / tan(i pi/n) - 1)
//   rhs = -tan((i-1)pi/n) / (tan(pi/n) + tan((i-1)pi/n)) * (tan(pi/n) / tan(pi/2n) - 1)
BigFloat tan_identity_lhs(int n, int i, unsigned digits = 50);
BigFloat tan_identity_rhs(int n, int i, unsigned digits = 50);

}  // namespace stairflow
