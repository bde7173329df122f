#pragma once

#include "stairflow/numfield.hpp"

#include <string>
#include <utility>
#include <vector>

namespace stairflow {

struct Point {
  FieldElement x;
  FieldElement y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Axis-aligned rectangle [x0, x1] x [y0, y1]. For k >= 1 each step rectangle
// R_k has a transpose twin.
struct Rectangle {
  int k;
  bool twin;
  FieldElement x0, y0, x1, y1;

  FieldElement width() const { return x1 - x0; }
  FieldElement height() const { return y1 - y0; }
  // height / width
  FieldElement diagonal_slope() const { return height() / width(); }
};

// A horizontal cylinder (row) or vertical cylinder (column), as the strip
// [x0, x0 + w] x [y0, y0 + h]. Rows wrap right to left, columns top to bottom.
struct Strip {
  int k;
  FieldElement x0, y0, w, h;
  FieldElement x1() const { return x0 + w; }
  FieldElement y1() const { return y0 + h; }
};

// Staircase surface of the double n-gon, n = 2m + 1. The central square R_0
// is [E, E+1]^2 and the steps alternate right and down from it, with the
// transposed copies going up and left, so the surface is symmetric under
// (x, y) -> (y, x). E is chosen so that the lowest and leftmost points sit on
// the axes. Row k and column k have width x s(k) and height s(k) (swapped for
// columns), with x = 2cos(pi/n).
class StaircaseSurface {
 public:
  explicit StaircaseSurface(int n);

  int n() const { return n_; }
  int m() const { return (n_ - 1) / 2; }
  const FieldContext& context() const { return context_; }
  // Cylinder aspect ratio, the field generator.
  const FieldElement& aspect() const { return aspect_; }
  // s(0), ..., s(m)
  const std::vector<FieldElement>& lengths() const { return lengths_; }

  const std::vector<Rectangle>& rectangles() const { return rectangles_; }
  const std::vector<Strip>& rows() const { return rows_; }
  const std::vector<Strip>& columns() const { return columns_; }
  // Counter-clockwise boundary, starting at the lowest then leftmost vertex.
  const std::vector<Point>& outline() const { return outline_; }
  // Every rectangle corner. All of them lie on the boundary and are glued to
  // the single cone point of the surface.
  const std::vector<Point>& cone_points() const { return cone_points_; }

  // Index of the row with y0 <= y < y1, or -1.
  int row_at(const FieldElement& y) const;
  // Index of the column with x0 <= x < x1, or -1.
  int column_at(const FieldElement& x) const;
  // Closed region membership.
  bool contains(const Point& p) const;
  bool is_cone_point(const Point& p) const;

 private:
  int n_;
  FieldContext context_;
  FieldElement aspect_;
  std::vector<FieldElement> lengths_;
  std::vector<Rectangle> rectangles_;
  std::vector<Strip> rows_;
  std::vector<Strip> columns_;
  std::vector<Point> outline_;
  std::vector<Point> cone_points_;
};

StaircaseSurface build_staircase(int n);

// R_0, then R_1, twin R_1, R_2, twin R_2, ...: 2m - 1 = n - 2 rectangles.
std::vector<Rectangle> r_rectangles(const StaircaseSurface& surface);

// Long over short diagonal slope of R_0, ..., R_{m-1}, sorted ascending.
std::vector<FieldElement> diagonal_slopes(const StaircaseSurface& surface);

enum class Axis { horizontal, vertical };

struct Cylinder {
  FieldElement circumference;
  FieldElement height;
};
std::vector<Cylinder> cylinder_decomposition(const StaircaseSurface& surface, Axis direction);

// Sum of row areas equals the sum of rectangle areas.
bool area_identity_holds(const StaircaseSurface& surface);

// Rows partition the vertical extent and columns the horizontal extent, each
// rectangle lies in exactly one row and one column, and every row and column
// is gap free, so the wrap maps are translations between boundary segments.
bool gluing_well_formed(const StaircaseSurface& surface);

struct SkewDerivation {
  // Outer vertices after aligning with build_staircase by a symmetry of the square.
  std::vector<std::pair<double, double>> vertices;
  double max_deviation;
};

// Numeric rebuild of the staircase from the double n-gon: zig-zag
// triangulation, skew taking the zig-zag diagonals to vertical, translation of
// each triangle of the second polygon onto its partner across the identified
// edge, and rescaling of the central rectangle to the unit square. Throws
// VerificationError when the result differs from build_staircase by more
// than tol.
SkewDerivation derive_via_skew(int n, double tol = 1e-9);

// Deterministic SVG drawing: rectangle grid, outline and, when requested,
// dashed diagonals labelled with their slopes to 4 decimals.
std::string staircase_svg(const StaircaseSurface& surface, bool show_diagonals);

}  // namespace stairflow
