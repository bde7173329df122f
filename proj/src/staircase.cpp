#include "stairflow/staircase.hpp"

#include "stairflow/chebpoly.hpp"
#include "stairflow/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace stairflow {

namespace {

using Lattice = std::pair<int, int>;

// Boundary of a union of grid boxes [i0, i1) x [j0, j1), as a counter-clockwise
// lattice cycle without collinear points. The union must be a simple polygon.
std::vector<Lattice> grid_outline(const std::vector<std::array<int, 4>>& boxes, int nx, int ny) {
  std::vector<std::vector<bool>> covered(static_cast<size_t>(nx), std::vector<bool>(static_cast<size_t>(ny)));
  for (const auto& b : boxes)
    for (int i = b[0]; i < b[1]; ++i)
      for (int j = b[2]; j < b[3]; ++j) {
        if (covered[i][j]) throw VerificationError("rectangles overlap");
        covered[i][j] = true;
      }
  auto cov = [&](int i, int j) { return i >= 0 && j >= 0 && i < nx && j < ny && covered[i][j]; };
  std::map<Lattice, Lattice> next;
  auto add = [&](Lattice a, Lattice b) {
    if (!next.emplace(a, b).second) throw VerificationError("outline is not a simple polygon");
  };
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      if (!covered[i][j]) continue;
      if (!cov(i, j - 1)) add({i, j}, {i + 1, j});
      if (!cov(i + 1, j)) add({i + 1, j}, {i + 1, j + 1});
      if (!cov(i, j + 1)) add({i + 1, j + 1}, {i, j + 1});
      if (!cov(i - 1, j)) add({i, j + 1}, {i, j});
    }
  if (next.empty()) return {};
  Lattice start = next.begin()->first;
  for (const auto& [p, q] : next)
    if (std::pair(p.second, p.first) < std::pair(start.second, start.first)) start = p;
  std::vector<Lattice> cycle{start};
  for (Lattice p = next.at(start); p != start; p = next.at(p)) {
    cycle.push_back(p);
    if (cycle.size() > next.size()) throw VerificationError("outline does not close");
  }
  if (cycle.size() != next.size()) throw VerificationError("outline has several components");
  std::vector<Lattice> corners;
  const size_t k = cycle.size();
  for (size_t i = 0; i < k; ++i) {
    const Lattice& a = cycle[(i + k - 1) % k];
    const Lattice& b = cycle[i];
    const Lattice& c = cycle[(i + 1) % k];
    const bool straight = (a.first == b.first && b.first == c.first) || (a.second == b.second && b.second == c.second);
    if (!straight) corners.push_back(b);
  }
  return corners;
}

template <typename T, typename Less, typename Equal>
std::vector<T> sorted_unique(std::vector<T> values, Less less_than, Equal equal) {
  std::sort(values.begin(), values.end(), less_than);
  std::vector<T> out;
  for (auto& v : values)
    if (out.empty() || !equal(out.back(), v)) out.push_back(std::move(v));
  return out;
}

template <typename T, typename Equal>
int index_of(const std::vector<T>& values, const T& v, Equal equal) {
  for (size_t i = 0; i < values.size(); ++i)
    if (equal(values[i], v)) return static_cast<int>(i);
  throw VerificationError("coordinate not on the grid");
}

bool between(const FieldElement& lo, const FieldElement& v, const FieldElement& hi) {
  return !less(v, lo) && less(v, hi);
}

}  // namespace

StaircaseSurface::StaircaseSurface(int n)
    : n_(n),
      context_(minimal_polynomial(n)),
      aspect_(FieldElement::generator(context_)),
      lengths_(s_lengths(n)) {
  const int m = this->m();
  const auto& s = lengths_;
  FieldElement shift(context_);
  for (int k = 2; k <= m - 1; k += 2) shift += s[static_cast<size_t>(k)];

  const auto zero = FieldElement(context_);
  const auto one = FieldElement::constant(context_, 1);
  Rectangle prev{0, false, zero, zero, one, one};
  std::vector<Rectangle> chain{prev};
  for (int k = 1; k <= m - 1; ++k) {
    const FieldElement& len = s[static_cast<size_t>(k)];
    Rectangle next = (k % 2 == 1) ? Rectangle{k, false, prev.x1, prev.y0, prev.x1 + len, prev.y1}
                                  : Rectangle{k, false, prev.x0, prev.y0 - len, prev.x1, prev.y0};
    chain.push_back(next);
    prev = next;
  }
  for (const auto& r : chain) {
    Rectangle a{r.k, false, r.x0 + shift, r.y0 + shift, r.x1 + shift, r.y1 + shift};
    rectangles_.push_back(a);
    if (r.k > 0) rectangles_.push_back(Rectangle{r.k, true, a.y0, a.x0, a.y1, a.x1});
  }

  // Rows and columns, grouped geometrically.
  auto strips = [&](bool horizontal) {
    std::vector<Strip> out;
    for (const auto& r : rectangles_) {
      const FieldElement& lo = horizontal ? r.y0 : r.x0;
      const FieldElement& hi = horizontal ? r.y1 : r.x1;
      const FieldElement across = horizontal ? r.width() : r.height();
      const FieldElement& start = horizontal ? r.x0 : r.y0;
      auto it = std::find_if(out.begin(), out.end(), [&](const Strip& st) {
        return horizontal ? (st.y0 == lo && st.y1() == hi) : (st.x0 == lo && st.x1() == hi);
      });
      if (it == out.end()) {
        out.push_back(horizontal ? Strip{-1, start, lo, across, hi - lo} : Strip{-1, lo, start, hi - lo, across});
        continue;
      }
      // Extend, insisting on adjacency so that the strip is gap free.
      FieldElement& s0 = horizontal ? it->x0 : it->y0;
      FieldElement& len = horizontal ? it->w : it->h;
      if (start + across == s0) {
        s0 = start;
        len += across;
      } else if (s0 + len == start) {
        len += across;
      } else {
        throw VerificationError("cylinder pieces are not adjacent");
      }
    }
    // Assign k by the short side s(k); the rectangles are visited in chain order so
    // pieces of one strip are always adjacent to an earlier piece.
    for (auto& st : out) {
      const FieldElement& h = horizontal ? st.h : st.w;
      for (int k = 0; k < m; ++k)
        if (h == s[static_cast<size_t>(k)]) st.k = k;
      if (st.k < 0) throw VerificationError("cylinder height is not a side length");
    }
    std::sort(out.begin(), out.end(), [](const Strip& a, const Strip& b) { return a.k < b.k; });
    return out;
  };
  rows_ = strips(true);
  columns_ = strips(false);

  // Outline on the grid of all corner coordinates.
  std::vector<FieldElement> coords;
  for (const auto& r : rectangles_) {
    coords.push_back(r.x0);
    coords.push_back(r.x1);
    coords.push_back(r.y0);
    coords.push_back(r.y1);
  }
  auto eq = [](const FieldElement& a, const FieldElement& b) { return a == b; };
  auto grid = sorted_unique(coords, [](const FieldElement& a, const FieldElement& b) { return less(a, b); }, eq);
  std::vector<std::array<int, 4>> boxes;
  for (const auto& r : rectangles_)
    boxes.push_back({index_of(grid, r.x0, eq), index_of(grid, r.x1, eq), index_of(grid, r.y0, eq),
                     index_of(grid, r.y1, eq)});
  const int g = static_cast<int>(grid.size());
  for (const auto& [i, j] : grid_outline(boxes, g, g))
    outline_.push_back({grid[static_cast<size_t>(i)], grid[static_cast<size_t>(j)]});

  for (const auto& r : rectangles_)
    for (Point p : {Point{r.x0, r.y0}, Point{r.x1, r.y0}, Point{r.x1, r.y1}, Point{r.x0, r.y1}})
      if (std::find(cone_points_.begin(), cone_points_.end(), p) == cone_points_.end()) cone_points_.push_back(p);
}

int StaircaseSurface::row_at(const FieldElement& y) const {
  for (size_t i = 0; i < rows_.size(); ++i)
    if (between(rows_[i].y0, y, rows_[i].y1())) return static_cast<int>(i);
  return -1;
}

int StaircaseSurface::column_at(const FieldElement& x) const {
  for (size_t i = 0; i < columns_.size(); ++i)
    if (between(columns_[i].x0, x, columns_[i].x1())) return static_cast<int>(i);
  return -1;
}

bool StaircaseSurface::contains(const Point& p) const {
  return std::any_of(rectangles_.begin(), rectangles_.end(), [&](const Rectangle& r) {
    return !less(p.x, r.x0) && !less(r.x1, p.x) && !less(p.y, r.y0) && !less(r.y1, p.y);
  });
}

bool StaircaseSurface::is_cone_point(const Point& p) const {
  return std::find(cone_points_.begin(), cone_points_.end(), p) != cone_points_.end();
}

StaircaseSurface build_staircase(int n) {
  require_supported_n(n);
  return StaircaseSurface(n);
}

std::vector<Rectangle> r_rectangles(const StaircaseSurface& surface) { return surface.rectangles(); }

std::vector<FieldElement> diagonal_slopes(const StaircaseSurface& surface) {
  std::vector<FieldElement> out;
  for (const auto& r : surface.rectangles()) {
    if (r.twin) continue;
    FieldElement slope = r.diagonal_slope();
    out.push_back(less(slope, FieldElement::constant(surface.context(), 1)) ? slope.inverse() : slope);
  }
  std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& b) { return less(a, b); });
  return out;
}

std::vector<Cylinder> cylinder_decomposition(const StaircaseSurface& surface, Axis direction) {
  std::vector<Cylinder> out;
  if (direction == Axis::horizontal) {
    for (const auto& r : surface.rows()) out.push_back({r.w, r.h});
  } else {
    for (const auto& c : surface.columns()) out.push_back({c.h, c.w});
  }
  return out;
}

bool area_identity_holds(const StaircaseSurface& surface) {
  FieldElement rows(surface.context()), rects(surface.context());
  for (const auto& r : surface.rows()) rows += r.w * r.h;
  for (const auto& r : surface.rectangles()) rects += r.width() * r.height();
  return rows == rects;
}

bool gluing_well_formed(const StaircaseSurface& surface) {
  auto partition = [](std::vector<Strip> strips, bool by_y) {
    auto lo = [&](const Strip& s) { return by_y ? s.y0 : s.x0; };
    auto hi = [&](const Strip& s) { return by_y ? s.y1() : s.x1(); };
    std::sort(strips.begin(), strips.end(), [&](const Strip& a, const Strip& b) { return less(lo(a), lo(b)); });
    for (size_t i = 0; i + 1 < strips.size(); ++i)
      if (!(hi(strips[i]) == lo(strips[i + 1]))) return false;
    return true;
  };
  if (!partition(surface.rows(), true) || !partition(surface.columns(), false)) return false;
  for (const auto& r : surface.rectangles()) {
    int in_rows = 0, in_columns = 0;
    for (const auto& row : surface.rows())
      if (row.y0 == r.y0 && row.y1() == r.y1 && !less(r.x0, row.x0) && !less(row.x1(), r.x1)) ++in_rows;
    for (const auto& col : surface.columns())
      if (col.x0 == r.x0 && col.x1() == r.x1 && !less(r.y0, col.y0) && !less(col.y1(), r.y1)) ++in_columns;
    if (in_rows != 1 || in_columns != 1) return false;
  }
  // Each strip's pieces cover it exactly, so its two ends are translates of each other.
  for (const auto& row : surface.rows()) {
    FieldElement covered(surface.context());
    for (const auto& r : surface.rectangles())
      if (r.y0 == row.y0 && r.y1 == row.y1()) covered += r.width();
    if (!(covered == row.w)) return false;
  }
  for (const auto& col : surface.columns()) {
    FieldElement covered(surface.context());
    for (const auto& r : surface.rectangles())
      if (r.x0 == col.x0 && r.x1 == col.x1()) covered += r.height();
    if (!(covered == col.h)) return false;
  }
  return true;
}

// ---- skew construction

namespace {

struct Vec {
  double x, y;
  Vec operator+(Vec o) const { return {x + o.x, y + o.y}; }
  Vec operator-(Vec o) const { return {x - o.x, y - o.y}; }
  Vec operator*(double k) const { return {x * k, y * k}; }
};

struct Triangle {
  std::array<Vec, 3> p;
  // endpoints of the polygon edge opposite the right angle after the skew
  Vec h0, h1;
};

double area(const Triangle& t) {
  return std::abs((t.p[1].x - t.p[0].x) * (t.p[2].y - t.p[0].y) - (t.p[2].x - t.p[0].x) * (t.p[1].y - t.p[0].y)) / 2;
}

}  // namespace

SkewDerivation derive_via_skew(int n, double tol) {
  require_supported_n(n);
  const int m = (n - 1) / 2;
  // Regular n-gon with unit sides, bottom edge from (0,0) to (1,0), counter-clockwise.
  std::vector<Vec> poly;
  Vec cur{0, 0};
  for (int i = 0; i < n; ++i) {
    poly.push_back(cur);
    const double a = 2 * std::numbers::pi * i / n;
    cur = cur + Vec{std::cos(a), std::sin(a)};
  }
  auto a = [&](int k) { return poly[static_cast<size_t>(((-k) % n + n) % n)]; };
  auto b = [&](int k) { return poly[static_cast<size_t>((k + 1) % n)]; };

  // Zig-zag triangulation: chords a_k b_k are horizontal, diagonals b_k a_{k+1} are parallel.
  std::vector<Triangle> first;
  for (int k = 0; k < m; ++k) {
    first.push_back({{a(k), b(k), a(k + 1)}, a(k), a(k + 1)});
    if (k < m - 1) first.push_back({{b(k), b(k + 1), a(k + 1)}, b(k), b(k + 1)});
  }
  // The second polygon is the point reflection through the midpoint of the central
  // triangle's outer edge, so the two polygons share that edge.
  const Triangle& central = first[static_cast<size_t>(m - 1)];
  const Vec c = (central.h0 + central.h1) * 0.5;
  auto reflect = [&](Vec p) { return c * 2 - p; };

  const Vec d = a(1) - b(0);
  const double shear = d.x / d.y;
  auto skew = [&](Vec p) { return Vec{p.x - shear * p.y, p.y}; };
  auto skew_triangle = [&](const Triangle& t) {
    return Triangle{{skew(t.p[0]), skew(t.p[1]), skew(t.p[2])}, skew(t.h0), skew(t.h1)};
  };

  struct Box {
    double x0, y0, x1, y1;
  };
  std::vector<Box> boxes;
  for (const auto& t : first) {
    Triangle own = skew_triangle(t);
    Triangle other = skew_triangle(Triangle{{reflect(t.p[0]), reflect(t.p[1]), reflect(t.p[2])}, reflect(t.h0), reflect(t.h1)});
    // Identified edges are translates; move the partner across.
    const Vec shift = own.h0 - other.h1;
    if (std::hypot((other.h0 + shift).x - own.h1.x, (other.h0 + shift).y - own.h1.y) > 1e-9)
      throw VerificationError("identified edges are not translates");
    for (auto& p : other.p) p = p + shift;
    Box box{1e300, 1e300, -1e300, -1e300};
    for (const auto* tri : {&own, &other})
      for (const auto& p : tri->p) {
        box.x0 = std::min(box.x0, p.x);
        box.y0 = std::min(box.y0, p.y);
        box.x1 = std::max(box.x1, p.x);
        box.y1 = std::max(box.y1, p.y);
      }
    if (std::abs(area(own) + area(other) - (box.x1 - box.x0) * (box.y1 - box.y0)) > 1e-9)
      throw VerificationError("triangle pair does not form a rectangle");
    boxes.push_back(box);
  }

  // Central rectangle to the unit square, lower left corner to the origin.
  const Box& mid = boxes[static_cast<size_t>(m - 1)];
  const double sx = 1 / (mid.x1 - mid.x0), sy = 1 / (mid.y1 - mid.y0);
  double minx = 1e300, miny = 1e300;
  for (const auto& bx : boxes) {
    minx = std::min(minx, bx.x0);
    miny = std::min(miny, bx.y0);
  }
  for (auto& bx : boxes) bx = {(bx.x0 - minx) * sx, (bx.y0 - miny) * sy, (bx.x1 - minx) * sx, (bx.y1 - miny) * sy};

  // Outline on the snapped grid of coordinates.
  const double snap = 1e-9;
  std::vector<double> xs, ys;
  for (const auto& bx : boxes) {
    xs.insert(xs.end(), {bx.x0, bx.x1});
    ys.insert(ys.end(), {bx.y0, bx.y1});
  }
  auto near = [&](double u, double v) { return std::abs(u - v) < snap; };
  xs = sorted_unique(xs, std::less<double>(), near);
  ys = sorted_unique(ys, std::less<double>(), near);
  std::vector<std::array<int, 4>> cells;
  for (const auto& bx : boxes)
    cells.push_back({index_of(xs, bx.x0, near), index_of(xs, bx.x1, near), index_of(ys, bx.y0, near),
                     index_of(ys, bx.y1, near)});
  std::vector<std::pair<double, double>> derived;
  for (const auto& [i, j] : grid_outline(cells, static_cast<int>(xs.size()), static_cast<int>(ys.size())))
    derived.emplace_back(xs[static_cast<size_t>(i)], ys[static_cast<size_t>(j)]);

  // Compare with the exact outline under the eight symmetries of the square.
  const StaircaseSurface exact(n);
  std::vector<std::pair<double, double>> target;
  for (const auto& p : exact.outline()) target.emplace_back(p.x.to_double(), p.y.to_double());
  std::sort(target.begin(), target.end());

  SkewDerivation best{{}, 1e300};
  for (int sym = 0; sym < 8; ++sym) {
    std::vector<std::pair<double, double>> moved;
    for (auto [x, y] : derived) {
      if (sym & 1) x = -x;
      if (sym & 2) y = -y;
      if (sym & 4) std::swap(x, y);
      moved.emplace_back(x, y);
    }
    double lx = 1e300, ly = 1e300;
    for (const auto& [x, y] : moved) {
      lx = std::min(lx, x);
      ly = std::min(ly, y);
    }
    for (auto& [x, y] : moved) {
      x -= lx;
      y -= ly;
    }
    auto sorted = moved;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != target.size()) continue;
    double dev = 0;
    for (size_t i = 0; i < sorted.size(); ++i)
      dev = std::max({dev, std::abs(sorted[i].first - target[i].first), std::abs(sorted[i].second - target[i].second)});
    if (dev < best.max_deviation) best = {moved, dev};
  }
  if (best.max_deviation > tol)
    throw VerificationError("skew construction differs from the staircase for n = " + std::to_string(n));
  return best;
}

// ---- SVG

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string staircase_svg(const StaircaseSurface& surface, bool show_diagonals) {
  const double scale = 200, margin = 20;
  double width = 0, height = 0;
  for (const auto& p : surface.outline()) {
    width = std::max(width, p.x.to_double());
    height = std::max(height, p.y.to_double());
  }
  auto X = [&](const FieldElement& v) { return num(margin + v.to_double() * scale); };
  auto Y = [&](const FieldElement& v) { return num(margin + (height - v.to_double()) * scale); };
  const double w = width * scale + 2 * margin, h = height * scale + 2 * margin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
  os << "<title>staircase n=" << surface.n() << "</title>\n";
  os << "<g fill=\"none\" stroke=\"#999999\" stroke-width=\"1\">\n";
  for (const auto& r : surface.rectangles())
    os << "<rect x=\"" << X(r.x0) << "\" y=\"" << Y(r.y1) << "\" width=\"" << num(r.width().to_double() * scale)
       << "\" height=\"" << num(r.height().to_double() * scale) << "\"/>\n";
  os << "</g>\n";
  os << "<polygon fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
  for (size_t i = 0; i < surface.outline().size(); ++i) {
    const auto& p = surface.outline()[i];
    os << (i ? " " : "") << X(p.x) << "," << Y(p.y);
  }
  os << "\"/>\n";
  if (show_diagonals) {
    os << "<g stroke=\"#1f77b4\" stroke-width=\"1\" stroke-dasharray=\"6 4\">\n";
    for (const auto& r : surface.rectangles())
      os << "<line x1=\"" << X(r.x0) << "\" y1=\"" << Y(r.y0) << "\" x2=\"" << X(r.x1) << "\" y2=\"" << Y(r.y1)
         << "\"/>\n";
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (const auto& r : surface.rectangles()) {
      const FieldElement cx = (r.x0 + r.x1) * Rational(1, 2), cy = (r.y0 + r.y1) * Rational(1, 2);
      os << "<text x=\"" << X(cx) << "\" y=\"" << Y(cy) << "\">" << r.diagonal_slope().fixed(4) << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace stairflow
