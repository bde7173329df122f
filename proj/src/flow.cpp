#include "stairflow/flow.hpp"

#include "stairflow/errors.hpp"
#include "stairflow/field_text.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <thread>

namespace stairflow {

namespace {

// Adjacency of rows and columns, found once by exact comparison so that the
// tracers only compare event times.
struct Topology {
  // column to the right of column c inside a row, or -1
  std::vector<int> next_column;
  // row above row r inside a column, or -1
  std::vector<int> next_row;
  // column at the left end of row r
  std::vector<int> left_column;
  // row at the bottom of column c
  std::vector<int> bottom_row;
  // row_end[r][c]: column c ends where row r ends
  std::vector<std::vector<bool>> row_end;
  // column_end[c][r]: row r ends where column c ends
  std::vector<std::vector<bool>> column_end;

  explicit Topology(const StaircaseSurface& s) {
    const auto& rows = s.rows();
    const auto& cols = s.columns();
    auto find_col = [&](const FieldElement& x) {
      for (size_t i = 0; i < cols.size(); ++i)
        if (cols[i].x0 == x) return static_cast<int>(i);
      return -1;
    };
    auto find_row = [&](const FieldElement& y) {
      for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].y0 == y) return static_cast<int>(i);
      return -1;
    };
    for (const auto& c : cols) {
      next_column.push_back(find_col(c.x1()));
      bottom_row.push_back(find_row(c.y0));
    }
    for (const auto& r : rows) {
      next_row.push_back(find_row(r.y1()));
      left_column.push_back(find_col(r.x0));
    }
    for (const auto& r : rows) {
      row_end.emplace_back();
      for (const auto& c : cols) row_end.back().push_back(c.x1() == r.x1());
    }
    for (const auto& c : cols) {
      column_end.emplace_back();
      for (const auto& r : rows) column_end.back().push_back(r.y1() == c.y1());
    }
    for (int v : left_column)
      if (v < 0) throw VerificationError("row without a column at its left end");
    for (int v : bottom_row)
      if (v < 0) throw VerificationError("column without a row at its bottom");
  }
};

void require_direction(const DirectionVector& d) {
  if (d.dx.sign() == Sign::negative || d.dy.sign() == Sign::negative || (d.dx.is_zero() && d.dy.is_zero()))
    throw InputError("trace: direction must be nonzero and in the closed first quadrant");
}

std::vector<Crossing> min_rotation(const std::vector<Crossing>& seq) {
  auto key = [](const Crossing& c) { return std::pair(static_cast<int>(c.axis), c.index); };
  std::vector<Crossing> best = seq;
  for (size_t shift = 1; shift < seq.size(); ++shift) {
    std::vector<Crossing> rotated(seq.begin() + static_cast<std::ptrdiff_t>(shift), seq.end());
    rotated.insert(rotated.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(shift));
    if (std::lexicographical_compare(rotated.begin(), rotated.end(), best.begin(), best.end(),
                                     [&](const Crossing& a, const Crossing& b) { return key(a) < key(b); }))
      best = std::move(rotated);
  }
  return best;
}

}  // namespace

std::string crossing_text(const std::vector<Crossing>& sequence) {
  std::string out;
  for (const auto& c : sequence) {
    if (!out.empty()) out += ' ';
    out += (c.axis == Axis::horizontal ? 'R' : 'C') + std::to_string(c.index);
  }
  return out;
}

const char* trace_kind_name(TraceKind kind) {
  switch (kind) {
    case TraceKind::closed: return "closed";
    case TraceKind::singular: return "singular";
    case TraceKind::exhausted: return "exhausted";
  }
  return "";
}

Point canonical_point(const StaircaseSurface& surface, const Point& p) {
  if (!surface.contains(p)) throw InputError("point is outside the staircase");
  Point q = p;
  const auto& rows = surface.rows();
  const auto& cols = surface.columns();
  for (int guard = 0; guard < 4; ++guard) {
    const int r = surface.row_at(q.y);
    if (r >= 0 && q.x == rows[static_cast<size_t>(r)].x1()) {
      q.x = rows[static_cast<size_t>(r)].x0;
      continue;
    }
    const int c = surface.column_at(q.x);
    if (c >= 0 && q.y == cols[static_cast<size_t>(c)].y1()) {
      q.y = cols[static_cast<size_t>(c)].y0;
      continue;
    }
    if (r >= 0 && c >= 0) {
      const auto& row = rows[static_cast<size_t>(r)];
      const auto& col = cols[static_cast<size_t>(c)];
      if (!less(q.x, row.x0) && less(q.x, row.x1()) && !less(q.y, col.y0) && less(q.y, col.y1())) return q;
    }
    break;
  }
  throw InputError("point has no representative in the staircase");
}

TraceResult trace_exact(const StaircaseSurface& surface, const DirectionVector& d, const Point& start,
                        long max_crossings) {
  require_direction(d);
  if (d.dx.n() != surface.n()) throw InputError("trace: direction belongs to another field");
  if (surface.is_cone_point(start)) throw InputError("trace: start is a cone point");
  const Point s = canonical_point(surface, start);
  if (surface.is_cone_point(s)) throw InputError("trace: start is a cone point");

  const Topology topo(surface);
  const auto& rows = surface.rows();
  const auto& cols = surface.columns();
  int r = surface.row_at(s.y), c = surface.column_at(s.x);
  const int rs = r, cs = c;
  const bool has_dx = !d.dx.is_zero(), has_dy = !d.dy.is_zero();
  const FieldContext& ctx = surface.context();
  const FieldElement k = has_dx ? d.dy / d.dx : FieldElement(ctx);
  const FieldElement kinv = has_dy ? d.dx / d.dy : FieldElement(ctx);
  FieldElement x = s.x, y = s.y, total_x(ctx), total_y(ctx);

  TraceResult out{TraceKind::exhausted, 0, {}, std::nullopt, std::nullopt};
  auto close = [&] {
    out.kind = TraceKind::closed;
    out.length_sq = total_x * total_x + total_y * total_y;
    return out;
  };
  auto singular = [&](const Point& at) {
    if (!surface.is_cone_point(at)) throw VerificationError("trace: corner hit away from the cone point set");
    out.kind = TraceKind::singular;
    out.at = at;
    return out;
  };

  for (bool first = true;; first = false) {
    const Strip& row = rows[static_cast<size_t>(r)];
    const Strip& col = cols[static_cast<size_t>(c)];
    if (!first && r == rs && c == cs) {
      // the start may lie ahead on this segment
      const FieldElement wx = s.x - x, wy = s.y - y;
      if ((wx * d.dy - wy * d.dx).is_zero() && (has_dx ? wx : wy).sign() == Sign::positive) {
        total_x += wx;
        total_y += wy;
        return close();
      }
    }
    const FieldElement ex = col.x1() - x, ey = row.y1() - y;
    Sign side;
    if (!has_dy)
      side = Sign::negative;
    else if (!has_dx)
      side = Sign::positive;
    else
      side = (ex * d.dy - ey * d.dx).sign();
    if (side == Sign::zero) return singular({col.x1(), row.y1()});
    if (side == Sign::negative) {
      const FieldElement step = ex * k;
      x = col.x1();
      y += step;
      total_x += ex;
      total_y += step;
      if (!has_dy && y == row.y0) return singular({x, y});
      if (topo.row_end[static_cast<size_t>(r)][static_cast<size_t>(c)]) {
        x = row.x0;
        c = topo.left_column[static_cast<size_t>(r)];
        out.sequence.push_back({Axis::horizontal, r});
        ++out.crossings;
      } else {
        c = topo.next_column[static_cast<size_t>(c)];
      }
    } else {
      const FieldElement step = ey * kinv;
      y = row.y1();
      x += step;
      total_x += step;
      total_y += ey;
      if (!has_dx && x == col.x0) return singular({x, y});
      if (topo.column_end[static_cast<size_t>(c)][static_cast<size_t>(r)]) {
        y = col.y0;
        r = topo.bottom_row[static_cast<size_t>(c)];
        out.sequence.push_back({Axis::vertical, c});
        ++out.crossings;
      } else {
        r = topo.next_row[static_cast<size_t>(r)];
      }
    }
    if (r < 0 || c < 0) throw VerificationError("trace: left the staircase");
    if (x == s.x && y == s.y) return close();
    if (out.crossings >= max_crossings) return out;
  }
}

NumericTraceResult trace_numeric(const StaircaseSurface& surface, std::pair<double, double> direction,
                                 std::pair<double, double> start, long max_crossings, double tol) {
  auto [dx, dy] = direction;
  if (!(dx >= 0 && dy >= 0) || (dx == 0 && dy == 0) || !std::isfinite(dx) || !std::isfinite(dy))
    throw InputError("trace: direction must be nonzero and in the closed first quadrant");
  const double norm = std::hypot(dx, dy);
  dx /= norm;
  dy /= norm;

  struct Box {
    double x0, y0, x1, y1;
  };
  std::vector<Box> rows, cols;
  for (const auto& r : surface.rows()) rows.push_back({r.x0.to_double(), r.y0.to_double(), r.x1().to_double(), r.y1().to_double()});
  for (const auto& c : surface.columns()) cols.push_back({c.x0.to_double(), c.y0.to_double(), c.x1().to_double(), c.y1().to_double()});
  std::vector<std::pair<double, double>> cones;
  for (const auto& p : surface.cone_points()) cones.emplace_back(p.x.to_double(), p.y.to_double());
  auto near = [&](double a, double b) { return std::abs(a - b) <= tol; };
  auto cone_at = [&](double x, double y) {
    return std::any_of(cones.begin(), cones.end(), [&](const auto& p) { return near(p.first, x) && near(p.second, y); });
  };
  auto row_at = [&](double y) {
    for (size_t i = 0; i < rows.size(); ++i)
      if (y >= rows[i].y0 - tol && y < rows[i].y1 - tol) return static_cast<int>(i);
    return -1;
  };
  auto col_at = [&](double x) {
    for (size_t i = 0; i < cols.size(); ++i)
      if (x >= cols[i].x0 - tol && x < cols[i].x1 - tol) return static_cast<int>(i);
    return -1;
  };

  // canonical start
  double x = start.first, y = start.second;
  if (cone_at(x, y)) throw InputError("trace: start is a cone point");
  int r = -1, c = -1;
  for (int guard = 0; guard < 4; ++guard) {
    r = row_at(y);
    if (r >= 0 && near(x, rows[static_cast<size_t>(r)].x1)) {
      x = rows[static_cast<size_t>(r)].x0;
      continue;
    }
    c = col_at(x);
    if (c >= 0 && near(y, cols[static_cast<size_t>(c)].y1)) {
      y = cols[static_cast<size_t>(c)].y0;
      continue;
    }
    break;
  }
  if (r < 0 || c < 0 || x < rows[static_cast<size_t>(r)].x0 - tol || x > rows[static_cast<size_t>(r)].x1 + tol ||
      y < cols[static_cast<size_t>(c)].y0 - tol || y > cols[static_cast<size_t>(c)].y1 + tol)
    throw InputError("trace: start is outside the staircase");
  if (cone_at(x, y)) throw InputError("trace: start is a cone point");

  const Topology topo(surface);
  const double sx = x, sy = y;
  const int rs = r, cs = c;
  double length = 0;
  NumericTraceResult out{TraceKind::exhausted, 0, {}, 0.0, std::nullopt};

  for (bool first = true;; first = false) {
    const Box& row = rows[static_cast<size_t>(r)];
    const Box& col = cols[static_cast<size_t>(c)];
    if (!first && r == rs && c == cs) {
      const double wx = sx - x, wy = sy - y;
      const double along = wx * dx + wy * dy;
      if (std::abs(wx * dy - wy * dx) <= tol && along > tol) {
        out.kind = TraceKind::closed;
        out.length = length + along;
        return out;
      }
    }
    const double ex = col.x1 - x, ey = row.y1 - y;
    int side;
    if (dy == 0)
      side = -1;
    else if (dx == 0)
      side = 1;
    else {
      const double a = ex * dy, b = ey * dx;
      side = std::abs(a - b) <= tol * std::max({1.0, a, b}) ? 0 : (a < b ? -1 : 1);
    }
    if (side == 0) {
      out.kind = TraceKind::singular;
      out.at = std::pair(col.x1, row.y1);
      return out;
    }
    if (side < 0) {
      const double t = ex / dx;
      x = col.x1;
      y += t * dy;
      length += t;
      if (near(y, row.y0) && cone_at(x, y)) {
        out.kind = TraceKind::singular;
        out.at = std::pair(x, y);
        return out;
      }
      if (topo.row_end[static_cast<size_t>(r)][static_cast<size_t>(c)]) {
        x = row.x0;
        c = topo.left_column[static_cast<size_t>(r)];
        out.sequence.push_back({Axis::horizontal, r});
        ++out.crossings;
      } else {
        c = topo.next_column[static_cast<size_t>(c)];
      }
    } else {
      const double t = ey / dy;
      y = row.y1;
      x += t * dx;
      length += t;
      if (near(x, col.x0) && cone_at(x, y)) {
        out.kind = TraceKind::singular;
        out.at = std::pair(x, y);
        return out;
      }
      if (topo.column_end[static_cast<size_t>(c)][static_cast<size_t>(r)]) {
        y = col.y0;
        r = topo.bottom_row[static_cast<size_t>(c)];
        out.sequence.push_back({Axis::vertical, c});
        ++out.crossings;
      } else {
        r = topo.next_row[static_cast<size_t>(r)];
      }
    }
    if (r < 0 || c < 0) throw VerificationError("trace: left the staircase");
    if (near(x, sx) && near(y, sy)) {
      out.kind = TraceKind::closed;
      out.length = length;
      return out;
    }
    if (out.crossings >= max_crossings) return out;
  }
}

PeriodicReport verify_periodic(int n, const ExtendedSlope& slope, int samples, std::uint64_t seed, long max_crossings,
                               int threads) {
  if (!slope.is_infinite() && slope.value().sign() == Sign::negative)
    throw InputError("verify_periodic: slope must be non-negative or infinite");
  if (samples < 1) throw InputError("verify_periodic: samples must be positive");
  const StaircaseSurface surface = build_staircase(n);
  const DirectionVector d = direction_of(slope, surface.context());
  const auto& rects = surface.rectangles();

  struct Slot {
    PeriodicSample sample;
    int resampled = 0;
  };
  std::vector<std::optional<Slot>> slots(static_cast<size_t>(samples));
  auto run = [&](size_t i) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + i);
    std::uniform_int_distribution<size_t> pick(0, rects.size() - 1);
    std::uniform_int_distribution<int> frac(1, 1023);
    int resampled = 0;
    for (;;) {
      const auto& rect = rects[pick(rng)];
      Point p{rect.x0 + rect.width() * Rational(frac(rng), 1024), rect.y0 + rect.height() * Rational(frac(rng), 1024)};
      auto result = trace_exact(surface, d, p, max_crossings);
      if (result.kind != TraceKind::singular || resampled >= 64) {
        slots[i].emplace(Slot{{std::move(p), std::move(result)}, resampled});
        return;
      }
      ++resampled;
    }
  };
  const size_t workers = static_cast<size_t>(std::clamp(threads, 1, samples));
  if (workers == 1) {
    for (size_t i = 0; i < slots.size(); ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (size_t t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        try {
          for (size_t i = t; i < slots.size(); i += workers) run(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  PeriodicReport report{true, {}, 0, 0, ""};
  std::map<std::string, int> classes;
  for (auto& slot : slots) {
    report.resampled += slot->resampled;
    const auto& res = slot->sample.result;
    if (res.kind == TraceKind::closed) {
      classes[crossing_text(min_rotation(res.sequence))]++;
    } else if (report.all_closed) {
      report.all_closed = false;
      report.deviation = std::string(trace_kind_name(res.kind)) + " from (" + format_field_element(slot->sample.start.x) +
                         ", " + format_field_element(slot->sample.start.y) + ") after " + std::to_string(res.crossings) +
                         " crossings";
    }
    report.samples.push_back(std::move(slot->sample));
  }
  report.pattern_classes = static_cast<int>(classes.size());
  return report;
}

}  // namespace stairflow
