#pragma once

#include "stairflow/linear.hpp"
#include "stairflow/staircase.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stairflow {

// One use of a gluing: Axis::horizontal is the right end of row `index`
// wrapping to its left end, Axis::vertical the top of column `index` wrapping
// to its bottom.
struct Crossing {
  Axis axis;
  int index;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

std::string crossing_text(const std::vector<Crossing>& sequence);

enum class TraceKind { closed, singular, exhausted };

const char* trace_kind_name(TraceKind kind);

struct TraceResult {
  TraceKind kind;
  long crossings;
  std::vector<Crossing> sequence;
  // closed: squared length of the loop
  std::optional<FieldElement> length_sq;
  // singular: the cone point that was hit
  std::optional<Point> at;
};

// Representative of a surface point after the gluings, with points on a
// right or top edge moved to the left or bottom end of their row or column.
// Throws InputError for points outside the closed region.
Point canonical_point(const StaircaseSurface& surface, const Point& p);

// Straight-line flow from start in a direction of the closed first quadrant,
// with every intersection computed exactly. Stops at the first return to the
// start (closed), at a cone point (singular) or after max_crossings gluings.
// Throws InputError for a zero or out-of-quadrant direction, a start outside
// the region or a start at a cone point.
TraceResult trace_exact(const StaircaseSurface& surface, const DirectionVector& direction, const Point& start,
                        long max_crossings);

struct NumericTraceResult {
  TraceKind kind;
  long crossings;
  std::vector<Crossing> sequence;
  // closed: length of the loop
  double length;
  std::optional<std::pair<double, double>> at;
};

// The same flow in double precision. Two event times closer than tol count as
// a corner hit, and the run closes when the start lies within tol of the
// current segment.
NumericTraceResult trace_numeric(const StaircaseSurface& surface, std::pair<double, double> direction,
                                 std::pair<double, double> start, long max_crossings, double tol = 1e-9);

struct PeriodicSample {
  Point start;
  TraceResult result;
};

struct PeriodicReport {
  bool all_closed;
  std::vector<PeriodicSample> samples;
  // Number of distinct crossing sequences up to cyclic shift. Samples in
  // different cylinders of the same direction form different classes.
  int pattern_classes;
  // Singular starts that were replaced by a new draw.
  int resampled;
  // First sample that did not close, empty when all closed.
  std::string deviation;
};

// Traces `samples` seeded pseudo-random starts with rational coordinates in
// the direction of slope s (s >= 0 or infinity). Each sample draws from its
// own generator, so the report does not depend on threads.
PeriodicReport verify_periodic(int n, const ExtendedSlope& slope, int samples, std::uint64_t seed = 1,
                               long max_crossings = 10000, int threads = 1);

}  // namespace stairflow
