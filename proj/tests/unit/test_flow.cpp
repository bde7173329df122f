#include "stairflow/errors.hpp"
#include "stairflow/field_text.hpp"
#include "stairflow/flow.hpp"
#include "stairflow/sectors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace stairflow;

namespace {

FieldElement el(int n, const char* text) { return parse_field_element(minimal_polynomial(n), text); }
Point pt(int n, const char* x, const char* y) { return {el(n, x), el(n, y)}; }
DirectionVector dv(int n, const char* x, const char* y) { return {el(n, x), el(n, y)}; }
std::pair<double, double> num(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }
std::pair<double, double> num(const DirectionVector& d) { return {d.dx.to_double(), d.dy.to_double()}; }

}  // namespace

TEST_CASE("canonical representatives") {
  auto s = build_staircase(5);
  CHECK(canonical_point(s, pt(5, "x", "1/2")) == pt(5, "0", "1/2"));
  CHECK(canonical_point(s, pt(5, "1/2", "x")) == pt(5, "1/2", "0"));
  CHECK(canonical_point(s, pt(5, "3/2", "1")) == pt(5, "3/2", "0"));
  CHECK(canonical_point(s, pt(5, "1", "3/2")) == pt(5, "0", "3/2"));
  CHECK(canonical_point(s, pt(5, "1/2", "1")) == pt(5, "1/2", "1"));
  CHECK(canonical_point(s, pt(5, "1/3", "1/4")) == pt(5, "1/3", "1/4"));
  CHECK_THROWS_AS(canonical_point(s, pt(5, "3/2", "3/2")), InputError);
  CHECK_THROWS_AS(canonical_point(s, pt(5, "-1/2", "0")), InputError);
}

TEST_CASE("horizontal and vertical loops") {
  auto s = build_staircase(5);
  auto h = trace_exact(s, dv(5, "1", "0"), pt(5, "1/4", "1/2"), 100);
  CHECK(h.kind == TraceKind::closed);
  CHECK(h.crossings == 1);
  CHECK(*h.length_sq == el(5, "x^2"));
  CHECK(h.sequence == std::vector<Crossing>{{Axis::horizontal, 0}});

  auto v = trace_exact(s, dv(5, "0", "1"), pt(5, "1/3", "0"), 100);
  CHECK(v.kind == TraceKind::closed);
  CHECK(v.crossings == 1);
  CHECK(*v.length_sq == el(5, "x^2"));
  auto vn = trace_numeric(s, {0, 1}, {1.0 / 3, 0}, 100);
  CHECK(vn.kind == TraceKind::closed);
  CHECK(vn.length == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));

  // every row and column closes with its circumference
  for (int n : {5, 7, 9}) {
    auto surf = build_staircase(n);
    for (const auto& row : surf.rows()) {
      Point p{row.x0 + row.w * Rational(1, 3), row.y0 + row.h * Rational(1, 2)};
      auto r = trace_exact(surf, {el(n, "1"), el(n, "0")}, p, 10);
      REQUIRE(r.kind == TraceKind::closed);
      CHECK(*r.length_sq == row.w * row.w);
    }
    for (const auto& col : surf.columns()) {
      Point p{col.x0 + col.w * Rational(1, 2), col.y0 + col.h * Rational(2, 7)};
      auto r = trace_exact(surf, {el(n, "0"), el(n, "1")}, p, 10);
      REQUIRE(r.kind == TraceKind::closed);
      CHECK(*r.length_sq == col.h * col.h);
    }
  }
}

TEST_CASE("diagonal examples") {
  auto s = build_staircase(5);
  CHECK_THROWS_AS(trace_exact(s, dv(5, "1", "1"), pt(5, "0", "0"), 100), InputError);
  CHECK_THROWS_AS(trace_exact(s, dv(5, "-1", "1"), pt(5, "1/4", "1/4"), 100), InputError);
  CHECK_THROWS_AS(trace_exact(s, dv(5, "0", "0"), pt(5, "1/4", "1/4"), 100), InputError);
  CHECK_THROWS_AS(trace_numeric(s, {1, 1}, {0, 0}, 100), InputError);

  auto d = trace_exact(s, dv(5, "1", "1"), pt(5, "1/10", "0"), 1000);
  CHECK(d.kind == TraceKind::closed);
  CHECK(d.crossings <= 1000);
  auto dn = trace_numeric(s, {1, 1}, {0.1, 0}, 1000);
  CHECK(dn.kind == TraceKind::closed);
  CHECK(dn.sequence == d.sequence);
  CHECK(dn.length * dn.length == doctest::Approx(d.length_sq->to_double()).epsilon(1e-9));

  auto sing = trace_exact(s, dv(5, "1", "1"), pt(5, "1/2", "1/2"), 100);
  CHECK(sing.kind == TraceKind::singular);
  CHECK(*sing.at == pt(5, "1", "1"));
  auto singn = trace_numeric(s, {1, 1}, {0.5, 0.5}, 100);
  CHECK(singn.kind == TraceKind::singular);

  // along the bottom edge into the corner at (1, 0)
  auto edge = trace_exact(s, dv(5, "1", "0"), pt(5, "1/4", "0"), 100);
  CHECK(edge.kind == TraceKind::singular);
  CHECK(*edge.at == pt(5, "1", "0"));
}

TEST_CASE("irrational slope does not close") {
  auto s = build_staircase(5);
  auto r = trace_numeric(s, {1, std::sqrt(2.0)}, {0.1, 0}, 100000);
  CHECK(r.kind == TraceKind::exhausted);
  CHECK(r.crossings == 100000);
}

TEST_CASE("exact and numeric tracers agree") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int n : {5, 7}) {
    auto surface = build_staircase(n);
    auto slopes = enumerate_sigma_tree(n, 3).distinct_slopes;
    const auto& rects = surface.rectangles();
    std::uniform_int_distribution<size_t> pick_slope(0, slopes.size() - 1), pick_rect(0, rects.size() - 1);
    std::uniform_int_distribution<int> frac(1, 99);
    for (int t = 0; t < 50; ++t) {
      auto d = direction_of(slopes[pick_slope(rng)], surface.context());
      const auto& rect = rects[pick_rect(rng)];
      Point p{rect.x0 + rect.width() * Rational(frac(rng), 100), rect.y0 + rect.height() * Rational(frac(rng), 100)};
      auto exact = trace_exact(surface, d, p, 1000);
      if (exact.kind == TraceKind::singular) continue;
      CAPTURE(n);
      CAPTURE(format_field_element(p.x));
      CAPTURE(format_field_element(p.y));
      CHECK(exact.kind == TraceKind::closed);
      auto numeric = trace_numeric(surface, num(d), num(p), 1000);
      CHECK(numeric.kind == exact.kind);
      CHECK(numeric.sequence == exact.sequence);
      CHECK(numeric.length * numeric.length == doctest::Approx(exact.length_sq->to_double()).epsilon(1e-9));
      ++checked;
    }
  }
  CHECK(checked > 80);
}

TEST_CASE("closed length is the accumulated displacement") {
  auto s = build_staircase(7);
  auto d = dv(7, "1", "x-1");
  const auto& r0 = s.rectangles()[0];
  Point p{r0.x0 + Rational(1, 7), r0.y0 + Rational(1, 9)};
  auto r = trace_exact(s, d, p, 1000);
  REQUIRE(r.kind == TraceKind::closed);
  // the loop is t d for a field element t > 0
  auto t_sq = *r.length_sq / (d.dx * d.dx + d.dy * d.dy);
  CHECK(t_sq.sign() == Sign::positive);
  auto n = trace_numeric(s, num(d), num(p), 1000);
  CHECK(n.sequence == r.sequence);
  CHECK(n.length * n.length == doctest::Approx(r.length_sq->to_double()).epsilon(1e-9));
}

TEST_CASE("periodic verification") {
  auto golden = verify_periodic(5, ExtendedSlope(el(5, "x")), 5);
  CHECK(golden.all_closed);
  CHECK(golden.samples.size() == 5);
  CHECK(golden.deviation.empty());
  CHECK(golden.pattern_classes >= 1);
  CHECK(golden.pattern_classes <= 2);

  auto flat = verify_periodic(5, ExtendedSlope(el(5, "0")), 5);
  CHECK(flat.all_closed);
  for (const auto& sample : flat.samples) CHECK(sample.result.crossings == 1);

  auto w = enumerate_sigma_tree(7, 2).nodes;
  auto node = std::find_if(w.begin(), w.end(), [](const SigmaNode& x) { return x.word == Word{1, 2}; });
  REQUIRE(node != w.end());
  auto hept = verify_periodic(7, node->slope, 5);
  CHECK(hept.all_closed);

  // seeds and threads
  auto a = verify_periodic(7, node->slope, 6, 3, 10000, 1);
  auto b = verify_periodic(7, node->slope, 6, 3, 10000, 3);
  REQUIRE(a.samples.size() == b.samples.size());
  for (size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].start == b.samples[i].start);
    CHECK(a.samples[i].result.sequence == b.samples[i].result.sequence);
  }
  CHECK(a.pattern_classes == b.pattern_classes);
  CHECK_THROWS_AS(verify_periodic(5, ExtendedSlope(el(5, "-1")), 3), InputError);
}

TEST_CASE("tree slopes are periodic at small depth") {
  for (int n : {5, 7}) {
    CAPTURE(n);
    for (const auto& s : enumerate_sigma_tree(n, 2).distinct_slopes) {
      CAPTURE(s.text());
      auto report = verify_periodic(n, s, 3);
      CHECK(report.all_closed);
    }
  }
}

TEST_CASE("a heptagon slope outside the tree") {
  // renormalization of 2cos(3 pi / 7) ends in a cycle; the flow does not close
  auto s = build_staircase(7);
  auto slope = el(7, "x^2-x-1");
  const auto& r0 = s.rectangles()[0];
  Point p{r0.x0 + Rational(1, 7), r0.y0 + Rational(1, 9)};
  auto exact = trace_exact(s, {el(7, "1"), slope}, p, 2000);
  CHECK(exact.kind == TraceKind::exhausted);
  auto numeric = trace_numeric(s, {1.0, slope.to_double()}, num(p), 100000);
  CHECK(numeric.kind == TraceKind::exhausted);
}
