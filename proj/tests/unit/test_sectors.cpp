#include "stairflow/errors.hpp"
#include "stairflow/field_text.hpp"
#include "stairflow/hyperdisk.hpp"
#include "stairflow/sectors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace stairflow;

namespace {

FieldElement el(int n, const char* text) { return parse_field_element(minimal_polynomial(n), text); }
ExtendedSlope sl(int n, const char* text) { return ExtendedSlope(el(n, text)); }
DirectionVector dir(int n, const char* text) { return direction_of(sl(n, text), minimal_polynomial(n)); }
const ExtendedSlope kInf = ExtendedSlope::infinity();

bool parallel(const DirectionVector& a, const DirectionVector& b) { return (a.dx * b.dy - a.dy * b.dx).is_zero(); }

long word_count(int n, int depth) {
  long total = 0, level = 1;
  for (int k = 0; k <= depth; ++k, level *= n - 1) total += level;
  return total;
}

}  // namespace

TEST_CASE("pentagon fan and sector matrices") {
  auto fan = sector_fan(5);
  REQUIRE(fan.boundary_slopes.size() == 5);
  CHECK(fan.boundary_slopes[0] == sl(5, "0"));
  CHECK(fan.boundary_slopes[1] == sl(5, "x-1"));
  CHECK(fan.boundary_slopes[2] == sl(5, "1"));
  CHECK(fan.boundary_slopes[3] == sl(5, "x"));
  CHECK(fan.boundary_slopes[4] == kInf);

  auto s = sigma_matrices(5);
  REQUIRE(s.size() == 4);
  auto expect = [](const Mat2& m, const char* a, const char* b, const char* c, const char* d) {
    CHECK(m.a == el(5, a));
    CHECK(m.b == el(5, b));
    CHECK(m.c == el(5, c));
    CHECK(m.d == el(5, d));
  };
  expect(s[0], "1", "x", "0", "1");
  expect(s[1], "x", "x", "1", "x");
  expect(s[2], "x", "1", "x", "x");
  expect(s[3], "1", "0", "x", "1");
}

TEST_CASE("fan slopes against sines") {
  // slope of u_i is sin(i pi / n) / sin((i + 1) pi / n)
  ScopedPrecision prec(50);
  for (int n = 5; n <= 21; n += 2) {
    CAPTURE(n);
    auto fan = sector_fan(n);
    auto sigmas = sigma_matrices(n);
    const BigFloat pi = big_pi();
    for (int i = 0; i + 1 < n; ++i) {
      BigFloat oracle = sin(i * pi / n) / sin((i + 1) * pi / n);
      BigFloat got = fan.boundary_slopes[static_cast<size_t>(i)].value().to_bigfloat(50);
      CHECK(abs(got - oracle) < BigFloat("1e-40"));
      const auto& m = sigmas[static_cast<size_t>(i)];
      CHECK(m.det() == el(n, "1"));
      // the inverse sends the sector edges to the positive axes
      auto lower = m.adjugate() * fan.boundary_vectors[static_cast<size_t>(i)];
      auto upper = m.adjugate() * fan.boundary_vectors[static_cast<size_t>(i + 1)];
      CHECK(lower == DirectionVector{el(n, "1"), el(n, "0")});
      CHECK(upper == DirectionVector{el(n, "0"), el(n, "1")});
    }
    CHECK(fan.boundary_slopes.back() == kInf);
  }
}

TEST_CASE("classification") {
  auto fan = sector_fan(5);
  CHECK(classify_sector(fan, dir(5, "0")) == 0);
  CHECK(classify_sector(fan, dir(5, "1/2")) == 0);
  CHECK(classify_sector(fan, dir(5, "x-1")) == 0);
  CHECK(classify_sector(fan, dir(5, "7/10")) == 1);
  CHECK(classify_sector(fan, dir(5, "1")) == 1);
  CHECK(classify_sector(fan, dir(5, "3/2")) == 2);
  CHECK(classify_sector(fan, dir(5, "x")) == 2);
  CHECK(classify_sector(fan, dir(5, "2")) == 3);
  CHECK(classify_sector(fan, direction_of(kInf, minimal_polynomial(5))) == 3);
  CHECK_THROWS_AS(classify_sector(fan, dir(5, "-1")), InputError);

  // every slope lands in the sector whose closed cone contains it
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(0, 40), den(1, 9);
  for (int n : {5, 7, 9}) {
    auto f = sector_fan(n);
    for (int t = 0; t < 100; ++t) {
      auto s = FieldElement::constant(minimal_polynomial(n), Rational(num(rng), den(rng)));
      auto v = direction_of(ExtendedSlope(s), minimal_polynomial(n));
      const int i = classify_sector(f, v);
      CHECK(compare(f.boundary_slopes[static_cast<size_t>(i)], ExtendedSlope(s)) <= 0);
      CHECK(compare(ExtendedSlope(s), f.boundary_slopes[static_cast<size_t>(i + 1)]) <= 0);
      if (i > 0) CHECK(compare(f.boundary_slopes[static_cast<size_t>(i)], ExtendedSlope(s)) < 0);
    }
  }
}

TEST_CASE("renormalization examples") {
  auto r = renormalize_slope(5, sl(5, "2"));
  CHECK(r.word == Word{3, 0, 1});
  REQUIRE(r.terminal.has_value());
  CHECK(*r.terminal == Axis::vertical);
  CHECK(r.terminal_vector == DirectionVector{el(5, "0"), el(5, "2*x-3")});
  CHECK(parallel(apply_word(sigma_matrices(5), r.word, r.terminal_vector), dir(5, "2")));

  auto zero = renormalize_slope(5, sl(5, "0"));
  CHECK(zero.word.empty());
  CHECK(*zero.terminal == Axis::horizontal);
  auto inf = renormalize_slope(5, kInf);
  CHECK(inf.word.empty());
  CHECK(*inf.terminal == Axis::vertical);
  auto one = renormalize_slope(5, sl(5, "1"));
  CHECK(one.word == Word{1});
  CHECK(*one.terminal == Axis::vertical);
  CHECK_THROWS_AS(renormalize_slope(5, sl(5, "-1")), InputError);
}

TEST_CASE("renormalization round trip") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-3, 3), den(1, 3);
  auto ctx = minimal_polynomial(5);
  auto sigmas = sigma_matrices(5);
  int done = 0;
  while (done < 200) {
    auto s = FieldElement::from_coords(ctx, {Rational(small(rng), den(rng)), Rational(small(rng), den(rng))});
    if (s.sign() == Sign::negative) continue;
    ++done;
    auto r = renormalize_slope(5, ExtendedSlope(s));
    REQUIRE(r.terminal.has_value());
    CHECK_FALSE(r.cycle.has_value());
    CHECK(parallel(apply_word(sigmas, r.word, r.terminal_vector), direction_of(ExtendedSlope(s), ctx)));
    // renormalizing an intermediate direction gives the remaining suffix
    if (!r.word.empty()) {
      Word tail(r.word.begin() + 1, r.word.end());
      auto mid = apply_word(sigmas, tail, r.terminal_vector);
      CHECK(renormalize_slope(5, slope_of(mid)).word == tail);
    }
  }
}

TEST_CASE("larger heights terminate for the pentagon") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> num(0, 40), den(1, 9), coef(-15, 15);
  auto ctx = minimal_polynomial(5);
  for (int t = 0; t < 200; ++t) {
    auto s = FieldElement::from_coords(ctx, {Rational(num(rng), den(rng)), Rational(coef(rng), den(rng))});
    if (s.sign() == Sign::negative) continue;
    auto r = renormalize_slope(5, ExtendedSlope(s));
    CHECK(r.terminal.has_value());
  }
}

TEST_CASE("heptagon slopes outside the tree") {
  // 2cos(3 pi / 7) is fixed by sigma_0 sigma_5 after a short prefix, so the
  // loop repeats forever
  auto sigmas = sigma_matrices(7);
  auto r = renormalize_slope(7, sl(7, "x^2-x-1"));
  CHECK_FALSE(r.terminal.has_value());
  REQUIRE(r.cycle.has_value());
  auto cycle = *r.cycle;
  std::sort(cycle.begin(), cycle.end());
  CHECK(cycle == Word{0, 5});
  CHECK(parallel(apply_word(sigmas, *r.cycle, r.terminal_vector), r.terminal_vector));
  CHECK(r.word.size() < 40);
  // the cycle matrix is hyperbolic
  const auto& a = sigmas[0];
  const auto& b = sigmas[5];
  auto product = a * b;
  CHECK(less(el(7, "2"), product.a + product.d));

  // random heptagon slopes either terminate and round trip, or close a cycle
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(0, 30), den(1, 7), coef(-12, 12);
  auto ctx = minimal_polynomial(7);
  int done = 0, cycles = 0;
  while (done < 60) {
    auto s = FieldElement::from_coords(ctx, {Rational(num(rng), den(rng)), Rational(coef(rng), den(rng)),
                                              Rational(coef(rng), den(rng))});
    if (s.sign() == Sign::negative) continue;
    ++done;
    auto rr = renormalize_slope(7, ExtendedSlope(s));
    CHECK((rr.terminal.has_value() || rr.cycle.has_value()));
    if (rr.cycle) {
      ++cycles;
      CHECK(parallel(apply_word(sigmas, *rr.cycle, rr.terminal_vector), rr.terminal_vector));
    }
    CHECK(parallel(apply_word(sigmas, rr.word, rr.terminal_vector), direction_of(ExtendedSlope(s), ctx)));
  }
  CHECK(cycles > 0);
  MESSAGE("heptagon slopes with a cycle: " << cycles << " of " << done);
}

TEST_CASE("numeric renormalization") {
  CHECK_FALSE(renormalize_numeric(5, std::sqrt(2.0), 60).terminated);
  CHECK(renormalize_numeric(5, std::sqrt(2.0), 60).word.size() == 60);
  auto golden = renormalize_numeric(5, (1 + std::sqrt(5.0)) / 2, 60, 1e-9);
  CHECK(golden.terminated);
  CHECK(golden.word == renormalize_slope(5, sl(5, "x")).word);
  auto two = renormalize_numeric(5, 2.0, 60, 1e-9);
  CHECK(two.terminated);
  CHECK(two.word == Word{3, 0, 1});
}

TEST_CASE("sigma tree") {
  auto tree = enumerate_sigma_tree(5, 5);
  CHECK(static_cast<long>(tree.nodes.size()) == word_count(5, 5));
  CHECK(tree.nodes.size() == 1365);
  CHECK(tree.nodes[0].word.empty());
  CHECK(tree.nodes[1].word == Word{0});
  CHECK(tree.nodes[5].word == Word{0, 0});
  CHECK(tree.nodes.back().word == Word{3, 3, 3, 3, 3});
  auto sigmas = sigma_matrices(5);
  for (size_t i = 0; i < tree.nodes.size(); i += 37) {
    const auto& node = tree.nodes[i];
    CHECK(node.vector == apply_word(sigmas, node.word, {el(5, "1"), el(5, "0")}));
    CHECK(node.slope == slope_of(node.vector));
  }
  for (size_t i = 0; i + 1 < tree.distinct_slopes.size(); ++i) CHECK(tree.distinct_slopes[i] < tree.distinct_slopes[i + 1]);

  // nesting: every slope at depth d is still present at depth d + 1
  for (int d = 0; d < 4; ++d) {
    auto small = enumerate_sigma_tree(7, d).distinct_slopes;
    auto big = enumerate_sigma_tree(7, d + 1).distinct_slopes;
    CHECK(small.size() < big.size());
    for (const auto& s : small) CHECK(std::binary_search(big.begin(), big.end(), s));
  }

  // threads do not change the output
  auto a = enumerate_sigma_tree(7, 4, 1);
  auto b = enumerate_sigma_tree(7, 4, 4);
  REQUIRE(a.nodes.size() == b.nodes.size());
  for (size_t i = 0; i < a.nodes.size(); ++i) CHECK((a.nodes[i].word == b.nodes[i].word && a.nodes[i].slope == b.nodes[i].slope));
  CHECK(a.distinct_slopes == b.distinct_slopes);
  CHECK_THROWS_AS(enumerate_sigma_tree(5, 9), InputError);
}

TEST_CASE("tree slopes renormalize within their depth") {
  for (int n : {5, 7}) {
    auto tree = enumerate_sigma_tree(n, 3);
    for (const auto& s : tree.distinct_slopes) {
      auto r = renormalize_slope(n, s);
      REQUIRE(r.terminal.has_value());
      CHECK(r.word.size() <= 3);
    }
  }
}

TEST_CASE("hyperbolic tree") {
  auto nodes = enumerate_hyperbolic_tree(5, 3);
  CHECK(static_cast<long>(nodes.size()) == word_count(5, 3));
  CHECK(nodes[0].value == sl(5, "0"));
  CHECK(nodes[1].word == Word{1});
  // S_m(0) = R(T^m(v_1)) = -v_{1-m}
  for (int n : {5, 7, 9}) {
    auto v = vertex_values(n);
    auto level = enumerate_hyperbolic_tree(n, 1);
    for (int m = 1; m <= n - 1; ++m) {
      const auto& target = v[static_cast<size_t>(((1 - m) % n + n) % n)];
      const auto& got = level[static_cast<size_t>(m)].value;
      if (target.is_infinite())
        CHECK(got == kInf);
      else
        CHECK(got == ExtendedSlope(-target.value()));
    }
  }
  CHECK(nodes[5].word == Word{1, 1});
  CHECK(nodes[5].value == sl(5, "x"));
}

TEST_CASE("twisted words") {
  CHECK(twisted_word(5, {}) == Word{});
  CHECK(twisted_word(5, {2}) == Word{2});
  CHECK(twisted_word(5, {0, 0}) == Word{3, 0});
  CHECK(twisted_word(5, {0, 1, 2}) == Word{0, 2, 2});
  CHECK(twisted_word(7, {0, 1, 2, 3}) == Word{5, 1, 3, 3});
}

TEST_CASE("equivalence of the two trees") {
  auto depth1 = equivalence_check(5, 1);
  CHECK(depth1.pass);
  CHECK(depth1.calibration == "reciprocal");

  auto literal = equivalence_check(5, 2);
  CHECK_FALSE(literal.pass);
  CHECK(literal.calibration == "reciprocal");
  CHECK(literal.counterexample.find("sigma word (0,0)") != std::string::npos);
  CHECK(literal.counterexample.find("S word (1,1) gives x") != std::string::npos);

  for (int n : {5, 7, 9}) {
    CAPTURE(n);
    auto op = equivalence_check(n, n == 5 ? 5 : 3, EquivalenceMode::operator_level);
    CHECK(op.pass);
    CHECK(op.counterexample.empty());
    CHECK_FALSE(equivalence_check(n, 3).pass);
  }
  CHECK(equivalence_check(5, 5, EquivalenceMode::operator_level).words_checked == 1365);
  CHECK_THROWS_AS(equivalence_check(5, 7), InputError);
  CHECK_THROWS_AS(equivalence_check(5, 0), InputError);
}
