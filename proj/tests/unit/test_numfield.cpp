#include "stairflow/chebpoly.hpp"
#include "stairflow/errors.hpp"
#include "stairflow/field_text.hpp"
#include "stairflow/numfield.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace stairflow;

namespace {

// Oracle: brute-force totient by counting coprime residues.
long brute_totient(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

// Oracle: value of a coordinate vector at 2cos(pi/n), computed directly with MPFR.
BigFloat numeric_value(int n, const std::vector<Rational>& coords, unsigned digits) {
  ScopedPrecision prec(digits);
  BigFloat x = 2 * cos(big_pi() / n);
  BigFloat acc = 0, power = 1;
  for (const auto& c : coords) {
    acc += to_bigfloat(c) * power;
    power *= x;
  }
  return acc;
}

FieldElement random_element(const FieldContext& ctx, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  std::vector<Rational> coords;
  for (int i = 0; i < ctx->degree(); ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    coords.push_back(q);
  }
  return FieldElement::from_coords(ctx, coords);
}

FieldElement poly(const FieldContext& ctx, std::vector<long> ascending) {
  std::vector<Rational> coords(ascending.begin(), ascending.end());
  return FieldElement::from_coords(ctx, coords);
}

}  // namespace

TEST_CASE("supported range") {
  CHECK_THROWS_AS(minimal_polynomial(4), InputError);
  CHECK_THROWS_AS(minimal_polynomial(3), InputError);
  CHECK_THROWS_AS(minimal_polynomial(51), InputError);
  CHECK_NOTHROW(minimal_polynomial(49));
}

TEST_CASE("totient agrees with brute force") {
  for (long n = 1; n < 200; ++n) CHECK(euler_totient(n) == brute_totient(n));
}

TEST_CASE("minimal polynomials of small n") {
  CHECK(minimal_polynomial(5)->polynomial().to_string() == "x^2 - x - 1");
  CHECK(minimal_polynomial(7)->polynomial().to_string() == "x^3 - x^2 - 2*x + 1");
  CHECK(minimal_polynomial(9)->polynomial().to_string() == "x^3 - 3*x - 1");
  // P_4 = (x - 1)(x^3 - 3x - 1)
  CHECK(p_poly(4) == IntPolynomial({Integer(-1), Integer(1)}) * minimal_polynomial(9)->polynomial());
}

TEST_CASE("triple angle identity for n = 9") {
  // 2cos(3t) = (2cos t)^3 - 3(2cos t) and 2cos(pi/3) = 1, so x^3 - 3x - 1 vanishes at 2cos(pi/9).
  auto ctx = minimal_polynomial(9);
  auto x = FieldElement::generator(ctx);
  CHECK((x * x * x - Rational(3) * x - Rational(1)).is_zero());
}

TEST_CASE("minimal polynomial invariants across the supported range") {
  for (int n = kMinSupportedN; n <= kMaxSupportedN; n += 2) {
    CAPTURE(n);
    auto ctx = minimal_polynomial(n);
    CHECK(ctx->degree() == brute_totient(2L * n) / 2);
    CHECK(ctx->polynomial().leading() == 1);
    CHECK(ratpoly::divides(ctx->polynomial(), p_poly((n - 1) / 2)));
    CHECK(ratpoly::sturm_root_count(ctx->polynomial(), ctx->root_lo(), ctx->root_hi()) == 1);
    // the generator evaluates to 2cos(pi/n)
    ScopedPrecision prec(60);
    BigFloat x = 2 * cos(big_pi() / n);
    std::vector<Rational> cs(ctx->coefficients().begin(), ctx->coefficients().end());
    CHECK(abs(numeric_value(n, cs, 100)) < BigFloat("1e-80"));
    CHECK(to_bigfloat(ctx->root_lo()) < x);
    CHECK(x < to_bigfloat(ctx->root_hi()));
    CHECK(ctx->root_approx().substr(0, 12) == x.str(12).substr(0, 12));
  }
}

TEST_CASE("memoization returns the same context") {
  CHECK(minimal_polynomial(11) == minimal_polynomial(11));
  CHECK(build_minimal_polynomial(11) != minimal_polynomial(11));
  CHECK(build_minimal_polynomial(11)->polynomial() == minimal_polynomial(11)->polynomial());
}

TEST_CASE("arithmetic examples") {
  auto c5 = minimal_polynomial(5);
  auto x = FieldElement::generator(c5);
  CHECK(x * x == x + Rational(1));
  CHECK(field_invert(x) == x - Rational(1));
  CHECK(field_invert(FieldElement::constant(c5, 1)) == FieldElement::constant(c5, 1));
  CHECK_THROWS_AS(field_invert(FieldElement(c5)), DivisionByZero);

  auto c7 = minimal_polynomial(7);
  auto y = FieldElement::generator(c7);
  CHECK(p_eval(3, y).is_zero());
  CHECK((y * y * y - y * y - Rational(2) * y + Rational(1)).is_zero());
  auto inv = field_invert(y - Rational(1));
  CHECK(inv * (y - Rational(1)) == FieldElement::constant(c7, 1));

  auto c9 = minimal_polynomial(9);
  auto z = FieldElement::generator(c9);
  CHECK(field_arithmetic(z, z * z, FieldOp::mul) == poly(c9, {1, 3}));
  CHECK(field_arithmetic(z, z, FieldOp::neg) == -z);
  CHECK_THROWS_AS(field_arithmetic(x, y, FieldOp::add), InputError);
}

TEST_CASE("unreduced fractions compare equal") {
  auto c5 = minimal_polynomial(5);
  auto x = FieldElement::generator(c5);
  CHECK(FieldElement::from_coords(c5, {Rational(3, 3), Rational(2, 2)}) == x + Rational(1));
  CHECK(FieldElement::from_coords(c5, {Rational(4, 6)}) == FieldElement::constant(c5, Rational(2, 3)));
  CHECK(FieldElement::constant(c5, Rational(2, 2)) == FieldElement::constant(c5, 1));
  CHECK(x * Rational(3, 3) == x);
  CHECK(format_field_element(FieldElement::from_coords(c5, {Rational(0), Rational(3, 3)})) == "x");
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(12345);
  for (int n : {5, 7, 9, 11, 13, 15}) {
    CAPTURE(n);
    auto ctx = minimal_polynomial(n);
    auto one = FieldElement::constant(ctx, 1);
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_element(ctx, rng), b = random_element(ctx, rng), c = random_element(ctx, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b - b == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == one);
    }
  }
}

TEST_CASE("embedding is a homomorphism") {
  std::mt19937_64 rng(777);
  for (int n : {5, 7, 9, 11, 13, 15}) {
    auto ctx = minimal_polynomial(n);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_element(ctx, rng), b = random_element(ctx, rng);
      ScopedPrecision prec(40);
      BigFloat lhs((a * b).decimal(20));
      BigFloat rhs = BigFloat(a.decimal(20)) * BigFloat(b.decimal(20));
      BigFloat scale = 1 + abs(rhs);
      CHECK(abs(lhs - rhs) / scale < BigFloat("1e-15"));
    }
  }
}

TEST_CASE("sign agrees with a 50 digit numeric value") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> pick(0, 5);
  const int ns[] = {5, 7, 9, 11, 13, 15};
  int checked = 0;
  while (checked < 1000) {
    int n = ns[pick(rng)];
    auto ctx = minimal_polynomial(n);
    auto a = random_element(ctx, rng);
    if (a.is_zero()) continue;
    BigFloat v = numeric_value(n, a.coords(), 50);
    CHECK(static_cast<int>(field_sign(a)) == (v > 0 ? 1 : -1));
    ++checked;
  }
  CHECK(field_sign(FieldElement(minimal_polynomial(5))) == Sign::zero);
}

TEST_CASE("sign of nearly cancelling elements") {
  // x^2 - x - 1 at n = 7 is about 0.445; p_3 coefficients shifted give tiny values.
  auto c7 = minimal_polynomial(7);
  auto x = FieldElement::generator(c7);
  CHECK(field_sign(x * x - x - Rational(1)) == Sign::positive);
  CHECK((x * x - x - Rational(1)).decimal(3) == "0.445");
  auto c5 = minimal_polynomial(5);
  auto phi = FieldElement::generator(c5);
  CHECK(field_sign(phi - Rational(1)) == Sign::positive);
  // Fibonacci ratio 10946/6765 differs from phi by about 1e-8.
  CHECK(field_sign(phi - Rational(10946, 6765)) == Sign::negative);
  CHECK(field_sign(phi - Rational(17711, 10946)) == Sign::positive);
}

TEST_CASE("decimal embedding") {
  auto c5 = minimal_polynomial(5);
  auto c7 = minimal_polynomial(7);
  CHECK(field_embed(FieldElement::generator(c5), 5) == "1.6180");
  CHECK(field_embed(FieldElement::generator(c7), 5) == "1.8019");
  CHECK(field_embed(FieldElement::constant(c5, Rational(1, 2)), 5) == "0.50000");
  CHECK(field_embed(-FieldElement::generator(c5), 3) == "-1.62");
  CHECK(FieldElement::generator(c5).fixed(4) == "1.6180");
  CHECK(FieldElement::constant(c5, 0).fixed(2) == "0.00");
  CHECK(field_embed(FieldElement::constant(c5, Rational(9999, 1000)), 3) == "10.0");
  CHECK(field_embed(FieldElement::constant(c5, 12345), 2) == "12000");
}

TEST_CASE("rounding helpers") {
  CHECK(round_fixed(Rational(5, 100), Rational(5, 100), 1) == "0.1");
  CHECK(round_fixed(Rational(-5, 100), Rational(-5, 100), 1) == "-0.1");
  CHECK(round_fixed(Rational(-1, 1000), Rational(1, 1000), 1) == "0.0");
  CHECK(round_fixed(Rational(4, 100), Rational(6, 100), 1).empty());
  CHECK(round_significant(Rational(-1), Rational(1), 3).empty());
  CHECK(round_significant(Rational(1234), Rational(1234), 2) == "1200");
  CHECK(round_significant(Rational(1, 3000), Rational(1, 3000), 2) == "0.00033");
}
