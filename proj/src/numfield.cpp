#include "stairflow/numfield.hpp"

#include "stairflow/chebpoly.hpp"
#include "stairflow/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stairflow {

namespace {

constexpr unsigned kBaseBits = 64;
constexpr unsigned kMaxSignBits = 1u << 20;

int sign_at_dyadic(const IntPolynomial& p, const Integer& num, unsigned bits) {
  // sign of p(num / 2^bits), scaled by 2^(bits * deg)
  Integer acc = 0;
  Integer scale = 1;
  const auto& cs = p.coefficients();
  Integer one_step;
  mpz_ui_pow_ui(one_step.get_mpz_t(), 2, bits);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = acc * num + *it * scale;
    scale *= one_step;
  }
  return sgn(acc);
}

Integer dyadic_floor(const BigFloat& v, unsigned bits) {
  BigFloat scaled = v;
  mpfr_mul_2ui(scaled.backend().data(), scaled.backend().data(), bits, MPFR_RNDN);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), scaled.backend().data(), MPFR_RNDD);
  return out;
}

BigFloat generator_value(int n, unsigned digits) {
  ScopedPrecision prec(digits);
  BigFloat t = big_pi() / n;
  return BigFloat(2 * cos(t));
}

Integer pow2(unsigned bits) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, bits);
  return out;
}

}  // namespace

void require_supported_n(int n) {
  if (n % 2 == 0 || n < kMinSupportedN || n > kMaxSupportedN)
    throw InputError("n must be odd with " + std::to_string(kMinSupportedN) + " <= n <= " +
                     std::to_string(kMaxSupportedN) + ", got " + std::to_string(n));
}

long euler_totient(long n) {
  if (n <= 0) throw InputError("euler_totient: n must be positive");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

MinPolySpec::MinPolySpec(int n, IntPolynomial polynomial, std::string root_approx, unsigned base_bits,
                         Integer base_numerator, int sign_below_root)
    : n_(n),
      polynomial_(std::move(polynomial)),
      root_approx_(std::move(root_approx)),
      base_bits_(base_bits),
      sign_below_root_(sign_below_root) {
  enclosures_.emplace(base_bits_, std::move(base_numerator));
}

Rational MinPolySpec::root_lo() const {
  Rational q(root_enclosure(base_bits_), pow2(base_bits_));
  q.canonicalize();
  return q;
}

Rational MinPolySpec::root_hi() const {
  Rational q(root_enclosure(base_bits_) + 1, pow2(base_bits_));
  q.canonicalize();
  return q;
}

Integer MinPolySpec::root_enclosure(unsigned bits) const {
  bits = std::max(bits, base_bits_);
  {
    std::lock_guard lock(mutex_);
    if (auto it = enclosures_.find(bits); it != enclosures_.end()) return it->second;
  }
  // Candidate from a numeric root, then certified by the sign change. If the
  // numeric value is off by one cell, step toward the root.
  Integer num = dyadic_floor(generator_value(n_, bits / 3 + 40), bits);
  for (int attempt = 0; attempt < 64; ++attempt) {
    int lo = sign_at_dyadic(polynomial_, num, bits);
    int hi = sign_at_dyadic(polynomial_, num + 1, bits);
    if (lo == sign_below_root_ && hi == -sign_below_root_) {
      std::lock_guard lock(mutex_);
      enclosures_.emplace(bits, num);
      return num;
    }
    if (lo == 0 || hi == 0) throw VerificationError("minimal polynomial has a dyadic root");
    num += (lo == sign_below_root_) ? 1 : -1;
  }
  throw VerificationError("root refinement failed for n = " + std::to_string(n_));
}

FieldContext build_minimal_polynomial(int n) {
  require_supported_n(n);
  const int m = (n - 1) / 2;
  const IntPolynomial pm = p_poly(m);
  const long degree = euler_totient(2L * n) / 2;

  // The conjugates of 2cos(pi/n) are 2cos(a pi/n) for odd a in [1, n) coprime to n.
  const unsigned digits = 120;
  ScopedPrecision prec(digits);
  std::vector<BigFloat> product{BigFloat(1)};
  for (int a = 1; a < n; a += 2) {
    if (std::gcd(a, n) != 1) continue;
    BigFloat root = 2 * cos(big_pi() * a / n);
    std::vector<BigFloat> next(product.size() + 1, BigFloat(0));
    for (size_t i = 0; i < product.size(); ++i) {
      next[i + 1] += product[i];
      next[i] -= product[i] * root;
    }
    product = std::move(next);
  }
  std::vector<Integer> coeffs;
  for (const auto& c : product) {
    BigFloat r = round(c);
    if (abs(c - r) > BigFloat("1e-60")) throw VerificationError("conjugate product is not integral");
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), r.backend().data(), MPFR_RNDN);
    coeffs.push_back(z);
  }
  IntPolynomial mu(std::move(coeffs));
  if (mu.degree() != degree || mu.leading() != 1)
    throw VerificationError("minimal polynomial has the wrong degree for n = " + std::to_string(n));
  if (!ratpoly::divides(mu, pm))
    throw VerificationError("minimal polynomial does not divide P_m for n = " + std::to_string(n));

  const BigFloat root = generator_value(n, digits);
  const Integer num = dyadic_floor(root, kBaseBits);
  const int below = sign_at_dyadic(mu, num, kBaseBits);
  const int above = sign_at_dyadic(mu, num + 1, kBaseBits);
  if (below == 0 || below != -above) throw VerificationError("root isolation failed");
  Rational lo(num, pow2(kBaseBits)), hi(num + 1, pow2(kBaseBits));
  lo.canonicalize();
  hi.canonicalize();
  if (ratpoly::sturm_root_count(mu, lo, hi) != 1) throw VerificationError("isolating interval is not isolating");

  std::string approx = root.str(60);
  return std::make_shared<const MinPolySpec>(n, std::move(mu), std::move(approx), kBaseBits, num, below);
}

FieldContext minimal_polynomial(int n) {
  require_supported_n(n);
  static std::mutex mutex;
  static std::map<int, FieldContext> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_minimal_polynomial(n);
  return slot;
}

// ---- FieldElement

FieldElement::FieldElement(FieldContext context) : context_(std::move(context)) {
  if (!context_) throw InputError("field element needs a context");
  coords_.assign(static_cast<size_t>(context_->degree()), Rational(0));
}

FieldElement FieldElement::constant(const FieldContext& context, const Rational& value) {
  FieldElement out(context);
  out.coords_[0] = value;
  out.coords_[0].canonicalize();
  return out;
}

FieldElement FieldElement::generator(const FieldContext& context) {
  FieldElement out(context);
  out.coords_[1] = 1;
  return out;
}

FieldElement FieldElement::from_coords(const FieldContext& context, std::vector<Rational> coords) {
  FieldElement out(context);
  const auto& mu = context->coefficients();
  const size_t d = static_cast<size_t>(context->degree());
  // callers may pass fractions such as 3/3; equality needs lowest terms
  for (auto& c : coords) c.canonicalize();
  ratpoly::trim(coords);
  // mu is monic: eliminate the top coefficient until the degree drops below d.
  while (coords.size() > d) {
    Rational top = coords.back();
    const size_t shift = coords.size() - 1 - d;
    for (size_t i = 0; i < d; ++i) coords[shift + i] -= top * mu[i];
    coords.pop_back();
  }
  for (size_t i = 0; i < coords.size(); ++i) out.coords_[i] = coords[i];
  return out;
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

void FieldElement::check_context(const FieldElement& o) const {
  if (context_ != o.context_ && context_->n() != o.context_->n())
    throw InputError("field elements belong to different fields");
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_context(o);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_context(o);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_context(o);
  *this = from_coords(context_, ratpoly::mul(coords_, o.coords_));
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  for (auto& c : coords_) c *= r;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_context(o);
  return *this *= o.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_context(b);
  return a.coords_ == b.coords_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  using ratpoly::Poly;
  Poly r0 = ratpoly::from_int(context_->polynomial());
  Poly r1 = coords_;
  ratpoly::trim(r1);
  Poly s0, s1{Rational(1)};
  // Invariant: s_i * a == r_i (mod mu). mu is irreducible, so the remainders end at a nonzero constant.
  while (r1.size() > 1) {
    Poly q, r;
    ratpoly::divmod(r0, r1, q, r);
    Poly s = ratpoly::sub(s0, ratpoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw VerificationError("modulus is not irreducible");
  }
  const Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return from_coords(context_, std::move(s1));
}

std::pair<Rational, Rational> FieldElement::enclosure(unsigned bits) const {
  bits = std::max(bits, context_->base_bits());
  // Clear denominators, then interval Horner on [N, N+1] / 2^bits in scaled integers.
  Integer lcm = 1;
  for (const auto& c : coords_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coords_.size());
  for (const auto& c : coords_) ints.push_back(c.get_num() * (lcm / c.get_den()));
  while (ints.size() > 1 && ints.back() == 0) ints.pop_back();

  const Integer xl = context_->root_enclosure(bits);
  const Integer xh = xl + 1;
  const Integer step = pow2(bits);
  Integer lo = ints.back(), hi = ints.back();
  Integer scale = step;
  for (size_t k = ints.size() - 1; k-- > 0;) {
    // x > 0, so the product bounds come from the endpoint combinations.
    Integer a = lo * xl, b = lo * xh, c = hi * xl, d = hi * xh;
    lo = std::min({a, b, c, d}) + ints[k] * scale;
    hi = std::max({a, b, c, d}) + ints[k] * scale;
    scale *= step;
  }
  Integer denom = lcm * (scale / step);
  Rational qlo(lo, denom), qhi(hi, denom);
  qlo.canonicalize();
  qhi.canonicalize();
  return {qlo, qhi};
}

Sign FieldElement::sign() const {
  if (is_zero()) return Sign::zero;
  if (is_rational()) return static_cast<Sign>(sgn(coords_[0]));
  for (unsigned bits = context_->base_bits(); bits <= kMaxSignBits; bits *= 2) {
    auto [lo, hi] = enclosure(bits);
    if (lo > 0) return Sign::positive;
    if (hi < 0) return Sign::negative;
  }
  throw VerificationError("sign refinement did not terminate");
}

namespace {

template <typename Rounder>
std::string refine_until(const FieldElement& a, unsigned start_bits, Rounder&& round) {
  for (unsigned bits = start_bits; bits <= kMaxSignBits; bits *= 2) {
    auto [lo, hi] = a.enclosure(bits);
    if (std::string s = round(lo, hi); !s.empty()) return s;
  }
  throw VerificationError("decimal refinement did not terminate");
}

}  // namespace

std::string FieldElement::decimal(int significant_digits) const {
  if (significant_digits < 1) throw InputError("digits must be at least 1");
  if (is_rational()) return round_significant(coords_[0], coords_[0], significant_digits);
  const unsigned start = static_cast<unsigned>(significant_digits) * 4 + 64;
  return refine_until(*this, start, [&](const Rational& lo, const Rational& hi) {
    return round_significant(lo, hi, significant_digits);
  });
}

std::string FieldElement::fixed(int decimals) const {
  if (decimals < 0) throw InputError("decimals must be non-negative");
  if (is_rational()) return round_fixed(coords_[0], coords_[0], decimals);
  const unsigned start = static_cast<unsigned>(decimals) * 4 + 64;
  return refine_until(*this, start, [&](const Rational& lo, const Rational& hi) {
    return round_fixed(lo, hi, decimals);
  });
}

BigFloat FieldElement::to_bigfloat(unsigned digits) const {
  ScopedPrecision prec(digits + 10);
  const BigFloat x = generator_value(n(), digits + 10);
  BigFloat acc = 0;
  for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) acc = acc * x + stairflow::to_bigfloat(*it);
  return acc;
}

double FieldElement::to_double() const { return to_bigfloat(30).convert_to<double>(); }

Sign compare(const FieldElement& a, const FieldElement& b) { return (a - b).sign(); }

FieldElement field_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::neg: return -a;
  }
  throw InputError("unknown field operation");
}

FieldElement field_invert(const FieldElement& a) { return a.inverse(); }
Sign field_sign(const FieldElement& a) { return a.sign(); }
std::string field_embed(const FieldElement& a, int digits) { return a.decimal(digits); }

// ---- rounding

namespace {

Integer pow10(int e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return out;
}

// q * 10^e for any integer e.
Rational scale10(const Rational& q, int e) {
  Rational out = e >= 0 ? Rational(q * Rational(pow10(e))) : Rational(q / Rational(pow10(-e)));
  out.canonicalize();
  return out;
}

// floor(|q| + 1/2), i.e. rounding of a magnitude with ties away from zero.
Integer round_half_away(const Rational& magnitude) {
  Rational shifted = magnitude + Rational(1, 2);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

// Largest e with 10^e <= q, for q > 0.
int decimal_exponent(const Rational& q) {
  Integer num = q.get_num(), den = q.get_den();
  int e = static_cast<int>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
          static_cast<int>(mpz_sizeinbase(den.get_mpz_t(), 10));
  // sizeinbase may overestimate by one; adjust to the exact value.
  while (scale10(q, -e) >= 10) ++e;
  while (scale10(q, -e) < 1) --e;
  return e;
}

// digits of k placed so that the value is k * 10^-decimals.
std::string place_point(const Integer& k, int decimals) {
  std::string s = k.get_str();
  if (decimals <= 0) return s + std::string(static_cast<size_t>(-decimals), '0');
  if (s.size() <= static_cast<size_t>(decimals)) s.insert(0, static_cast<size_t>(decimals) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<size_t>(decimals), ".");
  return s;
}

}  // namespace

std::string round_fixed(const Rational& lo, const Rational& hi, int decimals) {
  auto rounded = [&](const Rational& v) {
    Integer k = round_half_away(abs(scale10(v, decimals)));
    return v < 0 ? Integer(-k) : k;
  };
  // The rounding map is monotone, so agreement at the endpoints settles every interior point.
  Integer a = rounded(lo), b = rounded(hi);
  if (a != b) return {};
  std::string body = place_point(abs(a), decimals);
  return a < 0 ? "-" + body : body;
}

std::string round_significant(const Rational& lo, const Rational& hi, int digits) {
  if (lo == 0 && hi == 0) return place_point(0, digits - 1);
  if (sgn(lo) != sgn(hi)) return {};
  const bool negative = hi < 0;
  Rational a = abs(lo), b = abs(hi);
  if (a > b) std::swap(a, b);
  const int e = decimal_exponent(a);
  const int shift = digits - 1 - e;
  Integer ka = round_half_away(scale10(a, shift));
  Integer kb = round_half_away(scale10(b, shift));
  if (ka != kb) return {};
  int decimals = shift;
  if (ka == pow10(digits)) {
    // Carry into the next decade keeps `digits` significant digits.
    ka = pow10(digits - 1);
    --decimals;
  }
  std::string body = place_point(ka, decimals);
  return negative ? "-" + body : body;
}

}  // namespace stairflow
