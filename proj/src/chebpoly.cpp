#include "stairflow/chebpoly.hpp"

#include "stairflow/errors.hpp"

namespace stairflow {

namespace {

IntPolynomial recurrence(int k, IntPolynomial first, IntPolynomial second) {
  if (k == 0) return first;
  for (int i = 1; i < k; ++i) {
    IntPolynomial next = second.shifted() - first;
    first = std::move(second);
    second = std::move(next);
  }
  return second;
}

}  // namespace

IntPolynomial p_poly(int k) {
  if (k < 0) throw InputError("p_poly: k must be non-negative");
  return recurrence(k, IntPolynomial::constant(1), IntPolynomial({Integer(-1), Integer(1)}));
}

IntPolynomial sine_ratio_poly(int k) {
  if (k < -1) throw InputError("sine_ratio_poly: k must be at least -1");
  if (k == -1) return {};
  return recurrence(k, IntPolynomial::constant(1), IntPolynomial::monomial(1, 1));
}

FieldElement evaluate(const IntPolynomial& p, const FieldElement& at) {
  FieldElement acc(at.context());
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc *= at;
    acc = acc + Rational(*it);
  }
  return acc;
}

FieldElement p_eval(int k, const FieldElement& a) { return evaluate(p_poly(k), a); }

std::vector<FieldElement> s_lengths(int n) {
  require_supported_n(n);
  const int m = (n - 1) / 2;
  auto ctx = minimal_polynomial(n);
  const FieldElement x = FieldElement::generator(ctx);
  std::vector<FieldElement> s;
  s.reserve(static_cast<size_t>(m) + 1);
  s.push_back(FieldElement::constant(ctx, 1));
  s.push_back(x - Rational(1));
  for (int k = 2; k <= m; ++k) s.push_back(x * s[k - 1] - s[k - 2]);
  return s;
}

}  // namespace stairflow
