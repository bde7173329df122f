#include "stairflow/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stairflow {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::constant(long c) { return IntPolynomial({Integer(c)}); }

IntPolynomial IntPolynomial::monomial(long c, int degree) {
  std::vector<Integer> cs(static_cast<size_t>(degree) + 1, Integer(0));
  cs.back() = c;
  return IntPolynomial(std::move(cs));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coefficients_[static_cast<size_t>(i)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Integer> out(std::max(coefficients_.size(), o.coefficients_.size()), Integer(0));
  for (size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
  for (size_t i = 0; i < o.coefficients_.size(); ++i) out[i] += o.coefficients_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out = coefficients_;
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> out(coefficients_.size() + o.coefficients_.size() - 1, Integer(0));
  for (size_t i = 0; i < coefficients_.size(); ++i)
    for (size_t j = 0; j < o.coefficients_.size(); ++j) out[i + j] += coefficients_[i] * o.coefficients_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted() const {
  if (is_zero()) return {};
  std::vector<Integer> out;
  out.reserve(coefficients_.size() + 1);
  out.emplace_back(0);
  out.insert(out.end(), coefficients_.begin(), coefficients_.end());
  return IntPolynomial(std::move(out));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coefficients_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace ratpoly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly from_int(const IntPolynomial& p) {
  Poly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    Rational factor = r.back() / lead;
    q[shift] = factor;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= factor * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient) {
  Poly q, r;
  divmod(from_int(a), from_int(b), q, r);
  if (!r.empty()) return false;
  std::vector<Integer> qi;
  qi.reserve(q.size());
  for (const auto& c : q) {
    if (c.get_den() != 1) return false;
    qi.push_back(c.get_num());
  }
  if (quotient) *quotient = IntPolynomial(std::move(qi));
  return true;
}

namespace {

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_root_count(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  std::vector<Poly> chain;
  chain.push_back(from_int(p));
  Poly deriv;
  for (size_t i = 1; i < chain[0].size(); ++i) deriv.push_back(chain[0][i] * Rational(static_cast<long>(i)));
  trim(deriv);
  chain.push_back(deriv);
  while (!chain.back().empty() && chain.back().size() > 1) {
    Poly q, r;
    divmod(chain[chain.size() - 2], chain.back(), q, r);
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

}  // namespace ratpoly

}  // namespace stairflow
