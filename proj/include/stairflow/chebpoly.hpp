#pragma once

#include "stairflow/numfield.hpp"
#include "stairflow/polynomial.hpp"

#include <vector>

namespace stairflow {

// P_0 = 1, P_1 = x - 1, P_k = x P_{k-1} - P_{k-2}.
// P_k(2cos t) sin t = sin((k+1)t) - sin(k t).
IntPolynomial p_poly(int k);

// Q_{-1} = 0, Q_0 = 1, Q_k = x Q_{k-1} - Q_{k-2}, so Q_k(2cos t) = sin((k+1)t) / sin t.
IntPolynomial sine_ratio_poly(int k);

FieldElement evaluate(const IntPolynomial& p, const FieldElement& at);

// Exact P_k(a).
FieldElement p_eval(int k, const FieldElement& a);

// Side lengths s(0), ..., s(m) of the staircase rectangles for n = 2m + 1,
// with s(0) = 1, s(1) = x - 1 and s(k) = x s(k-1) - s(k-2). s(m) is zero.
std::vector<FieldElement> s_lengths(int n);

}  // namespace stairflow
