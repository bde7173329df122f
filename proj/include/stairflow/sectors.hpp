#pragma once

#include "stairflow/linear.hpp"
#include "stairflow/staircase.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stairflow {

using Word = std::vector<int>;

std::string word_text(const Word& w);

// Partition of the closed first quadrant by n boundary directions
// u_i = (Q_i(x), Q_{i-1}(x)), i = 0..n-1, from (1, 0) to (0, 1). Adjacent
// boundary vectors span a determinant one matrix. Slopes are
// 0 = -v_1 < -v_2 < ... < -v_{n-1} < infinity.
struct SectorFan {
  int n;
  std::vector<ExtendedSlope> boundary_slopes;
  std::vector<DirectionVector> boundary_vectors;
};

SectorFan sector_fan(int n);

// sigma_i = [u_i | u_{i+1}] for i = 0..n-2. Throws VerificationError unless det = 1.
std::vector<Mat2> sigma_matrices(int n);

// Sector i of a nonzero vector in the closed first quadrant: slope in
// (t_i, t_{i+1}], with slope 0 in sector 0. A slope on an interior boundary
// goes to the lower sector.
int classify_sector(const SectorFan& fan, const DirectionVector& v);

struct Renormalization {
  Word word;
  // Set when the vector reached an axis within the step cap.
  std::optional<Axis> terminal;
  // The last vector reached; sigma_{w_1} ... sigma_{w_k} applied to it gives
  // back the starting direction.
  DirectionVector terminal_vector;
  // Set when the direction came back to itself: the loop would repeat this
  // block of letters forever, so the slope is not in the tree. The last
  // vector is fixed by the product of the cycle matrices.
  std::optional<Word> cycle;
};

inline constexpr int kRenormalizationCap = 10000;

// Repeatedly classifies the direction of slope s and applies the inverse
// sector matrix until it is horizontal or vertical, the direction repeats
// (Brent cycle detection) or cap steps have run. s must be >= 0 or infinity.
Renormalization renormalize_slope(int n, const ExtendedSlope& s, int cap = kRenormalizationCap);

// Product sigma_{w_1} ... sigma_{w_k} applied to v.
DirectionVector apply_word(const std::vector<Mat2>& sigmas, const Word& w, const DirectionVector& v);

// Floating-point version of the same loop, used to show that a slope outside
// the field does not terminate. A vector counts as on an axis when its slope
// or inverse slope is below tol.
struct NumericRenormalization {
  Word word;
  bool terminated;
};
NumericRenormalization renormalize_numeric(int n, double slope, int max_steps, double tol = 1e-12);

struct SigmaNode {
  Word word;
  DirectionVector vector;
  ExtendedSlope slope;
};

struct SigmaTree {
  // Every word of length <= depth, sorted by length then lexicographically.
  std::vector<SigmaNode> nodes;
  // Distinct slopes, ascending.
  std::vector<ExtendedSlope> distinct_slopes;
};

inline constexpr int kMaxTreeDepth = 8;

// sigma_{w_1} ... sigma_{w_k} (1, 0) for every word. threads > 1 splits each
// level across worker threads; the output does not depend on it.
SigmaTree enumerate_sigma_tree(int n, int depth, int threads = 1);

struct HyperbolicNode {
  // Operator indices m in 1..n-1.
  Word word;
  ExtendedSlope value;
};

// S_{m_1} ... S_{m_k} (0) for every word, sorted like the sigma tree.
std::vector<HyperbolicNode> enumerate_hyperbolic_tree(int n, int depth, int threads = 1);

enum class EquivalenceMode {
  // A single involution iota in {identity, s -> 1/s} is fixed at depth 1 and
  // iota(sigma slope at w) = S-value at w + 1 is required for every word.
  literal,
  // S_{i+1} = iota sigma_i with iota(s) = 1/s as transformations, and since
  // iota sigma_i iota = sigma_{n-2-i}, S_{w_1+1} ... S_{w_k+1}(0) equals
  // iota^k applied to the sigma slope at the word with alternate letters
  // reflected (i -> n-2-i), counting from the second to last letter backwards.
  operator_level,
};

struct EquivalenceReport {
  bool pass;
  EquivalenceMode mode;
  // "identity", "reciprocal" or "none"
  std::string calibration;
  long words_checked;
  // First failing word with both values, empty on success.
  std::string counterexample;
};

inline constexpr int kMaxEquivalenceDepth = 6;

EquivalenceReport equivalence_check(int n, int depth, EquivalenceMode mode = EquivalenceMode::literal,
                                    int threads = 1);

// Word with alternate letters reflected, as used by the operator level check.
Word twisted_word(int n, const Word& w);

}  // namespace stairflow
