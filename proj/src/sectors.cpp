#include "stairflow/sectors.hpp"

#include "stairflow/chebpoly.hpp"
#include "stairflow/errors.hpp"
#include "stairflow/field_text.hpp"
#include "stairflow/hyperdisk.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

namespace stairflow {

namespace {

FieldElement cross(const DirectionVector& a, const DirectionVector& b) { return a.dx * b.dy - a.dy * b.dx; }

void require_quadrant(const DirectionVector& v, const char* what) {
  if (v.dx.sign() == Sign::negative || v.dy.sign() == Sign::negative || (v.dx.is_zero() && v.dy.is_zero()))
    throw InputError(std::string(what) + ": vector must be nonzero and in the closed first quadrant");
}

void require_depth(int depth, int max, const char* what) {
  if (depth < 0 || depth > max)
    throw InputError(std::string(what) + ": depth must be between 0 and " + std::to_string(max));
}

// Runs body(begin, end) over [0, count) split into contiguous chunks.
void parallel_chunks(size_t count, int threads, const std::function<void(size_t, size_t)>& body) {
  const size_t workers = std::clamp<size_t>(static_cast<size_t>(std::max(threads, 1)), 1, std::max<size_t>(count, 1));
  if (workers == 1 || count < 64) {
    body(0, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const size_t chunk = (count + workers - 1) / workers;
  for (size_t t = 0; t < workers; ++t) {
    const size_t begin = t * chunk, end = std::min(count, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        if (begin < end) body(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Level k + 1 from level k: word (j, w) for every letter j and parent w, in
// lexicographic order. make(j, parent) builds the child payload.
template <typename Node, typename Make>
std::vector<Node> next_level(const std::vector<Node>& level, int letters, int first_letter, int threads, Make make) {
  const size_t width = level.size();
  std::vector<std::optional<Node>> out(width * static_cast<size_t>(letters));
  parallel_chunks(out.size(), threads, [&](size_t begin, size_t end) {
    for (size_t idx = begin; idx < end; ++idx) {
      const int j = first_letter + static_cast<int>(idx / width);
      const Node& parent = level[idx % width];
      out[idx].emplace(make(j, parent));
    }
  });
  std::vector<Node> result;
  result.reserve(out.size());
  for (auto& node : out) result.push_back(std::move(*node));
  return result;
}

Word prepend(int j, const Word& w) {
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(j);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

ExtendedSlope reciprocal_in(const FieldContext& context, const ExtendedSlope& s) {
  if (s.is_infinite()) return ExtendedSlope(FieldElement(context));
  if (s.value().is_zero()) return ExtendedSlope::infinity();
  return ExtendedSlope(s.value().inverse());
}

// Action of a matrix on slopes: (1, s) -> (a + b s, c + d s).
LFT slope_lft(const Mat2& m) { return LFT(Mat2{m.d, m.c, m.b, m.a}); }

std::vector<ExtendedSlope> sorted_unique(std::vector<ExtendedSlope> slopes) {
  std::map<std::string, ExtendedSlope> by_text;
  for (auto& s : slopes) by_text.emplace(s.text(), std::move(s));
  std::vector<ExtendedSlope> out;
  out.reserve(by_text.size());
  for (auto& [_, s] : by_text) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

Word shifted(const Word& w) {
  Word out(w);
  for (int& letter : out) ++letter;
  return out;
}

}  // namespace

std::string word_text(const Word& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

SectorFan sector_fan(int n) {
  require_supported_n(n);
  auto ctx = minimal_polynomial(n);
  auto x = FieldElement::generator(ctx);
  SectorFan fan{n, {}, {}};
  for (int i = 0; i < n; ++i) {
    DirectionVector u{evaluate(sine_ratio_poly(i), x), evaluate(sine_ratio_poly(i - 1), x)};
    fan.boundary_slopes.push_back(slope_of(u));
    fan.boundary_vectors.push_back(std::move(u));
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!(fan.boundary_slopes[static_cast<size_t>(i)] < fan.boundary_slopes[static_cast<size_t>(i + 1)]))
      throw VerificationError("sector_fan: boundary slopes are not increasing");
  return fan;
}

std::vector<Mat2> sigma_matrices(int n) {
  auto fan = sector_fan(n);
  std::vector<Mat2> out;
  for (int i = 0; i + 1 < n; ++i) {
    const auto& u = fan.boundary_vectors[static_cast<size_t>(i)];
    const auto& w = fan.boundary_vectors[static_cast<size_t>(i + 1)];
    Mat2 sigma{u.dx, w.dx, u.dy, w.dy};
    if (!(sigma.det() == FieldElement::constant(u.dx.context(), 1)))
      throw VerificationError("sigma_matrices: determinant of sigma_" + std::to_string(i) + " is not 1");
    out.push_back(std::move(sigma));
  }
  return out;
}

int classify_sector(const SectorFan& fan, const DirectionVector& v) {
  require_quadrant(v, "classify_sector");
  // smallest i with slope(v) <= t_{i+1}, i.e. v not counter-clockwise of u_{i+1}
  int lo = 0, hi = fan.n - 2;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (cross(v, fan.boundary_vectors[static_cast<size_t>(mid + 1)]).sign() != Sign::negative)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

DirectionVector apply_word(const std::vector<Mat2>& sigmas, const Word& w, const DirectionVector& v) {
  DirectionVector out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = sigmas.at(static_cast<size_t>(*it)) * out;
  return out;
}

Renormalization renormalize_slope(int n, const ExtendedSlope& s, int cap) {
  auto fan = sector_fan(n);
  auto sigmas = sigma_matrices(n);
  if (!s.is_infinite() && s.value().sign() == Sign::negative)
    throw InputError("renormalize_slope: slope must be non-negative or infinite");
  if (!s.is_infinite() && s.value().n() != n) throw InputError("renormalize_slope: slope belongs to another field");
  Renormalization r{{}, std::nullopt, direction_of(s, minimal_polynomial(n)), std::nullopt};
  DirectionVector checkpoint = r.terminal_vector;
  size_t power = 1, lambda = 0;
  for (int step = 0;; ++step) {
    auto& v = r.terminal_vector;
    if (v.dy.is_zero()) {
      r.terminal = Axis::horizontal;
      break;
    }
    if (v.dx.is_zero()) {
      r.terminal = Axis::vertical;
      break;
    }
    if (step >= cap) break;
    const int i = classify_sector(fan, v);
    r.word.push_back(i);
    v = sigmas[static_cast<size_t>(i)].adjugate() * v;
    if (v.dx.sign() == Sign::negative || v.dy.sign() == Sign::negative)
      throw VerificationError("renormalize_slope: inverse sector matrix left the first quadrant");
    ++lambda;
    if (cross(v, checkpoint).is_zero()) {
      r.cycle = Word(r.word.end() - static_cast<std::ptrdiff_t>(lambda), r.word.end());
      break;
    }
    if (lambda == power) {
      checkpoint = v;
      power *= 2;
      lambda = 0;
    }
  }
  return r;
}

NumericRenormalization renormalize_numeric(int n, double slope, int max_steps, double tol) {
  if (!(slope >= 0.0) || !std::isfinite(slope)) throw InputError("renormalize_numeric: slope must be finite and >= 0");
  auto fan = sector_fan(n);
  std::vector<double> bounds;
  for (size_t i = 1; i + 1 < fan.boundary_slopes.size(); ++i) bounds.push_back(fan.boundary_slopes[i].value().to_double());
  std::vector<std::array<double, 4>> inverses;
  for (const auto& m : sigma_matrices(n)) inverses.push_back({m.d.to_double(), -m.b.to_double(), -m.c.to_double(), m.a.to_double()});
  NumericRenormalization r{{}, false};
  double dx = 1.0, dy = slope;
  for (int step = 0; step <= max_steps; ++step) {
    if (std::abs(dy) <= tol * std::abs(dx) || std::abs(dx) <= tol * std::abs(dy)) {
      r.terminated = true;
      break;
    }
    if (step == max_steps) break;
    const double t = dy / dx;
    const int i = static_cast<int>(std::lower_bound(bounds.begin(), bounds.end(), t) - bounds.begin());
    r.word.push_back(i);
    const auto& inv = inverses[static_cast<size_t>(i)];
    const double nx = inv[0] * dx + inv[1] * dy, ny = inv[2] * dx + inv[3] * dy;
    const double len = std::hypot(nx, ny);
    dx = std::max(nx, 0.0) / len;
    dy = std::max(ny, 0.0) / len;
  }
  return r;
}

SigmaTree enumerate_sigma_tree(int n, int depth, int threads) {
  require_depth(depth, kMaxTreeDepth, "enumerate_sigma_tree");
  auto sigmas = sigma_matrices(n);
  auto ctx = minimal_polynomial(n);
  SigmaTree tree;
  DirectionVector e1{FieldElement::constant(ctx, 1), FieldElement(ctx)};
  std::vector<SigmaNode> level{{{}, e1, slope_of(e1)}};
  for (int k = 0;; ++k) {
    tree.nodes.insert(tree.nodes.end(), level.begin(), level.end());
    if (k == depth) break;
    level = next_level(level, n - 1, 0, threads, [&](int j, const SigmaNode& parent) {
      auto v = sigmas[static_cast<size_t>(j)] * parent.vector;
      auto s = slope_of(v);
      return SigmaNode{prepend(j, parent.word), std::move(v), std::move(s)};
    });
  }
  std::vector<ExtendedSlope> all;
  all.reserve(tree.nodes.size());
  for (const auto& node : tree.nodes) all.push_back(node.slope);
  tree.distinct_slopes = sorted_unique(std::move(all));
  return tree;
}

std::vector<HyperbolicNode> enumerate_hyperbolic_tree(int n, int depth, int threads) {
  require_depth(depth, kMaxTreeDepth, "enumerate_hyperbolic_tree");
  auto ctx = minimal_polynomial(n);
  std::vector<LFT> ops;
  for (int m = 1; m <= n - 1; ++m) ops.push_back(s_operator(n, m));
  std::vector<HyperbolicNode> out;
  std::vector<HyperbolicNode> level{{{}, ExtendedSlope(FieldElement(ctx))}};
  for (int k = 0;; ++k) {
    out.insert(out.end(), level.begin(), level.end());
    if (k == depth) break;
    level = next_level(level, n - 1, 1, threads, [&](int m, const HyperbolicNode& parent) {
      return HyperbolicNode{prepend(m, parent.word), ops[static_cast<size_t>(m - 1)](parent.value)};
    });
  }
  return out;
}

Word twisted_word(int n, const Word& w) {
  Word out(w);
  const size_t k = w.size();
  for (size_t j = 0; j < k; ++j)
    if ((k - 1 - j) % 2 == 1) out[j] = n - 2 - w[j];
  return out;
}

EquivalenceReport equivalence_check(int n, int depth, EquivalenceMode mode, int threads) {
  require_supported_n(n);
  if (depth < 1 || depth > kMaxEquivalenceDepth)
    throw InputError("equivalence_check: depth must be between 1 and " + std::to_string(kMaxEquivalenceDepth));
  auto ctx = minimal_polynomial(n);
  auto sigma_tree = enumerate_sigma_tree(n, depth, threads);
  auto hyper = enumerate_hyperbolic_tree(n, depth, threads);
  // Both trees are stored level by level in lexicographic order, so word w of
  // the sigma tree sits at the same index as word w + 1 of the S tree.
  std::map<Word, size_t> sigma_index;
  for (size_t i = 0; i < sigma_tree.nodes.size(); ++i) sigma_index.emplace(sigma_tree.nodes[i].word, i);

  EquivalenceReport report{true, mode, "none", static_cast<long>(sigma_tree.nodes.size()), ""};
  auto fail = [&](const Word& w, const ExtendedSlope& lhs, const ExtendedSlope& rhs, const std::string& how) {
    report.pass = false;
    report.counterexample = "sigma word " + word_text(w) + " gives " + how + " = " + lhs.text() + " but S word " +
                            word_text(shifted(w)) + " gives " + rhs.text();
  };

  if (mode == EquivalenceMode::literal) {
    std::function<ExtendedSlope(const ExtendedSlope&)> iota;
    for (const char* name : {"identity", "reciprocal"}) {
      std::function<ExtendedSlope(const ExtendedSlope&)> candidate =
          std::string(name) == "identity" ? std::function<ExtendedSlope(const ExtendedSlope&)>(
                                                [](const ExtendedSlope& s) { return s; })
                                          : [ctx](const ExtendedSlope& s) { return reciprocal_in(ctx, s); };
      bool fits = true;
      for (size_t i = 1; i < static_cast<size_t>(n); ++i)
        fits = fits && candidate(sigma_tree.nodes[i].slope) == hyper[i].value;
      if (fits) {
        report.calibration = name;
        iota = candidate;
        break;
      }
    }
    if (!iota) {
      report.pass = false;
      fail(sigma_tree.nodes[1].word, reciprocal_in(ctx, sigma_tree.nodes[1].slope), hyper[1].value, "1/slope");
      report.counterexample = "no involution fits depth 1: " + report.counterexample;
      return report;
    }
    const std::string how = report.calibration == "identity" ? "slope" : "1/slope";
    for (size_t i = 1; i < sigma_tree.nodes.size() && report.pass; ++i) {
      auto lhs = iota(sigma_tree.nodes[i].slope);
      if (!(lhs == hyper[i].value)) fail(sigma_tree.nodes[i].word, lhs, hyper[i].value, how);
    }
    // level-wise slope sets
    size_t begin = 1, width = static_cast<size_t>(n - 1);
    for (int k = 1; k <= depth && report.pass; ++k) {
      std::vector<ExtendedSlope> a, b;
      for (size_t i = begin; i < begin + width; ++i) {
        a.push_back(iota(sigma_tree.nodes[i].slope));
        b.push_back(hyper[i].value);
      }
      if (!(sorted_unique(a) == sorted_unique(b))) {
        report.pass = false;
        report.counterexample = "slope sets differ at depth " + std::to_string(k);
      }
      begin += width;
      width *= static_cast<size_t>(n - 1);
    }
    return report;
  }

  report.calibration = "reciprocal";
  // S_{i+1} = iota sigma_i and iota sigma_i iota = sigma_{n-2-i} as transformations
  auto sigmas = sigma_matrices(n);
  const LFT iota_lft(Mat2{FieldElement(ctx), FieldElement::constant(ctx, 1), FieldElement::constant(ctx, 1), FieldElement(ctx)});
  for (int i = 0; i + 1 < n; ++i) {
    const LFT sigma_lft = slope_lft(sigmas[static_cast<size_t>(i)]);
    if (!(iota_lft * sigma_lft == s_operator(n, i + 1))) {
      report.pass = false;
      report.counterexample = "S_" + std::to_string(i + 1) + " differs from 1/s composed with sigma_" + std::to_string(i);
      return report;
    }
    const LFT mirrored = slope_lft(sigmas[static_cast<size_t>(n - 2 - i)]);
    if (!(iota_lft * sigma_lft * iota_lft == mirrored)) {
      report.pass = false;
      report.counterexample = "1/s conjugate of sigma_" + std::to_string(i) + " is not sigma_" + std::to_string(n - 2 - i);
      return report;
    }
  }
  for (size_t i = 1; i < hyper.size(); ++i) {
    const Word w = sigma_tree.nodes[i].word;
    const Word t = twisted_word(n, w);
    auto lhs = sigma_tree.nodes[sigma_index.at(t)].slope;
    if (w.size() % 2 == 1) lhs = reciprocal_in(ctx, lhs);
    if (!(lhs == hyper[i].value)) {
      report.pass = false;
      report.counterexample = "twisted sigma word " + word_text(t) + " gives " + lhs.text() + " but S word " +
                              word_text(shifted(w)) + " gives " + hyper[i].value.text();
      return report;
    }
  }
  return report;
}

}  // namespace stairflow
