#include "stairflow/cli.hpp"

#include "stairflow/chebpoly.hpp"
#include "stairflow/errors.hpp"
#include "stairflow/field_text.hpp"
#include "stairflow/flow.hpp"
#include "stairflow/hyperdisk.hpp"
#include "stairflow/sectors.hpp"
#include "stairflow/staircase.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace stairflow {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct Options {
  int n = 5;
  int depth = 3;
  int precision = 50;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string format;
  std::string output;
  std::string slope;
  std::string start;
  std::string angle;
  std::string svg;
  std::string mode = "literal";
  long max_crossings = 100000;
  double tol = 1e-9;
  bool numeric = false;
  bool json = false;
  bool diagonals = false;
  int max_n = 15;
  int k = 6;
  int samples = 0;
};

int default_precision() {
  if (const char* env = std::getenv("STAIRCASE_PRECISION")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InputError("STAIRCASE_PRECISION must be an integer");
    }
  }
  return 50;
}

ExtendedSlope parse_slope(const FieldContext& ctx, const std::string& text) {
  if (text == "inf" || text == "infinity") return ExtendedSlope::infinity();
  return ExtendedSlope(parse_field_element(ctx, text));
}

std::string decimal(const ExtendedSlope& s, int digits) { return s.decimal(digits); }

std::string fixed_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

ordered_json point_json(const Point& p) { return {format_field_element(p.x), format_field_element(p.y)}; }

ordered_json word_json(const Word& w) {
  ordered_json out = ordered_json::array();
  for (int letter : w) out.push_back(letter);
  return out;
}

std::string word_csv(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + std::to_string(w[i]);
  return out;
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + opt.output);
  file << text;
}

void emit_json(const Options& opt, const ordered_json& doc, std::ostream& out) { emit(opt, doc.dump(2) + "\n", out); }

std::string format_of(const Options& opt, const char* fallback) { return opt.format.empty() ? fallback : opt.format; }

int cmd_slopes(const Options& opt, std::ostream& out) {
  const auto tree = enumerate_sigma_tree(opt.n, opt.depth, opt.threads);
  const auto fmt = format_of(opt, "json");
  if (fmt == "csv") {
    std::ostringstream s;
    s << "word,slope_exact,slope_decimal\n";
    for (const auto& node : tree.nodes)
      s << word_csv(node.word) << ',' << node.slope.text() << ',' << decimal(node.slope, opt.precision) << '\n';
    emit(opt, s.str(), out);
    return kExitOk;
  }
  if (fmt != "json") throw InputError("slopes: format must be json or csv");
  ordered_json doc{{"n", opt.n}, {"depth", opt.depth}, {"words", ordered_json::array()}, {"distinct_slopes", ordered_json::array()}};
  for (const auto& node : tree.nodes)
    doc["words"].push_back({{"word", word_json(node.word)},
                            {"slope", node.slope.text()},
                            {"decimal", decimal(node.slope, opt.precision)}});
  for (const auto& s : tree.distinct_slopes)
    doc["distinct_slopes"].push_back({{"slope", s.text()}, {"decimal", decimal(s, opt.precision)}});
  emit_json(opt, doc, out);
  return kExitOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const auto ctx = minimal_polynomial(opt.n);
  const auto slope = parse_slope(ctx, opt.slope);
  if (!slope.is_infinite() && slope.value().sign() == Sign::negative)
    throw InputError("classify: slope must be non-negative or inf");
  const auto fan = sector_fan(opt.n);
  const int sector = classify_sector(fan, direction_of(slope, ctx));
  const auto r = renormalize_slope(opt.n, slope);
  ordered_json ren{{"word", word_json(r.word)},
                   {"steps", r.word.size()},
                   {"terminal", r.terminal ? (*r.terminal == Axis::horizontal ? "horizontal" : "vertical") : nullptr},
                   {"terminal_vector", {format_field_element(r.terminal_vector.dx), format_field_element(r.terminal_vector.dy)}},
                   {"cycle", r.cycle ? word_json(*r.cycle) : ordered_json(nullptr)}};
  if (!r.terminal && !r.cycle) ren["terminal_vector"] = nullptr;
  ordered_json doc{{"n", opt.n},
                   {"slope", slope.text()},
                   {"decimal", decimal(slope, opt.precision)},
                   {"sector", sector},
                   {"lower", fan.boundary_slopes[static_cast<size_t>(sector)].text()},
                   {"upper", fan.boundary_slopes[static_cast<size_t>(sector + 1)].text()},
                   {"renormalization", ren}};
  emit_json(opt, doc, out);
  return kExitOk;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
  EquivalenceMode mode;
  if (opt.mode == "literal")
    mode = EquivalenceMode::literal;
  else if (opt.mode == "operator")
    mode = EquivalenceMode::operator_level;
  else
    throw InputError("equiv: mode must be literal or operator");
  const auto report = equivalence_check(opt.n, opt.depth, mode, opt.threads);
  ordered_json doc{{"n", opt.n},
                   {"depth", opt.depth},
                   {"mode", opt.mode},
                   {"pass", report.pass},
                   {"calibration", report.calibration},
                   {"words_checked", report.words_checked},
                   {"counterexample", report.counterexample.empty() ? ordered_json(nullptr) : ordered_json(report.counterexample)}};
  emit_json(opt, doc, out);
  return report.pass ? kExitOk : kExitFailed;
}

int cmd_staircase(const Options& opt, std::ostream& out) {
  const auto s = build_staircase(opt.n);
  const int d = opt.precision;
  ordered_json doc{{"n", opt.n}, {"aspect", format_field_element(s.aspect())}, {"aspect_decimal", s.aspect().decimal(d)}};
  auto strips = [&](const std::vector<Strip>& list) {
    ordered_json arr = ordered_json::array();
    for (const auto& st : list)
      arr.push_back({{"k", st.k},
                     {"x0", format_field_element(st.x0)},
                     {"y0", format_field_element(st.y0)},
                     {"w", format_field_element(st.w)},
                     {"h", format_field_element(st.h)},
                     {"w_decimal", st.w.decimal(d)},
                     {"h_decimal", st.h.decimal(d)}});
    return arr;
  };
  doc["rows"] = strips(s.rows());
  doc["columns"] = strips(s.columns());
  doc["rectangles"] = ordered_json::array();
  for (const auto& r : s.rectangles())
    doc["rectangles"].push_back({{"k", r.k},
                                 {"twin", r.twin},
                                 {"x0", format_field_element(r.x0)},
                                 {"y0", format_field_element(r.y0)},
                                 {"x1", format_field_element(r.x1)},
                                 {"y1", format_field_element(r.y1)}});
  doc["diagonal_slopes"] = ordered_json::array();
  doc["diagonal_slopes_exact"] = ordered_json::array();
  for (const auto& v : diagonal_slopes(s)) {
    doc["diagonal_slopes"].push_back(v.decimal(d));
    doc["diagonal_slopes_exact"].push_back(format_field_element(v));
  }
  doc["outline"] = ordered_json::array();
  for (const auto& p : s.outline()) doc["outline"].push_back(point_json(p));
  doc["cylinders"] = ordered_json::object();
  for (Axis axis : {Axis::horizontal, Axis::vertical}) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : cylinder_decomposition(s, axis))
      arr.push_back({{"circumference", format_field_element(c.circumference)}, {"height", format_field_element(c.height)}});
    doc["cylinders"][axis == Axis::horizontal ? "horizontal" : "vertical"] = arr;
  }
  if (!opt.svg.empty()) {
    std::ofstream file(opt.svg, std::ios::binary);
    if (!file) throw InputError("cannot write " + opt.svg);
    file << staircase_svg(s, opt.diagonals);
  }
  emit_json(opt, doc, out);
  return kExitOk;
}

std::pair<std::string, std::string> split_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw InputError("expected two comma separated values: " + text);
  return {text.substr(0, comma), text.substr(comma + 1)};
}

double parse_real(const FieldContext& ctx, const std::string& text) {
  try {
    return parse_field_element(ctx, text).to_double();
  } catch (const InputError&) {
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw InputError("not a number: " + text);
    }
    if (used != text.size()) throw InputError("not a number: " + text);
    return v;
  }
}

int cmd_trace(const Options& opt, std::ostream& out) {
  const auto s = build_staircase(opt.n);
  const auto& ctx = s.context();
  const auto [sx, sy] = split_pair(opt.start);
  if (opt.max_crossings < 1) throw InputError("trace: max-crossings must be positive");
  ordered_json doc{{"n", opt.n}, {"slope", opt.slope}, {"start", {sx, sy}}, {"numeric", opt.numeric}};
  if (opt.numeric) {
    std::pair<double, double> dir{1.0, 0.0};
    if (opt.slope == "inf" || opt.slope == "infinity")
      dir = {0.0, 1.0};
    else
      dir.second = parse_real(ctx, opt.slope);
    const auto r = trace_numeric(s, dir, {parse_real(ctx, sx), parse_real(ctx, sy)}, opt.max_crossings, opt.tol);
    doc["result"] = trace_kind_name(r.kind);
    doc["crossings"] = r.crossings;
    if (r.kind == TraceKind::closed) {
      doc["length_decimal"] = fixed_double(r.length, 15);
      doc["sequence"] = crossing_text(r.sequence);
    }
    if (r.at) doc["at"] = {fixed_double(r.at->first, 15), fixed_double(r.at->second, 15)};
  } else {
    const auto slope = parse_slope(ctx, opt.slope);
    const Point start{parse_field_element(ctx, sx), parse_field_element(ctx, sy)};
    const auto r = trace_exact(s, direction_of(slope, ctx), start, opt.max_crossings);
    doc["result"] = trace_kind_name(r.kind);
    doc["crossings"] = r.crossings;
    if (r.length_sq) {
      doc["length_sq"] = format_field_element(*r.length_sq);
      ScopedPrecision prec(static_cast<unsigned>(opt.precision + 10));
      doc["length_decimal"] = BigFloat(sqrt(r.length_sq->to_bigfloat(static_cast<unsigned>(opt.precision + 10)))).str(opt.precision);
      doc["sequence"] = crossing_text(r.sequence);
    }
    if (r.at) doc["at"] = point_json(*r.at);
  }
  emit_json(opt, doc, out);
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto ctx = minimal_polynomial(opt.n);
  const auto slope = parse_slope(ctx, opt.slope);
  const auto report = verify_periodic(opt.n, slope, opt.samples > 0 ? opt.samples : 5, opt.seed, opt.max_crossings, opt.threads);
  ordered_json doc{{"n", opt.n}, {"slope", slope.text()}, {"all_closed", report.all_closed},
                   {"pattern_classes", report.pattern_classes}, {"resampled", report.resampled},
                   {"samples", ordered_json::array()}};
  for (const auto& sm : report.samples)
    doc["samples"].push_back({{"start", point_json(sm.start)},
                              {"result", trace_kind_name(sm.result.kind)},
                              {"crossings", sm.result.crossings}});
  if (!report.all_closed) doc["deviation"] = report.deviation;
  emit_json(opt, doc, out);
  return report.all_closed ? kExitOk : kExitFailed;
}

int cmd_minpoly(const Options& opt, std::ostream& out) {
  const auto ctx = minimal_polynomial(opt.n);
  const auto fmt = format_of(opt, "text");
  if (fmt == "json") {
    ordered_json doc{{"n", opt.n},
                     {"polynomial", ctx->polynomial().to_string()},
                     {"degree", ctx->degree()},
                     {"root", FieldElement::generator(ctx).decimal(opt.precision)}};
    emit_json(opt, doc, out);
  } else if (fmt == "text") {
    emit(opt, ctx->polynomial().to_string() + "\n", out);
  } else {
    throw InputError("minpoly: format must be text or json");
  }
  return kExitOk;
}

int cmd_polys(const Options& opt, std::ostream& out, bool with_lengths) {
  if (opt.k < 0 || opt.k > 200) throw InputError("polys: k must be between 0 and 200");
  const auto fmt = format_of(opt, "text");
  ordered_json doc{{"P", ordered_json::array()}, {"Q", ordered_json::array()}};
  std::ostringstream text;
  for (int k = 0; k <= opt.k; ++k) {
    doc["P"].push_back(p_poly(k).to_string());
    text << "P_" << k << "(x) = " << p_poly(k).to_string() << '\n';
  }
  for (int k = 0; k <= opt.k; ++k) {
    doc["Q"].push_back(sine_ratio_poly(k).to_string());
    text << "Q_" << k << "(x) = " << sine_ratio_poly(k).to_string() << '\n';
  }
  if (with_lengths) {
    doc["n"] = opt.n;
    doc["s"] = ordered_json::array();
    const auto lengths = s_lengths(opt.n);
    for (size_t k = 0; k < lengths.size(); ++k) {
      doc["s"].push_back({{"exact", format_field_element(lengths[k])}, {"decimal", lengths[k].decimal(opt.precision)}});
      text << "s(" << k << ") = " << format_field_element(lengths[k]) << " = " << lengths[k].decimal(opt.precision) << '\n';
    }
  }
  if (fmt == "json")
    emit_json(opt, doc, out);
  else if (fmt == "text")
    emit(opt, text.str(), out);
  else
    throw InputError("polys: format must be text or json");
  return kExitOk;
}

int cmd_project(const Options& opt, std::ostream& out) {
  const Rational angle = parse_rational(opt.angle);
  const auto v = stereo_project(opt.n, angle, static_cast<unsigned>(std::max(opt.precision, 30)));
  ordered_json doc;
  if (v) {
    ScopedPrecision prec(static_cast<unsigned>(std::max(opt.precision, 30)));
    doc = {{"value", to_fixed(*v, 12)}, {"infinite", false}};
  } else {
    doc = {{"value", "inf"}, {"infinite", true}};
  }
  emit_json(opt, doc, out);
  return kExitOk;
}

int cmd_identities(const Options& opt, std::ostream& out) {
  int lo = 5, hi = opt.max_n;
  if (opt.n != 0) lo = hi = opt.n;
  if (hi < lo) throw InputError("identities: empty range");
  ordered_json doc{{"results", ordered_json::array()}};
  bool all = true;
  for (int n = lo; n <= hi; n += 2) {
    require_supported_n(n);
    const auto ctx = minimal_polynomial(n);
    const auto x = FieldElement::generator(ctx);
    const int m = (n - 1) / 2;
    const bool closure = s_lengths(n)[static_cast<size_t>(m)].is_zero();
    const bool p_zero = p_eval(m, x).is_zero();
    const auto v = vertex_values(n);
    bool reciprocal = true;
    for (int i = 2; i <= n - 1; ++i)
      reciprocal = reciprocal &&
                   v[static_cast<size_t>(i)].value() * v[static_cast<size_t>(n + 1 - i)].value() == FieldElement::constant(ctx, 1);
    ScopedPrecision prec(60);
    BigFloat worst = 0;
    for (int i = 2; i <= n - 1; ++i) worst = std::max(worst, BigFloat(abs(tan_identity_lhs(n, i, 60) - tan_identity_rhs(n, i, 60))));
    const bool tan_ok = worst < BigFloat("1e-12");
    bool aspect = true;
    const auto s = build_staircase(n);
    for (Axis axis : {Axis::horizontal, Axis::vertical}) {
      const auto cyl = cylinder_decomposition(s, axis);
      aspect = aspect && static_cast<int>(cyl.size()) == m;
      for (const auto& c : cyl) aspect = aspect && c.circumference == x * c.height;
    }
    all = all && closure && p_zero && reciprocal && tan_ok && aspect;
    doc["results"].push_back({{"n", n},
                              {"s_m_zero", closure},
                              {"p_m_zero", p_zero},
                              {"reciprocal_symmetry", reciprocal},
                              {"tan_identity_max_error", worst.str(3, std::ios_base::scientific)},
                              {"tan_identity", tan_ok},
                              {"cylinder_aspect", aspect}});
  }
  doc["pass"] = all;
  emit_json(opt, doc, out);
  return all ? kExitOk : kExitFailed;
}

int cmd_table1(const Options& opt, std::ostream& out) {
  if (opt.max_n < 5) throw InputError("table1: max-n must be at least 5");
  require_supported_n(opt.max_n % 2 == 1 ? opt.max_n : opt.max_n - 1);
  const auto fmt = format_of(opt, "text");
  ordered_json doc{{"rows", ordered_json::array()}};
  std::ostringstream text;
  text << "n   slopes >= 1\n";
  for (int n = 5; n <= opt.max_n; n += 2) {
    const auto slopes = diagonal_slopes(build_staircase(n));
    ordered_json row{{"n", n}, {"slopes", ordered_json::array()}, {"exact", ordered_json::array()}};
    text << n << (n < 10 ? "   " : "  ");
    for (size_t i = 0; i < slopes.size(); ++i) {
      row["slopes"].push_back(slopes[i].fixed(4));
      row["exact"].push_back(format_field_element(slopes[i]));
      text << (i ? ", " : "") << slopes[i].fixed(4);
    }
    text << '\n';
    doc["rows"].push_back(row);
  }
  if (fmt == "json")
    emit_json(opt, doc, out);
  else if (fmt == "text")
    emit(opt, text.str(), out);
  else
    throw InputError("table1: format must be text or json");
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Periodic directions on staircase translation surfaces of odd regular polygons", "stairflow"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision", opt.precision, "Significant digits of decimal output (default 50 or STAIRCASE_PRECISION)");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", opt.output, "Write the result to this file instead of stdout");
    sub->add_option("--seed", opt.seed, "Seed for sampled start points");
    sub->add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 256));
  };
  auto add_n = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--n", opt.n, "Odd number of polygon sides, 5 to 49");
    if (required) o->required();
  };

  auto* slopes = app.add_subcommand("slopes", "Enumerate the sigma tree of periodic directions");
  add_n(slopes, true);
  slopes->add_option("--depth", opt.depth, "Word length, at most 8")->check(CLI::Range(0, kMaxTreeDepth));
  add_common(slopes);

  auto* classify = app.add_subcommand("classify", "Sector of a slope and its renormalization");
  add_n(classify, true);
  classify->add_option("--slope", opt.slope, "Slope in field text form, or inf")->required();
  add_common(classify);

  auto* equiv = app.add_subcommand("equiv", "Compare the hyperbolic and sector trees word by word");
  add_n(equiv, true);
  equiv->add_option("--depth", opt.depth, "Word length, 1 to 6")->check(CLI::Range(1, kMaxEquivalenceDepth));
  equiv->add_option("--mode", opt.mode, "literal or operator")->check(CLI::IsMember({"literal", "operator"}));
  add_common(equiv);

  auto* stair = app.add_subcommand("staircase", "Staircase surface geometry");
  add_n(stair, true);
  stair->add_option("--svg", opt.svg, "Write an SVG drawing to this path");
  stair->add_flag("--diagonals", opt.diagonals, "Draw and label rectangle diagonals in the SVG");
  stair->add_flag("--json", opt.json, "JSON output (the default)");
  add_common(stair);

  auto* trace = app.add_subcommand("trace", "Trace a straight-line flow on the staircase");
  add_n(trace, true);
  trace->add_option("--slope", opt.slope, "Slope in field text form, or inf")->required();
  trace->add_option("--start", opt.start, "Start point as x,y")->required();
  trace->add_option("--max-crossings", opt.max_crossings, "Give up after this many gluings");
  trace->add_flag("--numeric", opt.numeric, "Use the floating-point tracer");
  trace->add_option("--tol", opt.tol, "Tolerance of the floating-point tracer");
  add_common(trace);

  auto* verify = app.add_subcommand("verify", "Trace a slope from several seeded start points");
  add_n(verify, true);
  verify->add_option("--slope", opt.slope, "Slope in field text form, or inf")->required();
  verify->add_option("--samples", opt.samples, "Number of start points")->check(CLI::Range(1, 10000));
  verify->add_option("--max-crossings", opt.max_crossings, "Give up after this many gluings");
  add_common(verify);

  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of 2cos(pi/n)");
  add_n(minpoly, true);
  add_common(minpoly);

  auto* polys = app.add_subcommand("polys", "Polynomials P_k and Q_k, and the side lengths s(k) for --n");
  polys->add_option("--k", opt.k, "Highest index");
  auto* polys_n = polys->add_option("--n", opt.n, "Also list s(k) for this n");
  add_common(polys);

  auto* project = app.add_subcommand("project", "Stereographic projection of a boundary point");
  add_n(project, true);
  project->add_option("--angle", opt.angle, "Angle as a rational multiple of pi, in (-1, 1]")->required();
  add_common(project);

  auto* identities = app.add_subcommand("identities", "Check the appendix identities and cylinder aspect ratios");
  int identities_n = 0;
  identities->add_option("--n", identities_n, "Check a single n");
  int identities_max_n = 25;
  identities->add_option("--max-n", identities_max_n, "Check every odd n from 5 to this value");
  add_common(identities);

  auto* table1 = app.add_subcommand("table1", "Slopes of diagonals >= 1 for odd n up to --max-n");
  table1->add_option("--max-n", opt.max_n, "Largest n");
  add_common(table1);

  try {
    opt.precision = default_precision();
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (opt.precision < 10 || opt.precision > 10000) throw InputError("precision must be between 10 and 10000 digits");
    if (slopes->parsed()) return cmd_slopes(opt, out);
    if (classify->parsed()) return cmd_classify(opt, out);
    if (equiv->parsed()) return cmd_equiv(opt, out);
    if (stair->parsed()) return cmd_staircase(opt, out);
    if (trace->parsed()) return cmd_trace(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (minpoly->parsed()) return cmd_minpoly(opt, out);
    if (polys->parsed()) return cmd_polys(opt, out, polys_n->count() > 0);
    if (project->parsed()) return cmd_project(opt, out);
    if (identities->parsed()) {
      opt.n = identities_n;
      opt.max_n = identities_max_n;
      return cmd_identities(opt, out);
    }
    if (table1->parsed()) return cmd_table1(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitInput;
}

}  // namespace stairflow
