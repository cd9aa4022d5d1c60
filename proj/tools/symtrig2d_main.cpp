// Command-line front end: sample the built-in models or user CSV data, run
// the discrete transforms and interpolants, and emit dense rasters, error
// tables, and self-check reports.  All output is deterministic for a given
// configuration: identical runs produce byte-identical files.

#include <CLI11.hpp>

#include <symtrig2d/symtrig2d.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace st = symtrig2d;

namespace {

using ModelFn = std::function<double(st::Point2)>;

ModelFn pick_model(const std::string& name) {
  if (name == "gaussian") return st::gaussian_model;
  if (name == "ripple") return st::ripple_model;
  throw std::runtime_error("unknown model '" + name + "'");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  st::write_text_file(path, text);
}

// "4..12" (inclusive range) or a single "7"
std::vector<int> parse_ns(const std::string& s) {
  auto dots = s.find("..");
  long lo, hi;
  if (dots == std::string::npos) {
    lo = hi = st::parse_int(s);
  } else {
    lo = st::parse_int(s.substr(0, dots));
    hi = st::parse_int(s.substr(dots + 2));
  }
  if (lo < 1 || hi < lo) throw std::runtime_error("bad N range '" + s + "'");
  std::vector<int> ns;
  for (long n = lo; n <= hi; ++n) ns.push_back(static_cast<int>(n));
  return ns;
}

// Options shared by the data-facing subcommands.  Exponential families use
// the shifted grid (a, b, N, T); cosine families use a variant's node set.
struct FamilyOptions {
  std::string family_name = "exp-anti";
  int variant = 0;
  int n = 0;
  int m = 0;
  double a = 0.0;
  double b = 0.5;
  double t = 1.0;

  void add_to(CLI::App* cmd, bool grid_flags = true) {
    cmd->add_option("--family", family_name, "basis family")
        ->check(CLI::IsMember({"exp-anti", "exp-sym", "cos-anti", "cos-sym"}));
    cmd->add_option("--variant", variant, "cosine transform variant (cosine families only)")
        ->check(CLI::Range(1, 4));
    cmd->add_option("--n", n, "grid density N (exponential families)")
        ->check(CLI::Range(1, 1 << 20));
    cmd->add_option("--m", m, "node parameter M (cosine families)")
        ->check(CLI::Range(1, 1 << 20));
    if (grid_flags) {
      cmd->add_option("--a", a, "grid origin (default 0)");
      cmd->add_option("--b", b, "grid shift in [0, 1] (default 1/2)");
      cmd->add_option("--t", t, "cell side length (default 1)");
    }
  }

  st::Family family() const { return st::family_from_name(family_name); }

  bool exponential() const { return st::is_exponential(family()); }

  void validate() const {
    if (exponential()) {
      if (variant != 0)
        throw std::runtime_error("--variant applies to cosine families only");
      if (n == 0) throw std::runtime_error("--n is required for exponential families");
      if (m != 0) throw std::runtime_error("--m applies to cosine families only");
    } else {
      if (variant == 0)
        throw std::runtime_error("--variant is required for cosine families");
      if (m == 0) throw std::runtime_error("--m is required for cosine families");
      if (n != 0) throw std::runtime_error("--n applies to exponential families only");
    }
  }

  st::GridSpec grid() const { return {a, b, n, t}; }

  st::GridKind kind() const {
    return st::is_antisymmetric(family()) ? st::GridKind::anti : st::GridKind::sym;
  }

  st::CosineVariant cosine_variant() const {
    return st::cosine_variant_from_int(variant);
  }
};

std::vector<st::GridPoint> nodes_of(const FamilyOptions& opt) {
  if (opt.exponential()) return st::make_grid(opt.grid(), opt.kind());
  return st::cosine_nodes(opt.cosine_variant(), opt.m, opt.family());
}

std::vector<st::SampleRow> sampled_rows(const FamilyOptions& opt, const ModelFn& model) {
  std::vector<st::SampleRow> rows;
  for (const auto& p : nodes_of(opt))
    rows.push_back({p.m, p.n, p.at.x, p.at.y, {model(p.at), 0.0}});
  return rows;
}

// Parse a sample CSV and check it lies on the configured node set, in node
// order; returns the values.
std::vector<st::complexd> values_on_grid(const FamilyOptions& opt,
                                         const std::string& csv_text) {
  auto rows = st::parse_sample_csv(csv_text);
  auto nodes = nodes_of(opt);
  if (rows.size() != nodes.size())
    throw std::runtime_error("grid mismatch: expected " + std::to_string(nodes.size()) +
                             " rows, got " + std::to_string(rows.size()));
  std::vector<st::complexd> values;
  values.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& p = nodes[i];
    if (r.m != p.m || r.n != p.n || std::abs(r.x - p.at.x) > 1e-9 ||
        std::abs(r.y - p.at.y) > 1e-9)
      throw std::runtime_error("grid mismatch at row " + std::to_string(i + 1));
    values.push_back(r.value);
  }
  return values;
}

std::vector<double> real_values(const std::vector<st::complexd>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (auto v : values) {
    if (std::abs(v.imag()) > 1e-12)
      throw std::runtime_error("cosine transforms take real samples");
    out.push_back(v.real());
  }
  return out;
}

int cmd_sample(const FamilyOptions& opt, const std::string& model,
               const std::string& output) {
  opt.validate();
  write_output(output, st::render_sample_csv(sampled_rows(opt, pick_model(model))));
  return 0;
}

int cmd_transform(const FamilyOptions& opt, const std::string& input,
                  const std::string& output) {
  opt.validate();
  auto values = values_on_grid(opt, st::read_text_file(input));
  st::AnySpectrum sp;
  if (opt.exponential()) {
    st::SampleSet samples{opt.grid(), opt.kind(), std::move(values)};
    sp = st::is_antisymmetric(opt.family()) ? st::adft_forward(samples)
                                            : st::sdft_forward(samples);
  } else {
    st::CosineSamples samples{opt.family(), opt.cosine_variant(), opt.m,
                              real_values(values)};
    sp = st::is_antisymmetric(opt.family()) ? st::amdct(samples, opt.cosine_variant())
                                            : st::smdct(samples, opt.cosine_variant());
  }
  write_output(output, st::render_spectrum_json(sp));
  return 0;
}

int cmd_synthesize(const std::string& input, const std::string& output) {
  auto any = st::parse_spectrum_json(st::read_text_file(input));
  std::vector<st::SampleRow> rows;
  if (std::holds_alternative<st::Spectrum>(any)) {
    const auto& sp = std::get<st::Spectrum>(any);
    auto back = st::is_antisymmetric(sp.family) ? st::adft_inverse(sp)
                                                : st::sdft_inverse(sp);
    auto nodes = st::make_grid(back.spec, back.kind);
    for (std::size_t i = 0; i < nodes.size(); ++i)
      rows.push_back({nodes[i].m, nodes[i].n, nodes[i].at.x, nodes[i].at.y,
                      back.values[i]});
  } else {
    const auto& sp = std::get<st::CosineSpectrum>(any);
    for (const auto& p : st::cosine_nodes(sp.variant, sp.m_points, sp.family))
      rows.push_back({p.m, p.n, p.at.x, p.at.y,
                      {st::eval_cosine_interpolant(sp, p.at), 0.0}});
  }
  write_output(output, st::render_sample_csv(rows));
  return 0;
}

// Dense evaluation of the selected interpolant on an R x R raster of the
// cell, restricted to x >= y.
int cmd_interpolate(const FamilyOptions& opt, const std::string& model,
                    const std::string& input, int resolution,
                    const std::string& output) {
  opt.validate();
  if (resolution < 2) throw std::runtime_error("--resolution must be at least 2");
  if (model.empty() == input.empty())
    throw std::runtime_error("pass exactly one of --model and --input");

  std::vector<st::complexd> values;
  if (!model.empty()) {
    auto fn = pick_model(model);
    for (const auto& p : nodes_of(opt)) values.push_back({fn(p.at), 0.0});
  } else {
    values = values_on_grid(opt, st::read_text_file(input));
  }

  double origin = opt.exponential() ? opt.a : 0.0;
  double side = opt.exponential() ? opt.t : 1.0;
  std::vector<double> xs(resolution);
  for (int i = 0; i < resolution; ++i)
    xs[i] = origin + side * i / (resolution - 1);

  std::string text(st::kRasterCsvHeader);
  text += '\n';
  auto emit = [&](const auto& evaluator) {
    std::vector<typename std::decay_t<decltype(evaluator)>::value_type> buf;
    for (int j = 0; j < resolution; ++j) {
      evaluator.eval_row(j, buf);
      for (int i = j; i < resolution; ++i) {
        st::complexd v = buf[i];
        text += st::format_double(xs[i]) + ',' + st::format_double(xs[j]) + ',' +
                st::format_double(v.real()) + ',' + st::format_double(v.imag()) + '\n';
      }
    }
  };

  if (opt.exponential()) {
    st::SampleSet samples{opt.grid(), opt.kind(), std::move(values)};
    auto c = st::is_antisymmetric(opt.family()) ? st::interp_anti(samples)
                                                : st::interp_sym(samples);
    emit(st::InterpRowEvaluator(c, xs));
  } else {
    st::CosineSamples samples{opt.family(), opt.cosine_variant(), opt.m,
                              real_values(values)};
    auto sp = st::is_antisymmetric(opt.family())
                  ? st::amdct(samples, opt.cosine_variant())
                  : st::smdct(samples, opt.cosine_variant());
    emit(st::CosineRowEvaluator(sp, xs));
  }
  write_output(output, text);
  return 0;
}

int cmd_error_table(const std::string& model, const std::string& ns_text,
                    int resolution, const std::string& output) {
  st::QuadratureSpec q{resolution, st::QuadratureMode::half_square};
  auto rows = st::error_table(pick_model(model), parse_ns(ns_text), q);
  std::string text(st::kErrorTableCsvHeader);
  text += '\n';
  for (const auto& r : rows)
    text += std::to_string(r.n) + ',' + st::format_double(r.exp_anti) + ',' +
            st::format_double(r.exp_sym) + ',' + st::format_double(r.cos2_anti) + ',' +
            st::format_double(r.cos2_sym) + '\n';
  write_output(output, text);
  return 0;
}

// ---------------------------------------------------------------------------
// verify: the library's invariants, one pass/fail line per check

struct Verifier {
  bool inject_error = false;
  bool all_passed = true;

  void report(const std::string& name, bool ok, double measured, double budget) {
    std::printf("%s %-28s (measured %.3e, budget %.3e)\n", ok ? "PASS" : "FAIL",
                name.c_str(), measured, budget);
    all_passed = all_passed && ok;
  }

  void check(const std::string& name, double measured, double budget) {
    report(name, measured <= budget, measured, budget);
  }
};

double orthogonality_deviation() {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n)
    for (double a : {0.0, -0.7})
      for (double b : {0.0, 0.5})
        for (auto kind : {st::GridKind::anti, st::GridKind::sym}) {
          st::GridSpec spec{a, b, n, 1.0};
          bool anti = kind == st::GridKind::anti;
          for (int k = 0; k < n; ++k)
            for (int l = 0; l <= (anti ? k - 1 : k); ++l)
              for (int k2 = 0; k2 < n; ++k2)
                for (int l2 = 0; l2 <= (anti ? k2 - 1 : k2); ++l2) {
                  auto v = st::check_discrete_orthogonality(spec, kind, {k, l}, {k2, l2});
                  double expected = 0.0;
                  if (k == k2 && l == l2)
                    expected = static_cast<double>(n) * n *
                               (anti ? 1.0 : st::diagonal_weight(k, l));
                  worst = std::max(worst, std::abs(v - expected) /
                                              (static_cast<double>(n) * n));
                }
        }
  return worst;
}

double round_trip_deviation(bool inject_error) {
  std::mt19937 rng(8891);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  double worst = 0.0;
  for (int n : {2, 5, 8}) {
    for (auto kind : {st::GridKind::anti, st::GridKind::sym}) {
      st::GridSpec spec{0.0, 0.5, n, 1.0};
      st::SampleSet samples{spec, kind, {}};
      samples.values.resize(st::grid_size(kind, n));
      for (auto& v : samples.values) v = {d(rng), d(rng)};
      bool anti = kind == st::GridKind::anti;
      auto sp = anti ? st::adft_forward(samples) : st::sdft_forward(samples);
      if (inject_error && n == 5 && anti && !sp.coeffs.empty())
        sp.coeffs.front() += 1e-3;  // negative control: must trip the check
      auto back = anti ? st::adft_inverse(sp) : st::sdft_inverse(sp);
      for (std::size_t i = 0; i < samples.values.size(); ++i)
        worst = std::max(worst, std::abs(back.values[i] - samples.values[i]));
    }
  }
  return worst;
}

double interpolation_cross_path_deviation() {
  double worst = 0.0;
  for (int n : {2, 3, 4, 5}) {
    st::GridSpec spec{0.0, 0.5, n, 1.0};
    for (auto kind : {st::GridKind::anti, st::GridKind::sym}) {
      bool anti = kind == st::GridKind::anti;
      auto samples = st::sample_on_grid(st::gaussian_model, spec, kind);
      auto direct = anti ? st::interp_anti(samples) : st::interp_sym(samples);
      auto via_beta =
          st::beta_to_c(anti ? st::adft_forward(samples) : st::sdft_forward(samples));
      for (auto [k, l] : direct.free_pairs())
        worst = std::max(worst, std::abs(direct.at(k, l) - via_beta.at(k, l)));
      for (const auto& p : st::make_grid(spec, kind)) {
        auto v = st::eval_interpolant(direct, p.at);
        worst = std::max(worst, std::abs(v - st::complexd(st::gaussian_model(p.at))));
      }
    }
  }
  return worst;
}

double trig_dual_representation_deviation() {
  double worst = 0.0;
  for (int n : {4, 5}) {
    st::GridSpec spec{0.0, 0.5, n, 1.0};
    for (auto kind : {st::GridKind::anti, st::GridKind::sym}) {
      bool anti = kind == st::GridKind::anti;
      auto samples = st::sample_on_grid(st::gaussian_model, spec, kind);
      auto tf = st::trig_form(samples);
      auto c = anti ? st::interp_anti(samples) : st::interp_sym(samples);
      auto assembled = st::assemble_trig_form(c);
      for (std::size_t i = 0; i < tf.a.size(); ++i) {
        worst = std::max(worst, std::abs(tf.a[i] - assembled.a[i]));
        worst = std::max(worst, std::abs(tf.b[i] - assembled.b[i]));
        worst = std::max(worst, std::abs(tf.c[i] - assembled.c[i]));
        worst = std::max(worst, std::abs(tf.d[i] - assembled.d[i]));
      }
      for (double x : {0.31, 0.77})
        for (double y : {0.12, 0.56}) {
          if (x < y) continue;
          auto direct = st::eval_interpolant(c, {x, y});
          double real_form = st::eval_trig_form(tf, {x, y});
          worst = std::max(worst, std::abs(direct - st::complexd(real_form)));
        }
    }
  }
  return worst;
}

double cosine_gram_deviation() {
  double worst = 0.0;
  for (int variant = 1; variant <= 4; ++variant) {
    auto v = st::cosine_variant_from_int(variant);
    bool node_d = variant == 1 || variant == 3;
    bool freq_d = variant == 1 || variant == 2;
    for (auto family : {st::Family::cos_anti, st::Family::cos_sym}) {
      bool anti = st::is_antisymmetric(family);
      for (int m = 2; m <= 5; ++m) {
        auto nodes = st::cosine_nodes(v, m, family);
        st::CosineSpectrum shape{family, v, m, {}};
        auto pairs = shape.dominant_pairs();
        for (auto p : pairs)
          for (auto q : pairs) {
            auto lp = shape.label(p.k, p.l);
            auto lq = shape.label(q.k, q.l);
            double acc = 0.0;
            for (const auto& node : nodes) {
              double w = 1.0;
              if (node_d)
                w *= st::cos_edge_weight(node.m, m) * st::cos_edge_weight(node.n, m);
              if (!anti) w /= st::diagonal_weight(node.m, node.n);
              double bp = anti ? st::eval_cos_anti_real(lp, node.at)
                               : st::eval_cos_sym_real(lp, node.at);
              double bq = anti ? st::eval_cos_anti_real(lq, node.at)
                               : st::eval_cos_sym_real(lq, node.at);
              acc += w * bp * bq;
            }
            double expected = 0.0;
            if (p.k == q.k && p.l == q.l) {
              expected = m * m / 4.0;
              if (freq_d)
                expected /= st::cos_edge_weight(p.k, m) * st::cos_edge_weight(p.l, m);
              if (!anti) expected *= st::diagonal_weight(p.k, p.l);
            }
            worst = std::max(worst, std::abs(acc - expected) /
                                        (static_cast<double>(m) * m));
          }
      }
    }
  }
  return worst;
}

double cosine_node_coincidence_deviation() {
  std::mt19937 rng(5517);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  double worst = 0.0;
  for (int variant = 1; variant <= 4; ++variant) {
    auto v = st::cosine_variant_from_int(variant);
    for (auto family : {st::Family::cos_anti, st::Family::cos_sym}) {
      int m = 4;
      auto nodes = st::cosine_nodes(v, m, family);
      st::CosineSamples samples{family, v, m, {}};
      for (std::size_t i = 0; i < nodes.size(); ++i) samples.values.push_back(d(rng));
      auto sp = st::is_antisymmetric(family) ? st::amdct(samples, v)
                                             : st::smdct(samples, v);
      for (std::size_t i = 0; i < nodes.size(); ++i)
        worst = std::max(worst, std::abs(st::eval_cosine_interpolant(sp, nodes[i].at) -
                                         samples.values[i]));
    }
  }
  return worst;
}

double cosine_dual_path_deviation() {
  double worst = 0.0;
  for (int variant = 1; variant <= 4; ++variant) {
    auto v = st::cosine_variant_from_int(variant);
    for (auto family : {st::Family::cos_anti, st::Family::cos_sym}) {
      for (int m : {2, 3}) {
        auto samples = st::sample_cosine_nodes(st::gaussian_model, v, m, family);
        auto direct = st::is_antisymmetric(family) ? st::amdct(samples, v)
                                                   : st::smdct(samples, v);
        auto derived = st::derive_from_trig(st::gaussian_model, v, family, m);
        for (std::size_t i = 0; i < direct.coeffs.size(); ++i)
          worst = std::max(worst, std::abs(direct.coeffs[i] - derived.coeffs[i]));
      }
    }
  }
  return worst;
}

// residuals normalized by their own (1 + |eigenvalue|) budgets: <= 1 passes
double laplace_normalized_residual() {
  const st::Point2 pts[] = {{0.41, 0.18}, {0.77, 0.52}, {0.66, 0.09}};
  double worst = 0.0;
  for (auto family : {st::Family::exp_anti, st::Family::exp_sym, st::Family::cos_anti,
                      st::Family::cos_sym}) {
    for (int k = 1; k <= 3; ++k)
      for (int l = 0; l < k; ++l) {
        auto p = st::freq_pair(k, l);
        double budget = 1e-4 * (1.0 + std::abs(st::laplace_eigenvalue(family, p)));
        for (auto pt : pts)
          worst = std::max(worst, st::laplace_residual(family, p, pt, 1e-3) / budget);
      }
  }
  return worst;
}

// numeric continuous norm of the edge-index cosine functions: the integrals
// carry 1/(h_k h_l) edge factors, G_p / (4 h_k h_l) in total
double cosine_norm_deviation() {
  st::QuadratureSpec q{300, st::QuadratureMode::half_square};
  double worst = 0.0;
  for (auto [k, l] : {st::IndexPair{2, 0}, st::IndexPair{0, 0}, st::IndexPair{2, 1},
                      st::IndexPair{2, 2}}) {
    auto p = st::freq_pair(k, l);
    double numeric = st::integrate_fundamental(
        [&](st::Point2 pt) {
          double v = st::eval_cos_sym_real(p, pt);
          return v * v;
        },
        q);
    double expected = st::diagonal_weight(k, l) /
                      (4.0 * st::zero_half_weight(k) * st::zero_half_weight(l));
    worst = std::max(worst, std::abs(numeric - expected));
  }
  return worst;
}

int cmd_verify(bool inject_error) {
  Verifier v;
  v.inject_error = inject_error;
  v.check("discrete-orthogonality", orthogonality_deviation(), 1e-9);
  v.check("transform-round-trip", round_trip_deviation(inject_error), 1e-10);
  v.check("interpolation-cross-path", interpolation_cross_path_deviation(), 1e-9);
  v.check("trig-dual-representation", trig_dual_representation_deviation(), 1e-9);
  v.check("cosine-gram-diagonality", cosine_gram_deviation(), 1e-9);
  v.check("cosine-node-coincidence", cosine_node_coincidence_deviation(), 1e-9);
  v.check("cosine-dual-path", cosine_dual_path_deviation(), 1e-9);
  v.check("laplace-residuals", laplace_normalized_residual(), 1.0);
  v.check("cosine-edge-norms", cosine_norm_deviation(), 5e-3);
  std::printf("verify: %s\n", v.all_passed ? "all checks passed" : "FAILURES detected");
  return v.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D symmetric/antisymmetric trigonometric transforms and interpolants"};
  app.require_subcommand(1);

  FamilyOptions sample_opt, transform_opt, interp_opt;
  std::string model = "gaussian", input, output, ns_text = "4..12";
  int resolution = 1000;
  bool inject_error = false;

  auto* sample = app.add_subcommand("sample", "sample a model on a node set");
  sample_opt.add_to(sample);
  sample->add_option("--model", model, "gaussian or ripple")
      ->check(CLI::IsMember({"gaussian", "ripple"}));
  sample->add_option("--output", output, "output CSV path (default stdout)");

  auto* transform = app.add_subcommand("transform", "sample CSV -> spectrum JSON");
  transform_opt.add_to(transform);
  transform->add_option("--input", input, "sample CSV path")->required();
  transform->add_option("--output", output, "output JSON path (default stdout)");

  auto* synthesize = app.add_subcommand("synthesize", "spectrum JSON -> sample CSV");
  synthesize->add_option("--input", input, "spectrum JSON path")->required();
  synthesize->add_option("--output", output, "output CSV path (default stdout)");

  auto* interpolate =
      app.add_subcommand("interpolate", "dense raster of an interpolant (x >= y)");
  interp_opt.add_to(interpolate);
  std::string interp_model;
  interpolate->add_option("--model", interp_model, "gaussian or ripple")
      ->check(CLI::IsMember({"gaussian", "ripple"}));
  interpolate->add_option("--input", input, "sample CSV path (alternative to --model)");
  interpolate->add_option("--resolution", resolution, "raster points per axis");
  interpolate->add_option("--output", output, "output CSV path (default stdout)");

  auto* table = app.add_subcommand("error-table", "interpolation error table");
  table->add_option("--model", model, "gaussian or ripple")
      ->check(CLI::IsMember({"gaussian", "ripple"}));
  table->add_option("--ns", ns_text, "N range, e.g. 4..12 or a single N");
  table->add_option("--resolution", resolution, "quadrature resolution (default 1000)");
  table->add_option("--output", output, "output CSV path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the library self-checks");
  verify->add_flag("--inject-error", inject_error,
                   "perturb one coefficient to demonstrate failure detection");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) return cmd_sample(sample_opt, model, output);
    if (transform->parsed()) return cmd_transform(transform_opt, input, output);
    if (synthesize->parsed()) return cmd_synthesize(input, output);
    if (interpolate->parsed())
      return cmd_interpolate(interp_opt, interp_model, input, resolution, output);
    if (table->parsed()) return cmd_error_table(model, ns_text, resolution, output);
    if (verify->parsed()) return cmd_verify(inject_error);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
