#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <CLI11.hpp>

#include "report_io.hpp"
#include "trigseries/bench.hpp"
#include "trigseries/closed_form.hpp"
#include "trigseries/errors.hpp"
#include "trigseries/version.hpp"

namespace trigseries::cli {

namespace {

constexpr double kProductTolerance = 1e-6;

struct VerifyOptions {
  std::string theorem;
  std::string n_range = "1..16";
  int samples = 100;
  std::uint64_t seed = 42;
  double tol = verify::kDefaultTolerance;
  double pole_guard = kDefaultPoleGuard;
  std::string interval = "0..2pi";
  unsigned threads = 1;
  std::string format = "text";
};

struct TableOptions {
  std::string kind = "tan-quarter";
  std::int64_t max_n = 16;
  std::string format = "text";
};

struct GaussOptions {
  std::string factors;
  std::string format = "text";
};

struct BenchOptions {
  std::string theorem = "t2_3";
  int n = 1000;
  std::string x = "1.0";
  std::string point = "2,1";
  std::string factors;
  std::uint64_t seed = 42;
  int reps = 5;
  double tol = verify::kDefaultTolerance;
  double pole_guard = kDefaultPoleGuard;
  std::string format = "text";
};

OutputFormat require_format(const std::string& text) {
  if (auto f = parse_format(text)) return *f;
  throw UsageError("unknown format '" + text + "' (expected text, json or csv)");
}

verify::TheoremId require_theorem(const std::string& text) {
  if (auto id = verify::parse_theorem(text)) return *id;
  std::string known;
  for (verify::TheoremId id : verify::all_theorems())
    known += (known.empty() ? "" : ", ") + std::string(verify::name(id));
  throw UsageError("unknown theorem '" + text + "' (expected one of " + known + ")");
}

verify::AngleInterval parse_interval(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("malformed interval '" + text + "', expected lo..hi");
  verify::AngleInterval iv{parse_angle(std::string_view(text).substr(0, dots)),
                           parse_angle(std::string_view(text).substr(dots + 2))};
  if (!(iv.lo < iv.hi)) throw UsageError("empty interval '" + text + "'");
  return iv;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  verify::SamplePlan plan;
  plan.theorem = require_theorem(o.theorem);
  plan.n_range = parse_range(o.n_range);
  plan.samples_per_n = o.samples;
  plan.seed = o.seed;
  plan.tolerance = o.tol;
  plan.pole_guard = o.pole_guard;
  plan.angle_interval = parse_interval(o.interval);
  const OutputFormat format = require_format(o.format);
  try {
    verify::validate(plan);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const verify::IdentityReport report = verify::sweep(plan, o.threads);
  write_report(report, format, out);
  if (report.vacuous && format != OutputFormat::text)
    err << "warning: vacuous pass, no sample was compared\n";
  return report.pass ? kExitPass : kExitFailure;
}

int cmd_table(const TableOptions& o, std::ostream& out) {
  if (o.kind != "tan-quarter" && o.kind != "alt-binom")
    throw UsageError("unknown table kind '" + o.kind + "' (expected tan-quarter or alt-binom)");
  if (o.max_n < 0) throw UsageError("--max-n must be >= 0");
  const OutputFormat format = require_format(o.format);
  std::vector<TableRow> rows;
  for (std::uint64_t n = 0; n <= static_cast<std::uint64_t>(o.max_n); ++n) {
    TableRow row{n, alt_binom_even(n), alt_binom_odd(n), std::nullopt};
    if (o.kind == "tan-quarter") row.tan = ExtendedRational::make(row.odd, row.even);
    rows.push_back(std::move(row));
  }
  write_table(o.kind, rows, format, out);
  return kExitPass;
}

int cmd_gauss_product(const GaussOptions& o, std::ostream& out, std::ostream& err) {
  const OutputFormat format = require_format(o.format);
  GaussProductResult r;
  r.factors = parse_factors(o.factors);
  const bool on_axis = std::any_of(r.factors.begin(), r.factors.end(),
                                   [](const Factor& f) { return f.x == 0; });
  if (on_axis) {
    r.notice = "factor with x = 0: arctan(y/x) is undefined, using the principal argument";
    if (format != OutputFormat::text) err << "notice: " << r.notice << '\n';
  }
  r.exact = gauss_product(r.factors);
  r.closed = gauss_product_closed(r.factors, on_axis ? AxisPolicy::principal : AxisPolicy::reject);
  r.modulus = product_modulus(r.factors);
  r.diff_re = r.closed.cos_part - r.exact.re.convert_to<double>();
  r.diff_im = r.closed.sin_part - r.exact.im.convert_to<double>();
  r.tolerance = kProductTolerance * r.modulus;
  r.pass = std::fabs(r.diff_re) <= r.tolerance && std::fabs(r.diff_im) <= r.tolerance;
  write_gauss_product(r, format, out);
  return r.pass ? kExitPass : kExitFailure;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  const verify::TheoremId theorem = require_theorem(o.theorem);
  const OutputFormat format = require_format(o.format);
  if (o.reps < bench::kMinReps)
    throw UsageError("--reps must be >= " + std::to_string(bench::kMinReps));

  int n = o.n;
  verify::SampleInput input;
  switch (verify::domain_of(theorem)) {
    case verify::Domain::angular:
      input = verify::AngleInput{parse_angle(o.x)};
      break;
    case verify::Domain::lattice: {
      const Factor p = parse_point(o.point);
      if (p.x == 0 && p.y == 0) throw UsageError("--point must not be the origin");
      input = verify::LatticeInput{p.x, p.y};
      break;
    }
    case verify::Domain::index:
      input = verify::IndexInput{};
      break;
    case verify::Domain::factors:
      if (!o.factors.empty()) {
        verify::FactorInput f{parse_factors(o.factors)};
        n = static_cast<int>(f.factors.size());
        input = std::move(f);
      } else {
        verify::SamplePlan plan;
        plan.theorem = theorem;
        plan.n_range = {n, n};
        plan.samples_per_n = 1;
        plan.seed = o.seed;
        if (n < 0) throw UsageError("--n must be >= 0");
        input = verify::draw_samples_for_n(plan, n).front().input;
      }
      break;
  }

  bench::BenchRecord rec;
  try {
    rec = bench::time_pair(theorem, n, input, o.reps, o.pole_guard, o.tol);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (rec.below_timer_resolution)
    err << "warning: a median timing is below 100 clock ticks; speedup is imprecise\n";
  write_bench(rec, format, out);
  return rec.residual_ok ? kExitPass : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and verify finite trigonometric series identities", "trigseries"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  VerifyOptions vo;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Sweep one identity: direct sum vs closed form");
  verify_cmd->add_option("--theorem", vo.theorem, "Identity id, e.g. t2_3")->required();
  verify_cmd->add_option("--n", vo.n_range, "Inclusive range a..b")->capture_default_str();
  verify_cmd->add_option("--samples", vo.samples, "Samples per n")->capture_default_str();
  verify_cmd->add_option("--seed", vo.seed, "PRNG seed")->capture_default_str();
  verify_cmd->add_option("--tol", vo.tol, "Relative tolerance")->capture_default_str();
  verify_cmd->add_option("--pole-guard", vo.pole_guard, "Pole guard in radians")->capture_default_str();
  verify_cmd->add_option("--interval", vo.interval, "Angle interval lo..hi")->capture_default_str();
  verify_cmd->add_option("--threads", vo.threads, "Worker threads")->capture_default_str();
  verify_cmd->add_option("--format", vo.format, "text|json|csv")->capture_default_str();

  TableOptions to;
  CLI::App* table_cmd = app.add_subcommand("table", "Alternating binomial sums and tan(n pi/4)");
  table_cmd->add_option("--kind", to.kind, "tan-quarter|alt-binom")->capture_default_str();
  table_cmd->add_option("--max-n", to.max_n, "Last row")->capture_default_str();
  table_cmd->add_option("--format", to.format, "text|json|csv")->capture_default_str();

  GaussOptions go;
  CLI::App* gauss_cmd = app.add_subcommand("gauss-product", "Exact and floating Gaussian product");
  gauss_cmd->add_option("--factors", go.factors, "x1,y1;x2,y2;...")->required();
  gauss_cmd->add_option("--format", go.format, "text|json|csv")->capture_default_str();

  BenchOptions bo;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the direct sum against the closed form");
  bench_cmd->add_option("--theorem", bo.theorem, "Identity id")->capture_default_str();
  bench_cmd->add_option("--n", bo.n, "Series length")->capture_default_str();
  bench_cmd->add_option("--x", bo.x, "Angle (radians or pi/k)")->capture_default_str();
  bench_cmd->add_option("--point", bo.point, "Integer point x,y")->capture_default_str();
  bench_cmd->add_option("--factors", bo.factors, "x1,y1;x2,y2;... (t2_2)");
  bench_cmd->add_option("--seed", bo.seed, "Seed for drawn t2_2 factors")->capture_default_str();
  bench_cmd->add_option("--reps", bo.reps, "Repetitions, >= 3")->capture_default_str();
  bench_cmd->add_option("--tol", bo.tol, "Residual tolerance")->capture_default_str();
  bench_cmd->add_option("--pole-guard", bo.pole_guard, "Pole guard in radians")->capture_default_str();
  bench_cmd->add_option("--format", bo.format, "text|json|csv")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(vo, out, err);
    if (*table_cmd) return cmd_table(to, out);
    if (*gauss_cmd) return cmd_gauss_product(go, out, err);
    if (*bench_cmd) return cmd_bench(bo, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trigseries::cli
