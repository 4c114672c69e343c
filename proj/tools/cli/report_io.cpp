#include "report_io.hpp"

#include <ostream>
#include <variant>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "trigseries/version.hpp"

namespace trigseries::cli {

namespace {

// Shortest round-trip representation.
std::string num(double v) { return fmt::format("{}", v); }

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string range_str(const verify::IntRange& r) { return fmt::format("{}..{}", r.lo, r.hi); }

std::string input_str(const verify::SampleInput& input) {
  return std::visit(
      [](const auto& in) -> std::string {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, verify::AngleInput>) {
          return "x=" + num(in.x);
        } else if constexpr (std::is_same_v<T, verify::LatticeInput>) {
          return fmt::format("x={};y={}", in.x, in.y);
        } else if constexpr (std::is_same_v<T, verify::IndexInput>) {
          return "";
        } else {
          std::string s = "factors=";
          for (std::size_t i = 0; i < in.factors.size(); ++i)
            s += fmt::format("{}{},{}", i ? "|" : "", in.factors[i].x, in.factors[i].y);
          return s;
        }
      },
      input);
}

std::string value_str(const verify::Value& v) {
  return std::visit(
      [](const auto& val) -> std::string {
        using T = std::decay_t<decltype(val)>;
        if constexpr (std::is_same_v<T, double>)
          return num(val);
        else if constexpr (std::is_same_v<T, BigInt>)
          return val.str();
        else if constexpr (std::is_same_v<T, GaussianInt>)
          return to_string(val);
        else
          return "(" + num(val.cos_part) + ", " + num(val.sin_part) + ")";
      },
      v);
}

Json input_json(const verify::SampleInput& input, Json j) {
  std::visit(
      [&j](const auto& in) {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, verify::AngleInput>) {
          j["x"] = in.x;
        } else if constexpr (std::is_same_v<T, verify::LatticeInput>) {
          j["x"] = in.x;
          j["y"] = in.y;
        } else if constexpr (std::is_same_v<T, verify::FactorInput>) {
          Json list = Json::array();
          for (const Factor& f : in.factors) list.push_back(Json::array({f.x, f.y}));
          j["factors"] = std::move(list);
        }
      },
      input);
  return j;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  return std::nullopt;
}

std::string compact(const verify::Sample& sample) {
  const std::string in = input_str(sample.input);
  return fmt::format("n={}{}{}", sample.n, in.empty() ? "" : ";", in);
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

Json to_json(const verify::Sample& sample) {
  Json j;
  j["n"] = sample.n;
  return input_json(sample.input, std::move(j));
}

Json to_json(const verify::Value& value) {
  return std::visit(
      [](const auto& val) -> Json {
        using T = std::decay_t<decltype(val)>;
        if constexpr (std::is_same_v<T, double>) {
          return val;
        } else if constexpr (std::is_same_v<T, BigInt>) {
          return val.str();
        } else if constexpr (std::is_same_v<T, GaussianInt>) {
          Json j;
          j["re"] = val.re.str();
          j["im"] = val.im.str();
          return j;
        } else {
          Json j;
          j["cos_part"] = val.cos_part;
          j["sin_part"] = val.sin_part;
          return j;
        }
      },
      value);
}

Json to_json(const ExtendedRational& value) {
  Json j;
  if (value.is_infinite()) {
    j["infinite"] = true;
  } else {
    j["num"] = value.num().str();
    j["den"] = value.den().str();
  }
  return j;
}

Json to_json(const verify::IdentityReport& report) {
  const verify::SamplePlan& plan = report.plan;
  Json j;
  j["theorem"] = std::string(verify::name(plan.theorem));
  j["n_range"] = Json::array({plan.n_range.lo, plan.n_range.hi});
  j["samples"] = plan.samples_per_n;
  j["seed"] = plan.seed;
  j["tolerance"] = plan.tolerance;
  j["pole_guard"] = plan.pole_guard;
  j["evaluated"] = report.evaluated;
  j["skipped_near_pole"] = report.skipped_near_pole;
  j["max_rel_err"] = report.max_rel_err;
  if (report.worst_case) {
    Json w = to_json(report.worst_case->sample);
    w["rel_err"] = report.worst_case->rel_err;
    j["worst_case"] = std::move(w);
  } else {
    j["worst_case"] = nullptr;
  }
  Json failures = Json::array();
  for (const verify::Failure& f : report.failures) {
    Json fj;
    fj["input"] = to_json(f.sample);
    fj["lhs"] = to_json(f.lhs);
    fj["rhs"] = to_json(f.rhs);
    fj["rel_err"] = f.rel_err;
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  j["pass"] = report.pass;
  j["vacuous"] = report.vacuous;
  j["prng"] = report.prng;
  j["version"] = kVersion;
  return j;
}

void write_report(const verify::IdentityReport& report, OutputFormat format, std::ostream& out) {
  const verify::SamplePlan& plan = report.plan;
  const std::string worst = report.worst_case ? compact(report.worst_case->sample) : "";
  switch (format) {
    case OutputFormat::json:
      out << to_json(report).dump(2) << '\n';
      return;
    case OutputFormat::csv:
      out << "theorem,n_range,samples,seed,tolerance,pole_guard,evaluated,skipped_near_pole,"
             "max_rel_err,worst_case,failures,pass,vacuous,prng,version\n";
      out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                         verify::name(plan.theorem), range_str(plan.n_range), plan.samples_per_n,
                         plan.seed, num(plan.tolerance), num(plan.pole_guard), report.evaluated,
                         report.skipped_near_pole, num(report.max_rel_err), csv_field(worst),
                         report.failure_count, bool_str(report.pass), bool_str(report.vacuous),
                         csv_field(report.prng), kVersion);
      return;
    case OutputFormat::text:
      break;
  }
  fmt::print(out, "theorem            {}\n", verify::name(plan.theorem));
  fmt::print(out, "n range            {}\n", range_str(plan.n_range));
  fmt::print(out, "samples per n      {}\n", plan.samples_per_n);
  fmt::print(out, "seed               {} ({})\n", plan.seed, report.prng);
  fmt::print(out, "tolerance          {}\n", num(plan.tolerance));
  fmt::print(out, "pole guard         {}\n", num(plan.pole_guard));
  fmt::print(out, "evaluated          {}\n", report.evaluated);
  fmt::print(out, "skipped near pole  {}\n", report.skipped_near_pole);
  fmt::print(out, "max rel err        {}\n", num(report.max_rel_err));
  fmt::print(out, "worst case         {}\n", worst.empty() ? "-" : worst);
  fmt::print(out, "failures           {}\n", report.failure_count);
  for (const verify::Failure& f : report.failures)
    fmt::print(out, "  {}  lhs={} rhs={} rel_err={}\n", compact(f.sample), value_str(f.lhs),
               value_str(f.rhs), num(f.rel_err));
  if (report.vacuous) fmt::print(out, "warning: vacuous pass, no sample was compared\n");
  fmt::print(out, "result             {}\n", report.pass ? "PASS" : "FAIL");
}

void write_table(std::string_view kind, const std::vector<TableRow>& rows, OutputFormat format,
                 std::ostream& out) {
  const bool with_tan = !rows.empty() && rows.front().tan.has_value();
  switch (format) {
    case OutputFormat::json: {
      Json j;
      j["kind"] = std::string(kind);
      Json list = Json::array();
      for (const TableRow& r : rows) {
        Json row;
        row["n"] = r.n;
        row["even"] = r.even.str();
        row["odd"] = r.odd.str();
        if (r.tan) row["tan"] = to_json(*r.tan);
        list.push_back(std::move(row));
      }
      j["rows"] = std::move(list);
      j["version"] = kVersion;
      out << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::csv:
      out << (with_tan ? "n,even,odd,tan\n" : "n,even,odd\n");
      for (const TableRow& r : rows) {
        out << r.n << ',' << r.even.str() << ',' << r.odd.str();
        if (r.tan) out << ',' << r.tan->to_string();
        out << '\n';
      }
      return;
    case OutputFormat::text:
      break;
  }
  if (with_tan)
    fmt::print(out, "{:>5}  {:>24}  {:>24}  {:>6}\n", "n", "even", "odd", "tan");
  else
    fmt::print(out, "{:>5}  {:>24}  {:>24}\n", "n", "even", "odd");
  for (const TableRow& r : rows) {
    if (r.tan)
      fmt::print(out, "{:>5}  {:>24}  {:>24}  {:>6}\n", r.n, r.even.str(), r.odd.str(),
                 r.tan->to_string());
    else
      fmt::print(out, "{:>5}  {:>24}  {:>24}\n", r.n, r.even.str(), r.odd.str());
  }
}

void write_gauss_product(const GaussProductResult& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::json: {
      Json j;
      Json list = Json::array();
      for (const Factor& f : r.factors) list.push_back(Json::array({f.x, f.y}));
      j["factors"] = std::move(list);
      j["exact"] = to_json(verify::Value{r.exact});
      j["float"] = to_json(verify::Value{r.closed});
      j["difference"] = {{"re", r.diff_re}, {"im", r.diff_im}};
      j["modulus"] = r.modulus;
      j["tolerance"] = r.tolerance;
      j["pass"] = r.pass;
      if (!r.notice.empty()) j["notice"] = r.notice;
      j["version"] = kVersion;
      out << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::csv:
      out << "exact_re,exact_im,cos_part,sin_part,diff_re,diff_im,modulus,tolerance,pass\n";
      out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.exact.re.str(), r.exact.im.str(),
                         num(r.closed.cos_part), num(r.closed.sin_part), num(r.diff_re),
                         num(r.diff_im), num(r.modulus), num(r.tolerance), bool_str(r.pass));
      return;
    case OutputFormat::text:
      break;
  }
  if (!r.notice.empty()) fmt::print(out, "notice: {}\n", r.notice);
  fmt::print(out, "exact       ({}, {})\n", r.exact.re.str(), r.exact.im.str());
  fmt::print(out, "float       ({}, {})\n", num(r.closed.cos_part), num(r.closed.sin_part));
  fmt::print(out, "difference  ({}, {})\n", num(r.diff_re), num(r.diff_im));
  fmt::print(out, "modulus     {}\n", num(r.modulus));
  fmt::print(out, "result      {}\n", r.pass ? "PASS" : "FAIL");
}

Json to_json(const bench::BenchRecord& rec) {
  Json j;
  j["theorem"] = std::string(verify::name(rec.theorem));
  j["n"] = rec.n;
  j["input"] = input_json(rec.input, Json::object());
  j["reps"] = rec.reps;
  j["naive_time"] = rec.naive_time;
  j["closed_time"] = rec.closed_time;
  j["speedup"] = rec.speedup;
  j["residual"] = rec.residual;
  j["tolerance"] = rec.tolerance;
  j["residual_ok"] = rec.residual_ok;
  j["below_timer_resolution"] = rec.below_timer_resolution;
  j["naive_samples"] = rec.naive_samples;
  j["closed_samples"] = rec.closed_samples;
  j["version"] = kVersion;
  return j;
}

void write_bench(const bench::BenchRecord& rec, OutputFormat format, std::ostream& out) {
  auto joined = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + num(v[i]);
    return s;
  };
  switch (format) {
    case OutputFormat::json:
      out << to_json(rec).dump(2) << '\n';
      return;
    case OutputFormat::csv:
      out << "theorem,n,input,reps,naive_time,closed_time,speedup,residual,tolerance,"
             "residual_ok,below_timer_resolution,naive_samples,closed_samples\n";
      out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", verify::name(rec.theorem),
                         rec.n, csv_field(input_str(rec.input)), rec.reps, num(rec.naive_time),
                         num(rec.closed_time), num(rec.speedup), num(rec.residual),
                         num(rec.tolerance), bool_str(rec.residual_ok),
                         bool_str(rec.below_timer_resolution), joined(rec.naive_samples),
                         joined(rec.closed_samples));
      return;
    case OutputFormat::text:
      break;
  }
  fmt::print(out, "theorem      {}\n", verify::name(rec.theorem));
  fmt::print(out, "n            {}\n", rec.n);
  const std::string in = input_str(rec.input);
  fmt::print(out, "input        {}\n", in.empty() ? "-" : in);
  fmt::print(out, "reps         {}\n", rec.reps);
  fmt::print(out, "naive time   {} s (median)\n", num(rec.naive_time));
  fmt::print(out, "closed time  {} s (median)\n", num(rec.closed_time));
  fmt::print(out, "speedup      {}\n", num(rec.speedup));
  fmt::print(out, "residual     {} (tolerance {})\n", num(rec.residual), num(rec.tolerance));
  fmt::print(out, "result       {}\n", rec.residual_ok ? "PASS" : "FAIL");
}

}  // namespace trigseries::cli
