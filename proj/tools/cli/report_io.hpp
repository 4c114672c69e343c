#pragma once

// Text, JSON and CSV renderings of verification reports, exact tables,
// Gaussian products and bench records.
//
// JSON documents keep field order; CSV is one header line plus data rows.
// Arbitrary-precision integers are emitted as decimal strings in JSON. An
// infinite ExtendedRational is "inf" in text/CSV and {"infinite": true} in
// JSON.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "trigseries/bench.hpp"
#include "trigseries/closed_form.hpp"
#include "trigseries/exact_core.hpp"
#include "trigseries/verify_engine.hpp"

namespace trigseries::cli {

enum class OutputFormat { text, json, csv };

std::optional<OutputFormat> parse_format(std::string_view text);

using Json = nlohmann::ordered_json;

Json to_json(const verify::Sample& sample);
Json to_json(const verify::Value& value);
Json to_json(const ExtendedRational& value);
Json to_json(const verify::IdentityReport& report);
Json to_json(const bench::BenchRecord& record);

/// "n=3;x=0.5", "n=2;x=2;y=1", "n=3;factors=1,1|2,1".
std::string compact(const verify::Sample& sample);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string_view field);

void write_report(const verify::IdentityReport& report, OutputFormat format, std::ostream& out);

struct TableRow {
  std::uint64_t n = 0;
  BigInt even;
  BigInt odd;
  std::optional<ExtendedRational> tan;  ///< present for the tan-quarter table
};

void write_table(std::string_view kind, const std::vector<TableRow>& rows, OutputFormat format,
                 std::ostream& out);

struct GaussProductResult {
  FactorList factors;
  GaussianInt exact;
  CosSinPair closed;
  double modulus = 1.0;
  double diff_re = 0.0;  ///< closed.cos_part - exact.re
  double diff_im = 0.0;
  double tolerance = 0.0;  ///< absolute: 1e-6 * modulus
  bool pass = false;
  std::string notice;
};

void write_gauss_product(const GaussProductResult& result, OutputFormat format, std::ostream& out);

void write_bench(const bench::BenchRecord& record, OutputFormat format, std::ostream& out);

}  // namespace trigseries::cli
