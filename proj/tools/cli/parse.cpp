#include <charconv>
#include <cmath>
#include <string>

#include "cli.hpp"
#include "trigseries/angle.hpp"

namespace trigseries::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_integer(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

double parse_decimal(std::string_view text) {
  text = trim(text);
  const std::string owned(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw UsageError("malformed angle: '" + owned + "'");
  }
  if (used != owned.size() || !std::isfinite(value))
    throw UsageError("malformed angle: '" + owned + "'");
  return value;
}

}  // namespace

verify::IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_integer<int>(text, "range");
    return {n, n};
  }
  verify::IntRange r{parse_integer<int>(text.substr(0, dots), "range"),
                     parse_integer<int>(text.substr(dots + 2), "range")};
  if (r.lo > r.hi) throw UsageError("empty range: '" + std::string(text) + "'");
  return r;
}

double parse_angle(std::string_view text) {
  text = trim(text);
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) return parse_decimal(text);

  std::string_view coeff = trim(text.substr(0, pi_at));
  std::string_view rest = trim(text.substr(pi_at + 2));
  if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
  double scale = 1.0;
  if (coeff == "-")
    scale = -1.0;
  else if (!coeff.empty() && coeff != "+")
    scale = parse_decimal(coeff);
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw UsageError("malformed angle: '" + std::string(text) + "'");
    divisor = parse_decimal(rest.substr(1));
    if (divisor == 0.0) throw UsageError("angle divides by zero: '" + std::string(text) + "'");
  }
  return scale * kPi / divisor;
}

Factor parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw UsageError("malformed factor '" + std::string(text) + "', expected x,y");
  return {parse_integer<std::int64_t>(text.substr(0, comma), "factor"),
          parse_integer<std::int64_t>(text.substr(comma + 1), "factor")};
}

FactorList parse_factors(std::string_view text) {
  FactorList factors;
  if (trim(text).empty()) return factors;
  while (true) {
    const auto semi = text.find(';');
    const Factor f = parse_point(text.substr(0, semi));
    if (f.x == 0 && f.y == 0) throw UsageError("factor (0, 0) is not allowed");
    factors.push_back(f);
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return factors;
}

}  // namespace trigseries::cli
