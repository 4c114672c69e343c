#pragma once

#include <stdexcept>
#include <string>

namespace trigseries {

/// Input outside an operation's mathematical domain, e.g. the origin passed
/// to an argument-dependent evaluator.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result whose magnitude exceeds the double exponent range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An argument landed within the pole guard of a singular term.
///
/// `term()` names the singular function ("tan", "cot", "1-cos") and
/// `multiple()` the integer scale of its argument: k for tan(kx), or -k for
/// a contracted argument x/2^k.
class PoleError : public std::domain_error {
 public:
  PoleError(std::string term, int multiple, double distance)
      : std::domain_error(describe(term, multiple, distance)),
        term_(std::move(term)),
        multiple_(multiple),
        distance_(distance) {}

  const std::string& term() const noexcept { return term_; }
  int multiple() const noexcept { return multiple_; }
  double distance() const noexcept { return distance_; }

 private:
  static std::string describe(const std::string& term, int multiple, double distance);

  std::string term_;
  int multiple_;
  double distance_;
};

/// State that the mathematics says cannot occur.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace trigseries
