#include "trigseries/angle.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "trigseries/errors.hpp"

namespace trigseries {

std::string PoleError::describe(const std::string& term, int multiple, double distance) {
  std::string arg;
  if (multiple == 1)
    arg = "x";
  else if (multiple > 0)
    arg = std::to_string(multiple) + "x";
  else
    arg = "x/2^" + std::to_string(-multiple);
  std::ostringstream out;
  out << "pole of " << term << "(" << arg << "): distance " << distance
      << " is inside the pole guard";
  return out.str();
}

double lattice_distance(double arg, double offset, double period) {
  return std::fabs(std::remainder(arg - offset, period));
}

void require_clear_of_pole(double distance, double guard, const char* term, int multiple) {
  if (distance < guard || distance == 0.0) throw PoleError(term, multiple, distance);
}

}  // namespace trigseries
