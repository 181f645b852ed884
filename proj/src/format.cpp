#include "widthslab/format.hpp"

#include <sstream>

#include "widthslab/errors.hpp"

namespace widthslab {

std::string format_real(const Real& x, int precision) {
  if (precision < 1) throw parameter_error("format_real: precision must be >= 1");
  std::ostringstream os;
  os.precision(precision);
  os << x;
  return os.str();
}

std::string format_linear(const LogValue& v, int precision) {
  auto d = v.linear_double();
  if (!d) return "";
  if (*d == 0) return "0";
  std::ostringstream os;
  os.precision(precision);
  os << *d;
  return os.str();
}

}  // namespace widthslab
