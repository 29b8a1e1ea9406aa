#include "curvebody/speccase.hpp"

#include <stdexcept>
#include <string>

namespace curvebody {

CaseCoefficients case_coefficients(int case_id, SpinLabel ell) {
  if (case_id < 1 || case_id > 8)
    throw std::invalid_argument("case_id must be in 1..8");
  const bool half_integer = (ell.two_ell % 2) != 0;
  const double l = 0.5 * ell.two_ell;
  if (ell.two_ell < 0) throw std::invalid_argument("ell must be nonnegative");

  CaseCoefficients out;
  out.case_id = case_id;
  out.ell = ell;
  out.equal_masses_required = case_id >= 3;

  switch (case_id) {
    case 1:
    case 2:
      if (half_integer)
        throw std::invalid_argument("cases 1 and 2 take integer ell");
      out.a = l * (l + 1.0) / 8.0;
      out.b = l * (l + 1.0) / 4.0;
      out.c = out.a;
      break;
    case 3:
    case 4:
    case 5:
    case 6: {
      if (!half_integer)
        throw std::invalid_argument("cases 3 through 6 take half-integer ell");
      const double lo = (l * l - 0.25) / 8.0;
      const double hi = (l * l + 2.0 * l + 0.75) / 8.0;
      out.b = (l * l + l + 0.75) / 4.0;
      // Cases 5 and 6 carry the same pair with the endpoints swapped.
      if (case_id <= 4) {
        out.a = lo;
        out.c = hi;
      } else {
        out.a = hi;
        out.c = lo;
      }
      break;
    }
    default:  // 7, 8
      if (half_integer || ell.two_ell < 2)
        throw std::invalid_argument("cases 7 and 8 take integer ell >= 1");
      out.a = l * (l + 1.0) / 8.0;
      out.b = (l * l + l + 2.0) / 4.0;
      out.c = out.a;
      break;
  }
  return out;
}

}  // namespace curvebody
