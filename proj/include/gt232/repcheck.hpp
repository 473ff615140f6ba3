#ifndef GT232_REPCHECK_HPP
#define GT232_REPCHECK_HPP

#include <string>
#include <vector>

#include "gt232/numfield.hpp"

namespace gt232 {

/// The pair of order-3 matrices over Q[t]/(t^6 - 3t^3 + 1) whose product
/// exhibits the free subgroup witness for the catalogue row 5 group.
struct RepMatrices {
  Mat3 x;
  Mat3 y;
};
RepMatrices rep_matrices();

struct CheckLine {
  std::string name;
  bool pass = false;
};

struct CheckResult {
  bool pass = false;
  std::vector<CheckLine> lines;
};

/// x^3 = y^3 = x y x y^2 x y^2 x^2 y x y x^2 y x^2 y^2 = identity.
CheckResult verify_relators();

/// m = x y has eigenvalues +1, -1, -1 with one-dimensional (-1)-eigenspace:
/// rank(m-Id) = rank(m+Id) = 2, m ev1 = ev1, m ev2 = -ev2, tr m = -1,
/// det m = 1.
CheckResult verify_eigenstructure();

/// The eigenvector plane P = ker q of m is not invariant under n = y x:
/// q n ev1 = t^4 + t != 0 and q n ev2 = t^4 - t != 0 (with q ev1 = q ev2 = 0).
CheckResult verify_nonelementary_witness();

}  // namespace gt232

#endif
