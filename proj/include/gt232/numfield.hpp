#ifndef GT232_NUMFIELD_HPP
#define GT232_NUMFIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gt232 {

using BigRat = boost::multiprecision::cpp_rational;

/// Univariate polynomial over Q, ascending coefficients, canonical form.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
  RatPoly(std::initializer_list<long long> ints);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigRat& coeff(int k) const;

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const BigRat& v) const;
  bool operator==(const RatPoly&) const = default;

  /// Euclidean division: *this = q*den + r with deg r < deg den.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& den) const;

  std::string to_pretty_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigRat> c_;
};

/// Extended Euclid over Q[t]: returns (g, u, v) with u*a + v*b = g,
/// g monic (or zero).
struct PolyXgcd {
  RatPoly g, u, v;
};
PolyXgcd poly_xgcd(const RatPoly& a, const RatPoly& b);

/// Raised when a pivot/denominator is not invertible modulo the field
/// polynomial; carries the offending gcd (a nontrivial gcd would show the
/// modulus to be reducible).
class NotInvertibleError : public std::runtime_error {
 public:
  NotInvertibleError(const std::string& msg, RatPoly gcd)
      : std::runtime_error(msg), gcd_(std::move(gcd)) {}
  const RatPoly& gcd() const { return gcd_; }

 private:
  RatPoly gcd_;
};

/// Residue of a rational polynomial modulo f(t) = t^6 - 3t^3 + 1.
class NumFieldElem {
 public:
  NumFieldElem() = default;
  explicit NumFieldElem(RatPoly p);
  NumFieldElem(std::initializer_list<long long> ints);
  static NumFieldElem from_int(long long v);
  static const RatPoly& modulus();

  bool is_zero() const { return r_.is_zero(); }
  const RatPoly& residue() const { return r_; }

  NumFieldElem operator-() const;
  NumFieldElem operator+(const NumFieldElem& o) const;
  NumFieldElem operator-(const NumFieldElem& o) const;
  NumFieldElem operator*(const NumFieldElem& o) const;
  bool operator==(const NumFieldElem&) const = default;

  /// Multiplicative inverse via extended Euclid against the modulus.
  /// Throws NotInvertibleError on zero or a non-unit gcd.
  NumFieldElem inv() const;

  std::string to_pretty_string() const { return r_.to_pretty_string("t"); }

 private:
  RatPoly r_;
};

/// 3x3 matrix over the degree-6 field, row-major.
struct Mat3 {
  std::array<NumFieldElem, 9> m;

  static Mat3 identity();
  const NumFieldElem& at(int r, int c) const { return m[r * 3 + c]; }
  NumFieldElem& at(int r, int c) { return m[r * 3 + c]; }
  bool operator==(const Mat3&) const = default;
};

using Vec3 = std::array<NumFieldElem, 3>;

Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Mat3 mat3_pow(const Mat3& a, unsigned n);
Mat3 mat3_add(const Mat3& a, const Mat3& b);
Mat3 mat3_sub(const Mat3& a, const Mat3& b);
NumFieldElem mat3_trace(const Mat3& a);
NumFieldElem mat3_det(const Mat3& a);
Vec3 mat3_mul_vec(const Mat3& a, const Vec3& v);

/// Rank by Gaussian elimination with exact pivot inversion.
int mat3_rank(const Mat3& a);

}  // namespace gt232

#endif
