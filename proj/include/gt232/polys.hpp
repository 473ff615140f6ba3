#ifndef GT232_POLYS_HPP
#define GT232_POLYS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gt232 {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in the trace variable, arbitrary-precision integer
/// coefficients, ascending order, canonical (no trailing zeros; empty = 0).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(BigInt v);
  static IntPoly monomial(int degree, BigInt v = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly&) const = default;

  IntPoly pow(unsigned n) const;
  /// Multiply by lambda^k.
  IntPoly shifted(int k) const;

  double eval_double(double x) const;

  /// List form "[c0,c1,...]"; "[]" for the zero polynomial.
  std::string to_list_string() const;
  /// Pretty form in descending powers, e.g. "λ^7-5λ^5+7λ^3-2λ".
  std::string to_pretty_string(const std::string& var = "λ") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Exact quotient q with q*den == num, or nullopt when den does not divide
/// num in Z[λ].  Throws on den == 0.
std::optional<IntPoly> poly_divexact(const IntPoly& num, const IntPoly& den);

/// Element p + q*s of Z[λ][s] / (s^2 + λ*s + 1).
struct QuadExtElem {
  IntPoly p, q;

  bool operator==(const QuadExtElem&) const = default;
  QuadExtElem operator+(const QuadExtElem& o) const { return {p + o.p, q + o.q}; }
  QuadExtElem operator-(const QuadExtElem& o) const { return {p - o.p, q - o.q}; }
  QuadExtElem operator-() const { return {-p, -q}; }
  QuadExtElem operator*(const QuadExtElem& o) const;
};

/// Ring involution s -> -λ-s.
QuadExtElem quadext_conj(const QuadExtElem& v);
/// v * s  (one shift and two subtractions; no polynomial multiplication).
QuadExtElem quadext_mul_s(const QuadExtElem& v);
/// v * (λ + s).
QuadExtElem quadext_mul_lambda_plus_s(const QuadExtElem& v);

/// 2x2 matrix over QuadExtElem, row-major.
struct Mat2 {
  std::array<QuadExtElem, 4> m;

  static Mat2 identity();
  /// Generators with traces (0, 1, λ) for (X, Y, XY):
  /// X = [[0,1],[-1,0]],  Y = [[0,s],[λ+s,1]].
  static Mat2 gen_x();
  static Mat2 gen_y();

  const QuadExtElem& at(int r, int c) const { return m[r * 2 + c]; }
  QuadExtElem& at(int r, int c) { return m[r * 2 + c]; }
  bool operator==(const Mat2&) const = default;
};

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
QuadExtElem mat2_trace(const Mat2& a);
QuadExtElem mat2_det(const Mat2& a);
Mat2 mat2_pow(const Mat2& a, unsigned n);

/// Element a + b*u of the quadratic order with u^2 = A*u + B.
/// (A,B) = (0,2) gives Z[sqrt(2)]; (A,B) = (1,1) gives Z[phi].
struct QuadOrderElem {
  BigInt a, b;
  int A = 0, B = 2;

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const QuadOrderElem&) const = default;
  QuadOrderElem operator+(const QuadOrderElem& o) const;
  QuadOrderElem operator-(const QuadOrderElem& o) const;
  QuadOrderElem operator*(const QuadOrderElem& o) const;
};

/// Exact Horner evaluation of p at a quadratic-order element.
QuadOrderElem poly_eval_quad(const IntPoly& p, const QuadOrderElem& at);

/// Element m + n*ω with ω^2 = ω - 1 (primitive sixth root of unity).
struct CycloElem {
  BigInt m, n;

  bool operator==(const CycloElem&) const = default;
  CycloElem operator+(const CycloElem& o) const { return {m + o.m, n + o.n}; }
  CycloElem operator-(const CycloElem& o) const { return {m - o.m, n - o.n}; }
  CycloElem operator*(const CycloElem& o) const;
  /// Complex conjugation: (m + nω)* = (m+n) - nω.
  CycloElem conj() const { return {m + n, -n}; }
  bool is_rational_integer() const { return n == 0; }
};

}  // namespace gt232

#endif
