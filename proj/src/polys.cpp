#include "gt232/polys.hpp"

#include <sstream>
#include <stdexcept>

namespace gt232 {

namespace {
const BigInt kZero = 0;
}

IntPoly IntPoly::constant(BigInt v) {
  if (v == 0) return IntPoly{};
  return IntPoly({std::move(v)});
}

IntPoly IntPoly::monomial(int degree, BigInt v) {
  if (v == 0) return IntPoly{};
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(v);
  return IntPoly(std::move(c));
}

const BigInt& IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (BigInt& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < o.c_.size()) c[i] += o.c_[i];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < o.c_.size()) c[i] -= o.c_[i];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly{};
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(unsigned n) const {
  IntPoly r = IntPoly::constant(1);
  IntPoly base = *this;
  while (n > 0) {
    if (n & 1u) r = r * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return r;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return k >= 0 ? *this : IntPoly{};
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  std::vector<BigInt> c(c_.size() + k);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return IntPoly(std::move(c));
}

double IntPoly::eval_double(double x) const {
  double r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * x + it->convert_to<double>();
  return r;
}

std::string IntPoly::to_list_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ']';
  return os.str();
}

std::string IntPoly::to_pretty_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& v = coeff(k);
    if (v == 0) continue;
    BigInt a = abs(v);
    if (first) {
      if (v < 0) os << '-';
      first = false;
    } else {
      os << (v < 0 ? '-' : '+');
    }
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::optional<IntPoly> poly_divexact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("poly_divexact: zero divisor");
  if (num.is_zero()) return IntPoly{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<BigInt> rem(num.coeffs());
  std::vector<BigInt> quot(num.degree() - den.degree() + 1);
  const BigInt& lead = den.coeff(den.degree());
  for (int k = num.degree() - den.degree(); k >= 0; --k) {
    BigInt top = rem[k + den.degree()];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    BigInt q = top / lead;
    quot[k] = q;
    for (int i = 0; i <= den.degree(); ++i) rem[k + i] -= q * den.coeff(i);
  }
  for (const BigInt& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

QuadExtElem QuadExtElem::operator*(const QuadExtElem& o) const {
  // (p1 + q1 s)(p2 + q2 s), s^2 = -λs - 1
  IntPoly qq = q * o.q;
  return {p * o.p - qq, p * o.q + q * o.p - qq.shifted(1)};
}

QuadExtElem quadext_conj(const QuadExtElem& v) {
  return {v.p - v.q.shifted(1), -v.q};
}

QuadExtElem quadext_mul_s(const QuadExtElem& v) {
  return {-v.q, v.p - v.q.shifted(1)};
}

QuadExtElem quadext_mul_lambda_plus_s(const QuadExtElem& v) {
  return {v.p.shifted(1) - v.q, v.p};
}

Mat2 Mat2::identity() {
  Mat2 r;
  r.at(0, 0) = {IntPoly::constant(1), {}};
  r.at(1, 1) = {IntPoly::constant(1), {}};
  return r;
}

Mat2 Mat2::gen_x() {
  Mat2 r;
  r.at(0, 1) = {IntPoly::constant(1), {}};
  r.at(1, 0) = {IntPoly::constant(-1), {}};
  return r;
}

Mat2 Mat2::gen_y() {
  Mat2 r;
  r.at(0, 1) = {{}, IntPoly::constant(1)};                       // s
  r.at(1, 0) = {IntPoly::monomial(1), IntPoly::constant(1)};     // λ + s
  r.at(1, 1) = {IntPoly::constant(1), {}};
  return r;
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  return r;
}

QuadExtElem mat2_trace(const Mat2& a) { return a.at(0, 0) + a.at(1, 1); }

QuadExtElem mat2_det(const Mat2& a) {
  return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
}

Mat2 mat2_pow(const Mat2& a, unsigned n) {
  Mat2 r = Mat2::identity();
  Mat2 base = a;
  while (n > 0) {
    if (n & 1u) r = mat2_mul(r, base);
    n >>= 1u;
    if (n) base = mat2_mul(base, base);
  }
  return r;
}

namespace {
void require_same_order(const QuadOrderElem& x, const QuadOrderElem& y) {
  if (x.A != y.A || x.B != y.B)
    throw std::invalid_argument("quadratic order mismatch");
}
}  // namespace

QuadOrderElem QuadOrderElem::operator+(const QuadOrderElem& o) const {
  require_same_order(*this, o);
  return {a + o.a, b + o.b, A, B};
}

QuadOrderElem QuadOrderElem::operator-(const QuadOrderElem& o) const {
  require_same_order(*this, o);
  return {a - o.a, b - o.b, A, B};
}

QuadOrderElem QuadOrderElem::operator*(const QuadOrderElem& o) const {
  require_same_order(*this, o);
  BigInt bb = b * o.b;
  return {a * o.a + B * bb, a * o.b + b * o.a + A * bb, A, B};
}

QuadOrderElem poly_eval_quad(const IntPoly& p, const QuadOrderElem& at) {
  QuadOrderElem r{0, 0, at.A, at.B};
  for (int k = p.degree(); k >= 0; --k) {
    r = r * at;
    r.a += p.coeff(k);
  }
  return r;
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
  // (m1 + n1 ω)(m2 + n2 ω), ω^2 = ω - 1
  BigInt nn = n * o.n;
  return {m * o.m - nn, m * o.n + n * o.m + nn};
}

}  // namespace gt232
