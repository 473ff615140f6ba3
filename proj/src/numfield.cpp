#include "gt232/numfield.hpp"

#include <sstream>

namespace gt232 {

namespace {
const BigRat kZeroRat = 0;
}

RatPoly::RatPoly(std::initializer_list<long long> ints) {
  c_.reserve(ints.size());
  for (long long v : ints) c_.emplace_back(v);
  trim();
}

const BigRat& RatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroRat;
  return c_[k];
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (BigRat& v : r.c_) v = -v;
  return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<BigRat> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < o.c_.size()) c[i] += o.c_[i];
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<BigRat> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < o.c_.size()) c[i] -= o.c_[i];
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly{};
  std::vector<BigRat> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const BigRat& v) const {
  std::vector<BigRat> c(c_);
  for (BigRat& x : c) x *= v;
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& den) const {
  if (den.is_zero()) throw std::invalid_argument("divmod: zero divisor");
  if (degree() < den.degree()) return {RatPoly{}, *this};
  std::vector<BigRat> rem(c_);
  std::vector<BigRat> quot(degree() - den.degree() + 1);
  const BigRat& lead = den.coeff(den.degree());
  for (int k = degree() - den.degree(); k >= 0; --k) {
    BigRat q = rem[k + den.degree()] / lead;
    if (q == 0) continue;
    quot[k] = q;
    for (int i = 0; i <= den.degree(); ++i) rem[k + i] -= q * den.coeff(i);
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

std::string RatPoly::to_pretty_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigRat& v = coeff(k);
    if (v == 0) continue;
    BigRat a = abs(v);
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

PolyXgcd poly_xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly u0({1}), u1{};
  RatPoly v0{}, v1({1});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    RatPoly u2 = u0 - q * u1;
    RatPoly v2 = v0 - q * v1;
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  if (!r0.is_zero()) {
    BigRat inv_lead = BigRat(1) / r0.coeff(r0.degree());
    r0 = r0 * inv_lead;
    u0 = u0 * inv_lead;
    v0 = v0 * inv_lead;
  }
  return {r0, u0, v0};
}

const RatPoly& NumFieldElem::modulus() {
  static const RatPoly f({1, 0, 0, -3, 0, 0, 1});  // t^6 - 3t^3 + 1
  return f;
}

NumFieldElem::NumFieldElem(RatPoly p) {
  r_ = p.degree() >= modulus().degree() ? p.divmod(modulus()).second
                                        : std::move(p);
}

NumFieldElem::NumFieldElem(std::initializer_list<long long> ints)
    : NumFieldElem(RatPoly(ints)) {}

NumFieldElem NumFieldElem::from_int(long long v) {
  return NumFieldElem(RatPoly{v});
}

NumFieldElem NumFieldElem::operator-() const {
  NumFieldElem r;
  r.r_ = -r_;
  return r;
}

NumFieldElem NumFieldElem::operator+(const NumFieldElem& o) const {
  NumFieldElem r;
  r.r_ = r_ + o.r_;
  return r;
}

NumFieldElem NumFieldElem::operator-(const NumFieldElem& o) const {
  NumFieldElem r;
  r.r_ = r_ - o.r_;
  return r;
}

NumFieldElem NumFieldElem::operator*(const NumFieldElem& o) const {
  return NumFieldElem(r_ * o.r_);
}

NumFieldElem NumFieldElem::inv() const {
  if (is_zero()) throw NotInvertibleError("inverse of zero", RatPoly{});
  PolyXgcd x = poly_xgcd(r_, modulus());
  if (x.g.degree() != 0)
    throw NotInvertibleError(
        "element not invertible modulo t^6-3t^3+1; gcd = " +
            x.g.to_pretty_string("t"),
        x.g);
  return NumFieldElem(x.u);  // g is monic degree 0, i.e. 1
}

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r.at(i, i) = NumFieldElem::from_int(1);
  return r;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      NumFieldElem acc;
      for (int k = 0; k < 3; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

Mat3 mat3_pow(const Mat3& a, unsigned n) {
  Mat3 r = Mat3::identity();
  Mat3 base = a;
  while (n > 0) {
    if (n & 1u) r = mat3_mul(r, base);
    n >>= 1u;
    if (n) base = mat3_mul(base, base);
  }
  return r;
}

Mat3 mat3_add(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

Mat3 mat3_sub(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

NumFieldElem mat3_trace(const Mat3& a) {
  return a.at(0, 0) + a.at(1, 1) + a.at(2, 2);
}

NumFieldElem mat3_det(const Mat3& a) {
  NumFieldElem r;
  r = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1));
  r = r - a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0));
  r = r + a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
  return r;
}

Vec3 mat3_mul_vec(const Mat3& a, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    NumFieldElem acc;
    for (int k = 0; k < 3; ++k) acc = acc + a.at(i, k) * v[k];
    r[i] = acc;
  }
  return r;
}

int mat3_rank(const Mat3& a) {
  Mat3 w = a;
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int row = rank; row < 3; ++row)
      if (!w.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < 3; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
    NumFieldElem inv = w.at(rank, col).inv();
    for (int row = rank + 1; row < 3; ++row) {
      if (w.at(row, col).is_zero()) continue;
      NumFieldElem factor = w.at(row, col) * inv;
      for (int j = col; j < 3; ++j)
        w.at(row, j) = w.at(row, j) - factor * w.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace gt232
