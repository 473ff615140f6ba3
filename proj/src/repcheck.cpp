#include "gt232/repcheck.hpp"

namespace gt232 {

namespace {

Mat3 build(const NumFieldElem (&rows)[3][3]) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = rows[i][j];
  return m;
}

NumFieldElem dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

void add_line(CheckResult& r, const std::string& name, bool pass) {
  r.lines.push_back({name, pass});
}

}  // namespace

RepMatrices rep_matrices() {
  NumFieldElem a({0, 8, 0, 0, -3});        // -3t^4 + 8t
  NumFieldElem b({0, 11, 0, 0, -4});       // -4t^4 + 11t
  NumFieldElem c({-6, 0, 0, 2});           // 2t^3 - 6
  NumFieldElem d({0, 0, 14, 0, 0, -5});    // -5t^5 + 14t^2
  NumFieldElem e({0, 0, 19, 0, 0, -7});    // -7t^5 + 19t^2
  NumFieldElem t({0, 1});
  NumFieldElem zero, one = NumFieldElem::from_int(1);
  NumFieldElem three = NumFieldElem::from_int(3);

  RepMatrices r;
  {
    NumFieldElem rows[3][3] = {{a, b, c}, {zero, zero, one}, {d, e, -a}};
    r.x = build(rows);
  }
  {
    NumFieldElem rows[3][3] = {
        {d, e, -a}, {three * (b * t - d), -d, -(c * t)}, {one, zero, zero}};
    r.y = build(rows);
  }
  return r;
}

CheckResult verify_relators() {
  CheckResult res;
  RepMatrices r = rep_matrices();
  Mat3 id = Mat3::identity();

  add_line(res, "x^3 = 1", mat3_pow(r.x, 3) == id);
  add_line(res, "y^3 = 1", mat3_pow(r.y, 3) == id);

  // x y x y^2 x y^2 x^2 y x y x^2 y x^2 y^2
  const int word[][2] = {{0, 1}, {1, 1}, {0, 1}, {1, 2}, {0, 1}, {1, 2},
                         {0, 2}, {1, 1}, {0, 1}, {1, 1}, {0, 2}, {1, 1},
                         {0, 2}, {1, 2}};
  Mat3 prod = id;
  for (auto [gen, exp] : word)
    prod = mat3_mul(prod, mat3_pow(gen == 0 ? r.x : r.y, exp));
  add_line(res, "x y x y^2 x y^2 x^2 y x y x^2 y x^2 y^2 = 1", prod == id);

  res.pass = true;
  for (const CheckLine& l : res.lines) res.pass = res.pass && l.pass;
  return res;
}

namespace {

Vec3 ev1() {
  return {NumFieldElem::from_int(1), NumFieldElem::from_int(1),
          NumFieldElem({0, 4})};  // (1, 1, 4t)
}

Vec3 ev2() {
  return {NumFieldElem::from_int(1), NumFieldElem::from_int(-1),
          NumFieldElem{}};  // (1, -1, 0)
}

Vec3 qrow() {
  return {NumFieldElem({0, 2}), NumFieldElem({0, 2}),
          NumFieldElem::from_int(-1)};  // (2t, 2t, -1)
}

Vec3 negate(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }

}  // namespace

CheckResult verify_eigenstructure() {
  CheckResult res;
  RepMatrices r = rep_matrices();
  Mat3 m = mat3_mul(r.x, r.y);
  Mat3 id = Mat3::identity();

  add_line(res, "rank(m - Id) = 2", mat3_rank(mat3_sub(m, id)) == 2);
  add_line(res, "rank(m + Id) = 2", mat3_rank(mat3_add(m, id)) == 2);
  add_line(res, "m ev1 = ev1", mat3_mul_vec(m, ev1()) == ev1());
  add_line(res, "m ev2 = -ev2", mat3_mul_vec(m, ev2()) == negate(ev2()));
  add_line(res, "tr(m) = -1", mat3_trace(m) == NumFieldElem::from_int(-1));
  add_line(res, "det(m) = 1", mat3_det(m) == NumFieldElem::from_int(1));

  res.pass = true;
  for (const CheckLine& l : res.lines) res.pass = res.pass && l.pass;
  return res;
}

CheckResult verify_nonelementary_witness() {
  CheckResult res;
  RepMatrices r = rep_matrices();
  Mat3 n = mat3_mul(r.y, r.x);
  Vec3 q = qrow();

  NumFieldElem t4_plus_t({0, 1, 0, 0, 1});
  NumFieldElem t4_minus_t({0, -1, 0, 0, 1});

  add_line(res, "q ev1 = 0", dot(q, ev1()).is_zero());
  add_line(res, "q ev2 = 0", dot(q, ev2()).is_zero());
  NumFieldElem w1 = dot(q, mat3_mul_vec(n, ev1()));
  NumFieldElem w2 = dot(q, mat3_mul_vec(n, ev2()));
  add_line(res, "q n ev1 = t^4 + t", w1 == t4_plus_t);
  add_line(res, "q n ev2 = t^4 - t", w2 == t4_minus_t);
  add_line(res, "q n ev1 != 0", !w1.is_zero());
  add_line(res, "q n ev2 != 0", !w2.is_zero());

  res.pass = true;
  for (const CheckLine& l : res.lines) res.pass = res.pass && l.pass;
  return res;
}

}  // namespace gt232
