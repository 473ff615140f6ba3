#include "gt232/trace.hpp"

#include <cmath>
#include <stdexcept>

namespace gt232 {

namespace {

// In-place M <- M * (X Y) with X Y = [[λ+s, 1], [0, -s]].
void step_xy(std::array<QuadExtElem, 4>& m) {
  for (int row = 0; row < 2; ++row) {
    QuadExtElem& c0 = m[row * 2];
    QuadExtElem& c1 = m[row * 2 + 1];
    QuadExtElem new0 = quadext_mul_lambda_plus_s(c0);
    c1 = c0 - quadext_mul_s(c1);
    c0 = std::move(new0);
  }
}

// In-place M <- M * (X Y^2) with X Y^2 = [[λ+s, 0], [1, -s]].
void step_xy2(std::array<QuadExtElem, 4>& m) {
  for (int row = 0; row < 2; ++row) {
    QuadExtElem& c0 = m[row * 2];
    QuadExtElem& c1 = m[row * 2 + 1];
    c0 = quadext_mul_lambda_plus_s(c0) + c1;
    c1 = -quadext_mul_s(c1);
  }
}

}  // namespace

IntPoly trace_poly(const Word& w) {
  Mat2 m = Mat2::identity();
  for (std::uint8_t a : w.alphas) {
    if (a == 1)
      step_xy(m.m);
    else
      step_xy2(m.m);
  }
  QuadExtElem tr = mat2_trace(m);
  if (!tr.q.is_zero())
    throw std::logic_error(
        "trace_poly: nonzero s-component in trace (arithmetic bug)");
  return tr.p;
}

IntPoly target_poly(int c, int e) {
  if (c < 0 || e < 0) throw std::invalid_argument("target_poly: c,e >= 0");
  IntPoly lam_sq_m2({-2, 0, 1});
  IntPoly quartic({1, 0, -3, 0, 1});
  return IntPoly::monomial(1) * lam_sq_m2.pow(c) * quartic.pow(e);
}

std::optional<ElementaryForm> classify_elementary(const IntPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("classify_elementary: zero polynomial");
  static const IntPoly factors[5] = {
      IntPoly::monomial(1),          // λ
      IntPoly({-1, 0, 1}),           // λ^2 - 1
      IntPoly({-2, 0, 1}),           // λ^2 - 2
      IntPoly({-3, 0, 1}),           // λ^2 - 3
      IntPoly({1, 0, -3, 0, 1}),     // λ^4 - 3λ^2 + 1
  };
  ElementaryForm form;
  int* exps[5] = {&form.a, &form.b, &form.c, &form.d, &form.e};
  IntPoly rest = p;
  for (int i = 0; i < 5; ++i) {
    while (true) {
      auto q = poly_divexact(rest, factors[i]);
      if (!q) break;
      rest = std::move(*q);
      ++*exps[i];
    }
  }
  if (rest.degree() != 0) return std::nullopt;
  if (rest.coeff(0) == 1)
    form.unit = 1;
  else if (rest.coeff(0) == -1)
    form.unit = -1;
  else
    return std::nullopt;
  return form;
}

CoeffReport coeff_report(const Word& w) {
  std::size_t l = w.length();
  if (l < 2) throw std::invalid_argument("coeff_report: requires l >= 2");

  CoeffReport rep;
  rep.betas.reserve(l);
  for (std::size_t j = 0; j < l; ++j) {
    int diff = static_cast<int>(w.alphas[(j + 1) % l]) -
               static_cast<int>(w.alphas[j]);
    // -exp(i*pi*diff/3) for diff in {-1, 0, +1}:
    //   0 -> -1,  +1 -> -ω,  -1 -> ω - 1
    if (diff == 0)
      rep.betas.push_back({-1, 0});
    else if (diff == 1)
      rep.betas.push_back({0, -1});
    else
      rep.betas.push_back({-1, 1});
  }

  CycloElem sum{0, 0}, sum_sq{0, 0}, sum_adj{0, 0};
  for (std::size_t j = 0; j < l; ++j) {
    sum = sum + rep.betas[j];
    sum_sq = sum_sq + rep.betas[j] * rep.betas[j];
    sum_adj = sum_adj + rep.betas[j] * rep.betas[(j + 1) % l];
  }
  if (!sum.is_rational_integer() || !sum_sq.is_rational_integer() ||
      !sum_adj.is_rational_integer())
    throw std::logic_error("coeff_report: beta sums have nonzero ω-component");
  rep.sumBetaSq = sum_sq.m;
  rep.sumBetaAdj = sum_adj.m;

  IntPoly tau = trace_poly(w);
  rep.B1 = tau.coeff(static_cast<int>(l) - 2);
  if (rep.B1 != sum.m)
    throw std::logic_error(
        "coeff_report: sum of beta(j) disagrees with the λ^{l-2} coefficient");
  if (l >= 4) {
    rep.B2 = tau.coeff(static_cast<int>(l) - 4);
    rep.hasB2 = true;
  }
  return rep;
}

double trace_eval_real(const Word& w, double z) {
  using Cpx = std::complex<double>;
  // s is a root of s^2 + z s + 1 = 0; |z| < 2 keeps it on the unit circle.
  Cpx s(-z / 2.0, std::sqrt(std::max(0.0, 4.0 - z * z)) / 2.0);
  Cpx diag = Cpx(z, 0) + s;   // λ + s
  Cpx ms = -s;
  // Same triangular steps as the exact fold.
  Cpx m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (std::uint8_t a : w.alphas) {
    if (a == 1) {
      Cpx n00 = m00 * diag, n10 = m10 * diag;
      m01 = m00 + m01 * ms;
      m11 = m10 + m11 * ms;
      m00 = n00;
      m10 = n10;
    } else {
      m00 = m00 * diag + m01;
      m10 = m10 * diag + m11;
      m01 = m01 * ms;
      m11 = m11 * ms;
    }
  }
  return (m00 + m11).real();
}

double sup_check(const Word& w, int samples) {
  if (samples < 1) throw std::invalid_argument("sup_check: samples >= 1");
  const double bound = std::sqrt(3.0);
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    double z = samples == 1
                   ? 0.0
                   : -bound + 2.0 * bound * static_cast<double>(i) /
                                  static_cast<double>(samples - 1);
    best = std::max(best, std::fabs(trace_eval_real(w, z)));
  }
  return best;
}

namespace {

double f_of(double x) {
  double x2 = x * x;
  return x2 * x2 - 3 * x2 + 1;
}

double g_of(double x) {
  double f = f_of(x);
  return (x * x - 2) * f * f;
}

double sigma0_of(double x) {
  return x * std::pow(x * x - 2, 5) * std::pow(f_of(x), 12);
}

}  // namespace

BoundConstants bound_constants() {
  const double l0 = 0.1, l1 = 1.15;
  BoundConstants b;
  b.abs_f_l0 = std::fabs(f_of(l0));
  b.abs_f_l1 = std::fabs(f_of(l1));
  b.abs_g_l0 = std::fabs(g_of(l0));
  b.abs_g_l1 = std::fabs(g_of(l1));
  b.abs_sigma0 = std::fabs(sigma0_of(l0));
  b.abs_sigma1 = std::fabs(l1 * std::pow(f_of(l1), 3));
  b.inequalities_hold = b.abs_f_l1 > 1.0 && b.abs_f_l0 < 1.0 &&
                        b.abs_g_l0 > 1.0 && b.abs_g_l1 > 1.0 &&
                        b.abs_sigma0 > 2.0 && b.abs_sigma1 > 2.0;
  return b;
}

std::vector<BoundCheck> verify_bounds() {
  BoundConstants b = bound_constants();
  auto near = [](double v, double ref) { return std::fabs(v - ref) <= 0.01; };
  std::vector<BoundCheck> out;
  out.push_back({"|f(0.1)| = 0.97 +/- 0.01", b.abs_f_l0, near(b.abs_f_l0, 0.97)});
  out.push_back({"|f(1.15)| = 1.22 +/- 0.01", b.abs_f_l1, near(b.abs_f_l1, 1.22)});
  out.push_back({"|g(0.1)| = 1.87 +/- 0.01", b.abs_g_l0, near(b.abs_g_l0, 1.87)});
  out.push_back({"|g(1.15)| = 1.01 +/- 0.01", b.abs_g_l1, near(b.abs_g_l1, 1.01)});
  out.push_back({"|sigma0| = 2.17 +/- 0.01", b.abs_sigma0, near(b.abs_sigma0, 2.17)});
  out.push_back({"|sigma1| = 2.08 +/- 0.01", b.abs_sigma1, near(b.abs_sigma1, 2.08)});
  out.push_back({"|f(1.15)| > 1 > |f(0.1)|, |g| > 1, |sigma| > 2",
                 0.0, b.inequalities_hold});
  return out;
}

std::vector<CEPair> admissible_params() {
  std::vector<CEPair> out;
  for (int c = 0; c <= 4; ++c)
    for (int e = std::max(0, c - 2); e <= 2 * c + 2; ++e)
      out.push_back({c, e});
  return out;
}

bool is_admissible(int c, int e) {
  return c >= 0 && c <= 4 && e >= std::max(0, c - 2) && e <= 2 * c + 2;
}

double figure_eval(FigureFn fn, double x) {
  switch (fn) {
    case FigureFn::F:
      return f_of(x);
    case FigureFn::G:
      return g_of(x);
    case FigureFn::Sigma0:
      return sigma0_of(x);
  }
  throw std::invalid_argument("figure_eval: unknown function");
}

std::vector<std::pair<double, double>> figure_data(FigureFn fn, double from,
                                                   double to, double step) {
  if (step <= 0) throw std::invalid_argument("figure_data: step > 0");
  std::vector<std::pair<double, double>> rows;
  for (double x = from; x <= to + step * 1e-9; x += step)
    rows.emplace_back(x, figure_eval(fn, x));
  return rows;
}

}  // namespace gt232
