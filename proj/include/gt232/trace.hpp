#ifndef GT232_TRACE_HPP
#define GT232_TRACE_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gt232/polys.hpp"
#include "gt232/words.hpp"

namespace gt232 {

/// Trace polynomial tau_W of a word: the trace of W(X,Y) for the generator
/// pair with traces (0, 1, λ) for (X, Y, XY).  Computed exactly in
/// Z[λ][s]/(s^2 = -λs - 1); the s-component of the trace must vanish, and
/// the result is monic of degree l with the parity of l.
IntPoly trace_poly(const Word& w);

/// λ (λ^2-2)^c (λ^4-3λ^2+1)^e, expanded.  Degree 1 + 2c + 4e.
IntPoly target_poly(int c, int e);

/// Exponents in the factorization unit * λ^a (λ^2-1)^b (λ^2-2)^c
/// (λ^2-3)^d (λ^4-3λ^2+1)^e.
struct ElementaryForm {
  int a = 0, b = 0, c = 0, d = 0, e = 0;
  int unit = 1;  // +1 or -1
  bool operator==(const ElementaryForm&) const = default;
};

/// Divides out the five elementary factors to maximal multiplicity; the
/// exponents are returned iff the residue is +/-1.  Throws on the zero
/// polynomial.
std::optional<ElementaryForm> classify_elementary(const IntPoly& p);

/// Top coefficients of tau_W and the sixth-root-of-unity weights
/// beta(j) = -exp(i*pi*(a(j+1)-a(j))/3) behind them.
///   B1   = coefficient of λ^{l-2}  (equals sum of beta(j); cross-checked)
///   B2   = coefficient of λ^{l-4}  (populated only when l >= 4)
struct CoeffReport {
  BigInt B1 = 0;
  BigInt B2 = 0;
  bool hasB2 = false;
  BigInt sumBetaSq = 0;
  BigInt sumBetaAdj = 0;
  std::vector<CycloElem> betas;
};

/// Requires l >= 2.  Aborts with a diagnostic if any of the beta sums has a
/// nonzero ω-component or B1 disagrees with the trace coefficient.
CoeffReport coeff_report(const Word& w);

/// tau_W(z) for real |z| < 2, evaluated through the matrix product (the
/// expanded coefficients cancel catastrophically at this degree).
double trace_eval_real(const Word& w, double z);

/// max |tau_W| over `samples` evenly spaced points of [-sqrt(3), sqrt(3)].
double sup_check(const Word& w, int samples);

/// The six constants behind the (c,e) bounds, with λ0 = 0.1, λ1 = 1.15:
/// f = λ^4-3λ^2+1,  g = (λ^2-2) f^2,
/// σ0 = λ0 (λ0^2-2)^5 f(λ0)^12,  σ1 = λ1 f(λ1)^3.
struct BoundConstants {
  double abs_f_l0 = 0, abs_f_l1 = 0;
  double abs_g_l0 = 0, abs_g_l1 = 0;
  double abs_sigma0 = 0, abs_sigma1 = 0;
  bool inequalities_hold = false;  // |f(λ1)|>1>|f(λ0)|, |g|>1 at both, |σ|>2
};
BoundConstants bound_constants();

/// Per-constant comparison of bound_constants() against the reference
/// decimals (window +/- 0.01) together with the strict inequalities.
struct BoundCheck {
  std::string name;
  double value = 0;
  bool pass = false;
};
std::vector<BoundCheck> verify_bounds();

/// Admissible (c,e): 0 <= c <= 4 and max(0, c-2) <= e <= 2c+2.
struct CEPair {
  int c = 0, e = 0;
  int length() const { return 1 + 2 * c + 4 * e; }
  bool operator==(const CEPair&) const = default;
};
std::vector<CEPair> admissible_params();
bool is_admissible(int c, int e);

enum class FigureFn { F, G, Sigma0 };
double figure_eval(FigureFn fn, double x);

/// (x, f(x)) sample rows for regenerating the bound plots.
std::vector<std::pair<double, double>> figure_data(FigureFn fn, double from,
                                                   double to, double step);

}  // namespace gt232

#endif
