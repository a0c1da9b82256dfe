#pragma once

#include "macshift/mpoly.hpp"
#include "macshift/partitions.hpp"
#include "macshift/qtrat.hpp"

namespace macshift {

// [r] = (1 - q^r)/(1 - q)
QtRat q_number(int r);

// (a)_k = (1-a)(1-qa)...(1-q^{k-1}a)
QtRat pochhammer(const QtRat& a, int k);
XPoly pochhammer(const XPoly& a, int k);

// <a>_r = (a-1)(a-q)...(a-q^{r-1})
QtRat q_falling(const QtRat& a, int r);
XPoly q_falling(const XPoly& a, int r);

// B_q(a,b) for positive integers, as a rational function of q.
QtRat q_beta_int(int a, int b);

// C(mu,n) = prod_{i=1}^{n-1} B_q(mu_i + (n-i)theta, theta); requires l(mu) < n.
QtRat capital_C(const Partition& mu, int n, int theta);

// Jackson integral of f over `var` with polynomial limits:
// monomial rule y^r |-> (upper^{r+1} - lower^{r+1}) / [r+1], extended linearly.
// The variable `var` does not occur in the result.
XPoly q_integral(const XPoly& f, int var, const XPoly& lower, const XPoly& upper);

// prod_{i<j} (x_{v_i} - x_{v_j}) over the listed variable indices.
XPoly vandermonde(int nvars, const std::vector<int>& vars);

// A rational object P / (scale * prod_i x_i^{clearing[i]}) stored through its
// cleared polynomial numerator.
struct Cleared {
    XPoly poly;
    std::vector<int> clearing;
    QtRat scale;
};

// V^theta(x) = V(x) prod_{i != j} (q x_i/x_j)_{theta-1}, cleared of the
// x-denominators by prod_i x_i^{(n-1)(theta-1)}.  The starred variant is
// V^theta evaluated at x_i t^{n-i}; its extra t-powers from the clearing
// monomial are reported in `scale`.
Cleared vandermonde_theta(int n, int theta, bool starred);

// Density of the beta measure (without the d_q y factors), cleared of
// x-denominators, in the ring x_1..x_n, y_1..y_{n-1}:
//   V(y) prod_{i,j} (q y_i / x_j)_{theta-1}.
// The starred variant substitutes x_j t^{n-j} and y_i t^{n-1-i}.
Cleared beta_density(int n, int theta, bool starred);

// Ring layout used by the integral representations: x_1..x_n first, then
// y_1..y_{n-1}.
inline int xvar(int /*n*/, int i) { return i - 1; }          // 1-based i
inline int yvar(int n, int i) { return n + i - 1; }          // 1-based i

// Embed a polynomial in y_1..y_{n-1} into the big ring.
XPoly embed_y(const XPoly& f, int n);

// Iterated Jackson integral over the interlacing domain: for i = n-1,...,1
// integrate y_i from x_{i+1} to upper_scale * x_i (innermost first).
// The result involves only the x variables (still in the big ring).
XPoly integrate_interlacing(XPoly f, int n, const QtRat& upper_scale);

// LHS integral of the representation with clearing applied:
//   integral of f(y) * cleared density over y interlacing x, as a polynomial
//   in x_1..x_n (the y variables integrated out and dropped).
// `f_y` lives in n-1 variables.   starred=false: limits [x_{i+1}, x_i];
// starred=true: limits [x_{i+1}, q x_i], starred density, and the measure
// Jacobian t^{(n-1)(n-2)/2} from d_q y*.  A parameter substitution, when
// given, is applied to the density and Jacobian before integrating (the
// caller substitutes f_y itself).
XPoly integral_representation_lhs(const XPoly& f_y, int n, int theta, bool starred,
                                  const ParamSub* sub = nullptr);

} // namespace macshift
