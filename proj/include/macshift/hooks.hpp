#pragma once

#include "macshift/partitions.hpp"
#include "macshift/qtrat.hpp"

namespace macshift {

// H(mu) = t^{-2n(mu)} q^{n(mu')} prod_{s in mu} (q^{a(s)+1} t^{l(s)} - 1),
// the (q,t)-hook normalization constant of the interpolation polynomials.
inline QtRat hook_H(const Partition& mu) {
    QtRat r = QtRat::qt_monomial(Rat(1), mu.conjugate().n_stat(), -2 * mu.n_stat());
    for (auto [i, j] : squares(mu)) {
        QtPoly factor(Rat(1), mu.arm(i, j) + 1, mu.leg(i, j));
        factor -= QtPoly::one();
        r *= QtRat(factor);
    }
    return r;
}

// b_lambda(q,t) = prod (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l); with
// swap_params the two parameter slots trade places, giving b_lambda(t,q).
inline QtRat b_lambda(const Partition& la, bool swap_params = false) {
    QtRat r(1);
    for (auto [i, j] : squares(la)) {
        int a = la.arm(i, j), l = la.leg(i, j);
        QtPoly num = QtPoly::one();
        QtPoly den = QtPoly::one();
        if (!swap_params) {
            num -= QtPoly(Rat(1), a, l + 1);
            den -= QtPoly(Rat(1), a + 1, l);
        } else {
            num -= QtPoly(Rat(1), l + 1, a);
            den -= QtPoly(Rat(1), l, a + 1);
        }
        r *= QtRat(num, den);
    }
    return r;
}

} // namespace macshift
