#include "macshift/sympoly.hpp"

#include <algorithm>

namespace macshift {

XPoly monomial_sym_xpoly(int nvars, const Partition& la) {
    XPoly out(nvars);
    if (la.length() > nvars) return out;
    Exps e(nvars, 0);
    for (int i = 0; i < la.length(); ++i) e[i] = la.parts()[i];
    std::sort(e.begin(), e.end());
    do {
        out.add_term(e, QtRat(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

QtRat monomial_sym_value(const Partition& la, const std::vector<QtRat>& point) {
    int nvars = static_cast<int>(point.size());
    if (la.length() > nvars) return QtRat();
    Exps e(nvars, 0);
    for (int i = 0; i < la.length(); ++i) e[i] = la.parts()[i];
    std::sort(e.begin(), e.end());
    QtRat total;
    do {
        QtRat term(1);
        for (int i = 0; i < nvars; ++i)
            if (e[i] != 0) term *= point[i].pow(e[i]);
        total += term;
    } while (std::next_permutation(e.begin(), e.end()));
    return total;
}

XPoly SymPoly::to_xpoly() const {
    XPoly out(nvars_);
    for (const auto& [la, c] : coeffs_) {
        XPoly m = monomial_sym_xpoly(nvars_, la);
        out += m.scale(c);
    }
    return out;
}

SymPoly SymPoly::from_xpoly(const XPoly& f) {
    SymPoly out(f.nvars());
    XPoly r = f;
    while (!r.is_zero()) {
        auto [e, c] = r.leading();
        // The lex-greatest exponent of a symmetric polynomial is sorted.
        if (!std::is_sorted(e.rbegin(), e.rend()))
            throw linear_solve_error("from_xpoly: polynomial is not symmetric");
        Partition la{std::vector<int>(e.begin(), e.end())};
        out.coeffs_[la] = c;
        XPoly m = monomial_sym_xpoly(f.nvars(), la);
        r -= m.scale(c);
    }
    return out;
}

QtRat SymPoly::eval(const std::vector<QtRat>& point) const {
    QtRat total;
    for (const auto& [la, c] : coeffs_) total += c * monomial_sym_value(la, point);
    return total;
}

SymPoly sym_multiply(const SymPoly& a, const SymPoly& b) {
    return SymPoly::from_xpoly(a.to_xpoly() * b.to_xpoly());
}

} // namespace macshift
