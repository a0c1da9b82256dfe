#include "macshift/qcalc.hpp"

#include <stdexcept>

namespace macshift {

QtRat q_number(int r) {
    return QtRat(QtPoly::one() - QtPoly::q(r), QtPoly::one() - QtPoly::q());
}

QtRat pochhammer(const QtRat& a, int k) {
    QtRat r(1);
    for (int s = 0; s < k; ++s) r *= QtRat(1) - QtRat::q(s) * a;
    return r;
}

XPoly pochhammer(const XPoly& a, int k) {
    XPoly r = XPoly::one(a.nvars());
    for (int s = 0; s < k; ++s) r *= XPoly::one(a.nvars()) - QtRat::q(s) * a;
    return r;
}

QtRat q_falling(const QtRat& a, int r) {
    QtRat out(1);
    for (int s = 0; s < r; ++s) out *= a - QtRat::q(s);
    return out;
}

XPoly q_falling(const XPoly& a, int r) {
    XPoly out = XPoly::one(a.nvars());
    for (int s = 0; s < r; ++s) out *= a - XPoly::constant(a.nvars(), QtRat::q(s));
    return out;
}

QtRat q_beta_int(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("q_beta_int needs positive integers");
    // B_q(a,b) = (1-q) (q)_{a-1} (q)_{b-1} / (q)_{a+b-1}
    QtRat r = QtRat(QtPoly::one() - QtPoly::q());
    r *= pochhammer(QtRat::q(), a - 1);
    r *= pochhammer(QtRat::q(), b - 1);
    r /= pochhammer(QtRat::q(), a + b - 1);
    return r;
}

QtRat capital_C(const Partition& mu, int n, int theta) {
    if (mu.length() >= n) throw std::invalid_argument("capital_C requires l(mu) < n");
    if (theta < 1) throw std::invalid_argument("capital_C requires theta >= 1");
    QtRat r(1);
    for (int i = 1; i <= n - 1; ++i) r *= q_beta_int(mu.part(i) + (n - i) * theta, theta);
    return r;
}

XPoly q_integral(const XPoly& f, int var, const XPoly& lower, const XPoly& upper) {
    int nv = f.nvars();
    XPoly out(nv);
    std::vector<XPoly> upow{XPoly::one(nv)};
    std::vector<XPoly> lpow{XPoly::one(nv)};
    for (const auto& [e, c] : f.terms()) {
        int r = e[var];
        while (static_cast<int>(upow.size()) <= r + 1) {
            upow.push_back(upow.back() * upper);
            lpow.push_back(lpow.back() * lower);
        }
        Exps rest = e;
        rest[var] = 0;
        XPoly mono = XPoly::monomial(nv, rest, c / q_number(r + 1));
        out += mono * (upow[r + 1] - lpow[r + 1]);
    }
    return out;
}

XPoly vandermonde(int nvars, const std::vector<int>& vars) {
    XPoly v = XPoly::one(nvars);
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            v *= XPoly::var(nvars, vars[i]) - XPoly::var(nvars, vars[j]);
    return v;
}

Cleared vandermonde_theta(int n, int theta, bool starred) {
    if (n < 2 || theta < 1) throw std::invalid_argument("vandermonde_theta needs n >= 2, theta >= 1");
    std::vector<int> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = i;
    XPoly w = vandermonde(n, xs);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int s = 1; s <= theta - 1; ++s)
                w *= XPoly::var(n, j) - QtRat::q(s) * XPoly::var(n, i);
        }
    Cleared out{std::move(w), std::vector<int>(n, (n - 1) * (theta - 1)), QtRat(1)};
    if (starred) {
        int tpow = 0;
        for (int i = 1; i <= n; ++i) {
            out.poly = out.poly.scale_var(i - 1, QtRat::t(n - i));
            tpow += (n - 1) * (theta - 1) * (n - i);
        }
        out.scale = QtRat::t(tpow);
    }
    return out;
}

Cleared beta_density(int n, int theta, bool starred) {
    if (n < 2 || theta < 1) throw std::invalid_argument("beta_density needs n >= 2, theta >= 1");
    int nv = 2 * n - 1;
    std::vector<int> ys(n - 1);
    for (int i = 1; i <= n - 1; ++i) ys[i - 1] = yvar(n, i);
    XPoly b = vandermonde(nv, ys);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            for (int s = 1; s <= theta - 1; ++s)
                b *= XPoly::var(nv, xvar(n, j)) - QtRat::q(s) * XPoly::var(nv, yvar(n, i));
    std::vector<int> clearing(nv, 0);
    for (int j = 1; j <= n; ++j) clearing[xvar(n, j)] = (n - 1) * (theta - 1);
    Cleared out{std::move(b), std::move(clearing), QtRat(1)};
    if (starred) {
        int tpow = 0;
        for (int j = 1; j <= n; ++j) {
            out.poly = out.poly.scale_var(xvar(n, j), QtRat::t(n - j));
            tpow += (n - 1) * (theta - 1) * (n - j);
        }
        for (int i = 1; i <= n - 1; ++i)
            out.poly = out.poly.scale_var(yvar(n, i), QtRat::t(n - 1 - i));
        out.scale = QtRat::t(tpow);
    }
    return out;
}

XPoly embed_y(const XPoly& f, int n) {
    if (f.nvars() != n - 1) throw std::invalid_argument("embed_y expects n-1 variables");
    return f.insert_vars(0, n);
}

XPoly integrate_interlacing(XPoly f, int n, const QtRat& upper_scale) {
    int nv = 2 * n - 1;
    for (int i = n - 1; i >= 1; --i) {
        XPoly lower = XPoly::var(nv, xvar(n, i + 1));
        XPoly upper = upper_scale * XPoly::var(nv, xvar(n, i));
        f = q_integral(f, yvar(n, i), lower, upper);
    }
    return f;
}

XPoly integral_representation_lhs(const XPoly& f_y, int n, int theta, bool starred,
                                  const ParamSub* sub) {
    XPoly density = beta_density(n, theta, starred).poly;
    if (sub)
        density = density.map_coeffs<QtRat>(
            [&](const QtRat& c) { return substitute_params(c, *sub); });
    XPoly integrand = embed_y(f_y, n) * density;
    if (starred) {
        // Jacobian of d_q y* = prod_i t^{n-1-i} d_q y_i.
        QtRat jac = QtRat::t((n - 1) * (n - 2) / 2);
        if (sub) jac = substitute_params(jac, *sub);
        integrand.scale(jac);
    }
    XPoly ix = integrate_interlacing(std::move(integrand), n,
                                     starred ? QtRat::q() : QtRat(1));
    // y variables are gone; shrink back to x_1..x_n.
    for (int i = n - 1; i >= 1; --i) ix = ix.drop_var(yvar(n, i));
    return ix;
}

} // namespace macshift
