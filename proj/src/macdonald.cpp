#include "macshift/macdonald.hpp"

#include <stdexcept>

#include "macshift/compare.hpp"

namespace macshift {

namespace {

// Pivot order for triangular eliminations: largest size first, then
// dominance-largest (lex-greatest parts).
bool pivot_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
}

Partition max_pivot(const SymPoly& f) {
    const Partition* best = nullptr;
    for (const auto& [la, c] : f.coeffs())
        if (!best || pivot_less(*best, la)) best = &la;
    return *best;
}

} // namespace

XPoly apply_D(const XPoly& f, const DOperatorSpec& spec) {
    int n = f.nvars();
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    XPoly num(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> others;
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(j);
        XPoly term = vandermonde(n, others);
        for (int j : others) {
            XPoly factor = spec.inverse_form
                               ? spec.alpha * XPoly::var(n, j) - XPoly::var(n, i)
                               : spec.alpha * XPoly::var(n, i) - XPoly::var(n, j);
            term *= factor;
        }
        term *= f.scale_var(i, spec.shift);
        int sign_exp = spec.inverse_form ? (n - 1 - i) : i;
        if (sign_exp % 2 == 1) term = -term;
        num += term;
    }
    return exact_divide(num, vandermonde(n, all));
}

SymPoly apply_D(const SymPoly& f, const DOperatorSpec& spec) {
    return SymPoly::from_xpoly(apply_D(f.to_xpoly(), spec));
}

QtRat D_eigenvalue(const Partition& mu, int n) {
    QtRat e;
    for (int i = 1; i <= n; ++i) e += QtRat(QtPoly(Rat(1), mu.part(i), n - i));
    return e;
}

SymPoly apply_E(const SymPoly& f) {
    int n = f.nvars();
    SymPoly r = apply_D(f, DOperatorSpec::standard());
    r.scale(QtRat::t(-n));
    QtRat shift;
    for (int i = 1; i <= n; ++i) shift += QtRat::t(-i);
    SymPoly sub = f;
    sub.scale(shift);
    return r - sub;
}

const SymPoly& MacCtx::P(const Partition& mu, int n) {
    if (mu.length() > n) throw std::invalid_argument("P(mu,n) needs l(mu) <= n");
    auto key = std::make_pair(mu, n);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = p_cache_.find(key);
        if (it != p_cache_.end()) return it->second;
    }

    // Triangular eigenvector solve: P = m_mu + lower-dominance terms, with
    // D P = e_mu P.  Partitions of |mu| sorted dominance-largest first.
    auto S = partitions_of(mu.size(), n);
    QtRat e_mu = D_eigenvalue(mu, n);
    std::map<Partition, SymPoly> d_cols; // D m_nu for nu with nonzero coefficient
    SymPoly result(n);

    bool seen_mu = false;
    for (const auto& la : S) {
        if (la == mu) {
            result.add_term(mu, QtRat(1));
            d_cols.emplace(mu, apply_D(SymPoly::monomial_sym(n, mu), DOperatorSpec::standard()));
            seen_mu = true;
            continue;
        }
        if (!seen_mu) continue; // dominance-larger than mu: coefficient zero
        QtRat rhs;
        for (const auto& [nu, col] : d_cols) rhs += result.coeff(nu) * col.coeff(la);
        if (rhs.is_zero()) continue;
        QtRat denom = e_mu - D_eigenvalue(la, n);
        if (denom.is_zero()) throw linear_solve_error("coinciding eigenvalues in P solve");
        QtRat c = rhs / denom;
        result.add_term(la, c);
        d_cols.emplace(la, apply_D(SymPoly::monomial_sym(n, la), DOperatorSpec::standard()));
    }

    std::lock_guard<std::mutex> lock(mutex_);
    return p_cache_.emplace(key, std::move(result)).first->second;
}

std::map<Partition, QtRat, PartitionOrder> MacCtx::expand_in_P(const SymPoly& f) {
    std::map<Partition, QtRat, PartitionOrder> out;
    SymPoly r = f;
    while (!r.is_zero()) {
        Partition pivot = max_pivot(r);
        QtRat c = r.coeff(pivot);
        SymPoly sub = P(pivot, r.nvars());
        sub.scale(c);
        r -= sub;
        out[pivot] = c;
        if (!r.coeff(pivot).is_zero())
            throw linear_solve_error("expand_in_P failed to eliminate a pivot");
    }
    return out;
}

const std::map<Partition, QtRat, PartitionOrder>& MacCtx::psi_row(const Partition& mu) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = psi_cache_.find(mu);
        if (it != psi_cache_.end()) return it->second;
    }
    std::map<Partition, QtRat, PartitionOrder> row;
    if (mu.empty()) {
        row[Partition{}] = QtRat(1);
    } else {
        // Branching: P_mu(d, x_2..x_n) = sum psi_{mu,nu} d^{|mu/nu|} P_nu(x_2..x_n)
        // with n = l(mu)+1; the coefficient is independent of n by stability.
        int n0 = mu.length() + 1;
        XPoly x = P(mu, n0).to_xpoly();
        std::map<int, XPoly> groups; // power of the first variable
        for (const auto& [e, c] : x.terms()) {
            auto [it, fresh] = groups.emplace(e[0], XPoly(n0));
            Exps rest = e;
            rest[0] = 0;
            it->second.add_term(rest, c);
        }
        for (auto& [k, g] : groups) {
            SymPoly sym = SymPoly::from_xpoly(g.drop_var(0));
            for (const auto& [nu, c] : expand_in_P(sym)) {
                if (c.is_zero()) continue;
                if (mu.size() - nu.size() != k || !interlaces(nu, mu))
                    throw linear_solve_error("branching expansion violates interlacing support");
                row[nu] = c;
            }
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return psi_cache_.emplace(mu, std::move(row)).first->second;
}

QtRat MacCtx::psi(const Partition& mu, const Partition& nu) {
    if (!interlaces(nu, mu)) return QtRat();
    const auto& row = psi_row(mu);
    auto it = row.find(nu);
    return it == row.end() ? QtRat() : it->second;
}

SymPoly MacCtx::P_tableaux(const Partition& mu, int n) {
    if (mu.length() > n) throw std::invalid_argument("P_tableaux needs l(mu) <= n");
    XPoly x(n);
    for (const auto& tab : enumerate_reverse_tableaux(mu, n)) {
        QtRat weight(1);
        for (int level = 1; level <= n; ++level)
            weight *= psi(tab.layer_at_least(level), tab.layer_at_least(level + 1));
        Exps e(n, 0);
        for (auto [i, j] : squares(mu)) e[tab.entry(i, j) - 1] += 1;
        x.add_term(e, weight);
    }
    return SymPoly::from_xpoly(x);
}

XPoly MacCtx::theorem_I_lhs(const Partition& mu, int n, int theta) {
    ParamSub sub = ParamSub::t_to_qpow(theta);
    XPoly p_y = P(mu, n - 1).to_xpoly().map_coeffs<QtRat>(
        [&](const QtRat& c) { return substitute_params(c, sub); });
    XPoly integral = integral_representation_lhs(p_y, n, theta, false);
    return exact_divide(integral, vandermonde_theta(n, theta, false).poly);
}

Report MacCtx::verify_theorem_I(const Partition& mu, int n, int theta) {
    Instance inst{mu.str(), "", "", n, std::to_string(theta), 0};
    if (mu.length() >= n) throw std::invalid_argument("theorem I needs l(mu) < n");
    ParamSub sub = ParamSub::t_to_qpow(theta);
    XPoly lhs;
    try {
        lhs = theorem_I_lhs(mu, n, theta);
    } catch (const exact_division_error& e) {
        return Report::failed("theorem1", inst,
                              Witness{"exact division remainder", e.remainder_text, "0"});
    }
    XPoly rhs = P(mu, n).to_xpoly().map_coeffs<QtRat>(
        [&](const QtRat& c) { return substitute_params(c, sub); });
    rhs.scale(capital_C(mu, n, theta));
    return compare_polys("theorem1", inst, lhs, rhs);
}

Report MacCtx::eigen_check(const Partition& mu, int n) {
    Instance inst{mu.str(), "", "", n, "symbolic", 0};
    SymPoly p = P(mu, n);
    SymPoly lhs = apply_D(p, DOperatorSpec::standard());
    SymPoly rhs = p;
    rhs.scale(D_eigenvalue(mu, n));
    return compare_polys("eigen", inst, lhs.to_xpoly(), rhs.to_xpoly());
}

Report MacCtx::lemma_3_10_check(const Partition& la, int n, int theta) {
    Instance inst{"", "", la.str(), n, std::to_string(theta), 0};
    // Both sides of D(1/q,1/t) (1/V^theta) = (q/t)^{n-1} (1/V^theta) D(1/q,t/q)
    // applied to m_la and cleared of every denominator; t = q^theta throughout
    // (the Pochhammer factors of V^theta assume it).
    XPoly f = monomial_sym_xpoly(n, la);
    XPoly w = vandermonde_theta(n, theta, false).poly;
    std::vector<XPoly> tw; // W with x_k -> x_k/q
    for (int k = 0; k < n; ++k) tw.push_back(w.scale_var(k, QtRat::q(-1)));

    QtRat alpha_inv_t = QtRat::q(-theta);  // 1/t at t = q^theta

    XPoly lhs(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> others;
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(j);
        XPoly term = vandermonde(n, others);
        for (int j : others) term *= alpha_inv_t * XPoly::var(n, i) - XPoly::var(n, j);
        term *= f.scale_var(i, QtRat::q(-1));
        for (int k = 0; k < n; ++k)
            if (k != i) term *= tw[k];
        if (i % 2 == 1) term = -term;
        lhs += term;
    }
    lhs *= w;
    lhs.scale(QtRat::q(-(n - 1) * (theta - 1)));

    DOperatorSpec mixed{QtRat::q(theta - 1), QtRat::q(-1)}; // D(1/q, t/q) at t = q^theta
    XPoly g = apply_D(f, mixed);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    XPoly rhs = g * vandermonde(n, all);
    for (int k = 0; k < n; ++k) rhs *= tw[k];
    rhs.scale(QtRat::q((1 - theta) * (n - 1)));

    return compare_polys("lemma-3.10", inst, lhs, rhs);
}

Report MacCtx::lemma_3_11_check(const Partition& la, int n) {
    Instance inst{"", "", la.str(), n, "symbolic", 0};
    XPoly f = monomial_sym_xpoly(n, la);
    XPoly lhs = apply_D(f, DOperatorSpec::one_over_x());
    XPoly rhs = apply_D(f, DOperatorSpec::inverted());
    rhs.scale(QtRat::t(n - 1));
    return compare_polys("lemma-3.11", inst, lhs, rhs);
}

Report MacCtx::E_stability_check(const Partition& la, int n) {
    Instance inst{"", "", la.str(), n, "symbolic", 0};
    SymPoly f = SymPoly::monomial_sym(n, la);
    SymPoly restricted_then_E = apply_E(f.restrict_last_zero());
    SymPoly E_then_restricted = apply_E(f).restrict_last_zero();
    return compare_polys("E-stability", inst, restricted_then_E.to_xpoly(),
                         E_then_restricted.to_xpoly());
}

} // namespace macshift
