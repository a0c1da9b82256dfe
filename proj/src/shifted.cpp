#include "macshift/shifted.hpp"

#include <stdexcept>

#include "macshift/compare.hpp"
#include "macshift/linalg.hpp"

namespace macshift {

ShiftedPoly shifted_swap(const ShiftedPoly& p, int i) {
    // x_i^a x_{i+1}^b -> (x_{i+1}/t)^a (t x_i)^b = t^{b-a} x_i^b x_{i+1}^a
    ShiftedPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exps ne = e;
        std::swap(ne[i], ne[i + 1]);
        out.add_term(ne, c * QtRat::t(e[i + 1] - e[i]));
    }
    return out;
}

bool is_shifted_symmetric(const ShiftedPoly& p) {
    for (int i = 0; i + 1 < p.nvars(); ++i)
        if (shifted_swap(p, i) != p) return false;
    return true;
}

DPoly generalized_qfactorial(const Partition& mu, const Partition& nu) {
    if (!mu.contains(nu)) throw std::invalid_argument("generalized_qfactorial: nu not inside mu");
    DPoly acc{QtRat(1)};
    for (auto [i, j] : skew_squares(mu, nu)) {
        QtRat root = QtRat::qt_monomial(Rat(1), Partition::arm_colength(i, j),
                                        -Partition::leg_colength(i, j));
        DPoly next(acc.size() + 1);
        for (size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] += acc[k];
            next[k] -= root * acc[k];
        }
        acc = std::move(next);
    }
    return acc;
}

XPoly ShiftCtx::P_shift_basis(const Partition& nu, int n) {
    XPoly p = mac_.P(nu, n).to_xpoly();
    for (int i = 1; i <= n; ++i) p = p.scale_var(i - 1, QtRat::t(1 - i));
    return p;
}

QtRat ShiftCtx::eval_at(const ShiftedPoly& p, const Partition& la) {
    std::vector<QtRat> point;
    point.reserve(p.nvars());
    for (int i = 1; i <= p.nvars(); ++i) point.push_back(QtRat::q(la.part(i)));
    return p.eval(point);
}

QtRat ShiftCtx::pstar_value(const Partition& mu, int n, const Partition& la) {
    return eval_at(pstar(mu, n), la);
}

const ShiftedPoly& ShiftCtx::pstar(const Partition& mu, int n) {
    if (mu.length() > n) throw std::invalid_argument("pstar needs l(mu) <= n");
    auto key = std::make_pair(mu, n);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }

    // Ansatz P*_mu = P_mu(x') + sum_{nu strictly inside mu} c_nu P_nu(x'),
    // the unknowns pinned by vanishing at q^lambda for lambda strictly
    // inside mu (a square system).
    std::vector<Partition> inner;
    for (const auto& nu : enumerate_partitions(mu.size(), n))
        if (nu != mu && mu.contains(nu)) inner.push_back(nu);

    XPoly lead = P_shift_basis(mu, n);
    ShiftedPoly result = lead;
    if (!inner.empty()) {
        std::vector<XPoly> basis;
        basis.reserve(inner.size());
        for (const auto& nu : inner) basis.push_back(P_shift_basis(nu, n));
        std::vector<std::vector<QtRat>> a(inner.size(), std::vector<QtRat>(inner.size()));
        std::vector<QtRat> b(inner.size());
        for (size_t r = 0; r < inner.size(); ++r) {
            std::vector<QtRat> point;
            for (int i = 1; i <= n; ++i) point.push_back(QtRat::q(inner[r].part(i)));
            for (size_t c = 0; c < inner.size(); ++c) a[r][c] = basis[c].eval(point);
            b[r] = -lead.eval(point);
        }
        std::vector<QtRat> sol = solve_linear(std::move(a), std::move(b));
        for (size_t c = 0; c < inner.size(); ++c) {
            XPoly scaled = basis[c];
            scaled.scale(sol[c]);
            result += scaled;
        }
    }

    // Assert the remaining defining conditions: value H(mu) at q^mu and
    // vanishing on the rest of the |lambda| <= |mu| grid.
    for (const auto& la : enumerate_partitions(mu.size(), n)) {
        QtRat v = eval_at(result, la);
        QtRat want = (la == mu) ? hook_H(mu) : QtRat();
        if (v != want)
            throw linear_solve_error("interpolation output violates its defining conditions at " +
                                     la.str());
    }

    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(key, std::move(result)).first->second;
}

ShiftedPoly ShiftCtx::pstar_combinatorial(const Partition& mu, int n) {
    if (mu.length() > n) throw std::invalid_argument("pstar_combinatorial needs l(mu) <= n");
    ShiftedPoly out(n);
    for (const auto& tab : enumerate_reverse_tableaux(mu, n)) {
        QtRat weight(1);
        for (int level = 1; level <= n; ++level)
            weight *= mac_.psi(tab.layer_at_least(level), tab.layer_at_least(level + 1));
        int tpow = 0;
        XPoly prod = XPoly::one(n);
        for (auto [i, j] : squares(mu)) {
            int entry = tab.entry(i, j);
            tpow += 1 - entry;
            QtRat content = QtRat::qt_monomial(Rat(1), Partition::arm_colength(i, j),
                                               -Partition::leg_colength(i, j));
            prod *= XPoly::var(n, entry - 1) - XPoly::constant(n, content);
        }
        prod.scale(weight * QtRat::t(tpow));
        out += prod;
    }
    return out;
}

ShiftedPoly ShiftCtx::pstar_recursion(const Partition& mu, int n) {
    if (mu.length() != n) throw std::invalid_argument("pstar_recursion needs mu_n > 0");
    Partition minus = mu.all_parts_minus_one(n);
    ShiftedPoly inner = pstar(minus, n);
    for (int i = 0; i < n; ++i) inner = inner.scale_var(i, QtRat::q(-1));
    XPoly strip = XPoly::one(n);
    for (int i = 1; i <= n; ++i)
        strip *= QtRat::t(1 - i) * XPoly::var(n, i - 1) -
                 XPoly::constant(n, QtRat::t(1 - n));
    inner *= strip;
    inner.scale(QtRat::q(minus.size()));
    return inner;
}

std::map<Partition, QtRat, PartitionOrder> ShiftCtx::solve_pstar_grid(
    const std::map<Partition, QtRat, PartitionOrder>& values, int nvars, int max_size) {
    std::map<Partition, QtRat, PartitionOrder> f;
    for (const auto& la : enumerate_partitions(max_size, nvars)) {
        QtRat rhs = values.at(la);
        for (const auto& [nu, fv] : f) {
            if (fv.is_zero()) continue;
            rhs -= fv * pstar_value(nu, nvars, la);
        }
        QtRat c = rhs / hook_H(la);
        if (!c.is_zero()) f[la] = c;
    }
    return f;
}

std::map<Partition, DPoly, PartitionOrder> ShiftCtx::branch_extracted(const Partition& mu) {
    const int n = mu.length() + 1;
    const int m = mu.size();

    std::vector<QtRat> nodes;
    for (int k = 0; k <= m; ++k) nodes.emplace_back(Rat(k));

    std::map<Partition, std::vector<QtRat>, PartitionOrder> samples;
    const ShiftedPoly& pm = pstar(mu, n);
    for (const auto& node : nodes) {
        std::map<Partition, QtRat, PartitionOrder> values;
        for (const auto& la : enumerate_partitions(m, n - 1)) {
            std::vector<QtRat> point{node};
            for (int i = 1; i <= n - 1; ++i) point.push_back(QtRat::q(la.part(i)));
            values[la] = pm.eval(point);
        }
        auto f = solve_pstar_grid(values, n - 1, m);
        for (const auto& la : enumerate_partitions(m, n - 1)) {
            auto it = f.find(la);
            samples[la].push_back(it == f.end() ? QtRat() : it->second);
        }
    }

    std::map<Partition, DPoly, PartitionOrder> out;
    for (auto& [nu, vals] : samples) {
        DPoly coeffs = lagrange_coeffs(nodes, vals);
        if (coeffs.size() == 1 && coeffs[0].is_zero()) continue;
        out[nu] = std::move(coeffs);
    }

    // Re-verify the reconstruction exactly: sum_nu f_nu(d) P*_nu(x_2..x_n)
    // must reproduce P*_mu with x_1 read as d.
    XPoly recon(n);
    for (const auto& [nu, coeffs] : out) {
        XPoly embedded = pstar(nu, n - 1).insert_vars(0, 1);
        XPoly dpoly(n);
        for (size_t k = 0; k < coeffs.size(); ++k) {
            Exps e(n, 0);
            e[0] = static_cast<int>(k);
            dpoly.add_term(e, coeffs[k]);
        }
        recon += dpoly * embedded;
    }
    if (recon != pm)
        throw linear_solve_error("branching reconstruction does not match P*_mu exactly");
    return out;
}

std::map<Partition, DPoly, PartitionOrder> ShiftCtx::dilation_expansion(const Partition& mu,
                                                                        int n) {
    const int m = mu.size();
    std::vector<QtRat> nodes;
    for (int k = 0; k <= m; ++k) nodes.emplace_back(Rat(k));

    std::map<Partition, std::vector<QtRat>, PartitionOrder> samples;
    const ShiftedPoly& pm = pstar(mu, n);
    for (const auto& node : nodes) {
        std::map<Partition, QtRat, PartitionOrder> values;
        for (const auto& la : enumerate_partitions(m, n)) {
            std::vector<QtRat> point;
            for (int i = 1; i <= n; ++i) point.push_back(node * QtRat::q(la.part(i)));
            values[la] = pm.eval(point);
        }
        auto f = solve_pstar_grid(values, n, m);
        for (const auto& la : enumerate_partitions(m, n)) {
            auto it = f.find(la);
            samples[la].push_back(it == f.end() ? QtRat() : it->second);
        }
    }

    std::map<Partition, DPoly, PartitionOrder> out;
    for (auto& [nu, vals] : samples) {
        DPoly coeffs = lagrange_coeffs(nodes, vals);
        if (coeffs.size() == 1 && coeffs[0].is_zero()) continue;
        out[nu] = std::move(coeffs);
    }

    // Exact check in the ring (d, x_1..x_n): P*_mu(d x) against the
    // reconstruction.
    XPoly target(n + 1);
    for (const auto& [e, c] : pm.terms()) {
        Exps ne(n + 1, 0);
        int total = 0;
        for (int i = 0; i < n; ++i) {
            ne[i + 1] = e[i];
            total += e[i];
        }
        ne[0] = total;
        target.add_term(ne, c);
    }
    XPoly recon(n + 1);
    for (const auto& [nu, coeffs] : out) {
        XPoly embedded = pstar(nu, n).insert_vars(0, 1);
        XPoly dpoly(n + 1);
        for (size_t k = 0; k < coeffs.size(); ++k) {
            Exps e(n + 1, 0);
            e[0] = static_cast<int>(k);
            dpoly.add_term(e, coeffs[k]);
        }
        recon += dpoly * embedded;
    }
    if (recon != target)
        throw linear_solve_error("dilation reconstruction does not match P*_mu(d x) exactly");
    return out;
}

DPoly ShiftCtx::branch_closed(const Partition& mu, const Partition& nu) {
    if (!interlaces(nu, mu)) return DPoly{QtRat()};
    DPoly d = generalized_qfactorial(mu, nu);
    QtRat scale = mac_.psi(mu, nu) * QtRat::t(-nu.size());
    for (auto& c : d) c *= scale;
    return d;
}

Report ShiftCtx::verify_theorem_II(const Partition& mu, int n, int theta) {
    Instance inst{mu.str(), "", "", n, std::to_string(theta), 0};
    if (mu.length() >= n) throw std::invalid_argument("theorem II needs l(mu) < n");
    ParamSub sub = ParamSub::t_to_qpow(theta);
    auto subst = [&](const QtRat& c) { return substitute_params(c, sub); };

    XPoly f_y = pstar(mu, n - 1).map_coeffs<QtRat>(subst);
    XPoly integral = integral_representation_lhs(f_y, n, theta, true, &sub);
    XPoly w = vandermonde_theta(n, theta, true).poly.map_coeffs<QtRat>(subst);
    XPoly lhs;
    try {
        lhs = exact_divide(integral, w);
    } catch (const exact_division_error& e) {
        return Report::failed("theorem2", inst,
                              Witness{"exact division remainder", e.remainder_text, "0"});
    }
    XPoly rhs = pstar(mu, n).map_coeffs<QtRat>(subst);
    rhs.scale(QtRat::q(theta * mu.size()) * capital_C(mu, n, theta));
    return compare_polys("theorem2", inst, lhs, rhs);
}

Report ShiftCtx::verify_equivalence(const Partition& mu, int n) {
    Instance inst{mu.str(), "", "", n, "symbolic", 0};
    const ShiftedPoly& interp = pstar(mu, n);
    ShiftedPoly comb = pstar_combinatorial(mu, n);
    if (auto w = first_difference(interp, comb))
        return Report::failed("equivalence(interp,comb)", inst, std::move(*w));
    if (mu.length() == n) {
        ShiftedPoly rec = pstar_recursion(mu, n);
        if (auto w = first_difference(interp, rec))
            return Report::failed("equivalence(interp,recursion)", inst, std::move(*w));
    }
    return Report::passed("equivalence", inst);
}

Report ShiftCtx::verify_defining_conditions(const Partition& mu, int n) {
    Instance inst{mu.str(), "", "", n, "symbolic", 0};
    const ShiftedPoly& p = pstar(mu, n);
    for (const auto& la : enumerate_partitions(mu.size() + 2, n)) {
        QtRat got = eval_at(p, la);
        if (la.size() <= mu.size()) {
            QtRat want = (la == mu) ? hook_H(mu) : QtRat();
            if (got != want)
                return Report::failed("defining-conditions", inst,
                                      Witness{"q^" + la.str(), got.canonical_string(),
                                              want.canonical_string()});
        } else if (!la.contains(mu)) {
            if (!got.is_zero())
                return Report::failed("extra-vanishing", inst,
                                      Witness{"q^" + la.str(), got.canonical_string(),
                                              "(0)/(1*q^0*t^0)"});
        }
    }
    return Report::passed("defining-conditions", inst);
}

Report ShiftCtx::verify_highest_term(const Partition& mu, int n) {
    Instance inst{mu.str(), "", "", n, "symbolic", 0};
    const ShiftedPoly& p = pstar(mu, n);
    if (auto w = first_difference(p.homogeneous_component(mu.size()), P_shift_basis(mu, n)))
        return Report::failed("highest-term", inst, std::move(*w));

    // Peel homogeneous layers: every layer must expand over P_nu(x') with nu
    // strictly inside mu (the top layer being mu itself).
    XPoly h = p;
    while (!h.is_zero()) {
        int d = h.total_degree();
        XPoly top = h.homogeneous_component(d);
        XPoly plain = top;
        for (int i = 1; i <= n; ++i) plain = plain.scale_var(i - 1, QtRat::t(i - 1));
        SymPoly sym;
        try {
            sym = SymPoly::from_xpoly(plain);
        } catch (const linear_solve_error&) {
            return Report::failed("highest-term", inst,
                                  Witness{"degree " + std::to_string(d),
                                          "non-symmetric layer", "symmetric layer"});
        }
        for (const auto& [nu, c] : mac_.expand_in_P(sym)) {
            bool ok = (d == mu.size()) ? (nu == mu && c.is_one())
                                       : (nu != mu && mu.contains(nu));
            if (!ok)
                return Report::failed("highest-term", inst,
                                      Witness{"P_" + nu.str() + " at degree " + std::to_string(d),
                                              c.canonical_string(), "inside-mu support"});
            XPoly sub = P_shift_basis(nu, n);
            sub.scale(c);
            h -= sub;
        }
    }
    return Report::passed("highest-term", inst);
}

Report ShiftCtx::verify_branching(const Partition& mu) {
    Instance inst{mu.str(), "", "", mu.length() + 1, "symbolic", 0};
    std::map<Partition, DPoly, PartitionOrder> extracted;
    try {
        extracted = branch_extracted(mu);
    } catch (const linear_solve_error& e) {
        return Report::failed("branching", inst, Witness{"reconstruction", e.what(), "exact"});
    }
    for (const auto& nu : enumerate_partitions(mu.size(), mu.length() + 1 - 1)) {
        auto it = extracted.find(nu);
        DPoly got = (it == extracted.end()) ? DPoly{QtRat()} : it->second;
        DPoly want = branch_closed(mu, nu);
        // compare as polynomials in d
        size_t len = std::max(got.size(), want.size());
        for (size_t k = 0; k < len; ++k) {
            QtRat g = k < got.size() ? got[k] : QtRat();
            QtRat w = k < want.size() ? want[k] : QtRat();
            if (g != w)
                return Report::failed(
                    "branching",
                    Instance{mu.str(), nu.str(), "", mu.length() + 1, "symbolic", 0},
                    Witness{"d^" + std::to_string(k), g.canonical_string(),
                            w.canonical_string()});
        }
    }
    return Report::passed("branching", inst);
}

Report ShiftCtx::verify_shifted_symmetry(const Partition& mu, int n) {
    Instance inst{mu.str(), "", "", n, "symbolic", 0};
    const ShiftedPoly& p = pstar(mu, n);
    for (int i = 0; i + 1 < n; ++i) {
        ShiftedPoly swapped = shifted_swap(p, i);
        if (auto w = first_difference(p, swapped)) {
            w->where = "swap x" + std::to_string(i + 1) + ",x" + std::to_string(i + 2) + " at " +
                       w->where;
            return Report::failed("shifted-symmetry", inst, std::move(*w));
        }
    }
    return Report::passed("shifted-symmetry", inst);
}

Report ShiftCtx::verify_stability(const Partition& mu, int n) {
    Instance inst{mu.str(), "", "", n, "symbolic", 0};
    if (mu.length() > n) throw std::invalid_argument("stability needs l(mu) <= n");
    ShiftedPoly restricted = pstar(mu, n).eval_var(n - 1, QtRat(1)).drop_var(n - 1);
    XPoly want = (mu.length() <= n - 1) ? pstar(mu, n - 1) : XPoly::zero(n - 1);
    return compare_polys("stability", inst, restricted, want);
}

Report ShiftCtx::verify_dilation_triangularity(const Partition& mu, int n) {
    Instance inst{mu.str(), "", "", n, "symbolic", 0};
    std::map<Partition, DPoly, PartitionOrder> expansion;
    try {
        expansion = dilation_expansion(mu, n);
    } catch (const linear_solve_error& e) {
        return Report::failed("dilation-triangularity", inst,
                              Witness{"reconstruction", e.what(), "exact"});
    }
    for (const auto& [nu, coeffs] : expansion)
        if (!mu.contains(nu))
            return Report::failed("dilation-triangularity", inst,
                                  Witness{"P*_" + nu.str(), "nonzero coefficient", "0"});
    return Report::passed("dilation-triangularity", inst);
}

Report ShiftCtx::omega_star_check(const Partition& mu, const Partition& la) {
    Instance inst{mu.str(), "", la.str(), 0, "symbolic", 0};
    Partition muc = mu.conjugate();
    Partition lac = la.conjugate();
    int n = std::max({mu.length(), muc.length(), la.length(), lac.length(), 1});

    QtRat lhs = eval_at(pstar(mu, n), lac);

    ShiftedPoly swapped = pstar(muc, n).map_coeffs<QtRat>(
        [](const QtRat& c) { return substitute_params(c, ParamSub::swap_invert()); });
    std::vector<QtRat> point;
    for (int i = 1; i <= n; ++i) point.push_back(QtRat::t(-la.part(i)));
    QtRat rhs = swapped.eval(point);
    rhs *= b_lambda(muc, true);
    rhs *= QtRat::t(mu.size());
    if (mu.size() % 2 == 1) rhs = -rhs;

    if (lhs == rhs) return Report::passed("duality", inst);
    return Report::failed("duality", inst,
                          Witness{"value", lhs.canonical_string(), rhs.canonical_string()});
}

Report ShiftCtx::powersum_duality_check(int k, const Partition& la) {
    Instance inst{"", "", la.str(), 0, "symbolic", k};
    QtRat lhs;
    for (int i = 1; i <= la.length(); ++i)
        lhs += QtRat::t(k * (1 - i)) * (QtRat::q(k * la.part(i)) - QtRat(1));
    lhs /= QtRat::q(k) - QtRat(1);

    Partition lac = la.conjugate();
    QtRat rhs;
    for (int j = 1; j <= lac.length(); ++j)
        rhs += QtRat::q(k * (j - 1)) * (QtRat::t(-k * lac.part(j)) - QtRat(1));
    rhs /= QtRat::t(-k) - QtRat(1);

    if (lhs == rhs) return Report::passed("powersum-duality", inst);
    return Report::failed("powersum-duality", inst,
                          Witness{"value", lhs.canonical_string(), rhs.canonical_string()});
}

} // namespace macshift
