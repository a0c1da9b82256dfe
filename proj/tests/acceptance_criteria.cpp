// Acceptance suite: every criterion is an exact identity over the coefficient
// field, tolerance zero; one pass/fail line per criterion.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "macshift/jack.hpp"
#include "macshift/qcalc.hpp"
#include "macshift/shifted.hpp"
#include "oracles.hpp"

using namespace macshift;

namespace {

MacCtx g_mac;
ShiftCtx g_shift(g_mac);
JackCtx g_jack(g_shift);

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& text) { g_notes.push_back(text); }

bool report_check(bool ok, const std::string& what) {
    if (!ok) note("  subcheck failed: " + what);
    return ok;
}

bool check_report(const Report& r, const std::string& what) {
    if (!r.pass) {
        std::string detail = what;
        if (r.witness)
            detail += " [" + r.witness->where + ": " + r.witness->lhs + " vs " + r.witness->rhs + "]";
        note("  subcheck failed: " + detail);
    }
    return r.pass;
}

template <class F>
void criterion(int index, const std::string& title, F body) {
    g_notes.clear();
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note(std::string("  exception: ") + e.what());
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << title << " ("
              << static_cast<int>(secs * 1000) << " ms)" << std::endl;
    for (const auto& line : g_notes) std::cout << line << std::endl;
    if (!ok) ++g_failures;
}

// ---------------------------------------------------------------------------

bool criterion_1() {
    bool ok = true;
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(4, n))
            ok &= check_report(g_shift.verify_equivalence(mu, n),
                               "equivalence mu=" + mu.str() + " n=" + std::to_string(n));
    return ok;
}

bool criterion_2() {
    bool ok = true;
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(4, n))
            ok &= check_report(g_shift.verify_defining_conditions(mu, n),
                               "conditions mu=" + mu.str() + " n=" + std::to_string(n));
    return ok;
}

bool criterion_3() {
    bool ok = true;
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(4, n))
            ok &= check_report(g_shift.verify_highest_term(mu, n),
                               "highest term mu=" + mu.str() + " n=" + std::to_string(n));
    return ok;
}

bool criterion_4() {
    bool ok = true;
    for (int theta : {1, 2})
        for (int n : {2, 3})
            for (const auto& mu : enumerate_partitions(3, n - 1))
                ok &= check_report(g_mac.verify_theorem_I(mu, n, theta),
                                   "theorem I mu=" + mu.str() + " n=" + std::to_string(n) +
                                       " theta=" + std::to_string(theta));
    // Schur reduction at t = q against the semistandard oracle
    for (int n = 2; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(4, n)) {
            SymPoly at_tq = g_mac.P(mu, n).map_params(ParamSub::t_to_qpow(1));
            bool qfree = true;
            for (const auto& [la, c] : at_tq.coeffs()) qfree &= c.is_constant();
            ok &= report_check(qfree, "Schur coefficients q-free mu=" + mu.str());
            ok &= report_check(at_tq.to_xpoly() == oracles::schur_ssyt(mu, n),
                               "Schur oracle mu=" + mu.str() + " n=" + std::to_string(n));
        }
    return ok;
}

bool criterion_5() {
    bool ok = true;
    for (int theta : {1, 2})
        for (int n : {2, 3})
            for (const auto& mu : enumerate_partitions(3, n - 1))
                ok &= check_report(g_shift.verify_theorem_II(mu, n, theta),
                                   "theorem II mu=" + mu.str() + " n=" + std::to_string(n) +
                                       " theta=" + std::to_string(theta));
    return ok;
}

bool criterion_6() {
    bool ok = true;
    for (const auto& mu : enumerate_partitions(4, 4))
        ok &= check_report(g_shift.verify_branching(mu), "branching mu=" + mu.str());
    return ok;
}

bool criterion_7() {
    bool ok = true;
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(4, n))
            ok &= check_report(g_mac.eigen_check(mu, n),
                               "eigen mu=" + mu.str() + " n=" + std::to_string(n));
    for (int n : {2, 3})
        for (const auto& la : enumerate_partitions(3, n)) {
            for (int theta : {1, 2})
                ok &= check_report(g_mac.lemma_3_10_check(la, n, theta),
                                   "lemma 3.10 la=" + la.str() + " n=" + std::to_string(n) +
                                       " theta=" + std::to_string(theta));
            ok &= check_report(g_mac.lemma_3_11_check(la, n),
                               "lemma 3.11 la=" + la.str() + " n=" + std::to_string(n));
        }
    for (int n : {2, 3, 4})
        for (const auto& la : enumerate_partitions(3, n))
            ok &= check_report(g_mac.E_stability_check(la, n),
                               "E stability la=" + la.str() + " n=" + std::to_string(n));
    return ok;
}

bool criterion_8() {
    bool ok = true;
    for (const auto& mu : enumerate_partitions(3, 3))
        for (const auto& la : enumerate_partitions(mu.size() + 2, mu.size() + 2))
            ok &= check_report(g_shift.omega_star_check(mu, la),
                               "duality mu=" + mu.str() + " lambda=" + la.str());
    for (int k = 1; k <= 3; ++k)
        for (const auto& la : enumerate_partitions(5, 5))
            ok &= check_report(g_shift.powersum_duality_check(k, la),
                               "power sums k=" + std::to_string(k) + " lambda=" + la.str());
    return ok;
}

bool criterion_9() {
    bool ok = true;
    for (const Rat& theta : {Rat(1), Rat(2), Rat(1, 2)})
        for (const auto& mu : enumerate_partitions(4, 4)) {
            ok &= check_report(g_jack.verify_symmetry(mu, mu.length() + 1, theta),
                               "jack symmetry mu=" + mu.str() + " theta=" + theta.get_str());
            ok &= check_report(g_jack.verify_vanishing(mu, theta),
                               "jack vanishing mu=" + mu.str() + " theta=" + theta.get_str());
            ok &= check_report(g_jack.verify_normalization(mu, theta),
                               "jack normalization mu=" + mu.str() + " theta=" + theta.get_str());
        }
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(4, n))
            ok &= check_report(g_jack.verify_schur_degeneration(mu, n),
                               "shifted Schur reduction mu=" + mu.str());
    for (int theta : {1, 2})
        for (const auto& mu : enumerate_partitions(3, 3))
            ok &= check_report(g_jack.verify_limit_pointwise(mu, theta),
                               "pointwise limit mu=" + mu.str() + " theta=" + std::to_string(theta));
    return ok;
}

bool criterion_10() {
    bool ok = true;
    for (int theta : {1, 2})
        for (int n : {2, 3})
            for (const auto& mu : enumerate_partitions(3, n - 1))
                ok &= check_report(g_jack.verify_coherence(mu, n, theta),
                                   "coherence mu=" + mu.str() + " n=" + std::to_string(n) +
                                       " theta=" + std::to_string(theta));
    return ok;
}

bool criterion_11() {
    bool ok = true;

    // Lemma 3.1: averaged single q-integrals of y^r are symmetric
    {
        XPoly x1 = XPoly::var(3, 0), x2 = XPoly::var(3, 1), y = XPoly::var(3, 2);
        for (int r = 0; r <= 5; ++r) {
            XPoly out = exact_divide(q_integral(y.pow(r), 2, x2, x1), x1 - x2);
            ok &= report_check(out.drop_var(2).symmetric(), "lemma 3.1 r=" + std::to_string(r));
        }
    }

    // Lemma 3.2: integrals against V(y) are skew-symmetric
    for (int n : {2, 3, 4})
        for (const auto& la : enumerate_partitions(4, n - 1)) {
            XPoly integ = integral_representation_lhs(monomial_sym_xpoly(n - 1, la), n, 1, false);
            bool skew = true;
            for (int i = 0; i + 1 < n; ++i) {
                std::vector<int> perm(n);
                for (int k = 0; k < n; ++k) perm[k] = k;
                std::swap(perm[i], perm[i + 1]);
                skew &= (integ.permute_vars(perm) == -integ);
            }
            ok &= report_check(skew, "lemma 3.2 la=" + la.str() + " n=" + std::to_string(n));
        }

    // Prop 3.4: the averaged integral is symmetric of degree deg f
    for (int theta : {1, 2, 3})
        for (int n : {2, 3})
            for (const auto& la : enumerate_partitions(3, n - 1)) {
                XPoly integ =
                    integral_representation_lhs(monomial_sym_xpoly(n - 1, la), n, theta, false);
                XPoly ratio = exact_divide(integ, vandermonde_theta(n, theta, false).poly);
                ok &= report_check(ratio.symmetric() && ratio.total_degree() == la.size(),
                                   "prop 3.4 la=" + la.str() + " n=" + std::to_string(n) +
                                       " theta=" + std::to_string(theta));
            }

    // Lemma 4.3 with the even-theta sign correction
    for (int theta = 1; theta <= 4; ++theta) {
        XPoly a = XPoly::var(1, 0);
        XPoly lhs = pochhammer(QtRat::q(1 - theta) * a, theta - 1) * a.pow(theta - 1);
        XPoly rhs_den = XPoly::one(1);
        for (int s = 1; s <= theta - 1; ++s) rhs_den *= a - XPoly::constant(1, QtRat::q(s));
        QtRat c = QtRat::q(-theta * (theta - 1) / 2);
        if ((theta - 1) % 2 == 1) c = -c;
        ok &= report_check(lhs == (c * a.pow(theta - 1)) * rhs_den,
                           "lemma 4.3 theta=" + std::to_string(theta));
    }

    // Lemma 4.4: V^{*theta}(q^mu) != 0
    for (int theta : {1, 2, 3})
        for (const auto& mu : enumerate_partitions(5, 4))
            for (int n = std::max(2, mu.length()); n <= 4; ++n) {
                ParamSub sub = ParamSub::t_to_qpow(theta);
                XPoly w = vandermonde_theta(n, theta, true).poly.map_coeffs<QtRat>(
                    [&](const QtRat& cc) { return substitute_params(cc, sub); });
                std::vector<QtRat> pt;
                for (int i = 1; i <= n; ++i) pt.push_back(QtRat::q(mu.part(i)));
                ok &= report_check(!w.eval(pt).is_zero(),
                                   "lemma 4.4 mu=" + mu.str() + " n=" + std::to_string(n) +
                                       " theta=" + std::to_string(theta));
            }

    // Prop 3.10: leading coefficient of the integral side equals C(mu,n)
    for (int theta : {1, 2})
        for (int n : {2, 3})
            for (const auto& mu : enumerate_partitions(3, n - 1)) {
                XPoly lhs = g_mac.theorem_I_lhs(mu, n, theta);
                Exps e(n, 0);
                for (int i = 1; i <= n; ++i) e[i - 1] = mu.part(i);
                ok &= report_check(lhs.coeff(e) == capital_C(mu, n, theta),
                                   "prop 3.10 mu=" + mu.str() + " n=" + std::to_string(n) +
                                       " theta=" + std::to_string(theta));
            }

    // Prop 5.1: dilation triangularity
    for (const auto& mu : enumerate_partitions(3, 3))
        ok &= check_report(
            g_shift.verify_dilation_triangularity(mu, std::max(1, mu.length()) + 1),
            "prop 5.1 mu=" + mu.str());

    // Prop 4.1: stability
    for (int n = 2; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(4, n))
            ok &= check_report(g_shift.verify_stability(mu, n),
                               "stability mu=" + mu.str() + " n=" + std::to_string(n));

    // hook-sum identities
    for (const auto& mu : enumerate_partitions(8, 8)) {
        int legs = 0, arms = 0;
        for (auto [i, j] : squares(mu)) {
            legs += mu.leg(i, j);
            arms += mu.arm(i, j);
        }
        ok &= report_check(legs == mu.n_stat() && arms == mu.conjugate().n_stat(),
                           "hook sums mu=" + mu.str());
    }

    return ok;
}

} // namespace

int main() {
    criterion(1, "construction equivalence (interp = comb = recursion), |mu| <= 4, n <= 4",
              criterion_1);
    criterion(2, "defining conditions and extra vanishing, |mu| <= 4, n <= 4", criterion_2);
    criterion(3, "highest-term identification, |mu| <= 4, n <= 4", criterion_3);
    criterion(4, "theorem I with Schur oracle, theta in {1,2}, n in {2,3}, |mu| <= 3",
              criterion_4);
    criterion(5, "theorem II, theta in {1,2}, n in {2,3}, |mu| <= 3", criterion_5);
    criterion(6, "theorem III branching, extracted = closed form, |mu| <= 4", criterion_6);
    criterion(7, "eigen relation and operator lemmas", criterion_7);
    criterion(8, "theorem IV duality and power-sum identity", criterion_8);
    criterion(9, "jack properties, theta in {1, 2, 1/2}", criterion_9);
    criterion(10, "coherence, theta in {1,2}, n in {2,3}, |mu| <= 3", criterion_10);
    criterion(11, "module property suites", criterion_11);

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED" << std::endl;
    return 1;
}
