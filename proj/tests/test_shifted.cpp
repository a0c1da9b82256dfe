#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macshift/qcalc.hpp"
#include "macshift/shifted.hpp"

using namespace macshift;

namespace {

const QtRat Q = QtRat::q();
const QtRat T = QtRat::t();

ShiftCtx& ctx() {
    static MacCtx mac;
    static ShiftCtx c(mac);
    return c;
}

QtRat dpoly_eval(const DPoly& f, const QtRat& v) {
    QtRat acc;
    for (size_t k = f.size(); k-- > 0;) acc = acc * v + f[k];
    return acc;
}

// P*_{(1^k)} from the closed display: sum over i_1 < ... < i_k of
// t^{k - sum i_s} prod_s (x_{i_s} - t^{s-k}).
ShiftedPoly elementary_shifted(int k, int n) {
    ShiftedPoly out(n);
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == k) {
            int isum = 0;
            XPoly prod = XPoly::one(n);
            for (int s = 1; s <= k; ++s) {
                isum += idx[s - 1];
                prod *= XPoly::var(n, idx[s - 1] - 1) - XPoly::constant(n, QtRat::t(s - k));
            }
            prod.scale(QtRat::t(k - isum));
            out += prod;
            return;
        }
        for (int i = from; i <= n; ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

} // namespace

TEST_CASE("pstar interpolation basic values") {
    // P*_(1) in two variables: (x1 - 1) + t^{-1} (x2 - 1)
    ShiftedPoly expect = XPoly::var(2, 0) - XPoly::one(2) +
                         QtRat::t(-1) * (XPoly::var(2, 1) - XPoly::one(2));
    CHECK(ctx().pstar(Partition({1}), 2) == expect);

    CHECK(ctx().pstar(Partition{}, 3) == XPoly::one(3));

    // value at q^{(1)} = (q, 1) is H((1)) = q - 1
    CHECK(ctx().pstar_value(Partition({1}), 2, Partition({1})) == Q - QtRat(1));
    CHECK(ctx().pstar_value(Partition({1}), 2, Partition{}).is_zero());
    CHECK(ctx().pstar_value(Partition({2}), 2, Partition({1})).is_zero());
}

TEST_CASE("column shapes match the closed display") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<int> col(k, 1);
            Partition mu(std::move(col));
            INFO("k=", k, " n=", n);
            CHECK(ctx().pstar(mu, n) == elementary_shifted(k, n));
        }
}

TEST_CASE("pstar combinatorial and recursion examples") {
    // single box, two variables: sum_i t^{1-i}(x_i - 1)
    CHECK(ctx().pstar_combinatorial(Partition({1}), 2) == ctx().pstar(Partition({1}), 2));

    // mu=(2), n=1: one tableau, (x1-1)(x1-q)
    ShiftedPoly p21 = ctx().pstar_combinatorial(Partition({2}), 1);
    XPoly x1 = XPoly::var(1, 0);
    CHECK(p21 == (x1 - XPoly::one(1)) * (x1 - XPoly::constant(1, Q)));

    // recursion base cases
    CHECK(ctx().pstar_recursion(Partition({1}), 1) == x1 - XPoly::one(1));
    CHECK(ctx().pstar_recursion(Partition({2}), 1) ==
          (x1 - XPoly::one(1)) * (x1 - XPoly::constant(1, Q)));
    CHECK(ctx().pstar_recursion(Partition({1, 1}), 2) == ctx().pstar(Partition({1, 1}), 2));
}

TEST_CASE("construction equivalence on a small box") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(3, n)) {
            INFO("mu=", mu.str(), " n=", n);
            Report r = ctx().verify_equivalence(mu, n);
            if (r.witness) INFO("witness ", r.witness->where, " lhs=", r.witness->lhs);
            CHECK(r.pass);
        }
}

TEST_CASE("defining conditions and extra vanishing") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(3, n)) {
            INFO("mu=", mu.str(), " n=", n);
            CHECK(ctx().verify_defining_conditions(mu, n).pass);
        }
}

TEST_CASE("shifted symmetry") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(3, n)) {
            INFO("mu=", mu.str(), " n=", n);
            CHECK(ctx().verify_shifted_symmetry(mu, n).pass);
        }
    // and a negative control: x1 alone is not shifted symmetric
    CHECK_FALSE(is_shifted_symmetric(XPoly::var(2, 0)));
}

TEST_CASE("highest term identification") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(3, n)) {
            INFO("mu=", mu.str(), " n=", n);
            CHECK(ctx().verify_highest_term(mu, n).pass);
        }
}

TEST_CASE("stability under x_n = 1") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(3, n)) {
            INFO("mu=", mu.str(), " n=", n);
            CHECK(ctx().verify_stability(mu, n).pass);
        }
}

TEST_CASE("generalized q-factorial") {
    // <d>_{(r)/empty} = <d>_r
    for (int r = 0; r <= 3; ++r) {
        DPoly got = generalized_qfactorial(Partition(std::vector<int>(r > 0 ? 1 : 0, r)), Partition{});
        XPoly d = XPoly::var(1, 0);
        XPoly want = q_falling(d, r);
        XPoly gotp(1);
        for (size_t k = 0; k < got.size(); ++k) gotp.add_term(Exps{static_cast<int>(k)}, got[k]);
        CHECK(gotp == want);
    }
    // mu = nu: empty product
    CHECK(generalized_qfactorial(Partition({2, 1}), Partition({2, 1})) == DPoly{QtRat(1)});
    // (1,1)/(1): square (2,1) has a'=0, l'=1: d - t^{-1}
    DPoly g = generalized_qfactorial(Partition({1, 1}), Partition({1}));
    REQUIRE(g.size() == 2);
    CHECK(g[1].is_one());
    CHECK(g[0] == -QtRat::t(-1));
}

TEST_CASE("branching closed forms") {
    // f_{(1),empty} = d - 1
    DPoly f = ctx().branch_closed(Partition({1}), Partition{});
    REQUIRE(f.size() == 2);
    CHECK(f[0] == QtRat(-1));
    CHECK(f[1].is_one());
    // f_{(1),(1)} = t^{-1}
    DPoly g = ctx().branch_closed(Partition({1}), Partition({1}));
    REQUIRE(g.size() == 1);
    CHECK(g[0] == QtRat::t(-1));
    // f_{(2),(1)} = psi_{(2),(1)} t^{-1} (d - q)
    DPoly h = ctx().branch_closed(Partition({2}), Partition({1}));
    QtRat psi = ctx().mac().psi(Partition({2}), Partition({1}));
    REQUIRE(h.size() == 2);
    CHECK(h[1] == psi * QtRat::t(-1));
    CHECK(h[0] == -psi * QtRat::t(-1) * Q);
}

TEST_CASE("branching: extraction equals closed form") {
    for (const auto& mu : enumerate_partitions(3, 3)) {
        INFO("mu=", mu.str());
        Report r = ctx().verify_branching(mu);
        if (r.witness) INFO("witness ", r.witness->where, " lhs=", r.witness->lhs,
                            " rhs=", r.witness->rhs);
        CHECK(r.pass);
    }
}

TEST_CASE("branching zeros along the strip rows") {
    // f_{mu,nu}(q^m t^{1-i}) = 0 for m = nu_i, ..., mu_i - 1
    Partition mu({2, 1});
    auto extracted = ctx().branch_extracted(mu);
    for (const auto& [nu, f] : extracted) {
        for (int i = 1; i <= mu.length(); ++i)
            for (int m = nu.part(i); m < mu.part(i); ++m) {
                QtRat point = QtRat::qt_monomial(Rat(1), m, 1 - i);
                INFO("nu=", nu.str(), " i=", i, " m=", m);
                CHECK(dpoly_eval(f, point).is_zero());
            }
    }
}

TEST_CASE("dilation triangularity") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(3, n)) {
            INFO("mu=", mu.str(), " n=", n);
            CHECK(ctx().verify_dilation_triangularity(mu, n).pass);
        }
}

TEST_CASE("theorem II small instances") {
    CHECK(ctx().verify_theorem_II(Partition{}, 2, 1).pass);
    CHECK(ctx().verify_theorem_II(Partition({1}), 2, 1).pass);
    CHECK(ctx().verify_theorem_II(Partition({1}), 2, 2).pass);
    CHECK(ctx().verify_theorem_II(Partition({2}), 2, 1).pass);
    CHECK(ctx().verify_theorem_II(Partition({1, 1}), 3, 1).pass);
}

TEST_CASE("theorem II worked example at n=2, theta=1") {
    // LHS integrand is P*_(1)(y) = y - 1 over [x2, q x1]; everything is
    // desk-checkable through the beta value B_q(2,1) = 1/[2].
    Partition mu({1});
    ParamSub sub = ParamSub::t_to_qpow(1);
    XPoly lhs_int = integral_representation_lhs(
        ctx().pstar(mu, 1).map_coeffs<QtRat>(
            [&](const QtRat& c) { return substitute_params(c, sub); }),
        2, 1, true, &sub);
    XPoly w = vandermonde_theta(2, 1, true).poly.map_coeffs<QtRat>(
        [&](const QtRat& c) { return substitute_params(c, sub); });
    XPoly lhs = exact_divide(lhs_int, w);
    XPoly rhs = ctx().pstar(mu, 2).map_coeffs<QtRat>(
        [&](const QtRat& c) { return substitute_params(c, sub); });
    rhs.scale(QtRat::q(1) * q_beta_int(2, 1));
    CHECK(lhs == rhs);
}

TEST_CASE("duality by evaluation") {
    // hand case: mu = (1), lambda = (1): both sides q - 1
    CHECK(ctx().omega_star_check(Partition({1}), Partition({1})).pass);
    // trivial vanishing: mu = (1), lambda = empty
    CHECK(ctx().omega_star_check(Partition({1}), Partition{}).pass);
    // machine case
    CHECK(ctx().omega_star_check(Partition({2, 1}), Partition({2, 1})).pass);
    CHECK(ctx().omega_star_check(Partition({2}), Partition({1, 1})).pass);
}

TEST_CASE("power sum duality") {
    CHECK(ctx().powersum_duality_check(1, Partition({1})).pass);
    CHECK(ctx().powersum_duality_check(1, Partition{}).pass);
    CHECK(ctx().powersum_duality_check(2, Partition({2, 1})).pass);
    CHECK(ctx().powersum_duality_check(3, Partition({3, 1, 1})).pass);

    // k=1, lambda=(1): both sides are exactly 1
    QtRat lhs = (Q - QtRat(1)) / (Q - QtRat(1));
    CHECK(lhs.is_one());
}
