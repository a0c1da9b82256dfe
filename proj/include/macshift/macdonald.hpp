#pragma once

#include <map>
#include <mutex>

#include "macshift/mpoly.hpp"
#include "macshift/partitions.hpp"
#include "macshift/qcalc.hpp"
#include "macshift/report.hpp"
#include "macshift/sympoly.hpp"

namespace macshift {

// A member of the family of q-difference operators around Eq-style
//   sum_i prod_{j != i} (alpha x_i - x_j)/(x_i - x_j) T_i
// where T_i scales x_i by `shift`.  With inverse_form the coefficient is
// prod_{j != i} (alpha x_j - x_i)/(x_j - x_i) instead, which realizes the
// operator acting on 1/x.
struct DOperatorSpec {
    QtRat alpha;
    QtRat shift;
    bool inverse_form = false;

    static DOperatorSpec standard() { return {QtRat::t(), QtRat::q()}; }                 // D(q,t)
    static DOperatorSpec inverted() { return {QtRat::t(-1), QtRat::q(-1)}; }             // D(1/q,1/t)
    static DOperatorSpec mixed_tq() { return {QtRat::t() / QtRat::q(), QtRat::q(-1)}; }  // D(1/q,t/q)
    static DOperatorSpec mixed_qt() { return {QtRat::q() / QtRat::t(), QtRat::q()}; }    // D(q,q/t)
    static DOperatorSpec one_over_x() { return {QtRat::t(), QtRat::q(-1), true}; }       // D_{1/x}(q,t)
};

// Applies the operator to a symmetric polynomial; the Vandermonde division
// is exact there.
XPoly apply_D(const XPoly& f, const DOperatorSpec& spec);
SymPoly apply_D(const SymPoly& f, const DOperatorSpec& spec);

// Eigenvalue sum q^{mu_i} t^{n-i} (i = 1..n), optionally with substituted
// parameter slots.
QtRat D_eigenvalue(const Partition& mu, int n);

// Macdonald polynomials and the branching coefficients extracted from them.
// Caches are guarded; values are immutable once published.
class MacCtx {
public:
    // P_mu in n variables by the triangular eigenvector solve.
    const SymPoly& P(const Partition& mu, int n);

    // Independent construction: the tableau sum with psi weights.
    SymPoly P_tableaux(const Partition& mu, int n);

    // Branching coefficient psi_{mu,nu}; zero unless nu interlaces mu.
    QtRat psi(const Partition& mu, const Partition& nu);

    // Expansion of a symmetric polynomial over {P_lambda}; throws
    // linear_solve_error if the elimination leaves a residual.
    std::map<Partition, QtRat, PartitionOrder> expand_in_P(const SymPoly& f);

    // LHS of the q-integral representation as a polynomial in x (the cleared
    // integral divided exactly by the cleared V^theta), with t = q^theta.
    XPoly theorem_I_lhs(const Partition& mu, int n, int theta);

    Report verify_theorem_I(const Partition& mu, int n, int theta);

    // Operator identities.
    Report eigen_check(const Partition& mu, int n);
    Report lemma_3_10_check(const Partition& la, int n, int theta);
    Report lemma_3_11_check(const Partition& la, int n);
    Report E_stability_check(const Partition& la, int n);

private:
    // All branching coefficients out of mu, keyed by nu.
    const std::map<Partition, QtRat, PartitionOrder>& psi_row(const Partition& mu);

    std::map<std::pair<Partition, int>, SymPoly> p_cache_;
    std::map<Partition, std::map<Partition, QtRat, PartitionOrder>> psi_cache_;
    std::mutex mutex_;
};

// E = t^{-n} D - sum_{i=1}^n t^{-i}, the stable modification of D.
SymPoly apply_E(const SymPoly& f);

} // namespace macshift
