#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "macshift/hooks.hpp"
#include "macshift/macdonald.hpp"

namespace macshift {

// A shifted symmetric polynomial is an ordinary XPoly that is invariant in
// the variables x_i t^{1-i}; the invariant is checked, not encoded.
using ShiftedPoly = XPoly;

// Adjacent swap in the shifted variables: x_i -> x_{i+1}/t, x_{i+1} -> t x_i.
ShiftedPoly shifted_swap(const ShiftedPoly& p, int i);
bool is_shifted_symmetric(const ShiftedPoly& p);

// Coefficients (ascending in d) of a polynomial in the single symbol d.
using DPoly = std::vector<QtRat>;

// <d>_{mu/nu} = prod_{s in mu/nu} (d - q^{a'(s)} t^{-l'(s)}).
DPoly generalized_qfactorial(const Partition& mu, const Partition& nu);

// Shifted (interpolation) Macdonald polynomials and their identities.
class ShiftCtx {
public:
    explicit ShiftCtx(MacCtx& mac) : mac_(mac) {}

    MacCtx& mac() { return mac_; }

    // P_nu evaluated in the shifted variables x_i t^{1-i}.
    XPoly P_shift_basis(const Partition& nu, int n);

    // Interpolation construction (the reference one, cached): leading term
    // P_mu(x') plus a correction solved from vanishing at q^lambda for
    // lambda strictly inside mu; the remaining defining conditions are
    // asserted afterwards.
    const ShiftedPoly& pstar(const Partition& mu, int n);

    // Reverse-tableau sum.
    ShiftedPoly pstar_combinatorial(const Partition& mu, int n);

    // Row-stripping recursion; requires mu_n > 0.
    ShiftedPoly pstar_recursion(const Partition& mu, int n);

    // Evaluation at the grid point q^lambda (coordinates 1 beyond l(lambda)).
    QtRat eval_at(const ShiftedPoly& p, const Partition& la);
    QtRat pstar_value(const Partition& mu, int n, const Partition& la);

    // f_{mu,nu}(d) in closed form: psi_{mu,nu} t^{-|nu|} <d>_{mu/nu}.
    DPoly branch_closed(const Partition& mu, const Partition& nu);

    // f_{mu,nu}(d) extracted from the expansion of P*_mu(d, x_2..x_n) over
    // {P*_nu(x_2..x_n)}, for every nu with |nu| <= |mu| (zero rows included).
    // The reconstruction is re-verified symbolically before returning.
    std::map<Partition, DPoly, PartitionOrder> branch_extracted(const Partition& mu);

    // Dilation expansion P*_mu(d x) = sum c_nu(d) P*_nu(x), same machinery.
    std::map<Partition, DPoly, PartitionOrder> dilation_expansion(const Partition& mu, int n);

    Report verify_theorem_II(const Partition& mu, int n, int theta);
    Report verify_equivalence(const Partition& mu, int n);
    Report verify_defining_conditions(const Partition& mu, int n);
    Report verify_highest_term(const Partition& mu, int n);
    Report verify_branching(const Partition& mu);
    Report verify_shifted_symmetry(const Partition& mu, int n);
    Report verify_stability(const Partition& mu, int n);
    Report verify_dilation_triangularity(const Partition& mu, int n);
    Report omega_star_check(const Partition& mu, const Partition& la);
    Report powersum_duality_check(int k, const Partition& la);

private:
    // Triangular solve of sum_nu f_nu P*_nu(q^la) = values over the grid of
    // all partitions with |la| <= max_size, l(la) <= nvars.
    std::map<Partition, QtRat, PartitionOrder> solve_pstar_grid(
        const std::map<Partition, QtRat, PartitionOrder>& values, int nvars, int max_size);

    MacCtx& mac_;
    std::map<std::pair<Partition, int>, ShiftedPoly> cache_;
    std::mutex mutex_;
};

} // namespace macshift
