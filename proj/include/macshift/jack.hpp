#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "macshift/mpoly.hpp"
#include "macshift/partitions.hpp"
#include "macshift/report.hpp"
#include "macshift/shifted.hpp"

namespace macshift {

// Univariate rational function of the Jack parameter theta over Q, with
// reduced monic-denominator normal form.
class ThetaRat {
public:
    ThetaRat() : num_{}, den_{Rat(1)} {}
    ThetaRat(const Rat& c) : num_{}, den_{Rat(1)} {
        if (c != 0) num_ = {c};
    }
    ThetaRat(int c) : ThetaRat(Rat(c)) {}
    ThetaRat(std::vector<Rat> num, std::vector<Rat> den);

    static ThetaRat theta() { return ThetaRat({Rat(0), Rat(1)}, {Rat(1)}); }

    const std::vector<Rat>& num() const { return num_; } // ascending, trimmed
    const std::vector<Rat>& den() const { return den_; } // monic

    bool is_zero() const { return num_.empty(); }
    bool is_one() const { return den_.size() == 1 && num_.size() == 1 && num_[0] == 1; }
    bool is_constant() const { return num_.size() <= 1 && den_.size() == 1; }
    Rat constant_value() const { return num_.empty() ? Rat(0) : num_[0] / den_[0]; }

    ThetaRat operator-() const;
    friend ThetaRat operator+(const ThetaRat& a, const ThetaRat& b);
    friend ThetaRat operator-(const ThetaRat& a, const ThetaRat& b);
    friend ThetaRat operator*(const ThetaRat& a, const ThetaRat& b);
    friend ThetaRat operator/(const ThetaRat& a, const ThetaRat& b);
    ThetaRat& operator+=(const ThetaRat& o) { return *this = *this + o; }
    ThetaRat& operator-=(const ThetaRat& o) { return *this = *this - o; }
    ThetaRat& operator*=(const ThetaRat& o) { return *this = *this * o; }
    ThetaRat& operator/=(const ThetaRat& o) { return *this = *this / o; }

    bool operator==(const ThetaRat&) const = default;

    Rat eval(const Rat& th) const; // throws zero_division_error on a pole

    std::string canonical_string() const; // "(c*theta^k+...)/(...)"
    std::string pretty_string() const;

private:
    void reduce_();
    std::vector<Rat> num_, den_;
};

template <>
struct FieldOps<ThetaRat> {
    static ThetaRat zero() { return ThetaRat(); }
    static ThetaRat one() { return ThetaRat(1); }
    static bool is_zero(const ThetaRat& x) { return x.is_zero(); }
    static bool is_one(const ThetaRat& x) { return x.is_one(); }
    static std::string str(const ThetaRat& x) { return x.canonical_string(); }
    static std::string pretty(const ThetaRat& x) { return x.pretty_string(); }
};

using JackPoly = MPoly<Rat>;            // theta specialized to a rational
using JackPolySym = MPoly<ThetaRat>;    // theta kept symbolic

// Adjacent swap in the additively shifted variables:
// x_i -> x_{i+1} + theta, x_{i+1} -> x_i - theta.
JackPoly jack_shifted_swap(const JackPoly& p, int i, const Rat& theta);
bool is_jack_shifted_symmetric(const JackPoly& p, const Rat& theta);

// <z>_{mu/nu} at parameter theta: prod_{s in mu/nu} (z - a'(s) + theta l'(s)),
// with z given as a polynomial.
JackPoly jack_falling_skew(const JackPoly& z, const Partition& mu, const Partition& nu,
                           const Rat& theta);

// H(mu; theta) = prod (a(s) + theta l(s) + 1).
Rat jack_hook_H(const Partition& mu, const Rat& theta);

// Formal finite sum over y from `lower` to `upper` (both polynomials in the
// remaining variables), through the falling-factorial rule
// sum <y>_r = (<upper+1>_{r+1} - <lower>_{r+1})/(r+1).
JackPoly finite_sum(const JackPoly& f, int var, const JackPoly& lower, const JackPoly& upper);

// V^{*theta}(x) and beta^*(y,x;theta) of the degenerate picture; integer
// theta keeps both polynomial.  Same ring layout as qcalc (x then y).
JackPoly jack_vandermonde_star(int n, int theta);
JackPoly jack_beta_star(int n, int theta);

// Shifted Jack polynomials by the branching recursion.
class JackCtx {
public:
    explicit JackCtx(ShiftCtx& shift) : shift_(shift) {}

    // Branching coefficient as the u -> 1 limit of the Macdonald psi at
    // q = u^r, t = u^p where theta = p/r.
    Rat psi(const Partition& mu, const Partition& nu, const Rat& theta);

    // Symbolic-theta branching coefficient by rational reconstruction from
    // exact rational samples.
    ThetaRat psi_symbolic(const Partition& mu, const Partition& nu);

    const JackPoly& pstar(const Partition& mu, int n, const Rat& theta);
    JackPolySym pstar_symbolic(const Partition& mu, int n);

    // Evaluation at the integer point lambda (coordinates 0 beyond l(lambda)).
    Rat eval_at(const JackPoly& p, const Partition& la);
    Rat pstar_value(const Partition& mu, int n, const Partition& la, const Rat& theta);

    Report verify_vanishing(const Partition& mu, const Rat& theta);
    Report verify_normalization(const Partition& mu, const Rat& theta);
    Report verify_symmetry(const Partition& mu, int n, const Rat& theta);
    Report verify_schur_degeneration(const Partition& mu, int n); // theta = 1
    Report verify_coherence(const Partition& mu, int n, int theta);
    // Pointwise q -> 1 limit agreement with the Macdonald-side expression.
    Report verify_limit_pointwise(const Partition& mu, int theta);

private:
    ShiftCtx& shift_;
    std::map<std::tuple<Partition, int, Rat>, JackPoly> cache_;
    std::map<std::pair<Partition, Partition>, ThetaRat> psi_sym_cache_;
    std::mutex mutex_;
};

} // namespace macshift
