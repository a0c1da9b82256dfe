#pragma once

#include <map>

#include "macshift/mpoly.hpp"
#include "macshift/partitions.hpp"

namespace macshift {

// Symmetric polynomial in n variables stored in the monomial basis m_lambda.
class SymPoly {
public:
    using CoeffMap = std::map<Partition, QtRat, PartitionOrder>;

    explicit SymPoly(int nvars = 0) : nvars_(nvars) {}

    static SymPoly monomial_sym(int nvars, const Partition& la) {
        SymPoly r(nvars);
        if (la.length() <= nvars) r.coeffs_[la] = QtRat(1);
        return r;
    }
    static SymPoly one(int nvars) { return monomial_sym(nvars, Partition{}); }

    int nvars() const { return nvars_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    QtRat coeff(const Partition& la) const {
        auto it = coeffs_.find(la);
        return it == coeffs_.end() ? QtRat() : it->second;
    }

    void add_term(const Partition& la, const QtRat& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs_.emplace(la, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    SymPoly& operator+=(const SymPoly& o) {
        for (const auto& [la, c] : o.coeffs_) add_term(la, c);
        return *this;
    }
    SymPoly& operator-=(const SymPoly& o) {
        for (const auto& [la, c] : o.coeffs_) add_term(la, -c);
        return *this;
    }
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    SymPoly& scale(const QtRat& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [la, v] : coeffs_) v *= c;
        return *this;
    }
    friend SymPoly operator*(const QtRat& c, SymPoly p) { return p.scale(c); }

    bool operator==(const SymPoly&) const = default;

    XPoly to_xpoly() const;
    // Throws linear_solve_error when f is not symmetric.
    static SymPoly from_xpoly(const XPoly& f);

    // Apply a substitution to every coefficient.
    SymPoly map_params(const ParamSub& sub) const {
        SymPoly r(nvars_);
        for (const auto& [la, c] : coeffs_) r.add_term(la, substitute_params(c, sub));
        return r;
    }

    // Set x_n = 0: kills every m_lambda with l(lambda) = n.
    SymPoly restrict_last_zero() const {
        SymPoly r(nvars_ - 1);
        for (const auto& [la, c] : coeffs_)
            if (la.length() <= nvars_ - 1) r.add_term(la, c);
        return r;
    }

    QtRat eval(const std::vector<QtRat>& point) const;

    std::string pretty_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [la, c] : coeffs_) {
            if (!first) out += " + ";
            first = false;
            out += "(" + c.pretty_string() + ")*m[" + la.str() + "]";
        }
        return out;
    }

private:
    int nvars_;
    CoeffMap coeffs_;
};

// m_lambda expanded into monomials (all distinct rearrangements of lambda).
XPoly monomial_sym_xpoly(int nvars, const Partition& la);

// m_lambda evaluated at a point.
QtRat monomial_sym_value(const Partition& la, const std::vector<QtRat>& point);

SymPoly sym_multiply(const SymPoly& a, const SymPoly& b);

} // namespace macshift
