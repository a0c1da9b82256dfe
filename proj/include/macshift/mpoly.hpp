#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "macshift/errors.hpp"
#include "macshift/qtrat.hpp"

namespace macshift {

// Minimal field interface used by MPoly.  Coefficients additionally need
// +, -, *, / and ==.
template <class K>
struct FieldOps;

template <>
struct FieldOps<QtRat> {
    static QtRat zero() { return QtRat(); }
    static QtRat one() { return QtRat(1); }
    static bool is_zero(const QtRat& x) { return x.is_zero(); }
    static bool is_one(const QtRat& x) { return x.is_one(); }
    static std::string str(const QtRat& x) { return x.canonical_string(); }
    static std::string pretty(const QtRat& x) { return x.pretty_string(); }
};

template <>
struct FieldOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static bool is_one(const Rat& x) { return x == 1; }
    static std::string str(const Rat& x) { return x.get_str(); }
    static std::string pretty(const Rat& x) { return x.get_str(); }
};

using Exps = std::vector<int>;

// Sparse multivariate polynomial in x_1..x_n over a coefficient field K.
// Terms are kept in lexicographic order on the exponent vector (x_1 heaviest);
// no zero coefficients are stored.
template <class K>
class MPoly {
public:
    using TermMap = std::map<Exps, K>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}

    static MPoly zero(int nvars) { return MPoly(nvars); }
    static MPoly constant(int nvars, const K& c) {
        MPoly r(nvars);
        if (!FieldOps<K>::is_zero(c)) r.terms_[Exps(nvars, 0)] = c;
        return r;
    }
    static MPoly one(int nvars) { return constant(nvars, FieldOps<K>::one()); }
    static MPoly var(int nvars, int i, int power = 1) {
        MPoly r(nvars);
        Exps e(nvars, 0);
        e[i] = power;
        r.terms_[e] = FieldOps<K>::one();
        return r;
    }
    static MPoly monomial(int nvars, Exps e, const K& c) {
        MPoly r(nvars);
        if (!FieldOps<K>::is_zero(c)) r.terms_[std::move(e)] = c;
        return r;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exps(nvars_, 0));
    }
    K constant_value() const {
        return terms_.empty() ? FieldOps<K>::zero() : terms_.begin()->second;
    }

    K coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldOps<K>::zero() : it->second;
    }

    void add_term(const Exps& e, const K& c) {
        if (FieldOps<K>::is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second = it->second + c;
            if (FieldOps<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    int degree_in(int i) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }

    // Terms of total degree exactly d.
    MPoly homogeneous_component(int d) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (s == d) r.terms_[e] = c;
        }
        return r;
    }
    MPoly top_component() const { return homogeneous_component(total_degree()); }

    std::pair<Exps, K> leading() const { return *terms_.rbegin(); }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, FieldOps<K>::zero() - c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = FieldOps<K>::zero() - c;
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.nvars_);
        Exps e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly& scale(const K& c) {
        if (FieldOps<K>::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v = v * c;
        return *this;
    }
    friend MPoly operator*(const K& c, MPoly p) { return p.scale(c); }

    MPoly pow(int e) const {
        MPoly acc = one(nvars_);
        MPoly base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    bool operator==(const MPoly&) const = default;

    // x_i -> factor * x_i
    MPoly scale_var(int i, const K& factor) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            K nc = c;
            for (int k = 0; k < e[i]; ++k) nc = nc * factor;
            r.add_term(e, nc);
        }
        return r;
    }

    MPoly scale_vars(const std::vector<K>& factors) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            K nc = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) nc = nc * factors[i];
            r.add_term(e, nc);
        }
        return r;
    }

    // perm[i] = new index of old variable i.
    MPoly permute_vars(const std::vector<int>& perm) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Exps ne(nvars_, 0);
            for (int i = 0; i < nvars_; ++i) ne[perm[i]] = e[i];
            r.add_term(ne, c);
        }
        return r;
    }

    K eval(const std::vector<K>& point) const {
        K total = FieldOps<K>::zero();
        for (const auto& [e, c] : terms_) {
            K term = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * point[i];
            total = total + term;
        }
        return total;
    }

    // Substitute a value for x_i (exponent slot collapses to zero).
    MPoly eval_var(int i, const K& value) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            K nc = c;
            for (int k = 0; k < e[i]; ++k) nc = nc * value;
            Exps ne = e;
            ne[i] = 0;
            r.add_term(ne, nc);
        }
        return r;
    }

    // Substitute a polynomial for x_i.
    MPoly subst_var(int i, const MPoly& g) const {
        // Cache powers of g up to the needed degree.
        std::vector<MPoly> powers{one(nvars_)};
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            while (static_cast<int>(powers.size()) <= e[i])
                powers.push_back(powers.back() * g);
            Exps ne = e;
            ne[i] = 0;
            r += powers[e[i]] * monomial(nvars_, ne, c);
        }
        return r;
    }

    // Remove a variable that no longer occurs (exponent must be 0 throughout).
    MPoly drop_var(int i) const {
        MPoly r(nvars_ - 1);
        for (const auto& [e, c] : terms_) {
            if (e[i] != 0) throw std::invalid_argument("drop_var: variable still occurs");
            Exps ne;
            ne.reserve(nvars_ - 1);
            for (int k = 0; k < nvars_; ++k)
                if (k != i) ne.push_back(e[k]);
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    // Embed into a ring with `count` fresh variables inserted at position `at`.
    MPoly insert_vars(int at, int count) const {
        MPoly r(nvars_ + count);
        for (const auto& [e, c] : terms_) {
            Exps ne;
            ne.reserve(nvars_ + count);
            ne.insert(ne.end(), e.begin(), e.begin() + at);
            ne.insert(ne.end(), count, 0);
            ne.insert(ne.end(), e.begin() + at, e.end());
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    template <class K2, class F>
    MPoly<K2> map_coeffs(F f) const {
        MPoly<K2> r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    // Invariance under every adjacent transposition of the variables.
    bool symmetric() const {
        for (int i = 0; i + 1 < nvars_; ++i) {
            std::vector<int> perm(nvars_);
            for (int k = 0; k < nvars_; ++k) perm[k] = k;
            std::swap(perm[i], perm[i + 1]);
            if (permute_vars(perm) != *this) return false;
        }
        return true;
    }

    std::string pretty_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) out += " + ";
            first = false;
            std::string c = FieldOps<K>::pretty(it->second);
            bool comp = c.find_first_of("+-") != std::string::npos && c.size() > 1;
            bool has_vars = false;
            for (int x : it->first) has_vars |= (x != 0);
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                int e = it->first[i];
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i + 1);
                if (e != 1) mono += "^" + std::to_string(e);
            }
            if (!has_vars) {
                out += comp ? "(" + c + ")" : c;
            } else if (FieldOps<K>::is_one(it->second)) {
                out += mono;
            } else {
                out += (comp ? "(" + c + ")" : c) + "*" + mono;
            }
        }
        return out;
    }

private:
    int nvars_;
    TermMap terms_;
};

// Parameter substitution applied coefficient-wise.
inline MPoly<QtRat> substitute_params(const MPoly<QtRat>& f, const ParamSub& sub) {
    return f.map_coeffs<QtRat>([&](const QtRat& c) { return substitute_params(c, sub); });
}

// Exact division (single divisor, lex leading terms).  For A = B*Q this
// always succeeds; otherwise throws with the offending remainder attached.
template <class K>
MPoly<K> exact_divide(const MPoly<K>& a, const MPoly<K>& b) {
    if (b.is_zero()) throw zero_division_error("polynomial division by zero");
    MPoly<K> r = a;
    MPoly<K> quot(a.nvars());
    const auto [eb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto [er, cr] = r.leading();
        Exps diff(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) {
            diff[i] = er[i] - eb[i];
            if (diff[i] < 0)
                throw exact_division_error("multivariate exact division left a remainder",
                                           r.pretty_string());
        }
        K c = cr / cb;
        quot.add_term(diff, c);
        for (const auto& [e2, c2] : b.terms()) {
            Exps ne(a.nvars());
            for (int i = 0; i < a.nvars(); ++i) ne[i] = e2[i] + diff[i];
            r.add_term(ne, FieldOps<K>::zero() - c2 * c);
        }
    }
    return quot;
}

using XPoly = MPoly<QtRat>;

} // namespace macshift
