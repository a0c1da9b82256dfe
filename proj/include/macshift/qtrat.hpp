#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "macshift/errors.hpp"

namespace macshift {

using Rat = mpq_class;
using Int = mpz_class;

// Exponent pair: (power of q, power of t).
using QtExp = std::pair<int, int>;

// Sparse bivariate polynomial in q and t over the rationals.  No zero
// coefficients are stored; the map order (lex on (a,b)) is the canonical
// term order used by every serialization.
class QtPoly {
public:
    using TermMap = std::map<QtExp, Rat>;

    QtPoly() = default;
    explicit QtPoly(const Rat& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    QtPoly(const Rat& c, int qexp, int texp) {
        if (c != 0) terms_[{qexp, texp}] = c;
    }

    static QtPoly zero() { return QtPoly(); }
    static QtPoly one() { return QtPoly(Rat(1)); }
    static QtPoly q(int power = 1) { return QtPoly(Rat(1), power, 0); }
    static QtPoly t(int power = 1) { return QtPoly(Rat(1), 0, power); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == QtExp{0, 0} &&
               terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == QtExp{0, 0});
    }
    bool is_monomial() const { return terms_.size() == 1; }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        return terms_.begin()->second;
    }

    int deg_q() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }
    int deg_t() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }
    int min_q() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = (d < 0) ? e.first : std::min(d, e.first);
        return d;
    }
    int min_t() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = (d < 0) ? e.second : std::min(d, e.second);
        return d;
    }

    const TermMap& terms() const { return terms_; }

    Rat coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(int a, int b, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(QtExp{a, b}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Lex-leading term (largest (a,b)).
    std::pair<QtExp, Rat> leading() const { return *terms_.rbegin(); }

    QtPoly& operator+=(const QtPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    QtPoly& operator-=(const QtPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend QtPoly operator+(QtPoly a, const QtPoly& b) { return a += b; }
    friend QtPoly operator-(QtPoly a, const QtPoly& b) { return a -= b; }
    QtPoly operator-() const {
        QtPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend QtPoly operator*(const QtPoly& a, const QtPoly& b) {
        QtPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    QtPoly& operator*=(const QtPoly& o) { return *this = *this * o; }

    QtPoly& scale(const Rat& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [e, v] : terms_) v *= c;
        }
        return *this;
    }

    // Multiply by the monomial q^a t^b (a, b may be negative provided the
    // result stays a polynomial).
    QtPoly shifted(int a, int b) const {
        QtPoly r;
        for (const auto& [e, c] : terms_) {
            int na = e.first + a, nb = e.second + b;
            if (na < 0 || nb < 0)
                throw std::invalid_argument("QtPoly::shifted would create a negative exponent");
            r.terms_[{na, nb}] = c;
        }
        return r;
    }

    Rat eval(const Rat& qv, const Rat& tv) const;

    bool operator==(const QtPoly&) const = default;

    // "c*q^a*t^b" joined by "+", ascending (a,b) lex; "0" for zero.
    std::string canonical_string() const;
    // Human form, leading terms first.
    std::string pretty_string() const;

private:
    TermMap terms_;
};

// content/primitive split: f = c * F with F integer-coefficient, content 1,
// positive lex-leading coefficient.  f must be nonzero.
std::pair<Rat, QtPoly> qt_primitive(const QtPoly& f);

// Primitive gcd with positive leading coefficient; gcd(p, 0) = primitive(p).
QtPoly qt_gcd(const QtPoly& a, const QtPoly& b);

// Exact division; throws exact_division_error on a nonzero remainder.
QtPoly qt_exact_div(const QtPoly& a, const QtPoly& b);

// Parse the canonical_string format back into a polynomial.
QtPoly qt_parse(const std::string& text);

// Element of the field Q(q,t): num/den with gcd(num, den) = 1 and den
// primitive (integer coefficients, content 1) with positive lex-leading
// coefficient.  Equality of canonical forms is plain field equality.
class QtRat {
public:
    QtRat() : num_(), den_(QtPoly::one()) {}
    QtRat(int c) : num_(QtPoly(Rat(c))), den_(QtPoly::one()) {}
    QtRat(const Rat& c) : num_(QtPoly(c)), den_(QtPoly::one()) {}
    explicit QtRat(QtPoly num) : num_(std::move(num)), den_(QtPoly::one()) {}
    QtRat(QtPoly num, QtPoly den);

    static QtRat q(int power = 1) {
        return power >= 0 ? QtRat(QtPoly::q(power)) : QtRat(QtPoly::one(), QtPoly::q(-power));
    }
    static QtRat t(int power = 1) {
        return power >= 0 ? QtRat(QtPoly::t(power)) : QtRat(QtPoly::one(), QtPoly::t(-power));
    }
    // q^a t^b as a field element, any signs.
    static QtRat qt_monomial(const Rat& c, int a, int b);

    const QtPoly& num() const { return num_; }
    const QtPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    QtRat operator-() const;
    QtRat& operator+=(const QtRat& o);
    QtRat& operator-=(const QtRat& o);
    QtRat& operator*=(const QtRat& o);
    QtRat& operator/=(const QtRat& o);
    friend QtRat operator+(QtRat a, const QtRat& b) { return a += b; }
    friend QtRat operator-(QtRat a, const QtRat& b) { return a -= b; }
    friend QtRat operator*(QtRat a, const QtRat& b) { return a *= b; }
    friend QtRat operator/(QtRat a, const QtRat& b) { return a /= b; }

    QtRat inverse() const;
    QtRat pow(long e) const;

    bool operator==(const QtRat&) const = default;

    Rat eval(const Rat& qv, const Rat& tv) const;

    std::string canonical_string() const; // "(num)/(den)"
    std::string pretty_string() const;    // den==1 prints bare; monomial den folds in

    static QtRat parse(const std::string& text); // canonical_string format

private:
    void reduce_();
    QtPoly num_, den_;
};

// A parameter substitution sends q and t each to c * q^a * t^b with c a
// nonzero rational; this closed set covers q^k, 1/q, t, 1/t, t -> q^theta,
// u-powers (u occupying the q slot) and rational constants.
struct ParamTarget {
    Rat c{1};
    int qexp{0};
    int texp{0};
};

struct ParamSub {
    ParamTarget q_to{Rat(1), 1, 0};
    ParamTarget t_to{Rat(1), 0, 1};

    static ParamSub identity() { return {}; }
    static ParamSub invert_qt() { return {{Rat(1), -1, 0}, {Rat(1), 0, -1}}; }
    // The duality substitution q -> 1/t, t -> 1/q.
    static ParamSub swap_invert() { return {{Rat(1), 0, -1}, {Rat(1), -1, 0}}; }
    static ParamSub t_to_qpow(int theta) { return {{Rat(1), 1, 0}, {Rat(1), theta, 0}}; }
    // q -> u^r, t -> u^p with u living in the q slot.
    static ParamSub u_powers(int r, int p) { return {{Rat(1), r, 0}, {Rat(1), p, 0}}; }
    static ParamSub q_powers(int kq, int kt) { return {{Rat(1), kq, 0}, {Rat(1), kt, 0}}; }
};

QtRat substitute_params(const QtRat& f, const ParamSub& sub);

// Limit of a univariate rational function (living in the q slot) as the
// variable tends to 1: cancels the maximal power of (q - 1), then evaluates.
// Throws pole_error if the denominator still vanishes.
Rat limit_at_one(const QtRat& f);

} // namespace macshift
