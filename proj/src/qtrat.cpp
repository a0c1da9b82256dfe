#include "macshift/qtrat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace macshift {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z (variable t), used by the gcd kernel.
// ---------------------------------------------------------------------------

using ZT = std::vector<Int>; // coefficient of t^i at index i; trimmed

void zt_trim(ZT& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

bool zt_zero(const ZT& f) { return f.empty(); }
int zt_deg(const ZT& f) { return static_cast<int>(f.size()) - 1; }

ZT zt_mul(const ZT& a, const ZT& b) {
    if (a.empty() || b.empty()) return {};
    ZT r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zt_trim(r);
    return r;
}

ZT zt_sub(ZT a, const ZT& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    zt_trim(a);
    return a;
}

ZT zt_scale(ZT a, const Int& c) {
    for (auto& x : a) x *= c;
    zt_trim(a);
    return a;
}

Int zt_content(const ZT& f) {
    Int g = 0;
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZT zt_divexact_int(ZT f, const Int& c) {
    for (auto& x : f) {
        Int r;
        mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        x = r;
    }
    return f;
}

// Primitive part with positive leading coefficient.
ZT zt_pp(const ZT& f) {
    if (f.empty()) return f;
    Int c = zt_content(f);
    if (f.back() < 0) c = -c;
    return zt_divexact_int(f, c);
}

bool zt_heugcd(const ZT& a, const ZT& b, ZT& g_out);

// gcd in Z[t], primitive result with positive leading coefficient.  The
// heuristic evaluation gcd almost always certifies; the primitive
// pseudo-remainder sequence is the fallback.
ZT zt_gcd(ZT a, ZT b) {
    if (zt_zero(a)) return zt_pp(b);
    if (zt_zero(b)) return zt_pp(a);
    a = zt_pp(a);
    b = zt_pp(b);
    if (zt_deg(a) < zt_deg(b)) std::swap(a, b);
    if (zt_deg(b) == 0) return ZT{Int(1)};
    ZT heur;
    if (zt_heugcd(a, b, heur)) return heur;
    while (true) {
        // pseudo remainder of a by b
        ZT r = a;
        const Int lb = b.back();
        while (!zt_zero(r) && zt_deg(r) >= zt_deg(b)) {
            int shift = zt_deg(r) - zt_deg(b);
            Int lr = r.back();
            ZT shifted(shift, Int(0));
            shifted.insert(shifted.end(), b.begin(), b.end());
            r = zt_sub(zt_scale(r, lb), zt_scale(shifted, lr));
        }
        if (zt_zero(r)) break;
        a = b;
        b = zt_pp(r);
        if (zt_deg(b) == 0) break;
    }
    return (zt_deg(b) == 0) ? ZT{Int(1)} : b;
}

// Exact division in Z[t]; exactness is a precondition.
ZT zt_divexact(const ZT& a, const ZT& b) {
    assert(!zt_zero(b));
    if (zt_zero(a)) return {};
    ZT r = a;
    ZT q(zt_deg(a) - zt_deg(b) + 1, Int(0));
    while (!zt_zero(r)) {
        int shift = zt_deg(r) - zt_deg(b);
        assert(shift >= 0);
        Int c;
        mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        q[shift] = c;
        ZT shifted(shift, Int(0));
        shifted.insert(shifted.end(), b.begin(), b.end());
        r = zt_sub(r, zt_scale(shifted, c));
    }
    zt_trim(q);
    return q;
}

// Exact division test in Z[x]; returns false when the division leaves a
// remainder or a non-integer quotient.
bool zt_divides(const ZT& d, const ZT& a, ZT* quot_out = nullptr) {
    if (zt_zero(a)) {
        if (quot_out) quot_out->clear();
        return true;
    }
    if (zt_deg(a) < zt_deg(d)) return false;
    ZT r = a;
    ZT q(zt_deg(a) - zt_deg(d) + 1, Int(0));
    while (!zt_zero(r)) {
        int shift = zt_deg(r) - zt_deg(d);
        if (shift < 0) return false;
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), d.back().get_mpz_t());
        if (rem != 0) return false;
        q[shift] = c;
        ZT shifted(shift, Int(0));
        shifted.insert(shifted.end(), d.begin(), d.end());
        r = zt_sub(r, zt_scale(shifted, c));
    }
    if (quot_out) {
        zt_trim(q);
        *quot_out = q;
    }
    return true;
}

Int zt_eval(const ZT& f, const Int& x) {
    Int acc(0);
    for (size_t i = f.size(); i-- > 0;) {
        acc *= x;
        acc += f[i];
    }
    return acc;
}

Int zt_height(const ZT& f) {
    Int h(0);
    for (const auto& c : f) {
        Int a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

// Balanced base-xi digits of g, smallest first.
ZT zt_from_integer(Int g, const Int& xi) {
    ZT out;
    Int half = xi / 2;
    while (g != 0) {
        Int r = g % xi; // sign follows g with GMP's truncation; rebalance
        if (r > half) r -= xi;
        if (r < -half) r += xi;
        out.push_back(r);
        g = (g - r) / xi;
    }
    return out;
}

// Heuristic gcd in Z[x] (evaluate at a large point, reconstruct balanced
// digits, verify divisibility).  Returns false when it fails to certify.
bool zt_heugcd(const ZT& a, const ZT& b, ZT& g_out) {
    Int ha = zt_height(a), hb = zt_height(b);
    Int xi = 2 * (ha > hb ? hb : ha) + 2;
    if (xi < 4) xi = 4;
    for (int tries = 0; tries < 6; ++tries) {
        Int ga = zt_eval(a, xi);
        Int gb = zt_eval(b, xi);
        Int g;
        mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
        ZT cand = zt_pp(zt_from_integer(g, xi));
        if (!zt_zero(cand) && zt_divides(cand, a) && zt_divides(cand, b)) {
            g_out = cand;
            return true;
        }
        xi = xi * 7 / 2 + 3;
    }
    return false;
}

// ---------------------------------------------------------------------------
// (Z[t])[q]: dense in q, Z[t] coefficients.
// ---------------------------------------------------------------------------

using ZQT = std::vector<ZT>; // coefficient of q^i at index i; trimmed

void zqt_trim(ZQT& f) {
    while (!f.empty() && zt_zero(f.back())) f.pop_back();
}

int zqt_deg(const ZQT& f) { return static_cast<int>(f.size()) - 1; }

ZT zqt_content(const ZQT& f) {
    ZT g;
    for (const auto& c : f) g = zt_gcd(g, c);
    return g;
}

ZQT zqt_pp(const ZQT& f, const ZT& content) {
    ZQT r;
    r.reserve(f.size());
    for (const auto& c : f) r.push_back(zt_zero(c) ? ZT{} : zt_divexact(c, content));
    return r;
}

ZQT zqt_scale(ZQT f, const ZT& c) {
    for (auto& x : f) x = zt_mul(x, c);
    zqt_trim(f);
    return f;
}

ZQT zqt_sub(ZQT a, const ZQT& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = zt_sub(a[i], b[i]);
    zqt_trim(a);
    return a;
}

// Pseudo-remainder of a by b in (Z[t])[q] (up to Z[t] factors, which the
// primitive PRS discards anyway).
ZQT zqt_prem(ZQT r, const ZQT& b) {
    const ZT lb = b.back();
    while (!r.empty() && zqt_deg(r) >= zqt_deg(b)) {
        int shift = zqt_deg(r) - zqt_deg(b);
        ZT lr = r.back();
        ZQT shifted(shift);
        shifted.insert(shifted.end(), b.begin(), b.end());
        r = zqt_sub(zqt_scale(std::move(r), lb), zqt_scale(std::move(shifted), lr));
    }
    return r;
}

ZQT to_dense(const QtPoly& f) {
    ZQT r;
    for (const auto& [e, c] : f.terms()) {
        assert(c.get_den() == 1);
        if (static_cast<size_t>(e.first) >= r.size()) r.resize(e.first + 1);
        ZT& col = r[e.first];
        if (static_cast<size_t>(e.second) >= col.size()) col.resize(e.second + 1, Int(0));
        col[e.second] = c.get_num();
    }
    for (auto& col : r) zt_trim(col);
    zqt_trim(r);
    return r;
}

QtPoly from_dense(const ZQT& f) {
    QtPoly r;
    for (size_t a = 0; a < f.size(); ++a)
        for (size_t b = 0; b < f[a].size(); ++b)
            if (f[a][b] != 0) r.add_term(static_cast<int>(a), static_cast<int>(b), Rat(f[a][b]));
    return r;
}

std::string rat_string(const Rat& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

} // namespace

// ---------------------------------------------------------------------------
// QtPoly
// ---------------------------------------------------------------------------

Rat QtPoly::eval(const Rat& qv, const Rat& tv) const {
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < e.first; ++i) term *= qv;
        for (int i = 0; i < e.second; ++i) term *= tv;
        total += term;
    }
    return total;
}

std::string QtPoly::canonical_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += '+';
        first = false;
        out += rat_string(c);
        out += "*q^" + std::to_string(e.first);
        out += "*t^" + std::to_string(e.second);
    }
    return out;
}

std::string QtPoly::pretty_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::vector<std::string> factors;
        if (a != 1 || (e.first == 0 && e.second == 0)) factors.push_back(rat_string(a));
        if (e.first == 1) factors.push_back("q");
        else if (e.first != 0) factors.push_back("q^" + std::to_string(e.first));
        if (e.second == 1) factors.push_back("t");
        else if (e.second != 0) factors.push_back("t^" + std::to_string(e.second));
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "*";
            out += factors[i];
        }
    }
    return out;
}

std::pair<Rat, QtPoly> qt_primitive(const QtPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("qt_primitive of zero");
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : f.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (f.leading().second < 0) content = -content;
    QtPoly prim;
    for (const auto& [e, c] : f.terms()) prim.add_term(e.first, e.second, c / content);
    return {content, prim};
}

QtPoly qt_exact_div(const QtPoly& a, const QtPoly& b) {
    if (b.is_zero()) throw zero_division_error("polynomial division by zero");
    QtPoly r = a, quot;
    const auto [eb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto [er, cr] = r.leading();
        int da = er.first - eb.first, db = er.second - eb.second;
        if (da < 0 || db < 0)
            throw exact_division_error("QtPoly exact division left a remainder", r.canonical_string());
        Rat c = cr / cb;
        quot.add_term(da, db, c);
        QtPoly sub;
        for (const auto& [e2, c2] : b.terms()) sub.add_term(e2.first + da, e2.second + db, c2 * c);
        r -= sub;
    }
    return quot;
}

QtPoly qt_gcd(const QtPoly& a, const QtPoly& b) {
    if (a.is_zero() && b.is_zero()) return QtPoly::zero();
    if (a.is_zero()) return qt_primitive(b).second;
    if (b.is_zero()) return qt_primitive(a).second;

    QtPoly pa = qt_primitive(a).second;
    QtPoly pb = qt_primitive(b).second;

    // Split off monomial contents: gcd(q^i t^j A', q^k t^l B') = mono * gcd(A', B').
    int mq = std::min(pa.min_q(), pb.min_q());
    int mt = std::min(pa.min_t(), pb.min_t());
    pa = pa.shifted(-pa.min_q(), -pa.min_t());
    pb = pb.shifted(-pb.min_q(), -pb.min_t());

    QtPoly g;
    if (pa.is_constant() || pb.is_constant()) {
        g = QtPoly::one();
    } else if (pa == pb) {
        g = pa;
    } else if ((pa.deg_t() == 0 && pb.deg_t() == 0) || (pa.deg_q() == 0 && pb.deg_q() == 0)) {
        // Univariate in a single parameter slot: dense gcd there.
        const bool in_q = pa.deg_t() == 0;
        auto pack = [&](const QtPoly& f) {
            ZT v;
            for (const auto& [e, c] : f.terms()) {
                int d = in_q ? e.first : e.second;
                if (static_cast<size_t>(d) >= v.size()) v.resize(d + 1, Int(0));
                v[d] = c.get_num();
            }
            return v;
        };
        ZT gv = zt_gcd(pack(pa), pack(pb));
        for (size_t d = 0; d < gv.size(); ++d)
            if (gv[d] != 0)
                g.add_term(in_q ? static_cast<int>(d) : 0, in_q ? 0 : static_cast<int>(d),
                           Rat(gv[d]));
    } else {
        ZQT da = to_dense(pa), db = to_dense(pb);
        ZT ca = zqt_content(da), cb = zqt_content(db);
        da = zqt_pp(da, ca);
        db = zqt_pp(db, cb);
        ZT cont_gcd = zt_gcd(ca, cb);

        ZQT u = da, v = db;
        if (zqt_deg(u) < zqt_deg(v)) std::swap(u, v);
        ZQT prim_gcd;
        if (zqt_deg(v) == 0) {
            // v is a t-polynomial and both sides are q-primitive.
            prim_gcd = {ZT{Int(1)}};
        } else {
            while (true) {
                ZQT r = zqt_prem(u, v);
                if (r.empty()) {
                    prim_gcd = v;
                    break;
                }
                if (zqt_deg(r) == 0) {
                    prim_gcd = {ZT{Int(1)}};
                    break;
                }
                u = std::move(v);
                v = zqt_pp(r, zqt_content(r));
            }
        }
        ZQT total = prim_gcd;
        if (!(cont_gcd.size() == 1 && cont_gcd[0] == 1)) total = zqt_scale(std::move(total), cont_gcd);
        g = from_dense(total);
        g = qt_primitive(g).second;
    }
    return g.shifted(mq, mt);
}

QtPoly qt_parse(const std::string& text) {
    QtPoly out;
    if (text == "0") return out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find('+', pos);
        std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        size_t s1 = term.find("*q^");
        size_t s2 = term.find("*t^");
        if (s1 == std::string::npos || s2 == std::string::npos || s2 < s1)
            throw std::invalid_argument("malformed QtPoly term: '" + term + "'");
        Rat c(term.substr(0, s1));
        c.canonicalize();
        int a = std::stoi(term.substr(s1 + 3, s2 - (s1 + 3)));
        int b = std::stoi(term.substr(s2 + 3));
        out.add_term(a, b, c);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// QtRat
// ---------------------------------------------------------------------------

QtRat::QtRat(QtPoly num, QtPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw zero_division_error("QtRat with zero denominator");
    reduce_();
}

QtRat QtRat::qt_monomial(const Rat& c, int a, int b) {
    QtRat r{QtPoly(c)};
    r.num_ = r.num_.shifted(std::max(a, 0), std::max(b, 0));
    r.den_ = QtPoly(Rat(1), std::max(-a, 0), std::max(-b, 0));
    return r;
}

void QtRat::reduce_() {
    if (num_.is_zero()) {
        den_ = QtPoly::one();
        return;
    }
    if (den_.is_one()) return;
    auto [cd, pd] = qt_primitive(den_);
    num_.scale(Rat(1) / cd);
    den_ = std::move(pd);
    if (den_.is_one()) return;

    QtPoly g = qt_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = qt_exact_div(num_, g);
        den_ = qt_exact_div(den_, g);
        // The primitive gcd has positive leading coefficient, so den_ stays
        // primitive with positive leading coefficient; the cofactor's rational
        // content lives in num_.
        auto [cd2, pd2] = qt_primitive(den_);
        if (cd2 != 1) {
            num_.scale(Rat(1) / cd2);
            den_ = std::move(pd2);
        }
    }
}

QtRat QtRat::operator-() const {
    QtRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QtRat& QtRat::operator+=(const QtRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        QtPoly n = num_ + o.num_;
        *this = QtRat(std::move(n), den_);
        return *this;
    }
    QtPoly g = qt_gcd(den_, o.den_);
    if (g.is_one()) {
        // Cross denominators stay coprime with the new numerator.
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = QtPoly::one();
        return *this;
    }
    QtPoly d2g = qt_exact_div(o.den_, g);
    QtPoly d1g = qt_exact_div(den_, g);
    QtPoly n = num_ * d2g + o.num_ * d1g;
    QtPoly d = den_ * d2g;
    if (n.is_zero()) {
        num_ = QtPoly::zero();
        den_ = QtPoly::one();
        return *this;
    }
    // Only the old common factor can divide the new numerator.
    auto [cn, pn] = qt_primitive(n);
    QtPoly g2 = qt_gcd(pn, g);
    if (!g2.is_one()) {
        n = qt_exact_div(n, g2);
        d = qt_exact_div(d, g2);
    }
    auto [cd, pd] = qt_primitive(d);
    n.scale(Rat(1) / cd);
    num_ = std::move(n);
    den_ = std::move(pd);
    return *this;
}

QtRat& QtRat::operator-=(const QtRat& o) { return *this += -o; }

QtRat& QtRat::operator*=(const QtRat& o) {
    if (is_zero() || o.is_zero()) {
        num_ = QtPoly::zero();
        den_ = QtPoly::one();
        return *this;
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    QtPoly g1 = qt_gcd(num_, o.den_);
    QtPoly g2 = qt_gcd(o.num_, den_);
    QtPoly n1 = g1.is_one() ? num_ : qt_exact_div(num_, g1);
    QtPoly d2 = g1.is_one() ? o.den_ : qt_exact_div(o.den_, g1);
    QtPoly n2 = g2.is_one() ? o.num_ : qt_exact_div(o.num_, g2);
    QtPoly d1 = g2.is_one() ? den_ : qt_exact_div(den_, g2);
    QtPoly n = n1 * n2;
    QtPoly d = d1 * d2;
    if (d.is_one()) {
        num_ = std::move(n);
        den_ = std::move(d);
        return *this;
    }
    auto [cd, pd] = qt_primitive(d);
    n.scale(Rat(1) / cd);
    num_ = std::move(n);
    den_ = std::move(pd);
    return *this;
}

QtRat& QtRat::operator/=(const QtRat& o) {
    if (o.is_zero()) throw zero_division_error("division by the zero element");
    return *this *= o.inverse();
}

QtRat QtRat::inverse() const {
    if (is_zero()) throw zero_division_error("inverse of the zero element");
    QtRat r;
    r.num_ = den_;
    r.den_ = num_;
    auto [c, p] = qt_primitive(r.den_);
    r.num_.scale(Rat(1) / c);
    r.den_ = std::move(p);
    return r;
}

QtRat QtRat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QtRat acc(1);
    QtRat base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rat QtRat::eval(const Rat& qv, const Rat& tv) const {
    Rat d = den_.eval(qv, tv);
    if (d == 0) throw zero_division_error("QtRat::eval hit a zero denominator");
    return num_.eval(qv, tv) / d;
}

std::string QtRat::canonical_string() const {
    return "(" + num_.canonical_string() + ")/(" + den_.canonical_string() + ")";
}

std::string QtRat::pretty_string() const {
    if (den_.is_one()) return num_.pretty_string();
    if (den_.is_monomial()) {
        // Fold a monomial denominator into Laurent-style exponents.
        const auto [e, c] = den_.leading();
        std::string out;
        bool first = true;
        for (auto it = num_.terms().rbegin(); it != num_.terms().rend(); ++it) {
            Rat a = it->second / c;
            int qe = it->first.first - e.first;
            int te = it->first.second - e.second;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::vector<std::string> factors;
            if (a != 1 || (qe == 0 && te == 0)) factors.push_back(rat_string(a));
            if (qe == 1) factors.push_back("q");
            else if (qe != 0) factors.push_back("q^" + std::to_string(qe));
            if (te == 1) factors.push_back("t");
            else if (te != 0) factors.push_back("t^" + std::to_string(te));
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) out += "*";
                out += factors[i];
            }
        }
        return out;
    }
    return "(" + num_.pretty_string() + ")/(" + den_.pretty_string() + ")";
}

QtRat QtRat::parse(const std::string& text) {
    size_t sep = text.find(")/(");
    if (text.size() < 5 || text.front() != '(' || text.back() != ')' || sep == std::string::npos)
        throw std::invalid_argument("malformed QtRat: '" + text + "'");
    QtPoly n = qt_parse(text.substr(1, sep - 1));
    QtPoly d = qt_parse(text.substr(sep + 3, text.size() - sep - 4));
    return QtRat(std::move(n), std::move(d));
}

// ---------------------------------------------------------------------------
// Parameter substitution and the q -> 1 limit
// ---------------------------------------------------------------------------

namespace {

Rat rat_pow(const Rat& c, int e) {
    if (e == 0) return Rat(1);
    if (c == 0) throw zero_division_error("0 raised to a negative power in substitution");
    Rat acc(1);
    Rat base = (e > 0) ? c : Rat(c.get_den(), c.get_num());
    if (e < 0) base.canonicalize();
    int n = std::abs(e);
    for (int i = 0; i < n; ++i) acc *= base;
    return acc;
}

// Substituted polynomial as (poly, qshift, tshift): value = poly * q^qs * t^ts
// with qs, ts <= 0.
struct LaurentPoly {
    QtPoly poly;
    int qshift = 0;
    int tshift = 0;
};

LaurentPoly subst_poly(const QtPoly& f, const ParamSub& sub) {
    std::map<QtExp, Rat> acc;
    int minq = 0, mint = 0;
    for (const auto& [e, c] : f.terms()) {
        Rat nc = c * rat_pow(sub.q_to.c, e.first) * rat_pow(sub.t_to.c, e.second);
        int qa = e.first * sub.q_to.qexp + e.second * sub.t_to.qexp;
        int tb = e.first * sub.q_to.texp + e.second * sub.t_to.texp;
        auto [it, fresh] = acc.emplace(QtExp{qa, tb}, nc);
        if (!fresh) it->second += nc;
        minq = std::min(minq, qa);
        mint = std::min(mint, tb);
    }
    LaurentPoly out;
    out.qshift = minq;
    out.tshift = mint;
    for (const auto& [e, c] : acc)
        if (c != 0) out.poly.add_term(e.first - minq, e.second - mint, c);
    return out;
}

} // namespace

QtRat substitute_params(const QtRat& f, const ParamSub& sub) {
    LaurentPoly n = subst_poly(f.num(), sub);
    LaurentPoly d = subst_poly(f.den(), sub);
    if (d.poly.is_zero())
        throw zero_division_error("substitution made a denominator identically zero");
    // value = (n.poly / d.poly) * q^{n.qs - d.qs} * t^{n.ts - d.ts}
    int qs = n.qshift - d.qshift;
    int ts = n.tshift - d.tshift;
    QtPoly num = n.poly.shifted(std::max(qs, 0), std::max(ts, 0));
    QtPoly den = d.poly.shifted(std::max(-qs, 0), std::max(-ts, 0));
    return QtRat(std::move(num), std::move(den));
}

namespace {

// Dense univariate view of a t-free QtPoly.
std::vector<Rat> to_univariate(const QtPoly& f) {
    std::vector<Rat> v;
    for (const auto& [e, c] : f.terms()) {
        if (e.second != 0)
            throw std::invalid_argument("limit_at_one requires a univariate rational function");
        if (static_cast<size_t>(e.first) >= v.size()) v.resize(e.first + 1, Rat(0));
        v[e.first] = c;
    }
    return v;
}

Rat eval_at_one(const std::vector<Rat>& f) {
    Rat s(0);
    for (const auto& c : f) s += c;
    return s;
}

// Synthetic division by (u - 1); exactness is the caller's responsibility.
std::vector<Rat> divide_by_u_minus_one(const std::vector<Rat>& f) {
    std::vector<Rat> out(f.size() - 1, Rat(0));
    Rat carry(0);
    for (size_t i = f.size(); i-- > 1;) {
        carry += f[i];
        out[i - 1] = carry;
    }
    return out;
}

} // namespace

Rat limit_at_one(const QtRat& f) {
    if (f.is_zero()) return Rat(0);
    std::vector<Rat> num = to_univariate(f.num());
    std::vector<Rat> den = to_univariate(f.den());
    while (eval_at_one(num) == 0 && eval_at_one(den) == 0) {
        num = divide_by_u_minus_one(num);
        den = divide_by_u_minus_one(den);
    }
    Rat dv = eval_at_one(den);
    if (dv == 0) throw pole_error("pole at u = 1: the limit does not exist");
    return eval_at_one(num) / dv;
}

} // namespace macshift
