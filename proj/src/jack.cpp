#include "macshift/jack.hpp"

#include <sstream>
#include <stdexcept>

#include "macshift/compare.hpp"
#include "macshift/hooks.hpp"
#include "macshift/linalg.hpp"
#include "macshift/qcalc.hpp"

namespace macshift {

namespace {

using UV = std::vector<Rat>; // ascending coefficients, trimmed

void uv_trim(UV& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
int uv_deg(const UV& f) { return static_cast<int>(f.size()) - 1; }

UV uv_mul(const UV& a, const UV& b) {
    if (a.empty() || b.empty()) return {};
    UV r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uv_trim(r);
    return r;
}

UV uv_sub(UV a, const UV& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    uv_trim(a);
    return a;
}

UV uv_scale(UV a, const Rat& c) {
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

UV uv_rem(UV a, const UV& b) {
    while (!a.empty() && uv_deg(a) >= uv_deg(b)) {
        Rat c = a.back() / b.back();
        int shift = uv_deg(a) - uv_deg(b);
        UV sb(shift, Rat(0));
        sb.insert(sb.end(), b.begin(), b.end());
        a = uv_sub(std::move(a), uv_scale(std::move(sb), c));
    }
    return a;
}

UV uv_divexact(UV a, const UV& b) {
    if (a.empty()) return {};
    UV q(uv_deg(a) - uv_deg(b) + 1, Rat(0));
    while (!a.empty()) {
        int shift = uv_deg(a) - uv_deg(b);
        Rat c = a.back() / b.back();
        q[shift] = c;
        UV sb(shift, Rat(0));
        sb.insert(sb.end(), b.begin(), b.end());
        a = uv_sub(std::move(a), uv_scale(std::move(sb), c));
    }
    return q;
}

UV uv_gcd(UV a, UV b) {
    while (!b.empty()) {
        UV r = uv_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = uv_scale(std::move(a), Rat(1) / a.back()); // monic
    return a;
}

Rat uv_eval(const UV& f, const Rat& x) {
    Rat acc(0);
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

} // namespace

ThetaRat::ThetaRat(std::vector<Rat> num, std::vector<Rat> den)
    : num_(std::move(num)), den_(std::move(den)) {
    uv_trim(num_);
    uv_trim(den_);
    if (den_.empty()) throw zero_division_error("ThetaRat with zero denominator");
    reduce_();
}

void ThetaRat::reduce_() {
    if (num_.empty()) {
        den_ = {Rat(1)};
        return;
    }
    UV g = uv_gcd(num_, den_);
    if (uv_deg(g) > 0) {
        num_ = uv_divexact(std::move(num_), g);
        den_ = uv_divexact(std::move(den_), g);
    }
    Rat lc = den_.back();
    if (lc != 1) {
        for (auto& c : den_) c /= lc;
        for (auto& c : num_) c /= lc;
    }
}

ThetaRat ThetaRat::operator-() const {
    ThetaRat r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

ThetaRat operator+(const ThetaRat& a, const ThetaRat& b) {
    return ThetaRat(uv_sub(uv_mul(a.num_, b.den_), uv_scale(uv_mul(b.num_, a.den_), Rat(-1))),
                    uv_mul(a.den_, b.den_));
}
ThetaRat operator-(const ThetaRat& a, const ThetaRat& b) {
    return ThetaRat(uv_sub(uv_mul(a.num_, b.den_), uv_mul(b.num_, a.den_)),
                    uv_mul(a.den_, b.den_));
}
ThetaRat operator*(const ThetaRat& a, const ThetaRat& b) {
    return ThetaRat(uv_mul(a.num_, b.num_), uv_mul(a.den_, b.den_));
}
ThetaRat operator/(const ThetaRat& a, const ThetaRat& b) {
    if (b.is_zero()) throw zero_division_error("ThetaRat division by zero");
    return ThetaRat(uv_mul(a.num_, b.den_), uv_mul(a.den_, b.num_));
}

Rat ThetaRat::eval(const Rat& th) const {
    Rat d = uv_eval(den_, th);
    if (d == 0) throw zero_division_error("ThetaRat::eval hit a pole");
    return uv_eval(num_, th) / d;
}

std::string ThetaRat::canonical_string() const {
    auto poly_str = [](const UV& f) {
        if (f.empty()) return std::string("0");
        std::string out;
        bool first = true;
        for (size_t k = 0; k < f.size(); ++k) {
            if (f[k] == 0) continue;
            if (!first) out += '+';
            first = false;
            out += f[k].get_str() + "*theta^" + std::to_string(k);
        }
        return out;
    };
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

std::string ThetaRat::pretty_string() const {
    auto poly = [](const UV& f) {
        if (f.empty()) return std::string("0");
        std::string out;
        bool first = true;
        for (size_t k = f.size(); k-- > 0;) {
            if (f[k] == 0) continue;
            Rat v = f[k];
            if (first) {
                if (v < 0) {
                    out += "-";
                    v = -v;
                }
            } else {
                out += (v < 0) ? " - " : " + ";
                if (v < 0) v = -v;
            }
            first = false;
            if (v != 1 || k == 0) {
                out += v.get_str();
                if (k > 0) out += "*";
            }
            if (k == 1) out += "theta";
            else if (k >= 2) out += "theta^" + std::to_string(k);
        }
        return out;
    };
    if (den_.size() == 1 && den_[0] == 1) return poly(num_);
    return "(" + poly(num_) + ")/(" + poly(den_) + ")";
}

JackPoly jack_shifted_swap(const JackPoly& p, int i, const Rat& theta) {
    // Swapping the shifted coordinates x_i - theta*i sends x_i to
    // x_{i+1} - theta and x_{i+1} to x_i + theta.
    int n = p.nvars();
    JackPoly xi_new = JackPoly::var(n, i + 1) - JackPoly::constant(n, theta);
    JackPoly xj_new = JackPoly::var(n, i) + JackPoly::constant(n, theta);
    std::vector<JackPoly> pow_i{JackPoly::one(n)}, pow_j{JackPoly::one(n)};
    JackPoly out(n);
    for (const auto& [e, c] : p.terms()) {
        while (static_cast<int>(pow_i.size()) <= e[i]) pow_i.push_back(pow_i.back() * xi_new);
        while (static_cast<int>(pow_j.size()) <= e[i + 1]) pow_j.push_back(pow_j.back() * xj_new);
        Exps rest = e;
        rest[i] = rest[i + 1] = 0;
        out += pow_i[e[i]] * pow_j[e[i + 1]] * JackPoly::monomial(n, rest, c);
    }
    return out;
}

bool is_jack_shifted_symmetric(const JackPoly& p, const Rat& theta) {
    for (int i = 0; i + 1 < p.nvars(); ++i)
        if (jack_shifted_swap(p, i, theta) != p) return false;
    return true;
}

JackPoly jack_falling_skew(const JackPoly& z, const Partition& mu, const Partition& nu,
                           const Rat& theta) {
    JackPoly out = JackPoly::one(z.nvars());
    for (auto [i, j] : skew_squares(mu, nu)) {
        Rat shift = Rat(Partition::arm_colength(i, j)) - theta * Partition::leg_colength(i, j);
        out *= z - JackPoly::constant(z.nvars(), shift);
    }
    return out;
}

Rat jack_hook_H(const Partition& mu, const Rat& theta) {
    Rat h(1);
    for (auto [i, j] : squares(mu)) h *= Rat(mu.arm(i, j)) + theta * mu.leg(i, j) + 1;
    return h;
}

namespace {

// Stirling numbers of the second kind, as exact rationals.
Rat stirling2(int k, int r) {
    static std::vector<std::vector<Rat>> table{{Rat(1)}};
    while (static_cast<int>(table.size()) <= k) {
        int kk = static_cast<int>(table.size());
        std::vector<Rat> row(kk + 1, Rat(0));
        for (int rr = 1; rr <= kk; ++rr) {
            Rat prev = (rr < static_cast<int>(table[kk - 1].size())) ? table[kk - 1][rr] : Rat(0);
            row[rr] = Rat(rr) * prev + table[kk - 1][rr - 1];
        }
        table.push_back(std::move(row));
    }
    if (r < 0 || r > k) return Rat(0);
    return table[k][r];
}

// <P>_r = P (P-1) ... (P-r+1)
JackPoly falling_of_poly(const JackPoly& p, int r) {
    JackPoly out = JackPoly::one(p.nvars());
    for (int j = 0; j < r; ++j) out *= p - JackPoly::constant(p.nvars(), Rat(j));
    return out;
}

} // namespace

JackPoly finite_sum(const JackPoly& f, int var, const JackPoly& lower, const JackPoly& upper) {
    int nv = f.nvars();
    JackPoly out(nv);
    JackPoly upper1 = upper + JackPoly::one(nv);
    std::vector<JackPoly> hi{JackPoly::one(nv)}, lo{JackPoly::one(nv)};
    int built = 0;
    for (const auto& [e, c] : f.terms()) {
        int k = e[var];
        while (built <= k) {
            // extend the falling-power caches to <.>_{built+1}
            hi.push_back(hi.back() * (upper1 - JackPoly::constant(nv, Rat(built))));
            lo.push_back(lo.back() * (lower - JackPoly::constant(nv, Rat(built))));
            ++built;
        }
        Exps rest = e;
        rest[var] = 0;
        JackPoly mono = JackPoly::monomial(nv, rest, c);
        // y^k = sum_r S(k,r) <y>_r ; then sum <y>_r = (<U+1>_{r+1} - <L>_{r+1})/(r+1)
        JackPoly acc(nv);
        for (int r = 0; r <= k; ++r) {
            Rat s = stirling2(k, r);
            if (s == 0) continue;
            JackPoly diff = hi[r + 1] - lo[r + 1];
            diff.scale(s / Rat(r + 1));
            acc += diff;
        }
        out += mono * acc;
    }
    return out;
}

JackPoly jack_vandermonde_star(int n, int theta) {
    JackPoly out = JackPoly::one(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out *= JackPoly::var(n, i - 1) - JackPoly::var(n, j - 1) +
                   JackPoly::constant(n, Rat(theta * (j - i)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            JackPoly base = JackPoly::var(n, i - 1) - JackPoly::var(n, j - 1) +
                            JackPoly::constant(n, Rat(theta * (j - i) + theta - 1));
            out *= falling_of_poly(base, theta - 1);
        }
    return out;
}

JackPoly jack_beta_star(int n, int theta) {
    int nv = 2 * n - 1;
    JackPoly out = JackPoly::one(nv);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j)
            out *= JackPoly::var(nv, yvar(n, i)) - JackPoly::var(nv, yvar(n, j)) +
                   JackPoly::constant(nv, Rat(theta * (j - i)));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            JackPoly base = JackPoly::var(nv, yvar(n, i)) - JackPoly::var(nv, xvar(n, j)) +
                            JackPoly::constant(nv, Rat(theta * (j - i) - 1));
            out *= falling_of_poly(base, theta - 1);
        }
    return out;
}

Rat JackCtx::psi(const Partition& mu, const Partition& nu, const Rat& theta_in) {
    if (!interlaces(nu, mu)) return Rat(0);
    Rat theta = theta_in;
    theta.canonicalize();
    if (theta <= 0) throw std::invalid_argument("jack psi needs theta > 0");
    QtRat mac_psi = shift_.mac().psi(mu, nu);
    int r = static_cast<int>(theta.get_den().get_si());
    int p = static_cast<int>(theta.get_num().get_si());
    QtRat substituted = substitute_params(mac_psi, ParamSub::u_powers(r, p));
    return limit_at_one(substituted);
}

ThetaRat JackCtx::psi_symbolic(const Partition& mu, const Partition& nu) {
    if (!interlaces(nu, mu)) return ThetaRat();
    auto key = std::make_pair(mu, nu);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = psi_sym_cache_.find(key);
        if (it != psi_sym_cache_.end()) return it->second;
    }
    // Rational reconstruction from integer-theta samples.  The skew size is
    // the first degree bound to try; the true degree can exceed it, so the
    // bound grows until extra samples certify the result.
    int bound = std::max(1, mu.size() - nu.size());
    ThetaRat result;
    bool done = false;
    for (; bound <= 2 + 2 * mu.size() && !done; bound += 2) {
        int nsamples = 2 * (bound + 1);
        int nextra = 4;
        std::vector<Rat> xs, fs;
        for (int s = 1; s <= nsamples + nextra; ++s) {
            xs.emplace_back(s);
            fs.push_back(psi(mu, nu, Rat(s)));
        }
        // kernel of N(x_s) - f_s D(x_s) = 0 over the first nsamples points
        int cols = 2 * (bound + 1);
        std::vector<std::vector<Rat>> m(nsamples, std::vector<Rat>(cols, Rat(0)));
        for (int s = 0; s < nsamples; ++s) {
            Rat pw(1);
            for (int k = 0; k <= bound; ++k) {
                m[s][k] = pw;
                m[s][bound + 1 + k] = -fs[s] * pw;
                pw *= xs[s];
            }
        }
        // reduced row echelon; free column gives a kernel vector
        int rank = 0;
        std::vector<int> pivot_col;
        for (int col = 0; col < cols && rank < nsamples; ++col) {
            int prow = -1;
            for (int rrow = rank; rrow < nsamples; ++rrow)
                if (m[rrow][col] != 0) {
                    prow = rrow;
                    break;
                }
            if (prow < 0) continue;
            std::swap(m[rank], m[prow]);
            Rat inv = Rat(1) / m[rank][col];
            for (auto& v : m[rank]) v *= inv;
            for (int rrow = 0; rrow < nsamples; ++rrow) {
                if (rrow == rank || m[rrow][col] == 0) continue;
                Rat factor = m[rrow][col];
                for (int k = col; k < cols; ++k) m[rrow][k] -= factor * m[rank][k];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        if (rank == cols) continue; // no kernel at this bound
        int free_col = 0;
        {
            std::vector<bool> is_pivot(cols, false);
            for (int c : pivot_col) is_pivot[c] = true;
            for (int c = cols - 1; c >= 0; --c)
                if (!is_pivot[c]) {
                    free_col = c;
                    break;
                }
        }
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (int rrow = 0; rrow < rank; ++rrow) v[pivot_col[rrow]] = -m[rrow][free_col];
        UV num(v.begin(), v.begin() + bound + 1);
        UV den(v.begin() + bound + 1, v.end());
        uv_trim(num);
        uv_trim(den);
        if (den.empty()) continue;
        ThetaRat cand(num, den);
        bool ok = true;
        for (int s = 0; s < nsamples + nextra && ok; ++s) {
            try {
                ok = (cand.eval(xs[s]) == fs[s]);
            } catch (const zero_division_error&) {
                ok = false;
            }
        }
        if (ok) {
            result = cand;
            done = true;
        }
    }
    if (!done) throw linear_solve_error("psi_symbolic reconstruction failed to certify");
    std::lock_guard<std::mutex> lock(mutex_);
    return psi_sym_cache_.emplace(key, std::move(result)).first->second;
}

const JackPoly& JackCtx::pstar(const Partition& mu, int n, const Rat& theta) {
    if (mu.length() > n) throw std::invalid_argument("jack pstar needs l(mu) <= n");
    auto key = std::make_tuple(mu, n, theta);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    JackPoly result(n);
    if (n == 0) {
        result = JackPoly::one(0);
    } else {
        // branching over all interlacing nu (mu_{i+1} <= nu_i <= mu_i)
        std::vector<int> nu_parts(std::max(n - 1, 0), 0);
        JackPoly x1 = JackPoly::var(n, 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i > n - 1) {
                std::vector<int> v = nu_parts;
                Partition nu(std::move(v));
                Rat c = psi(mu, nu, theta);
                if (c == 0) return;
                JackPoly term = jack_falling_skew(x1, mu, nu, theta);
                term.scale(c);
                term *= pstar(nu, n - 1, theta).insert_vars(0, 1);
                result += term;
                return;
            }
            for (int v = mu.part(i + 1); v <= mu.part(i); ++v) {
                nu_parts[i - 1] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 1);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(key, std::move(result)).first->second;
}

JackPolySym JackCtx::pstar_symbolic(const Partition& mu, int n) {
    if (mu.length() > n) throw std::invalid_argument("jack pstar needs l(mu) <= n");
    if (n == 0) return JackPolySym::one(0);
    JackPolySym result(n);
    ThetaRat th = ThetaRat::theta();
    JackPolySym x1 = JackPolySym::var(n, 0);
    std::vector<int> nu_parts(std::max(n - 1, 0), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n - 1) {
            Partition nu{std::vector<int>(nu_parts)};
            if (!interlaces(nu, mu)) return;
            ThetaRat c = psi_symbolic(mu, nu);
            if (c.is_zero()) return;
            JackPolySym term = JackPolySym::one(n);
            for (auto [r, s] : skew_squares(mu, nu)) {
                ThetaRat shift = ThetaRat(Rat(Partition::arm_colength(r, s))) -
                                 ThetaRat(Rat(Partition::leg_colength(r, s))) * th;
                term *= x1 - JackPolySym::constant(n, shift);
            }
            term.scale(c);
            term *= pstar_symbolic(nu, n - 1).insert_vars(0, 1);
            result += term;
            return;
        }
        for (int v = mu.part(i + 1); v <= mu.part(i); ++v) {
            nu_parts[i - 1] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return result;
}

Rat JackCtx::eval_at(const JackPoly& p, const Partition& la) {
    std::vector<Rat> point;
    for (int i = 1; i <= p.nvars(); ++i) point.emplace_back(la.part(i));
    return p.eval(point);
}

Rat JackCtx::pstar_value(const Partition& mu, int n, const Partition& la, const Rat& theta) {
    return eval_at(pstar(mu, n, theta), la);
}

Report JackCtx::verify_vanishing(const Partition& mu, const Rat& theta) {
    Instance inst{mu.str(), "", "", 0, theta.get_str(), 0};
    for (const auto& la : enumerate_partitions(mu.size() + 2, mu.size() + 2)) {
        int n = std::max(mu.length(), la.length());
        if (n == 0) n = 1;
        Rat got = pstar_value(mu, n, la, theta);
        if (!la.contains(mu)) {
            if (got != 0)
                return Report::failed("jack-vanishing", inst,
                                      Witness{"lambda=" + la.str(), got.get_str(), "0"});
        }
    }
    return Report::passed("jack-vanishing", inst);
}

Report JackCtx::verify_normalization(const Partition& mu, const Rat& theta) {
    Instance inst{mu.str(), "", "", 0, theta.get_str(), 0};
    int n = std::max(mu.length(), 1);
    Rat got = pstar_value(mu, n, mu, theta);
    Rat want = jack_hook_H(mu, theta);
    if (got != want)
        return Report::failed("jack-normalization", inst,
                              Witness{"lambda=" + mu.str(), got.get_str(), want.get_str()});
    return Report::passed("jack-normalization", inst);
}

Report JackCtx::verify_symmetry(const Partition& mu, int n, const Rat& theta) {
    Instance inst{mu.str(), "", "", n, theta.get_str(), 0};
    const JackPoly& p = pstar(mu, n, theta);
    for (int i = 0; i + 1 < n; ++i) {
        JackPoly swapped = jack_shifted_swap(p, i, theta);
        if (auto w = first_difference(p, swapped)) {
            w->where = "swap x" + std::to_string(i + 1) + ",x" + std::to_string(i + 2) + " at " +
                       w->where;
            return Report::failed("jack-symmetry", inst, std::move(*w));
        }
    }
    return Report::passed("jack-symmetry", inst);
}

Report JackCtx::verify_schur_degeneration(const Partition& mu, int n) {
    Instance inst{mu.str(), "", "", n, "1", 0};
    // At theta = 1 every branching weight is 1 and the polynomial reduces to
    // the reverse-tableau content sum.
    for (const auto& nu : enumerate_partitions(mu.size(), mu.length()))
        if (interlaces(nu, mu) && psi(mu, nu, Rat(1)) != 1)
            return Report::failed("jack-schur", inst,
                                  Witness{"psi(" + mu.str() + "," + nu.str() + ")",
                                          psi(mu, nu, Rat(1)).get_str(), "1"});

    JackPoly want(n);
    for (const auto& tab : enumerate_reverse_tableaux(mu, n)) {
        JackPoly prod = JackPoly::one(n);
        for (auto [i, j] : squares(mu))
            prod *= JackPoly::var(n, tab.entry(i, j) - 1) -
                    JackPoly::constant(n, Rat(j - i));
        want += prod;
    }
    return compare_polys("jack-schur", inst, pstar(mu, n, Rat(1)), want);
}

Report JackCtx::verify_coherence(const Partition& mu, int n, int theta) {
    Instance inst{mu.str(), "", "", n, std::to_string(theta), 0};
    if (mu.length() >= n) throw std::invalid_argument("coherence needs l(mu) < n");
    if (theta < 1) throw std::invalid_argument("coherence needs a positive integer theta");
    const int nv = 2 * n - 1;
    JackPoly integrand = pstar(mu, n - 1, Rat(theta)).insert_vars(0, n);
    integrand *= jack_beta_star(n, theta);
    for (int i = n - 1; i >= 1; --i) {
        JackPoly lower = JackPoly::var(nv, xvar(n, i + 1));
        JackPoly upper = JackPoly::var(nv, xvar(n, i));
        integrand = finite_sum(integrand, yvar(n, i), lower, upper);
    }
    for (int i = n - 1; i >= 1; --i) integrand = integrand.drop_var(yvar(n, i));

    JackPoly lhs;
    try {
        lhs = exact_divide(integrand, jack_vandermonde_star(n, theta));
    } catch (const exact_division_error& e) {
        return Report::failed("coherence", inst,
                              Witness{"exact division remainder", e.remainder_text, "0"});
    }

    Rat c(1);
    auto fact = [](int k) {
        Rat f(1);
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (int i = 1; i <= n - 1; ++i) {
        int a = mu.part(i) + (n - i) * theta;
        c *= fact(a - 1) * fact(theta - 1) / fact(a + theta - 1);
    }
    JackPoly rhs = pstar(mu, n, Rat(theta));
    rhs.scale(c);
    return compare_polys("coherence", inst, lhs, rhs);
}

Report JackCtx::verify_limit_pointwise(const Partition& mu, int theta) {
    Instance inst{mu.str(), "", "", 0, std::to_string(theta), 0};
    ParamSub sub = ParamSub::t_to_qpow(theta);
    for (const auto& la : enumerate_partitions(mu.size() + 2, mu.size() + 2)) {
        int n = std::max({mu.length(), la.length(), 1});
        // Macdonald side: (q-1)^{-|mu|} P*_mu(q^lambda; q, q^theta), then q -> 1.
        QtRat val = substitute_params(shift_.pstar_value(mu, n, la), sub);
        QtRat denom = (QtRat::q() - QtRat(1)).pow(mu.size());
        Rat mac_limit;
        try {
            mac_limit = limit_at_one(val / denom);
        } catch (const pole_error&) {
            return Report::failed("jack-limit", inst,
                                  Witness{"lambda=" + la.str(), "pole at q=1", "finite"});
        }
        Rat jack_val = pstar_value(mu, n, la, Rat(theta));
        if (mac_limit != jack_val)
            return Report::failed("jack-limit", inst,
                                  Witness{"lambda=" + la.str(), mac_limit.get_str(),
                                          jack_val.get_str()});
    }
    return Report::passed("jack-limit", inst);
}

} // namespace macshift
