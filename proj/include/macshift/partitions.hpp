#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace macshift {

// Integer partition: weakly decreasing positive parts, trailing zeros trimmed.
// Squares of the diagram are addressed (row i, column j), 1-based.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw std::invalid_argument("partition parts must be weakly decreasing and nonnegative");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Text form "3,1"; the empty partition reads as "" or "0".
    static Partition parse(const std::string& text) {
        if (text.empty() || text == "0") return Partition{};
        std::vector<int> parts;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (piece.empty()) throw std::invalid_argument("malformed partition: '" + text + "'");
            size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument("malformed partition: '" + text + "'");
            parts.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    std::string str() const {
        if (parts_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    // 1-based part access; zero beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    Partition conjugate() const {
        std::vector<int> conj;
        if (!parts_.empty()) {
            conj.resize(parts_[0]);
            for (int j = 1; j <= parts_[0]; ++j)
                conj[j - 1] = static_cast<int>(std::count_if(
                    parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
        }
        return Partition(std::move(conj));
    }

    // nu is contained in this diagram.
    bool contains(const Partition& nu) const {
        for (int i = 1; i <= nu.length(); ++i)
            if (nu.part(i) > part(i)) return false;
        return true;
    }

    // arm a(s) = mu_i - j and leg l(s) = mu'_j - i for the square s=(i,j).
    int arm(int i, int j) const { return part(i) - j; }
    int leg(int i, int j) const { return conjugate().part(j) - i; }
    static int arm_colength(int /*i*/, int j) { return j - 1; }
    static int leg_colength(int i, int /*j*/) { return i - 1; }

    // n(mu) = sum (i-1) mu_i.
    int n_stat() const {
        int s = 0;
        for (int i = 1; i <= length(); ++i) s += (i - 1) * part(i);
        return s;
    }

    // mu with every part reduced by one; requires all n parts positive.
    Partition all_parts_minus_one(int n) const {
        if (length() != n) throw std::invalid_argument("all parts must be positive");
        std::vector<int> v(parts_);
        for (int& p : v) --p;
        return Partition(std::move(v));
    }

    // (mu_1, ..., mu_{n-1}): the diagram with the last row slot removed.
    Partition truncate_last(int n) const {
        std::vector<int> v;
        for (int i = 1; i <= n - 1; ++i) v.push_back(part(i));
        return Partition(std::move(v));
    }

    // (mu_2, ..., mu_n).
    Partition drop_first() const {
        std::vector<int> v(parts_.begin() + (parts_.empty() ? 0 : 1), parts_.end());
        return Partition(std::move(v));
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    // Dominance order for equal-size partitions: partial sums of a cover b.
    static bool dominates(const Partition& a, const Partition& b) {
        int sa = 0, sb = 0;
        int len = std::max(a.length(), b.length());
        for (int i = 1; i <= len; ++i) {
            sa += a.part(i);
            sb += b.part(i);
            if (sa < sb) return false;
        }
        return true;
    }

private:
    std::vector<int> parts_;
};

// Deterministic total order used for output and triangular solves:
// by size, then parts lexicographically descending (so within one size the
// dominance-largest partitions come first).  A linear extension of dominance.
inline bool partition_order_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
}

struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        return partition_order_less(a, b);
    }
};

// nu interlaces mu: mu_i >= nu_i >= mu_{i+1} for all i, i.e. mu/nu is a
// horizontal strip.
inline bool interlaces(const Partition& nu, const Partition& mu) {
    int len = std::max(nu.length(), mu.length());
    for (int i = 1; i <= len; ++i) {
        if (!(mu.part(i) >= nu.part(i) && nu.part(i) >= mu.part(i + 1))) return false;
    }
    return true;
}

// eta/nu is a vertical r-strip: containment, size difference r, at most one
// square added per row.
inline bool vertical_strip(const Partition& nu, const Partition& eta, int r) {
    if (!eta.contains(nu)) return false;
    if (eta.size() - nu.size() != r) return false;
    for (int i = 1; i <= eta.length(); ++i)
        if (eta.part(i) - nu.part(i) > 1) return false;
    return true;
}

// Squares of mu in row-major order.
inline std::vector<std::pair<int, int>> squares(const Partition& mu) {
    std::vector<std::pair<int, int>> sq;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) sq.emplace_back(i, j);
    return sq;
}

// Squares of mu not in nu (requires nu contained in mu).
inline std::vector<std::pair<int, int>> skew_squares(const Partition& mu, const Partition& nu) {
    if (!mu.contains(nu)) throw std::invalid_argument("skew_squares: nu is not contained in mu");
    std::vector<std::pair<int, int>> sq;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = nu.part(i) + 1; j <= mu.part(i); ++j) sq.emplace_back(i, j);
    return sq;
}

namespace detail {
inline void enum_parts_rec(int remaining, int max_part, int max_len,
                           std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enum_parts_rec(remaining - p, p, max_len - 1, acc, out);
        acc.pop_back();
    }
}
} // namespace detail

// All partitions of exactly `size` with at most `max_length` parts, lex
// descending.
inline std::vector<Partition> partitions_of(int size, int max_length) {
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::enum_parts_rec(size, size, max_length, acc, out);
    return out;
}

// All partitions with |lambda| <= max_size and l(lambda) <= max_length, in
// the deterministic order (size ascending, then lex descending).
inline std::vector<Partition> enumerate_partitions(int max_size, int max_length) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s) {
        auto block = partitions_of(s, max_length);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

// Filling of a partition shape with positive integers, weakly decreasing
// along rows and strictly decreasing down columns.
class ReverseTableau {
public:
    ReverseTableau(Partition shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {}

    const Partition& shape() const { return shape_; }
    int entry(int i, int j) const { return rows_[i - 1][j - 1]; } // 1-based

    // Shape of {s : T(s) >= level}; consecutive layers differ by horizontal
    // strips, which is what the psi weight of a tableau is built from.
    Partition layer_at_least(int level) const {
        std::vector<int> v;
        for (int i = 1; i <= shape_.length(); ++i) {
            int cnt = 0;
            for (int j = 1; j <= shape_.part(i); ++j)
                if (entry(i, j) >= level) ++cnt;
            v.push_back(cnt);
        }
        return Partition(std::move(v));
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

namespace detail {
inline void enum_rt_rec(const Partition& mu, int max_entry,
                        std::vector<std::vector<int>>& rows, int i, int j,
                        std::vector<ReverseTableau>& out) {
    if (i > mu.length()) {
        out.emplace_back(mu, rows);
        return;
    }
    int ni = i, nj = j + 1;
    if (nj > mu.part(i)) { ni = i + 1; nj = 1; }
    int hi = max_entry;
    if (j > 1) hi = std::min(hi, rows[i - 1][j - 2]);                            // row: weak decrease
    if (i > 1 && mu.part(i - 1) >= j) hi = std::min(hi, rows[i - 2][j - 1] - 1); // column: strict
    // Entries below this square in the same column must stay strictly smaller.
    int below = mu.conjugate().part(j) - i;
    for (int v = hi; v >= 1 + below; --v) {
        rows[i - 1][j - 1] = v;
        enum_rt_rec(mu, max_entry, rows, ni, nj, out);
    }
}
} // namespace detail

inline std::vector<ReverseTableau> enumerate_reverse_tableaux(const Partition& mu, int max_entry) {
    std::vector<ReverseTableau> out;
    if (mu.empty()) {
        out.emplace_back(mu, std::vector<std::vector<int>>{});
        return out;
    }
    if (max_entry < mu.length()) return out;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= mu.length(); ++i) rows.emplace_back(mu.part(i), 0);
    detail::enum_rt_rec(mu, max_entry, rows, 1, 1, out);
    return out;
}

} // namespace macshift
