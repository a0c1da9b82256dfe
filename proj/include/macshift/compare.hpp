#pragma once

#include <optional>
#include <string>

#include "macshift/mpoly.hpp"
#include "macshift/report.hpp"

namespace macshift {

template <class K>
std::string exps_string(const Exps& e) = delete;

inline std::string exps_string(const Exps& e) {
    std::string s = "[";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "]";
}

// First monomial (in exponent-lex order) where the two sides disagree.
template <class K>
std::optional<Witness> first_difference(const MPoly<K>& lhs, const MPoly<K>& rhs) {
    if (lhs == rhs) return std::nullopt;
    auto it = lhs.terms().begin();
    auto jt = rhs.terms().begin();
    while (it != lhs.terms().end() && jt != rhs.terms().end()) {
        if (it->first == jt->first) {
            if (!(it->second == jt->second))
                return Witness{exps_string(it->first), FieldOps<K>::str(it->second),
                               FieldOps<K>::str(jt->second)};
            ++it;
            ++jt;
        } else if (it->first < jt->first) {
            return Witness{exps_string(it->first), FieldOps<K>::str(it->second),
                           FieldOps<K>::str(FieldOps<K>::zero())};
        } else {
            return Witness{exps_string(jt->first), FieldOps<K>::str(FieldOps<K>::zero()),
                           FieldOps<K>::str(jt->second)};
        }
    }
    if (it != lhs.terms().end())
        return Witness{exps_string(it->first), FieldOps<K>::str(it->second),
                       FieldOps<K>::str(FieldOps<K>::zero())};
    return Witness{exps_string(jt->first), FieldOps<K>::str(FieldOps<K>::zero()),
                   FieldOps<K>::str(jt->second)};
}

template <class K>
Report compare_polys(std::string identity, Instance inst, const MPoly<K>& lhs,
                     const MPoly<K>& rhs) {
    auto w = first_difference(lhs, rhs);
    if (!w) return Report::passed(std::move(identity), std::move(inst));
    return Report::failed(std::move(identity), std::move(inst), std::move(*w));
}

inline Report compare_values(std::string identity, Instance inst, const QtRat& lhs,
                             const QtRat& rhs) {
    if (lhs == rhs) return Report::passed(std::move(identity), std::move(inst));
    return Report::failed(std::move(identity), std::move(inst),
                          Witness{"value", lhs.canonical_string(), rhs.canonical_string()});
}

} // namespace macshift
