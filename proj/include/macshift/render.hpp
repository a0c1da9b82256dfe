#pragma once

#include <string>
#include <vector>

#include "macshift/jack.hpp"
#include "macshift/mpoly.hpp"

namespace macshift {

// Parsed form of the JSON polynomial document:
// {"vars": n, "parameters": ["q","t"] | ["theta"],
//  "terms": [{"exps": [...], "coeff": {"num": "...", "den": "..."}}]}
// with terms sorted ascending in exponent lex order and num/den carrying the
// canonical coefficient strings.
struct PolyDoc {
    int vars = 0;
    std::vector<std::string> parameters;
    std::vector<std::pair<Exps, std::pair<std::string, std::string>>> terms;

    bool operator==(const PolyDoc&) const = default;
};

PolyDoc doc_of(const XPoly& p);
PolyDoc doc_of(const MPoly<ThetaRat>& p);

std::string render_doc(const PolyDoc& doc);
PolyDoc parse_doc(const std::string& json_text);

// Structural reconstruction (parameters must be ["q","t"]).
XPoly xpoly_of_doc(const PolyDoc& doc);

template <class K>
std::string render_json(const MPoly<K>& p) {
    return render_doc(doc_of(p));
}

std::string render_latex(const XPoly& p);
std::string render_latex(const MPoly<ThetaRat>& p);

// theta-world polynomials with a specialized rational theta are rendered
// through constant ThetaRat coefficients.
MPoly<ThetaRat> lift_to_theta(const MPoly<Rat>& p);

} // namespace macshift
