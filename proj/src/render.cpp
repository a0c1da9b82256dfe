#include "macshift/render.hpp"

#include <json.hpp>

namespace macshift {

PolyDoc doc_of(const XPoly& p) {
    PolyDoc doc;
    doc.vars = p.nvars();
    doc.parameters = {"q", "t"};
    for (const auto& [e, c] : p.terms())
        doc.terms.push_back({e, {c.num().canonical_string(), c.den().canonical_string()}});
    return doc;
}

PolyDoc doc_of(const MPoly<ThetaRat>& p) {
    auto poly_str = [](const std::vector<Rat>& f) {
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
    PolyDoc doc;
    doc.vars = p.nvars();
    doc.parameters = {"theta"};
    for (const auto& [e, c] : p.terms())
        doc.terms.push_back({e, {poly_str(c.num()), poly_str(c.den())}});
    return doc;
}

std::string render_doc(const PolyDoc& doc) {
    nlohmann::ordered_json j;
    j["vars"] = doc.vars;
    j["parameters"] = doc.parameters;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : doc.terms) {
        nlohmann::ordered_json term;
        term["exps"] = e;
        term["coeff"] = {{"num", c.first}, {"den", c.second}};
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

PolyDoc parse_doc(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    PolyDoc doc;
    doc.vars = j.at("vars").get<int>();
    doc.parameters = j.at("parameters").get<std::vector<std::string>>();
    for (const auto& term : j.at("terms")) {
        Exps e = term.at("exps").get<Exps>();
        if (static_cast<int>(e.size()) != doc.vars)
            throw std::invalid_argument("polynomial document: wrong exponent arity");
        doc.terms.push_back({std::move(e),
                             {term.at("coeff").at("num").get<std::string>(),
                              term.at("coeff").at("den").get<std::string>()}});
    }
    return doc;
}

XPoly xpoly_of_doc(const PolyDoc& doc) {
    if (doc.parameters != std::vector<std::string>{"q", "t"})
        throw std::invalid_argument("polynomial document does not carry (q,t) coefficients");
    XPoly p(doc.vars);
    for (const auto& [e, c] : doc.terms)
        p.add_term(e, QtRat(qt_parse(c.first), qt_parse(c.second)));
    return p;
}

namespace {

std::string latex_monomial(const Exps& e) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        mono += "x_{" + std::to_string(i + 1) + "}";
        if (e[i] != 1) mono += "^{" + std::to_string(e[i]) + "}";
    }
    return mono;
}

std::string latex_qt(const QtRat& c) {
    auto poly = [](const QtPoly& f) {
        if (f.is_zero()) return std::string("0");
        std::string out;
        bool first = true;
        for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
            const auto& [e, a] = *it;
            Rat v = a;
            if (!first) {
                out += (v < 0) ? " - " : " + ";
                if (v < 0) v = -v;
            } else if (v < 0) {
                out += "-";
                v = -v;
            }
            first = false;
            bool bare = (e.first == 0 && e.second == 0);
            if (v != 1 || bare) out += v.get_str();
            if (e.first == 1) out += "q";
            else if (e.first != 0) out += "q^{" + std::to_string(e.first) + "}";
            if (e.second == 1) out += "t";
            else if (e.second != 0) out += "t^{" + std::to_string(e.second) + "}";
        }
        return out;
    };
    if (c.den().is_one()) return poly(c.num());
    return "\\frac{" + poly(c.num()) + "}{" + poly(c.den()) + "}";
}

} // namespace

std::string render_latex(const XPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        std::string c = latex_qt(it->second);
        std::string mono = latex_monomial(it->first);
        if (mono.empty()) {
            out += c;
        } else if (it->second.is_one()) {
            out += mono;
        } else {
            bool wrap = c.find_first_of("+-") != std::string::npos && c.rfind("\\frac", 0) != 0;
            out += (wrap ? "\\left(" + c + "\\right)" : c) + " " + mono;
        }
    }
    return out;
}

std::string render_latex(const MPoly<ThetaRat>& p) {
    if (p.is_zero()) return "0";
    auto poly = [](const std::vector<Rat>& f) {
        if (f.empty()) return std::string("0");
        std::string out;
        bool first = true;
        for (size_t k = f.size(); k-- > 0;) {
            if (f[k] == 0) continue;
            Rat v = f[k];
            if (!first) {
                out += (v < 0) ? " - " : " + ";
                if (v < 0) v = -v;
            } else if (v < 0) {
                out += "-";
                v = -v;
            }
            first = false;
            if (v != 1 || k == 0) out += v.get_str();
            if (k == 1) out += "\\theta";
            else if (k >= 2) out += "\\theta^{" + std::to_string(k) + "}";
        }
        return out;
    };
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        const ThetaRat& c = it->second;
        std::string cs = c.den().size() == 1 && c.den()[0] == 1
                             ? poly(c.num())
                             : "\\frac{" + poly(c.num()) + "}{" + poly(c.den()) + "}";
        std::string mono = latex_monomial(it->first);
        if (mono.empty()) {
            out += cs;
        } else if (c.is_one()) {
            out += mono;
        } else {
            bool wrap = cs.find_first_of("+-") != std::string::npos && cs.rfind("\\frac", 0) != 0;
            out += (wrap ? "\\left(" + cs + "\\right)" : cs) + " " + mono;
        }
    }
    return out;
}

MPoly<ThetaRat> lift_to_theta(const MPoly<Rat>& p) {
    return p.map_coeffs<ThetaRat>([](const Rat& c) { return ThetaRat(c); });
}

} // namespace macshift
