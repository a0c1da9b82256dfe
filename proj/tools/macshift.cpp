#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "macshift/render.hpp"
#include "macshift/verify.hpp"

using namespace macshift;

namespace {

MacCtx g_mac;
ShiftCtx g_shift(g_mac);
JackCtx g_jack(g_shift);

struct ThetaArg {
    bool symbolic = false;
    Rat value{1};
};

ThetaArg parse_theta(const std::string& text) {
    if (text == "symbolic") return {true, Rat(0)};
    ThetaArg t;
    Rat v(text);
    v.canonicalize();
    if (v <= 0) throw std::invalid_argument("theta must be positive");
    t.value = v;
    return t;
}

std::vector<int> parse_theta_list(const std::string& text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size() || v < 1)
            throw std::invalid_argument("theta list entries must be positive integers");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int cmd_compute(const std::string& kind, const std::string& mu_text, int n,
                const std::string& theta_text, std::string method, const std::string& format,
                const std::string& basis) {
    Partition mu = Partition::parse(mu_text);
    if (mu.length() > n) {
        std::cerr << "error: partition has more parts than variables\n";
        return 2;
    }
    if (kind == "macdonald") {
        if (method.empty()) method = "eigen";
        if (method != "eigen" && method != "tableaux") {
            std::cerr << "error: macdonald methods are eigen | tableaux\n";
            return 2;
        }
        SymPoly p = (method == "eigen") ? g_mac.P(mu, n) : g_mac.P_tableaux(mu, n);
        if (format == "json" && basis == "m") {
            // m-basis coefficient object
            std::ostringstream os;
            os << "{\"vars\":" << n << ",\"parameters\":[\"q\",\"t\"],\"basis\":\"m\",\"coeffs\":[";
            bool first = true;
            for (const auto& [la, c] : p.coeffs()) {
                if (!first) os << ",";
                first = false;
                os << "{\"partition\":\"" << la.str() << "\",\"coeff\":{\"num\":\""
                   << c.num().canonical_string() << "\",\"den\":\"" << c.den().canonical_string()
                   << "\"}}";
            }
            os << "]}";
            std::cout << os.str() << "\n";
            return 0;
        }
        XPoly x = p.to_xpoly();
        if (format == "json") std::cout << render_json(x) << "\n";
        else if (format == "latex") std::cout << render_latex(x) << "\n";
        else std::cout << x.pretty_string() << "\n";
        return 0;
    }
    if (kind == "shifted") {
        if (method.empty()) method = "interp";
        ShiftedPoly p(n);
        if (method == "interp") p = g_shift.pstar(mu, n);
        else if (method == "comb") p = g_shift.pstar_combinatorial(mu, n);
        else if (method == "recursion") {
            if (mu.length() != n) {
                std::cerr << "error: recursion needs mu_n > 0\n";
                return 2;
            }
            p = g_shift.pstar_recursion(mu, n);
        } else {
            std::cerr << "error: shifted methods are interp | comb | recursion\n";
            return 2;
        }
        if (format == "json") std::cout << render_json(p) << "\n";
        else if (format == "latex") std::cout << render_latex(p) << "\n";
        else std::cout << p.pretty_string() << "\n";
        return 0;
    }
    if (kind == "jack") {
        ThetaArg theta = parse_theta(theta_text.empty() ? "1" : theta_text);
        MPoly<ThetaRat> p = theta.symbolic ? g_jack.pstar_symbolic(mu, n)
                                           : lift_to_theta(g_jack.pstar(mu, n, theta.value));
        if (format == "json") std::cout << render_json(p) << "\n";
        else if (format == "latex") std::cout << render_latex(p) << "\n";
        else std::cout << p.pretty_string() << "\n";
        return 0;
    }
    std::cerr << "error: kinds are macdonald | shifted | jack\n";
    return 2;
}

int cmd_eval(const std::string& kind, const std::string& mu_text, int n,
             const std::string& theta_text, const std::string& at_text) {
    Partition mu = Partition::parse(mu_text);
    Partition at = Partition::parse(at_text);
    if (mu.length() > n || at.length() > n) {
        std::cerr << "error: partition has more parts than variables\n";
        return 2;
    }
    if (kind == "shifted") {
        std::cout << g_shift.pstar_value(mu, n, at).pretty_string() << "\n";
        return 0;
    }
    if (kind == "macdonald") {
        // P_mu evaluated on the same q^lambda grid
        std::vector<QtRat> point;
        for (int i = 1; i <= n; ++i) point.push_back(QtRat::q(at.part(i)));
        std::cout << g_mac.P(mu, n).to_xpoly().eval(point).pretty_string() << "\n";
        return 0;
    }
    if (kind == "jack") {
        ThetaArg theta = parse_theta(theta_text.empty() ? "1" : theta_text);
        if (theta.symbolic) {
            JackPolySym p = g_jack.pstar_symbolic(mu, n);
            std::vector<ThetaRat> point;
            for (int i = 1; i <= n; ++i) point.emplace_back(Rat(at.part(i)));
            std::cout << p.eval(point).canonical_string() << "\n";
        } else {
            std::cout << g_jack.pstar_value(mu, n, at, theta.value).get_str() << "\n";
        }
        return 0;
    }
    std::cerr << "error: kinds are macdonald | shifted | jack\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Macdonald / shifted Macdonald / shifted Jack polynomial calculator"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "construct a polynomial and print it");
    std::string c_kind, c_mu = "0", c_theta, c_method, c_format = "text", c_basis;
    int c_n = 2;
    compute->add_option("kind", c_kind, "macdonald | shifted | jack")->required();
    compute->add_option("--mu", c_mu, "partition, e.g. 3,1 (0 for empty)")->required();
    compute->add_option("--n", c_n, "number of variables")->required();
    compute->add_option("--theta", c_theta, "jack parameter: positive integer, p/r, or symbolic");
    compute->add_option("--method", c_method,
                        "macdonald: eigen|tableaux; shifted: interp|comb|recursion");
    compute->add_option("--format", c_format, "text | json | latex");
    compute->add_option("--basis", c_basis, "m: macdonald JSON as m-basis coefficients");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate at a grid point q^lambda (or lambda)");
    std::string e_kind, e_mu = "0", e_theta, e_at = "0";
    int e_n = 2;
    eval->add_option("kind", e_kind, "macdonald | shifted | jack")->required();
    eval->add_option("--mu", e_mu, "partition")->required();
    eval->add_option("--n", e_n, "number of variables")->required();
    eval->add_option("--theta", e_theta, "jack parameter");
    eval->add_option("--at", e_at, "evaluation partition lambda")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "verify an identity over a bound box");
    std::string v_identity, v_theta = "1,2", v_out;
    VerifyOptions vopt;
    verify->add_option("identity", v_identity,
                       "theorem1 | theorem2 | branching | duality | powersum-duality | "
                       "vanishing | lemmas | coherence | equivalence")
        ->required();
    verify->add_option("--max-mu-size", vopt.max_mu_size, "bound on |mu| (and |lambda|)");
    verify->add_option("--n", vopt.nmax, "largest variable count");
    verify->add_option("--theta", v_theta, "comma list of positive integers, or symbolic");
    verify->add_option("--kmax", vopt.kmax, "power-sum exponent bound");
    verify->add_option("--jobs", vopt.jobs, "worker threads");
    verify->add_flag("--timings", vopt.timings, "include elapsed_ms in the JSON reports");
    verify->add_option("--out", v_out, "also write the JSON report stream to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed())
            return cmd_compute(c_kind, c_mu, c_n, c_theta, c_method, c_format, c_basis);
        if (eval->parsed()) return cmd_eval(e_kind, e_mu, e_n, e_theta, e_at);
        if (verify->parsed()) {
            vopt.kind = parse_identity(v_identity);
            if (v_theta == "symbolic") {
                vopt.thetas.clear();
                if (vopt.kind == IdentityKind::theorem1 || vopt.kind == IdentityKind::theorem2 ||
                    vopt.kind == IdentityKind::coherence || vopt.kind == IdentityKind::lemmas) {
                    std::cerr << "error: " << identity_name(vopt.kind)
                              << " requires integer theta (exactness contract)\n";
                    return 2;
                }
            } else {
                vopt.thetas = parse_theta_list(v_theta);
            }
            std::ostringstream buffer;
            VerifySummary summary = run_verify(g_mac, g_shift, g_jack, vopt, buffer, std::cerr);
            std::cout << buffer.str();
            if (!v_out.empty()) {
                std::ofstream f(v_out);
                if (!f) {
                    std::cerr << "error: cannot open --out file\n";
                    return 2;
                }
                f << buffer.str();
            }
            return summary.failed == 0 ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
