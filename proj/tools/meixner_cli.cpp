// meixner: orthogonal Sheffer sequences of the Meixner class, generalized
// Weyl-algebra normal ordering, orthogonality measures, and the associated
// Segal-Bargmann-type transforms.
//
// Subcommands: poly, normal-order, moments, verify, eval. See --help.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "meixner/meixner.hpp"
#include "meixner/verify.hpp"

using json = nlohmann::ordered_json;
using namespace meixner;

namespace {

// ---- parameter loading ----------------------------------------------------

GaussRational gauss_from_pair(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(std::string(what) + ": expected [re, im] rational strings");
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
}

struct CliContext {
    MeixnerParams params;
    QuadConfig quad;
};

CliContext load_params(const std::string& file, const std::string& preset) {
    CliContext ctx;
    ctx.params = laguerre_ref();
    if (!preset.empty()) {
        if (preset == "laguerre")
            ctx.params = laguerre_ref();
        else if (preset == "meixner1")
            ctx.params = meixner1_ref();
        else if (preset == "meixner2")
            ctx.params = meixner2_ref();
        else
            throw std::invalid_argument("unknown preset: " + preset);
        return ctx;
    }
    std::string path = file;
    if (path.empty()) {
        if (const char* env = std::getenv("MEIXNER_PARAMS")) path = env;
    }
    if (path.empty()) return ctx;  // built-in default

    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open params file: " + path);
    json doc = json::parse(in);
    ShefferClass cls = class_from_name(doc.at("class").get<std::string>());
    GaussRational alpha = gauss_from_pair(doc.at("alpha"), "alpha");
    GaussRational beta = gauss_from_pair(doc.at("beta"), "beta");
    Rat sigma = parse_rational(doc.at("sigma").get<std::string>());
    ctx.params = validate_params(alpha, beta, sigma, cls);
    if (doc.contains("quad")) {
        const json& q = doc["quad"];
        if (q.contains("rel_tol")) ctx.quad.rel_tol = q["rel_tol"].get<double>();
        if (q.contains("abs_tol")) ctx.quad.abs_tol = q["abs_tol"].get<double>();
        if (q.contains("max_nodes")) ctx.quad.max_nodes = q["max_nodes"].get<std::size_t>();
        if (ctx.quad.rel_tol <= 0.0 || ctx.quad.abs_tol <= 0.0)
            throw std::invalid_argument("quad tolerances must be positive");
    }
    return ctx;
}

// ---- small parsers ----------------------------------------------------------

/// Complex literal with decimal components: "1.5", "-0.7+0.3i", "2i".
Cplx parse_cli_complex(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    std::size_t pos = 0;
    auto read_number = [&]() -> double {
        std::size_t used = 0;
        double v = std::stod(s.substr(pos), &used);
        pos += used;
        return v;
    };
    double first = read_number();
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        if (pos != s.size()) throw std::invalid_argument("bad complex literal: " + s);
        return {0.0, first};
    }
    if (pos == s.size()) return {first, 0.0};
    double second = read_number();
    if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size())
        throw std::invalid_argument("bad complex literal: " + s);
    return {first, second};
}

/// Semicolon-separated list of complex literals.
std::vector<Cplx> parse_coeff_list(const std::string& s) {
    std::vector<Cplx> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(parse_cli_complex(item));
    return out;
}

std::string cplx_csv(Cplx v) { return fmt_double(v.real()) + "," + fmt_double(v.imag()); }

// ---- subcommand bodies ------------------------------------------------------

int cmd_poly(const CliContext& ctx, unsigned n, const std::string& basis,
             const std::string& format) {
    const MeixnerParams& P = ctx.params;
    std::vector<GaussRational> desc;
    std::string head;
    if (basis == "monomial") {
        // s_n written out in powers of x
        ExactPoly p = sheffer_poly(P, n);
        for (unsigned k = 0; k <= n; ++k) desc.push_back(p.coeff(n - k));
        head = "x^";
    } else if (basis == "sheffer") {
        // x^n expanded in the Sheffer sequence
        ExactPoly p = to_sheffer(P, ExactPoly::unit(n, Basis::Monomial));
        for (unsigned k = 0; k <= n; ++k) desc.push_back(p.coeff(n - k));
        head = "s_";
    } else if (basis == "falling-beta") {
        ExactPoly p = to_falling_beta(P, ExactPoly::unit(n, Basis::Monomial));
        for (unsigned k = 0; k <= n; ++k) desc.push_back(p.coeff(n - k));
        head = "fb_";
    } else {
        throw std::invalid_argument("unknown basis: " + basis);
    }
    if (format == "json") {
        json out;
        out["class"] = class_name(P.cls);
        out["n"] = n;
        out["basis"] = basis;
        json coeffs = json::array();
        for (const auto& c : desc) coeffs.push_back(to_string(c));
        out["coefficients_descending"] = coeffs;
        std::cout << out.dump(2) << "\n";
    } else {
        for (unsigned k = 0; k <= n; ++k) std::cout << head << (n - k) << (k == n ? "" : ",");
        std::cout << "\n";
        for (unsigned k = 0; k <= n; ++k)
            std::cout << to_string(desc[k]) << (k == n ? "" : ",");
        std::cout << "\n";
    }
    return 0;
}

int cmd_normal_order(const std::string& expr, const std::string& a_str, const std::string& b_str,
                     const std::string& format) {
    GaussRational a = parse_gauss_rational(a_str);
    GaussRational b = parse_gauss_rational(b_str);
    NormalForm nf = normal_order(*parse_operator(expr), a, b);
    if (format == "json") {
        json terms = json::array();
        for (auto it = nf.terms.rbegin(); it != nf.terms.rend(); ++it)
            terms.push_back({{"u_power", it->first.first},
                             {"v_power", it->first.second},
                             {"coefficient", to_string(it->second)}});
        json out;
        out["expr"] = expr;
        out["a"] = to_string(a);
        out["b"] = to_string(b);
        out["terms"] = terms;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& line : format_normal_form(nf)) std::cout << line << "\n";
    }
    return 0;
}

int cmd_moments(const CliContext& ctx, unsigned n_max, const std::string& format) {
    const MeixnerParams& P = ctx.params;
    NumericParams np = to_numeric(P);
    json rows = json::array();
    if (format != "json") std::cout << "n,exact,numeric_re,numeric_im,rel_err,status\n";
    for (unsigned n = 0; n <= n_max; ++n) {
        GaussRational exact = raw_moment(P, n);
        std::string status = "ok";
        Cplx numeric{0.0, 0.0};
        double rel = 0.0;
        try {
            numeric = integrate(measure_of(np),
                                [n](double x) { return pow_int(Cplx(x), n); }, ctx.quad);
            rel = rel_or_abs_error(numeric, exact.to_complex());
        } catch (const QuadratureError& e) {
            numeric = e.best_estimate();
            status = "failed";
            rel = rel_or_abs_error(numeric, exact.to_complex());
        }
        if (format == "json") {
            rows.push_back({{"n", n},
                            {"exact", to_string(exact)},
                            {"numeric_re", numeric.real()},
                            {"numeric_im", numeric.imag()},
                            {"rel_err", rel},
                            {"status", status}});
        } else {
            std::cout << n << "," << to_string(exact) << "," << fmt_double(numeric.real()) << ","
                      << fmt_double(numeric.imag()) << "," << fmt_double(rel) << "," << status
                      << "\n";
        }
    }
    if (format == "json") {
        json out;
        out["class"] = class_name(P.cls);
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

json row_to_json(const ReportRow& r) {
    return {{"id", r.id},         {"inputs", r.inputs}, {"expected", r.expected},
            {"actual", r.actual}, {"abs_err", r.abs_err}, {"rel_err", r.rel_err},
            {"tol", r.tol},       {"pass", r.pass}};
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& json_path,
               const std::string& corrupt) {
    if (!corrupt.empty()) {
        // fault-injection hook: offset one served Stirling entry
        unsigned n = 0, k = 0;
        if (std::sscanf(corrupt.c_str(), "%u,%u", &n, &k) != 2)
            throw std::invalid_argument("--corrupt-stirling expects \"n,k\"");
        combinat_testing::corrupt_stirling2(n, k);
    }
    VerifyOptions opt;
    opt.exact = (suite == "exact" || suite == "all" || suite == "slow");
    opt.numeric = (suite == "numeric" || suite == "all" || suite == "slow");
    opt.slow = (suite == "slow");
    if (suite != "exact" && suite != "numeric" && suite != "all" && suite != "slow")
        throw std::invalid_argument("unknown suite: " + suite);
    opt.seed = seed;

    auto rows = run_verify(opt);
    unsigned passed = 0;
    for (const auto& r : rows) passed += r.pass ? 1 : 0;

    std::cout << "suite: " << suite << "  seed: " << seed << "\n";
    for (const auto& r : rows) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << r.inputs << "]  "
                  << r.actual;
        if (r.tol > 0.0) std::cout << "  (tol " << fmt_double(r.tol) << ")";
        std::cout << "\n";
    }
    std::cout << passed << "/" << rows.size() << " checks passed\n";

    if (!json_path.empty()) {
        json out;
        out["suite"] = suite;
        out["seed"] = seed;
        json jrows = json::array();
        for (const auto& r : rows) jrows.push_back(row_to_json(r));
        out["rows"] = jrows;
        out["passed"] = passed;
        out["failed"] = rows.size() - passed;
        std::ofstream f(json_path);
        f << out.dump(2) << "\n";
    }
    combinat_testing::clear_corruption();
    return passed == rows.size() ? 0 : 1;
}

int cmd_eval(const CliContext& ctx, const std::string& what, const std::string& x_str,
             const std::string& z_str, const std::string& w_str, const std::string& coeff_str,
             double eta_flag, double sigma_flag, bool grid, double x_min, double x_max,
             unsigned steps) {
    NumericParams np = to_numeric(ctx.params);
    Cplx z = z_str.empty() ? Cplx{0.0, 0.0} : parse_cli_complex(z_str);

    auto one_value = [&](double x) -> Cplx {
        if (what == "coherent") return coherent_E(np, x, z, ctx.quad.rel_tol).value;
        if (what == "kernel") {
            Cplx w = w_str.empty() ? Cplx{0.0, 0.0} : parse_cli_complex(w_str);
            double eta = eta_flag >= 0.0 ? eta_flag : np.eta;
            double sigma = sigma_flag > 0.0 ? sigma_flag : np.sigma;
            return fock_kernel(eta, sigma, z, w, ctx.quad.rel_tol).value;
        }
        if (what == "transform-S") return transform_S(parse_coeff_list(coeff_str), z);
        if (what == "transform-curlyS")
            return transform_curlyS(np, parse_coeff_list(coeff_str), z);
        if (what == "transform-T") return transform_T(parse_coeff_list(coeff_str), z);
        if (what == "density") return density(measure_of(np), x);
        throw std::invalid_argument("unknown --what: " + what);
    };

    if (!grid) {
        double x = x_str.empty() ? 0.0 : std::stod(x_str);
        std::cout << cplx_csv(one_value(x)) << "\n";
        return 0;
    }
    std::cout << "x,z_re,z_im,value_re,value_im\n";
    for (unsigned i = 0; i <= steps; ++i) {
        double x = x_min + (x_max - x_min) * double(i) / double(steps);
        Cplx v = one_value(x);
        std::cout << fmt_double(x) << "," << fmt_double(z.real()) << "," << fmt_double(z.imag())
                  << "," << cplx_csv(v) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "meixner: orthogonal Sheffer sequences (Laguerre / Meixner-1 / Meixner-2),\n"
        "generalized Weyl-algebra normal ordering, orthogonality measures, and the\n"
        "generalized Segal-Bargmann transforms.\n\n"
        "Operator grammar for normal-order:\n"
        "  expr   := term (('+'|'-') term)*\n"
        "  term   := factor ('*' factor)*\n"
        "  factor := atom ('^' nat)?\n"
        "  atom   := 'U' | 'V' | scalar | '(' expr ')'\n"
        "  scalar := complex rational literal, e.g. 3/2+1/3i\n"};
    app.require_subcommand(1);

    std::string params_file, preset, format = "csv";
    app.add_option("--params", params_file,
                   "JSON parameter file (default: $MEIXNER_PARAMS, else laguerre(1,1,1))");
    app.add_option("--preset", preset, "reference parameter set: laguerre|meixner1|meixner2");
    app.add_option("--format", format, "output format: csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* poly = app.add_subcommand("poly", "Sheffer polynomial / basis-change coefficients");
    poly->fallthrough();
    unsigned poly_n = 0;
    std::string poly_basis = "monomial";
    poly->add_option("-n,--degree", poly_n, "degree")->required()->check(CLI::Range(0, 64));
    poly->add_option("--basis", poly_basis,
                     "monomial: s_n in powers of x; sheffer: x^n in s_k; "
                     "falling-beta: x^n in (x|beta)_k")
        ->check(CLI::IsMember({"monomial", "sheffer", "falling-beta"}));

    auto* nord = app.add_subcommand("normal-order",
                                    "normal-order an operator word under [V,U] = aV + b");
    nord->fallthrough();
    std::string nord_expr, nord_a = "0", nord_b = "0";
    nord->add_option("expr", nord_expr, "operator expression, e.g. \"(U*V)^2\"")->required();
    nord->add_option("--a", nord_a, "scalar a (complex rational literal)");
    nord->add_option("--b", nord_b, "scalar b (complex rational literal)");

    auto* mom = app.add_subcommand("moments", "exact vs quadrature moments of the measure");
    mom->fallthrough();
    unsigned n_max = 8;
    mom->add_option("--n-max", n_max, "largest moment order")->check(CLI::Range(0, 12));

    auto* ver = app.add_subcommand("verify", "run the identity verification suites");
    ver->fallthrough();
    std::string suite = "all", json_path, corrupt;
    std::uint64_t seed = 12345;
    ver->add_option("--suite", suite, "exact|numeric|all|slow")
        ->check(CLI::IsMember({"exact", "numeric", "all", "slow"}));
    ver->add_option("--seed", seed, "seed for the randomized identity instances");
    ver->add_option("--json", json_path, "also write the report as JSON to this path");
    ver->add_option("--corrupt-stirling", corrupt,
                    "fault injection: offset S(n,k) by one, format \"n,k\"");

    auto* ev = app.add_subcommand("eval", "evaluate coherent states, kernels and transforms");
    ev->fallthrough();
    std::string what, x_str, z_str, w_str, coeff_str;
    double eta_flag = -1.0, sigma_flag = -1.0, x_min = 0.0, x_max = 1.0;
    unsigned steps = 10;
    bool grid = false;
    ev->add_option("--what", what,
                   "coherent|kernel|transform-S|transform-curlyS|transform-T|density")
        ->required();
    ev->add_option("--x", x_str, "support point (real)");
    ev->add_option("--z", z_str, "complex point, e.g.  1+0.5i");
    ev->add_option("--w", w_str, "second kernel argument");
    ev->add_option("--coeffs", coeff_str,
                   "semicolon-separated coefficients, e.g. \"0;1;2+1i\"");
    ev->add_option("--eta", eta_flag, "kernel eta override (>= 0)");
    ev->add_option("--sigma", sigma_flag, "kernel sigma override (> 0)");
    ev->add_flag("--grid", grid, "emit a plot-ready table over x");
    ev->add_option("--x-min", x_min, "grid start");
    ev->add_option("--x-max", x_max, "grid end");
    ev->add_option("--x-steps", steps, "grid steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        CliContext ctx = load_params(params_file, preset);
        if (poly->parsed()) return cmd_poly(ctx, poly_n, poly_basis, format);
        if (nord->parsed()) return cmd_normal_order(nord_expr, nord_a, nord_b, format);
        if (mom->parsed()) return cmd_moments(ctx, n_max, format);
        if (ver->parsed()) return cmd_verify(suite, seed, json_path, corrupt);
        if (ev->parsed())
            return cmd_eval(ctx, what, x_str, z_str, w_str, coeff_str, eta_flag, sigma_flag,
                            grid, x_min, x_max, steps);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
