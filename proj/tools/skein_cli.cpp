/**
 * @file skein_cli.cpp
 * @brief Command-line front end: colored Jones polynomials, twist expansions, bubble
 *        coefficients and the verification suites.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error, 3 computation error.
 * JSON goes to stdout, diagnostics to stderr.
 */
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "skein/jones_2bridge.hpp"
#include "skein/twist_formulas.hpp"
#include "skein/verify.hpp"

namespace {

using namespace skein;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

TwistKind kind_from_name(const std::string& s) {
    if (s == "half") return TwistKind::Half;
    if (s == "full") return TwistKind::Full;
    if (s == "half_pos") return TwistKind::HalfPos;
    if (s == "half_neg") return TwistKind::HalfNeg;
    throw ParseError("unknown twist kind '" + s + "'");
}

Handed handed_from_name(const std::string& s) {
    if (s == "right") return Handed::Right;
    if (s == "left") return Handed::Left;
    throw ParseError("unknown handedness '" + s + "' (expected right or left)");
}

void print_coefficients(const std::map<int, RationalFunction>& c, const std::string& index, const std::string& format) {
    for (const auto& [k, v] : c) {
        if (format == "latex")
            std::cout << index << "=" << k << ": $" << v.to_latex() << "$\n";
        else
            std::cout << index << "=" << k << ": " << v.to_string() << "\n";
    }
}

int cmd_jones(const std::string& algebra, int color, const std::string& link, bool params, const std::string& format) {
    const TwoBridgeSpec spec = parse_spec(link, params ? SpecInput::TwistParameters : SpecInput::CrossingCounts);
    const Algebra alg = algebra_from_name(algebra);
    if (color < 0) throw OutOfRange("color must be nonnegative");
    const JonesResult r = colored_jones(alg, spec, color);
    if (format == "json") {
        std::cout << to_json(r).dump() << "\n";
    } else if (format == "latex") {
        std::cout << r.polynomial.to_latex() << "\n";
    } else {
        std::cout << "link " << spec.to_string() << ", " << algebra_name(alg) << ", n=" << color
                  << ", components=" << r.components << ", writhe=" << r.writhe << "\n"
                  << r.polynomial.to_string() << "\n";
    }
    return 0;
}

int cmd_expand(const std::string& algebra, int n, int m, const std::string& kind_name, const std::string& handed_name,
               const std::string& format) {
    const Algebra alg = algebra_from_name(algebra);
    const TwistKind kind = kind_from_name(kind_name);
    const Handed h = handed_from_name(handed_name);
    if (n < 0 || m < 0) throw OutOfRange("n and m must be nonnegative");
    TwistExpansion e;
    if (alg == Algebra::A1) {
        if (kind != TwistKind::Half && kind != TwistKind::Full) throw ParseError("sl2 twists are 'half' or 'full'");
        e = multi_twist_expansion_sl2(n, m, kind, h);
    } else if (kind == TwistKind::Full) {
        e = multi_twist_expansion_sl3(n, m, h);
    } else if (kind == TwistKind::HalfPos || kind == TwistKind::HalfNeg) {
        if (m != 1) throw ParseError("sl3 half twists are available for m = 1 only");
        e.n = n;
        for (int k = 0; k <= n; ++k) {
            RationalFunction c = twist_coeff_sl3(n, k, kind, h);
            if (!c.is_zero()) e.coefficients.emplace(k, c);
        }
    } else {
        throw ParseError("sl3 twists are 'full', 'half_pos' or 'half_neg'");
    }
    if (format == "json")
        std::cout << to_json(e).dump() << "\n";
    else
        print_coefficients(e.coefficients, "k", format);
    return 0;
}

int cmd_bubble(const std::string& algebra, int n, int m, int k, int l, const std::string& format) {
    const Algebra alg = algebra_from_name(algebra);
    if (n < 0 || m < 0 || k < 0 || l < 0 || k > std::min(n, m) || l > std::min(n, m))
        throw OutOfRange("bubble needs 0 <= k, l <= min(n, m)");
    std::map<int, RationalFunction> c;
    for (int t = std::max(k, l); t <= std::min({k + l, n, m}); ++t) c.emplace(t, bubble_coeff(alg, n, m, k, l, t));
    if (format == "json") {
        nlohmann::json coeffs = nlohmann::json::object();
        for (const auto& [t, v] : c) coeffs[std::to_string(t)] = to_json(v);
        std::cout << nlohmann::json{{"algebra", algebra_name(alg)}, {"n", n}, {"m", m}, {"k", k}, {"l", l}, {"coefficients", coeffs}}
                         .dump()
                  << "\n";
    } else {
        print_coefficients(c, "t", format);
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, unsigned seed, std::size_t max_terms) {
    verify::VerifyOptions o;
    o.max_n = max_n;
    o.seed = seed;
    o.max_terms = max_terms;
    std::vector<std::string> names;
    if (suite == "all") {
        names = verify::suite_names();
    } else {
        bool known = false;
        for (const auto& s : verify::suite_names()) known = known || s == suite;
        if (!known) throw ParseError("unknown suite '" + suite + "'");
        names = {suite};
    }
    nlohmann::json reports = nlohmann::json::array();
    bool ok = true;
    for (const auto& name : names) {
        const auto r = verify::run_suite(name, o);
        ok = ok && r.passed();
        for (const auto& c : r.checks)
            if (!c.passed) std::cerr << "FAIL [" << c.suite << "] " << c.name << ": " << c.detail << "\n";
        reports.push_back(to_json(r));
    }
    std::cout << nlohmann::json{{"passed", ok}, {"suites", reports}}.dump(2) << "\n";
    return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colored sl2/sl3 Jones polynomials of 2-bridge links and their skein-theoretic checks"};
    app.require_subcommand(1);

    std::string algebra = "sl2", format = "plain", link, kind = "half", handed = "right", suite = "all";
    int color = 1, n = 1, m = 1, k = 0, l = 0, max_n = -1;
    bool params = false;
    unsigned seed = 1;
    std::size_t max_terms = kDefaultMaxTerms;
    const std::vector<std::string> formats = {"plain", "json", "latex"};

    auto* jones = app.add_subcommand("jones", "Colored Jones polynomial of [2a_1, ..., 2a_l]");
    jones->add_option("--algebra", algebra, "sl2 or sl3")->check(CLI::IsMember({"sl2", "sl3"}));
    jones->add_option("--color", color, "n: sl2 color n+1 (dimension), sl3 color (n,0)");
    jones->add_option("--link", link, "crossing counts 2a_1,...,2a_l (use --link=-2,4 for a leading minus)")->required();
    jones->add_flag("--params", params, "read --link as a_1,...,a_l instead of 2a_1,...,2a_l");
    jones->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* expand = app.add_subcommand("expand", "Expansion of m colored twists in the turnback basis");
    expand->add_option("--algebra", algebra)->check(CLI::IsMember({"sl2", "sl3"}));
    expand->add_option("--n", n, "color");
    expand->add_option("--m", m, "number of twists");
    expand->add_option("--kind", kind, "half | full (sl2); full | half_pos | half_neg (sl3)");
    expand->add_option("--handed", handed, "right | left");
    expand->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* bubble = app.add_subcommand("bubble", "Bubble expansion coefficients");
    bubble->add_option("--algebra", algebra)->check(CLI::IsMember({"sl2", "sl3"}));
    bubble->add_option("--n", n);
    bubble->add_option("--m", m);
    bubble->add_option("--k", k);
    bubble->add_option("--l", l);
    bubble->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* ver = app.add_subcommand("verify", "Run formula-versus-oracle verification suites");
    ver->add_option("--suite", suite, "qident | jw | clasp | twist | bubble | jones | all");
    ver->add_option("--max-n", max_n, "scale of the suite (default: acceptance scale)");
    ver->add_option("--seed", seed, "seed for randomized reduction orders");
    ver->add_option("--max-terms", max_terms, "cap on terms in one oracle linear combination")
        ->default_str(std::to_string(kDefaultMaxTerms));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*jones) return cmd_jones(algebra, color, link, params, format);
        if (*expand) return cmd_expand(algebra, n, m, kind, handed, format);
        if (*bubble) return cmd_bubble(algebra, n, m, k, l, format);
        if (*ver) return cmd_verify(suite, max_n, seed, max_terms);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
