// Command-line front end: exact Schubert polynomials, Hessenberg function
// combinatorics, identity sweeps, and presentation-ideal queries.
//
// Exit codes: 0 on success (all sweep cases pass), 1 when a sweep finds
// failures, 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "hesscalc/errors.hpp"
#include "hesscalc/groebner.hpp"
#include "hesscalc/hessenberg.hpp"
#include "hesscalc/schubert.hpp"
#include "hesscalc/verify.hpp"

namespace {

using namespace hesscalc;

// Largest sweep size per check; beyond these the runtime grows past what a
// command-line invocation should absorb.
const std::map<std::string, int> kMaxSweepSize = {
    {"theorem", 8}, {"ddo", 8},     {"chain", 8},
    {"monk", 5},    {"lemma42", 6}, {"nonvanish", 4},
};

int run_verify(const std::string& check, int n, bool as_json, int jobs, bool force) {
    const int budget = kMaxSweepSize.at(check);
    if (n > budget && !force) {
        std::cerr << "error: check '" << check << "' supports n <= " << budget
                  << " (got " << n << "); pass --force to run anyway (unsupported)\n";
        return 2;
    }
    const SweepOptions opts{jobs};
    VerificationReport report;
    if (check == "theorem") report = verify_schubert_sum_identity(n, opts);
    else if (check == "ddo") report = verify_generator_ddo(n, opts);
    else if (check == "chain") report = verify_generator_chain(n, opts);
    else if (check == "monk") report = verify_monk_rule(n, opts);
    else if (check == "lemma42") report = verify_minimal_cells(n, opts);
    else report = verify_ideal_membership(n, opts);

    if (as_json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << report.summary() << "\n";
        if (!report.passed()) std::cout << report.detail();
    }
    return report.passed() ? 0 : 1;
}

int run_hess(const std::string& action, const std::string& text) {
    const HessenbergFunction h = HessenbergFunction::parse(text);
    if (action == "render") {
        std::cout << h.render_grid() << "\n";
    } else if (action == "corners") {
        std::string line;
        for (const Corner& c : h.corners()) {
            if (!line.empty()) line += ' ';
            line += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
        }
        std::cout << line << "\n";
    } else if (action == "dim") {
        std::cout << h.dimension() << "\n";
    } else { // generators — emitted in the ideal file format
        std::cout << "vars: " << h.size() << "\n";
        for (const IntPoly& g : ideal_generators(h)) std::cout << format(g) << "\n";
    }
    return 0;
}

GroebnerBasis basis_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open ideal file '" + path + "'");
    const IdealFile file = read_ideal_file(in);
    std::vector<RatPoly> gens;
    gens.reserve(file.polynomials.size());
    for (const IntPoly& p : file.polynomials) gens.push_back(to_rational(p));
    return groebner(gens, file.nvars);
}

int run_ideal_member(const std::string& path, const std::string& poly_text) {
    const GroebnerBasis basis = basis_from_file(path);
    const RatPoly query = to_rational(parse_polynomial(poly_text));
    const RatPoly rest = normal_form(query, basis);
    std::cout << "member: " << (rest.is_zero() ? "true" : "false") << "\n";
    std::cout << "normal_form: " << format(rest) << "\n";
    return 0;
}

int run_ideal_hilbert(const std::string& path) {
    const std::vector<long long> series = hilbert_series(basis_from_file(path));
    std::string line;
    for (long long c : series) {
        if (!line.empty()) line += ' ';
        line += std::to_string(c);
    }
    std::cout << line << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Schubert polynomial and Hessenberg function calculator"};
    app.require_subcommand(1);

    std::string perm_text;
    auto* cmd_schubert =
        app.add_subcommand("schubert", "print the Schubert polynomial of a permutation");
    cmd_schubert->add_option("permutation", perm_text, "one-line notation, e.g. \"[3,1,2]\"")
        ->required();

    int gen_i = 0;
    int gen_j = 0;
    auto* cmd_fpoly =
        app.add_subcommand("fpoly", "print the (i, j) generator polynomial");
    cmd_fpoly->add_option("i", gen_i, "row index")->required();
    cmd_fpoly->add_option("j", gen_j, "column index, 1 <= j <= i")->required();

    std::string check;
    int sweep_n = 0;
    bool as_json = false;
    int jobs = 0;
    auto* cmd_verify =
        app.add_subcommand("verify", "sweep an identity family and report failures");
    cmd_verify->add_option("check", check, "theorem|ddo|chain|monk|lemma42|nonvanish")
        ->required()
        ->check(CLI::IsMember({"theorem", "ddo", "chain", "monk", "lemma42", "nonvanish"}));
    cmd_verify->add_option("--n", sweep_n, "sweep size")->required();
    cmd_verify->add_flag("--json", as_json, "emit the report as JSON");
    cmd_verify->add_option("--jobs", jobs, "worker threads (default: all cores)");
    bool force = false;
    cmd_verify->add_flag("--force", force,
                         "run past the size budget (unsupported; may take very long)");

    std::string hess_action;
    std::string hess_text;
    auto* cmd_hess =
        app.add_subcommand("hess", "inspect a Hessenberg function");
    cmd_hess->add_option("action", hess_action, "render|corners|dim|generators")
        ->required()
        ->check(CLI::IsMember({"render", "corners", "dim", "generators"}));
    cmd_hess->add_option("function", hess_text, "value tuple, e.g. \"(2,3,3)\"")->required();

    auto* cmd_ideal = app.add_subcommand("ideal", "query a presentation ideal from a file");
    cmd_ideal->require_subcommand(1);
    std::string member_file;
    std::string member_poly;
    auto* cmd_member =
        cmd_ideal->add_subcommand("member", "test ideal membership of a polynomial");
    cmd_member->add_option("file", member_file, "ideal file (vars: n, then one polynomial per line)")
        ->required();
    cmd_member->add_option("polynomial", member_poly, "query polynomial")->required();
    std::string hilbert_file;
    auto* cmd_hilbert =
        cmd_ideal->add_subcommand("hilbert", "print quotient dimensions by degree");
    cmd_hilbert->add_option("file", hilbert_file, "ideal file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_schubert->parsed()) {
            std::cout << format(schubert(Permutation::parse(perm_text))) << "\n";
            return 0;
        }
        if (cmd_fpoly->parsed()) {
            std::cout << format(generator_poly(gen_i, gen_j)) << "\n";
            return 0;
        }
        if (cmd_verify->parsed()) return run_verify(check, sweep_n, as_json, jobs, force);
        if (cmd_hess->parsed()) return run_hess(hess_action, hess_text);
        if (cmd_member->parsed()) return run_ideal_member(member_file, member_poly);
        if (cmd_hilbert->parsed()) return run_ideal_hilbert(hilbert_file);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable with require_subcommand(1)
}
