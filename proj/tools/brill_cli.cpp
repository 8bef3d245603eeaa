// Command-line front end: Chow-variety membership through Brill's map,
// main-theorem verification, explicit equation generation, highest weight
// vectors, multiplicities, pairing tables, and the golden-file driver.

#include "brill/brill.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

brill::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    brill::json j;
    in >> j;
    return j;
}

std::string rat_or(const brill::Rational& v) { return brill::rat_to_string(v); }

int cmd_membership(const std::string& path, int want_d, int want_n) {
    brill::SymElement<brill::Rational> f;
    try {
        f = brill::sym_from_json(load_json_file(path));
        if (want_d >= 0 && f.grade() != want_d)
            throw std::invalid_argument("polynomial grade " + std::to_string(f.grade()) +
                                        " does not match --d " + std::to_string(want_d));
        if (want_n >= 0 && f.n() != want_n)
            throw std::invalid_argument("polynomial n " + std::to_string(f.n()) +
                                        " does not match --n " + std::to_string(want_n));
        if (f.grade() < 1 || f.n() < 2) throw std::invalid_argument("need grade >= 1 and n >= 2");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    auto B = brill::brill_B(f);
    brill::json verdict = {{"brill_zero", B.is_zero()},
                           {"nonzero_terms", B.size()}};
    std::cout << verdict.dump() << "\n";
    return B.is_zero() ? kExitOk : kExitNegative;
}

void print_pairing_row(std::ostream& os, int d, int j, const brill::Rational& closed,
                       const std::string& generic, bool in_image) {
    os << d << "\t" << j << "\t" << rat_or(closed) << "\t" << generic << "\t" << (in_image ? 1 : 0)
       << "\n";
}

int cmd_verify_theorem(int d, int max_generic_d) {
    bool all_match = true;
    std::cout << "d\tj\tclosed_form\tgeneric\tin_image\n";
    for (auto [j, in_image] : brill::image_pattern(d)) {
        auto closed = brill::pairing_closed_form(d, j);
        std::string generic = "skipped";
        bool match = (closed.value != 0) == in_image;
        if (d <= max_generic_d) {
            auto gen = brill::pairing_generic(d, j);
            generic = rat_or(gen.value);
            match = match && ((gen.value != 0) == in_image) && gen.value == closed.value;
        }
        print_pairing_row(std::cout, d, j, closed.value, generic, in_image);
        all_match = all_match && match;
    }
    return all_match ? kExitOk : kExitNegative;
}

int cmd_pairing_table(int dmax, int max_generic_d) {
    std::cout << "d\tj\tclosed_form\tgeneric\tin_image\n";
    for (int d = 2; d <= dmax; ++d) {
        for (auto [j, in_image] : brill::image_pattern(d)) {
            auto closed = brill::pairing_closed_form(d, j);
            std::string generic = "skipped";
            if (d <= max_generic_d) generic = rat_or(brill::pairing_generic(d, j).value);
            print_pairing_row(std::cout, d, j, closed.value, generic, in_image);
        }
    }
    return kExitOk;
}

int cmd_gen(int d, int n, const std::string& out_path) {
    auto eqs = brill::symbolic_brill(d, n);
    auto j = brill::equations_to_json(eqs, d, n);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitInputError;
    }
    out << j.dump(1) << "\n";
    std::size_t terms = 0;
    for (const auto& eq : eqs) terms += eq.poly.terms().size();
    std::cout << "coordinates: " << eqs.size() << "\nterms: " << terms << "\n";
    return kExitOk;
}

int cmd_hwv(int d, int j) {
    std::cout << brill::to_json(brill::hwv_tilde(d, j)).dump() << "\n";
    return kExitOk;
}

int cmd_multiplicity(const std::string& lambda_csv, int k, int d) {
    brill::Partition lambda;
    std::stringstream ss(lambda_csv);
    std::string part;
    while (std::getline(ss, part, ',')) lambda.push_back(std::stoi(part));
    std::cout << brill::multiplicity(lambda, k, d) << "\n";
    return kExitOk;
}

int cmd_golden(const std::string& dir) {
    auto results = brill::run_golden_dir(dir);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "\t" << r.name;
        if (!r.passed && !r.message.empty()) std::cout << "\t" << r.message;
        std::cout << "\n";
        all = all && r.passed;
    }
    std::cout << (all ? "all " : "FAILURES among ") << results.size() << " golden cases\n";
    return all ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Brill's equations for the Chow variety of products of linear forms"};
    app.require_subcommand(1);
    app.footer("Caps: BRILL_MAX_TERMS (default 10^7) and BRILL_MAX_COLS (default 5000)\n"
               "bound element sizes and kernel computations; exceeding them exits 3.");

    std::string poly_path;
    int mem_d = -1, mem_n = -1;
    auto* membership = app.add_subcommand("membership", "Decide [f] in Ch_d(V) via B(f) = 0");
    membership->add_option("--poly", poly_path, "SymElement JSON file")->required();
    membership->add_option("--d", mem_d, "expected grade");
    membership->add_option("--n", mem_n, "expected dim V");

    int vt_d = 2, vt_maxgen = 4;
    auto* verify = app.add_subcommand("verify-theorem", "Check the image pattern of Brill's map");
    verify->add_option("--d", vt_d, "degree")->required()->check(CLI::Range(2, 64));
    verify->add_option("--max-generic-d", vt_maxgen, "largest d for the generic B-bar path");

    int gen_d = 2, gen_n = 3;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Write Brill's equations in the coefficients c_alpha");
    gen->add_option("--d", gen_d, "degree")->required()->check(CLI::Range(2, 16));
    gen->add_option("--n", gen_n, "dim V")->required()->check(CLI::Range(2, 8));
    gen->add_option("--out", gen_out, "output JSON path")->required();

    int hwv_d = 2, hwv_j = 0;
    auto* hwv = app.add_subcommand("hwv", "Highest weight vector of S_(d^2-j, d, j) V");
    hwv->add_option("--d", hwv_d, "degree")->required()->check(CLI::Range(1, 64));
    hwv->add_option("--j", hwv_j, "Pieri index")->required();

    std::string lambda_csv;
    int mult_k = 1, mult_d = 1;
    auto* mult = app.add_subcommand("multiplicity", "Multiplicity of S_lambda V in S^k(S^d V)");
    mult->add_option("--lambda", lambda_csv, "partition, comma separated")->required();
    mult->add_option("--k", mult_k, "outer degree")->required();
    mult->add_option("--d", mult_d, "inner degree")->required();

    int pt_dmax = 4, pt_maxgen = 4;
    auto* table = app.add_subcommand("pairing-table", "TSV of <B(v_j), v~_j> for d = 2..dmax");
    table->add_option("--dmax", pt_dmax, "largest degree")->required()->check(CLI::Range(2, 64));
    table->add_option("--max-generic-d", pt_maxgen, "largest d for the generic B-bar path");

    std::string golden_dir;
    auto* golden = app.add_subcommand("golden", "Run golden-file regression fixtures");
    golden->add_option("--dir", golden_dir, "fixture directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (membership->parsed()) return cmd_membership(poly_path, mem_d, mem_n);
        if (verify->parsed()) return cmd_verify_theorem(vt_d, vt_maxgen);
        if (gen->parsed()) return cmd_gen(gen_d, gen_n, gen_out);
        if (hwv->parsed()) return cmd_hwv(hwv_d, hwv_j);
        if (mult->parsed()) return cmd_multiplicity(lambda_csv, mult_k, mult_d);
        if (table->parsed()) return cmd_pairing_table(pt_dmax, pt_maxgen);
        if (golden->parsed()) return cmd_golden(golden_dir);
    } catch (const brill::cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
