// Acceptance suite: one line per criterion, exact rational equality
// throughout, stated runtime bounds enforced. Exits nonzero on any failure.

#include "brill/brill.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace brill;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, const std::string& what, bool ok, double secs,
            const std::string& detail = "") {
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what << " ("
         << secs << " s)";
    if (!ok && !detail.empty()) line << "\n       " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++g_failures;
}

SymElement<Rational> mono_elt(int a, int b, int c) {
    return SymElement<Rational>::monomial(3, Mono{a, b, c});
}

// ---------------------------------------------------------------------------

void criterion1_golden() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    auto results = run_golden_dir(BRILL_GOLDEN_DIR);
    if (results.size() != 19) {
        ok = false;
        detail = "expected 19 golden cases, found " + std::to_string(results.size());
    }
    for (const auto& r : results) {
        if (!r.passed) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + r.name + ": " + r.message;
        }
    }

    // Q_2(f) = f_{1,1}^2 - 2 f (x) f as an identity on random quadrics.
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = sample(rng(), 2, 3, SampleKind::generic);
        auto f11 = polarize_element(f, 1);
        if (!(q_map(f, 2) == tens_mul(f11, f11) - Rational(2) * tens_of(f, f))) {
            ok = false;
            detail += "; Q_2 form identity failed";
            break;
        }
    }

    double secs = seconds_since(t0);
    if (secs >= 1.0) {
        ok = false;
        detail += "; runtime bound 1 s exceeded";
    }
    report(1, "golden worked examples reproduce exactly, < 1 s", ok, secs, detail);
}

void criterion2_vanishing() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    double d5_secs = 0;
    for (int d = 2; d <= 5; ++d) {
        auto td = Clock::now();
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            auto f = sample(seed * 1315423911ull + d, d, 3, SampleKind::chow);
            if (!is_brill_zero(f)) {
                ok = false;
                detail = "B(f) != 0 for chow sample d=" + std::to_string(d) +
                         " seed=" + std::to_string(seed);
                break;
            }
        }
        if (d == 5) d5_secs = seconds_since(td);
        if (!ok) break;
    }
    if (d5_secs >= 120.0) {
        ok = false;
        detail += "; d=5 batch exceeded 2 min";
    }
    report(2, "100 seeded products vanish exactly for d in {2,3,4,5}", ok, seconds_since(t0),
           detail);
}

void criterion3_nonmembership() {
    auto t0 = Clock::now();
    auto quadric = mono_elt(1, 1, 0) + mono_elt(0, 0, 2);
    auto fermat = mono_elt(3, 0, 0) + mono_elt(0, 3, 0) + mono_elt(0, 0, 3);
    bool ok = !is_brill_zero(quadric) && !is_brill_zero(fermat);
    report(3, "B(e1e2 + e3^2) != 0 and B(e1^3 + e2^3 + e3^3) != 0", ok, seconds_since(t0));
}

void criterion4_main_theorem() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    double d4_secs = 0;
    for (int d = 2; d <= 4; ++d) {
        auto td = Clock::now();
        for (auto [j, in_image] : image_pattern(d)) {
            bool zero = pairing_generic(d, j).value == 0;
            if (zero != !in_image) {
                ok = false;
                detail += "; generic pattern wrong at (" + std::to_string(d) + "," +
                          std::to_string(j) + ")";
            }
        }
        if (d == 4) d4_secs = seconds_since(td);
    }
    for (int d = 2; d <= 8; ++d) {
        for (auto [j, in_image] : image_pattern(d)) {
            bool zero = pairing_closed_form(d, j).value == 0;
            if (zero != !in_image) {
                ok = false;
                detail += "; closed pattern wrong at (" + std::to_string(d) + "," +
                          std::to_string(j) + ")";
            }
        }
    }
    if (d4_secs >= 300.0) {
        ok = false;
        detail += "; d=4 generic path exceeded 5 min";
    }
    report(4, "pairing zero pattern: generic d=2..4, closed d=2..8", ok, seconds_since(t0),
           detail);
}

void criterion5_closed_forms() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int d = 2; d <= 4; ++d) {
        for (int j = 0; j <= d; ++j) {
            if (!(bbar_vj_closed(d, j) == bbar(vj_factors(d, j)))) {
                ok = false;
                detail += "; Proposition-Brillimage closed form (the three-sum display in the"
                          " B-bar(v_j) proposition) disagrees with the generic path at (d,j)=(" +
                          std::to_string(d) + "," + std::to_string(j) + ")";
            }
            if (pairing_closed_form(d, j).value != pairing_generic(d, j).value) {
                ok = false;
                detail += "; the <B(v_j),v~_j> closed-form display disagrees with the generic"
                          " path at (d,j)=(" + std::to_string(d) + "," + std::to_string(j) + ")";
            }
        }
    }
    report(5, "closed forms equal generic paths for d=2..4, all j", ok, seconds_since(t0),
           detail);
}

bool hw_space_is_line(int d, int j) {
    auto basis = weight_basis_curly(d, j);
    std::vector<CurlyElement<Rational>> images12, images23;
    std::map<std::pair<Mono, Mono>, std::size_t, KeyBefore<std::pair<Mono, Mono>>> rows12, rows23;
    for (const auto& [w, m] : basis) {
        CurlyElement<Rational> x(3, d, d * d - d);
        x.add(w, m, Rational(1));
        auto i12 = raise_op(x, 1, 2);
        auto i23 = raise_op(x, 2, 3);
        for (const auto& [k, c] : i12.terms()) rows12.try_emplace(k, rows12.size());
        for (const auto& [k, c] : i23.terms()) rows23.try_emplace(k, rows23.size());
        images12.push_back(std::move(i12));
        images23.push_back(std::move(i23));
    }
    RatMatrix mat(std::max<std::size_t>(rows12.size() + rows23.size(), 1), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        for (const auto& [k, c] : images12[col].terms()) mat.at(rows12.at(k), col) += c;
        for (const auto& [k, c] : images23[col].terms())
            mat.at(rows12.size() + rows23.at(k), col) += c;
    }
    return kernel_basis(mat).size() == 1;
}

void criterion6_rep_layer() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    if (multiplicity({4, 2}, 3, 2) != 1) ok = false, detail += "; multiplicity((4,2),3,2) != 1";
    if (multiplicity({6, 3, 3}, 4, 3) != 0) ok = false, detail += "; multiplicity((6,3,3),4,3) != 0";
    if (weyl_dim({2, 2, 2}) != 1) ok = false, detail += "; weyl_dim((2,2,2)) != 1";
    if (weyl_dim({7, 3, 2}) != 35) ok = false, detail += "; weyl_dim((7,3,2)) != 35";
    for (int d = 0; d <= 10; ++d)
        if (weyl_dim({d, d, 0}) != binomial(d + 2, 2)) {
            ok = false;
            detail += "; weyl_dim((d,d,0)) wrong at d=" + std::to_string(d);
        }
    for (int d = 2; d <= 6; ++d) {
        for (int j = 0; j <= d; ++j) {
            auto v = hwv_tilde(d, j);
            if (!raise_op(v, 1, 2).is_zero() || !raise_op(v, 2, 3).is_zero()) {
                ok = false;
                detail += "; raising operators do not annihilate v~ at (" + std::to_string(d) +
                          "," + std::to_string(j) + ")";
            }
            if (!hw_space_is_line(d, j)) {
                ok = false;
                detail += "; highest weight space not 1-dimensional at (" + std::to_string(d) +
                          "," + std::to_string(j) + ")";
            }
        }
    }
    report(6, "representation layer: multiplicities, Weyl dims, v~ annihilation, hw lines", ok,
           seconds_since(t0), detail);
}

void criterion7_polarization_properties() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(7);

    // (a) B-bar diagonal restriction, 200 cases
    for (int i = 0; i < 200 && ok; ++i) {
        int d = i < 150 ? 2 : 3;
        auto f = sample(rng(), d, 3, SampleKind::generic);
        if (!(bbar(std::vector(static_cast<std::size_t>(d + 1), f)) == brill_B(f))) {
            ok = false;
            detail = "B-bar diagonal != B at case " + std::to_string(i);
        }
    }
    // (b) Q-bar diagonal restriction, 200 cases
    for (int i = 0; i < 200 && ok; ++i) {
        int d = i % 10 == 9 ? 4 : (i % 10 >= 6 ? 3 : 2);
        auto f = sample(rng(), d, 3, SampleKind::generic);
        if (!(qbar(std::vector(static_cast<std::size_t>(d), f)) == q_map(f, d))) {
            ok = false;
            detail = "Q-bar diagonal != Q_d at case " + std::to_string(i);
        }
    }
    // (c) qbar symmetry under permutations, 200 cases
    for (int i = 0; i < 200 && ok; ++i) {
        int d = i % 40 == 39 ? 4 : (i % 10 >= 7 ? 3 : 2);
        std::vector<SymElement<Rational>> fs;
        for (int t = 0; t < d; ++t) fs.push_back(sample(rng(), d, 3, SampleKind::generic));
        auto reference = qbar(fs);
        std::shuffle(fs.begin(), fs.end(), rng);
        if (!(qbar(fs) == reference)) {
            ok = false;
            detail = "qbar not symmetric at case " + std::to_string(i);
        }
    }
    // (d) Lemma-Brillpor path equals generic path, 200 cases
    for (int i = 0; i < 200 && ok; ++i) {
        int d = i % 10 == 9 ? 4 : (i % 10 >= 6 ? 3 : 2);
        auto f = sample(rng(), d, 3, SampleKind::generic);
        auto g = sample(rng(), d, 3, SampleKind::generic);
        std::vector<SymElement<Rational>> fs(static_cast<std::size_t>(d - 1), f);
        fs.push_back(g);
        if (!(qbar_power_form(f, g, d) == qbar(fs))) {
            ok = false;
            detail = "Brillpor path != generic at case " + std::to_string(i);
        }
    }
    // (e) Lemma Qlinear on random linear-form products, 200 cases
    for (int i = 0; i < 200 && ok; ++i) {
        int d = i % 20 == 19 ? 5 : 2 + i % 3;
        LinearFormList ls(static_cast<std::size_t>(d), std::vector<int>(3));
        for (auto& form : ls)
            for (auto& c : form) c = static_cast<int>(rng() % 7) - 3;
        Tens2Element<Rational> expected(3, d, d * (d - 1));
        for (int j = 0; j < d; ++j) {
            auto rest = SymElement<Rational>::one(3);
            for (int k = 0; k < d; ++k)
                if (k != j) rest = sym_mul(rest, sym_pow(expand_product({ls[k]}), d));
            expected = expected + tens_of(sym_pow(expand_product({ls[j]}), d), rest);
        }
        if (!(q_map(expand_product(ls), d) == expected)) {
            ok = false;
            detail = "Qlinear identity failed at case " + std::to_string(i);
        }
    }
    // (f) Lemma divisible annihilation, 200 cases
    for (int i = 0; i < 200 && ok; ++i) {
        int d = 2 + i % 4;
        auto u = sample(rng(), d - 2, 3, SampleKind::generic);
        auto h = sym_mul(SymElement<Rational>::monomial(3, Mono{2, 0, 0}), u);
        if (!pi_dd(tens_of(h, SymElement<Rational>::monomial(3, Mono{d - 1, 1, 0}))).is_zero()) {
            ok = false;
            detail = "divisible-by-e1^2 annihilation failed at case " + std::to_string(i);
        }
    }
    report(7, "polarization property suite, 200 random cases per identity", ok,
           seconds_since(t0), detail);
}

void criterion8_symbolic() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    auto eqs = symbolic_brill(2, 3);
    if (eqs.empty()) {
        ok = false;
        detail = "no equations generated";
    }
    auto subs = product_coefficient_polys(2, 3);
    for (const auto& eq : eqs) {
        if (!eq.poly.substitute(subs).is_zero()) {
            ok = false;
            detail += "; equation does not vanish on a symbolic product";
            break;
        }
    }
    auto f = mono_elt(1, 1, 0) + mono_elt(0, 0, 2);
    auto point = coefficient_point(f);
    bool any_nonzero = false;
    for (const auto& eq : eqs)
        if (eq.poly.evaluate(point) != 0) any_nonzero = true;
    if (!any_nonzero) {
        ok = false;
        detail += "; all equations vanish at e1e2 + e3^2";
    }

    double secs = seconds_since(t0);
    if (secs >= 30.0) {
        ok = false;
        detail += "; runtime bound 30 s exceeded";
    }
    report(8, "symbolic d=2 n=3 equations vanish on products, nonzero off the variety", ok, secs,
           detail);
}

void criterion9_bookkeeping() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int d = 1; d <= 10; ++d) {
        Integer total = 0;
        for (const auto& lam : pieri_components(d)) total += weyl_dim(lam);
        if (total != binomial(d + 2, 2) * binomial(d * d - d + 2, 2)) {
            ok = false;
            detail += "; mismatch at d=" + std::to_string(d);
        }
    }
    report(9, "Pieri dimension bookkeeping for d <= 10", ok, seconds_since(t0), detail);
}

} // namespace

int main() {
    auto t0 = Clock::now();
    criterion1_golden();
    criterion2_vanishing();
    criterion3_nonmembership();
    criterion4_main_theorem();
    criterion5_closed_forms();
    criterion6_rep_layer();
    criterion7_polarization_properties();
    criterion8_symbolic();
    criterion9_bookkeeping();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(g_failures))
              << " (total " << seconds_since(t0) << " s)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
