#include "brill/json_io.hpp"
#include "brill/symbolic.hpp"

#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace brill;
using brill::testing::mono3;

TEST_CASE("MultiPoly ring basics", "[symbolic]") {
    auto x = MultiPoly::variable(0);
    auto y = MultiPoly::variable(1);
    auto p = (x + y) * (x - y);
    auto q = x * x - y * y;
    CHECK(p == q);
    CHECK((p - q).is_zero());
    CHECK(p.degree() == 2);
    CHECK(MultiPoly(Rational(0)).is_zero());

    // substitution and evaluation agree
    auto r = p.substitute({y + MultiPoly(Rational(1)), y});
    CHECK(r.evaluate({Rational(0), Rational(2)}) == p.evaluate({Rational(3), Rational(2)}));
}

TEST_CASE("no Brill equations for binary forms", "[symbolic]") {
    CHECK(symbolic_brill(2, 2).empty());
}

TEST_CASE("Brill equations for d = 2, n = 3", "[symbolic]") {
    auto eqs = symbolic_brill(2, 3);
    REQUIRE_FALSE(eqs.empty());
    const std::size_t nvars = sym_basis(3, 2).size();
    CHECK(nvars == 6);
    for (const auto& eq : eqs) {
        CHECK(eq.poly.degree() == 3);
        for (const auto& [e, c] : eq.poly.terms()) CHECK(e.size() <= nvars);
    }

    SECTION("vanish identically on a symbolic product of two linear forms") {
        auto subs = product_coefficient_polys(2, 3);
        for (const auto& eq : eqs) {
            INFO("coordinate w = " << to_json(CurlyElement<Rational>(3, 2, 2)).dump());
            CHECK(eq.poly.substitute(subs).is_zero());
        }
    }

    SECTION("at least one equation is nonzero at e1e2 + e3^2") {
        auto f = SymElement<Rational>::monomial(3, mono3(1, 1, 0)) +
                 SymElement<Rational>::monomial(3, mono3(0, 0, 2));
        auto point = coefficient_point(f);
        bool any_nonzero = false;
        for (const auto& eq : eqs)
            if (eq.poly.evaluate(point) != 0) any_nonzero = true;
        CHECK(any_nonzero);
    }

    SECTION("evaluated equations reproduce the coordinates of B(f)") {
        std::mt19937_64 rng(227);
        for (int trial = 0; trial < 5; ++trial) {
            auto f = brill::testing::random_sym(rng, 3, 2);
            auto point = coefficient_point(f);
            auto B = brill_B(f);
            for (const auto& eq : eqs) {
                const Rational* c = B.terms().find({eq.wedge, eq.mono});
                CHECK(eq.poly.evaluate(point) == (c ? *c : Rational(0)));
            }
        }
    }
}

TEST_CASE("symbolic generation for d = 3, n = 3 stays within caps", "[symbolic]") {
    auto eqs = symbolic_brill(3, 3);
    REQUIRE_FALSE(eqs.empty());
    for (const auto& eq : eqs) CHECK(eq.poly.degree() == 4);

    // spot-check three coordinates against direct evaluation
    std::mt19937_64 rng(229);
    auto f = brill::testing::random_sym(rng, 3, 3);
    auto point = coefficient_point(f);
    auto B = brill_B(f);
    int checked = 0;
    for (const auto& eq : eqs) {
        if (checked++ >= 3) break;
        const Rational* c = B.terms().find({eq.wedge, eq.mono});
        CHECK(eq.poly.evaluate(point) == (c ? *c : Rational(0)));
    }
}

TEST_CASE("symbolic generation refuses oversized requests", "[symbolic]") {
    CHECK_THROWS_AS(symbolic_brill(4, 3), cap_error);
}

TEST_CASE("equations serialize to the documented JSON shape", "[symbolic]") {
    auto eqs = symbolic_brill(2, 3);
    auto j = equations_to_json(eqs, 2, 3);
    CHECK(j["d"] == 2);
    CHECK(j["n"] == 3);
    REQUIRE(j["equations"].size() == eqs.size());
    const auto& first = j["equations"][0];
    CHECK(first.contains("coordinate"));
    CHECK(first["coordinate"].contains("w"));
    CHECK(first["coordinate"].contains("m"));
    for (const auto& t : first["poly"]) {
        CHECK(t.contains("c"));
        CHECK(t["exps"].size() == 6);
    }
}
