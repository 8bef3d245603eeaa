#include "brill/pairing.hpp"

#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace brill;
using brill::testing::mono3;

namespace {
Mono wedge3(int w12, int w13, int w23) { return Mono{w12, w13, w23}; }
} // namespace

TEST_CASE("monomial norms from the inner-product lemma", "[pairing]") {
    for (int d = 2; d <= 6; ++d) {
        Rational expected(Integer(1), Integer(1) << d);
        CHECK(mono_norm_sq(wedge3(d, 0, 0), mono3(d * d - d, 0, 0), d) == expected);
    }
    CHECK(mono_norm_sq(wedge3(1, 1, 0), mono3(0, 1, 1), 2) == Rational(1, 16));
    CHECK(mono_norm_sq(wedge3(2, 0, 0), mono3(0, 0, 2), 2) == Rational(1, 4));
    CHECK_THROWS_AS(mono_norm_sq(wedge3(1, 0, 0), mono3(2, 0, 0), 2), std::invalid_argument);
}

TEST_CASE("diagonal-rule inner product", "[pairing]") {
    for (int d = 2; d <= 5; ++d) {
        auto v0 = hwv_tilde(d, 0);
        CHECK(inner(v0, v0) == Rational(Integer(1), Integer(1) << d));
        for (int j = 0; j < d; ++j) {
            // different weights => disjoint canonical supports
            CHECK(inner(hwv_tilde(d, j), hwv_tilde(d, j + 1)) == Rational(0));
        }
    }

    // symmetric, and positive on nonzero vectors
    for (int d = 2; d <= 4; ++d) {
        for (int j = 0; j <= d; ++j) {
            auto x = hwv_tilde(d, j);
            auto y = bbar(vj_factors(d, j));
            CHECK(inner(x, y) == inner(y, x));
            CHECK(inner(x, x) > 0);
            if (!y.is_zero()) CHECK(inner(y, y) > 0);
        }
    }

    CurlyElement<Rational> a(3, 2, 2), b(3, 3, 6);
    CHECK_THROWS_AS(inner(a, b), std::invalid_argument);
}

TEST_CASE("pairing zero pattern matches the image of Brill's map", "[pairing]") {
    for (int d = 2; d <= 5; ++d) {
        auto pattern = image_pattern(d);
        for (auto [j, in_image] : pattern) {
            INFO("d = " << d << ", j = " << j);
            CHECK((pairing_generic(d, j).value != 0) == in_image);
        }
    }
    for (int d = 2; d <= 8; ++d) {
        for (auto [j, in_image] : image_pattern(d)) {
            INFO("d = " << d << ", j = " << j);
            CHECK((pairing_closed_form(d, j).value != 0) == in_image);
        }
    }
}

TEST_CASE("closed-form pairing equals the generic path", "[pairing]") {
    for (int d = 2; d <= 5; ++d) {
        for (int j = 0; j <= d; ++j) {
            INFO("d = " << d << ", j = " << j);
            CHECK(pairing_generic(d, j).value == pairing_closed_form(d, j).value);
        }
    }
}

TEST_CASE("frozen pairing values", "[pairing]") {
    // fixed by the generic path and kept as regression anchors
    CHECK(pairing_generic(2, 2).value == Rational(1));
    CHECK(pairing_closed_form(3, 2).value == Rational(3, 20));
    CHECK(pairing_generic(2, 0).value == Rational(0));
    CHECK(pairing_generic(3, 3).value == Rational(0));
}

TEST_CASE("image pattern per the main theorem", "[pairing]") {
    auto p2 = image_pattern(2);
    CHECK(p2 == std::vector<std::pair<int, bool>>{{0, false}, {1, false}, {2, true}});
    auto p3 = image_pattern(3);
    CHECK(p3 == std::vector<std::pair<int, bool>>{{0, false}, {1, false}, {2, true}, {3, false}});
    auto p4 = image_pattern(4);
    CHECK(p4 == std::vector<std::pair<int, bool>>{{0, false}, {1, false}, {2, true}, {3, true}, {4, true}});
}

TEST_CASE("projection of B-bar(v_j) onto the highest weight line", "[pairing]") {
    for (int d = 2; d <= 4; ++d) {
        for (int j = 0; j <= d; ++j) {
            auto B = bbar(vj_factors(d, j));
            auto v = hwv_tilde(d, j);
            Rational lambda = inner(B, v) / inner(v, v);
            bool in_image = image_pattern(d)[j].second;
            CHECK((lambda != 0) == in_image);
            // the component along v~_j is lambda v~_j; the remainder is
            // orthogonal to the line
            auto remainder = B - lambda * v;
            CHECK(inner(remainder, v) == Rational(0));
        }
    }
}

TEST_CASE("B-bar(v_j) is a pure weight vector", "[pairing]") {
    for (int d = 2; d <= 4; ++d) {
        for (int j = 0; j <= d; ++j) {
            auto B = bbar(vj_factors(d, j));
            for (const auto& [key, c] : B.terms()) {
                CHECK(weight_of_curly_key(key.first, key.second, 3) == GLWeight{d * d - j, d, j});
            }
        }
    }
}
