#ifndef BRILL_CHOW_HPP
#define BRILL_CHOW_HPP

#include "brill/brill_map.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace brill {

/// d integer linear forms over e_1..e_n; zero forms are allowed and make
/// the product vanish.
using LinearFormList = std::vector<std::vector<int>>;

/// Expanded product of the given linear forms, an element of S^d V.
inline SymElement<Rational> expand_product(const LinearFormList& ls) {
    if (ls.empty()) throw std::invalid_argument("expand_product: needs at least one form");
    const int n = static_cast<int>(ls[0].size());
    SymElement<Rational> acc = SymElement<Rational>::one(n);
    for (const auto& form : ls) {
        if (static_cast<int>(form.size()) != n)
            throw std::invalid_argument("expand_product: mismatched form length");
        SymElement<Rational> lin(n, 1);
        for (int i = 0; i < n; ++i)
            if (form[i] != 0) lin.add(unit_mono(n, i), Rational(form[i]));
        acc = sym_mul(acc, lin);
    }
    return acc;
}

/// Exact membership predicate for the Chow variety: B(f) has no terms.
inline bool is_brill_zero(const SymElement<Rational>& f) { return brill_B(f).is_zero(); }

enum class SampleKind { chow, generic };

/// Deterministic pseudo-random degree-d element, n variables.
/// chow-kind: a product of d integer forms with entries in [-3, 3];
/// generic-kind: integer coefficients in [-3, 3] on every monomial.
inline SymElement<Rational> sample(std::uint64_t seed, int d, int n, SampleKind kind) {
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return static_cast<int>(rng() % 7) - 3; };
    if (kind == SampleKind::chow) {
        LinearFormList ls(static_cast<std::size_t>(d), std::vector<int>(n));
        for (auto& form : ls)
            for (auto& c : form) c = draw();
        return expand_product(ls);
    }
    SymElement<Rational> f(n, d);
    // Iterate the monomial basis of S^d V in canonical order.
    std::vector<Mono> basis;
    Mono m(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            m[pos] = left;
            basis.push_back(m);
            return;
        }
        for (int a = left; a >= 0; --a) {
            m[pos] = a;
            rec(pos + 1, left - a);
        }
    };
    rec(0, d);
    std::sort(basis.begin(), basis.end(), mono_before);
    for (const auto& b : basis) {
        int c = draw();
        if (c != 0) f.add(b, Rational(c));
    }
    return f;
}

} // namespace brill

#endif
