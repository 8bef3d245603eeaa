#ifndef BRILL_CLOSED_FORMS_HPP
#define BRILL_CLOSED_FORMS_HPP

#include "brill/brill_map.hpp"
#include "brill/plethysm.hpp"

#include <stdexcept>
#include <vector>

namespace brill {

/// B-bar extended linearly from multisets of monomials to all of
/// S^{d+1}(S^d V).
template <class R>
CurlyElement<R> bbar(const PlethysmVector<R>& v) {
    const int d = v.d();
    if (v.factor_count() != d + 1)
        throw std::invalid_argument("bbar: plethysm vector must have d+1 factors");
    CurlyElement<R> acc(v.n(), d, d * d - d);
    for (const auto& [key, c] : v.terms()) {
        std::vector<SymElement<R>> fs;
        fs.reserve(key.size());
        for (const auto& m : key) fs.push_back(SymElement<R>::monomial(v.n(), m));
        element_add_inplace(acc, element_scaled(bbar(fs), c));
    }
    return acc;
}

/// Q-bar_d(f^{d-1} g) evaluated by the closed polarization of the expanded
/// Girard form of Q_d: in each Girard term, one factor at a time is
/// replaced by the corresponding polarization of g (weight i_s/d), plus a
/// trailing-power replacement (weight (d-m)/d). Must agree with the generic
/// inclusion-exclusion path on the multiset {f x(d-1), g}.
template <class R>
Tens2Element<R> qbar_power_form(const SymElement<R>& f, const SymElement<R>& g, int d) {
    if (f.n() != g.n()) throw std::invalid_argument("qbar_power_form: mismatched n");
    if (f.grade() != d || g.grade() != d)
        throw std::invalid_argument("qbar_power_form: inputs must have grade d");

    Tens2Element<R> acc(f.n(), d, d * (d - 1));

    std::map<int, Tens2Element<R>> fpol, gpol;
    std::map<int, SymElement<R>> fpow;
    auto fp = [&](int j) -> const Tens2Element<R>& {
        auto it = fpol.find(j);
        if (it == fpol.end()) it = fpol.emplace(j, polarize_element(f, j)).first;
        return it->second;
    };
    auto gp = [&](int j) -> const Tens2Element<R>& {
        auto it = gpol.find(j);
        if (it == gpol.end()) it = gpol.emplace(j, polarize_element(g, j)).first;
        return it->second;
    };
    auto f_power = [&](int k) -> const SymElement<R>& {
        auto it = fpow.find(k);
        if (it == fpow.end()) it = fpow.emplace(k, sym_pow(f, k)).first;
        return it->second;
    };
    auto as_right = [&](const SymElement<R>& h) {
        Tens2Element<R> t(f.n(), 0, h.grade());
        for (const auto& [m, c] : h.terms()) t.add(Mono(f.n(), 0), m, c);
        return t;
    };
    auto accumulate = [&](const Tens2Element<R>& t, const Rational& coeff) {
        for (const auto& [k, c] : t.terms()) acc.add(k.first, k.second, c * R(coeff));
    };

    for (const auto& term : girard_terms(d, d)) {
        int m = 0;
        for (int ij : term.multidegrees) m += ij;

        // One g-substitution per polarization slot s with i_s >= 1.
        for (int s = 1; s <= d; ++s) {
            int is = term.multidegrees[s - 1];
            if (is == 0) continue;
            Tens2Element<R> prod = Tens2Element<R>::one(f.n());
            for (int j = 1; j <= d; ++j) {
                int reps = term.multidegrees[j - 1] - (j == s ? 1 : 0);
                for (int rep = 0; rep < reps; ++rep) prod = tens_mul(prod, fp(j));
            }
            prod = tens_mul(prod, gp(s));
            prod = tens_mul(prod, as_right(f_power(d - m)));
            accumulate(prod, term.coefficient * Rational(is, d));
        }

        // Replacement of one trailing f by g.
        if (m < d) {
            Tens2Element<R> prod = Tens2Element<R>::one(f.n());
            for (int j = 1; j <= d; ++j)
                for (int rep = 0; rep < term.multidegrees[j - 1]; ++rep) prod = tens_mul(prod, fp(j));
            prod = tens_mul(prod, as_right(sym_mul(f_power(d - m - 1), g)));
            accumulate(prod, term.coefficient * Rational(d - m, d));
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// The weight vectors v_j = (e_1^{d-1} e_2)^d (e_1^{d-j} e_3^j) and the
// closed form for B-bar(v_j).

inline Mono vj_f_mono(int d) {
    Mono m(3, 0);
    m[0] = d - 1;
    m[1] = 1;
    return m;
}

inline Mono vj_g_mono(int d, int j) {
    Mono m(3, 0);
    m[0] = d - j;
    m[2] = j;
    return m;
}

/// v_j as the list of d+1 factors handed to bbar (n = 3).
inline std::vector<SymElement<Rational>> vj_factors(int d, int j) {
    if (d < 2 || j < 0 || j > d) throw std::invalid_argument("vj_factors: need d >= 2, 0 <= j <= d");
    std::vector<SymElement<Rational>> fs(static_cast<std::size_t>(d),
                                         SymElement<Rational>::monomial(3, vj_f_mono(d)));
    fs.push_back(SymElement<Rational>::monomial(3, vj_g_mono(d, j)));
    return fs;
}

/// v_j as a plethysm vector (single basis monomial, coefficient 1).
inline PlethysmVector<Rational> vj_plethysm(int d, int j) {
    PlethysmVector<Rational> v(3, d, d + 1);
    std::vector<Mono> key(static_cast<std::size_t>(d), vj_f_mono(d));
    key.push_back(vj_g_mono(d, j));
    v.add(make_plethysm_key(std::move(key)), Rational(1));
    return v;
}

/// Closed form for B-bar(v_j), n = 3:
///   (d!/(d+1)) [ (-1)^j (e1^e2)^{d-j} (e2^e3)^j (x) e1^{d^2-d}
///     + sum_{s=0}^{j} (-1)^{s-1} (1-j) C(j,s) (e1^e2)^{d-s} (e1^e3)^s
///         (x) e1^{d^2-d-j} e2^s e3^{j-s}
///     + sum_{s=1}^{j} (-1)^{s-1} s C(j,s) (e1^e2)^{d-s} (e1^e3)^{s-1} (e2^e3)
///         (x) e1^{d^2-d-j+1} e2^{s-1} e3^{j-s} ].
/// For j = d the s = d term of the first sum carries the extra pairing of
/// e_3^d against Q_d's leading slot; the three sums cover every j.
inline CurlyElement<Rational> bbar_vj_closed(int d, int j) {
    if (d < 2 || j < 0 || j > d)
        throw std::invalid_argument("bbar_vj_closed: need d >= 2, 0 <= j <= d");
    const int n = 3;
    CurlyElement<Rational> r(n, d, d * d - d);
    const Rational pref(factorial(d), Integer(d + 1));

    auto wedge_exps = [&](int w12, int w13, int w23) {
        Mono w(wedge_slots(n), 0);
        w[wedge_index(1, 2, n)] = w12;
        w[wedge_index(1, 3, n)] = w13;
        w[wedge_index(2, 3, n)] = w23;
        return w;
    };
    auto mono_exps = [&](int a, int b, int c) {
        Mono m(n, 0);
        m[0] = a;
        m[1] = b;
        m[2] = c;
        return m;
    };

    {
        Rational c = pref;
        if (j % 2 != 0) c = -c;
        r.add(wedge_exps(d - j, 0, j), mono_exps(d * d - d, 0, 0), c);
    }
    for (int s = 0; s <= j; ++s) {
        Rational c = pref * Rational(Integer(1 - j) * binomial(j, s));
        if (s % 2 == 0) c = -c; // (-1)^{s-1}
        r.add(wedge_exps(d - s, s, 0), mono_exps(d * d - d - j, s, j - s), c);
    }
    for (int s = 1; s <= j; ++s) {
        Rational c = pref * Rational(Integer(s) * binomial(j, s));
        if (s % 2 == 0) c = -c;
        r.add(wedge_exps(d - s, s - 1, 1), mono_exps(d * d - d - j + 1, s - 1, j - s), c);
    }
    return r;
}

} // namespace brill

#endif
