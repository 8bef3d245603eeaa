#ifndef BRILL_PAIRING_HPP
#define BRILL_PAIRING_HPP

#include "brill/closed_forms.hpp"
#include "brill/rep.hpp"

#include <stdexcept>
#include <vector>

namespace brill {

struct PairingValue {
    Rational value;
    int d = 0;
    int j = 0;
};

/// Squared norm of the canonical monomial
/// (e1^e2)^{a_1} (e1^e3)^{a_2} (e2^e3)^{a_3} (x) e1^{b_1} e2^{b_2} e3^{b_3}
/// under the unitary-invariant Hermitian product on V^{(x)(d^2+d)}:
///   (1/2)^d (a_1! a_2! a_3! / d!) (b_1! b_2! b_3! / (d^2-d)!).
inline Rational mono_norm_sq(const Mono& w, const Mono& m, int d) {
    if (w.size() != 3 || m.size() != 3) throw std::invalid_argument("mono_norm_sq: n = 3 only");
    if (degree(w) != d) throw std::invalid_argument("mono_norm_sq: wedge degree != d");
    if (degree(m) != d * d - d) throw std::invalid_argument("mono_norm_sq: monomial degree != d^2-d");
    Integer num = factorial(w[0]) * factorial(w[1]) * factorial(w[2]) * factorial(m[0]) *
                  factorial(m[1]) * factorial(m[2]);
    Integer den = (Integer(1) << d) * factorial(d) * factorial(d * d - d);
    return Rational(num, den);
}

/// Diagonal-rule inner product: distinct canonical monomials are orthogonal,
/// matching monomials contribute coeff(x) coeff(y) |monomial|^2. Coefficients
/// are rational, so conjugation is trivial.
inline Rational inner(const CurlyElement<Rational>& x, const CurlyElement<Rational>& y) {
    if (x.n() != 3 || y.n() != 3) throw std::invalid_argument("inner: n = 3 only");
    if (x.grade() != y.grade()) throw std::invalid_argument("inner: grade mismatch");
    const int d = x.grade().first;
    Rational acc(0);
    for (const auto& [key, cx] : x.terms()) {
        if (const Rational* cy = y.terms().find(key))
            acc += cx * (*cy) * mono_norm_sq(key.first, key.second, d);
    }
    return acc;
}

/// <B-bar(v_j), v~_j> through the generic bbar path.
inline PairingValue pairing_generic(int d, int j) {
    if (d < 2 || j < 0 || j > d) throw std::invalid_argument("pairing_generic: need d >= 2, 0 <= j <= d");
    return {inner(bbar(vj_factors(d, j)), hwv_tilde(d, j)), d, j};
}

/// <B-bar(v_j), v~_j> in closed form:
///   (1/2)^d / ((d+1)(d^2-d)!) [ sum_{t=0}^{j} (j!)^2 (j-1) (d-t)! (d^2-d-j)! / (j-t)!
///     + sum_{t=0}^{j-1} (j!)^2 (d-t-1)! (d^2-d-j+1)! / (j-t-1)!
///     + (-1)^j (d-j)! j! (d^2-d)! ].
inline PairingValue pairing_closed_form(int d, int j) {
    if (d < 2 || j < 0 || j > d)
        throw std::invalid_argument("pairing_closed_form: need d >= 2, 0 <= j <= d");
    const Integer jf = factorial(j);
    const Integer jf2 = jf * jf;
    Rational bracket(0);
    for (int t = 0; t <= j; ++t)
        bracket += Rational(jf2 * Integer(j - 1) * factorial(d - t) * factorial(d * d - d - j),
                            factorial(j - t));
    for (int t = 0; t <= j - 1; ++t)
        bracket += Rational(jf2 * factorial(d - t - 1) * factorial(d * d - d - j + 1),
                            factorial(j - t - 1));
    {
        Rational last(factorial(d - j) * jf * factorial(d * d - d));
        if (j % 2 != 0) last = -last;
        bracket += last;
    }
    Rational pref(Integer(1), (Integer(1) << d) * Integer(d + 1) * factorial(d * d - d));
    return {pref * bracket, d, j};
}

/// Which S_{(d^2-j, d, j)} V lie in the image of Brill's map: j in {0, 1}
/// never, (d, j) = (3, 3) never, everything else does.
inline std::vector<std::pair<int, bool>> image_pattern(int d) {
    if (d < 2) throw std::invalid_argument("image_pattern: d >= 2");
    std::vector<std::pair<int, bool>> out;
    for (int j = 0; j <= d; ++j) {
        bool in_image = !(j == 0 || j == 1 || (d == 3 && j == 3));
        out.emplace_back(j, in_image);
    }
    return out;
}

} // namespace brill

#endif
