#ifndef BRILL_BRILL_MAP_HPP
#define BRILL_BRILL_MAP_HPP

#include "brill/elements.hpp"
#include "brill/girard.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace brill {

/// E_j(f) = f_{j, delta-j} (1 (x) f^{j-1}) in S^j V (x) S^{j(delta-1)} V,
/// and zero when j exceeds the degree of f.
template <class R>
Tens2Element<R> e_map(const SymElement<R>& f, int j) {
    const int delta = f.grade();
    if (delta < 1) throw std::invalid_argument("e_map: needs grade >= 1");
    if (j < 1) throw std::invalid_argument("e_map: needs j >= 1");
    if (j > delta) return Tens2Element<R>(f.n(), j, j * (delta - 1));
    const SymElement<R> fpow = sym_pow(f, j - 1);
    Tens2Element<R> unit_left(f.n(), 0, (j - 1) * delta);
    for (const auto& [m, c] : fpow.terms()) unit_left.add(Mono(f.n(), 0), m, c);
    return tens_mul(polarize_element(f, j), unit_left);
}

/// Q_{d,delta}(f) via the expanded Girard form: for every (i_1..i_d) with
/// i_1 + 2 i_2 + ... + d i_d = d,
///   d (-1)^{d+m} ((m-1)!/(i_1!...i_d!)) (prod_j f_{j,delta-j}^{i_j}) (1 (x) f^{d-m}),
/// m = i_1 + ... + i_d. Terms using a polarization index beyond the degree
/// of f vanish. Q_d of Brill's pipeline is the case delta = d.
template <class R>
Tens2Element<R> q_map(const SymElement<R>& f, int d) {
    const int delta = f.grade();
    if (delta < 1) throw std::invalid_argument("q_map: needs grade >= 1");
    if (d < 1) throw std::invalid_argument("q_map: needs d >= 1");
    Tens2Element<R> acc(f.n(), d, d * (delta - 1));

    // Polarizations, their tensor powers, and powers of f are shared
    // across Girard terms.
    std::map<int, Tens2Element<R>> pol;                  // j -> f_{j, delta-j}
    std::map<std::pair<int, int>, Tens2Element<R>> polpow; // (j, k) -> f_{j,.}^k
    std::map<int, SymElement<R>> fpow;                   // k -> f^k
    auto polarization = [&](int j) -> const Tens2Element<R>& {
        auto it = pol.find(j);
        if (it == pol.end()) it = pol.emplace(j, polarize_element(f, j)).first;
        return it->second;
    };
    auto pol_power = [&](int j, int k) -> const Tens2Element<R>& {
        for (int p = 1; p <= k; ++p) {
            auto key = std::make_pair(j, p);
            if (polpow.contains(key)) continue;
            if (p == 1) polpow.emplace(key, polarization(j));
            else polpow.emplace(key, tens_mul(polpow.at({j, p - 1}), polarization(j)));
        }
        return polpow.at({j, k});
    };
    auto f_power = [&](int k) -> const SymElement<R>& {
        auto it = fpow.find(k);
        if (it == fpow.end()) it = fpow.emplace(k, sym_pow(f, k)).first;
        return it->second;
    };

    for (const auto& term : girard_terms(d, d)) {
        int m = 0;
        bool vanishes = false;
        for (int j = 1; j <= d; ++j) {
            int ij = term.multidegrees[j - 1];
            m += ij;
            if (ij > 0 && j > delta) vanishes = true;
        }
        if (vanishes) continue;

        Tens2Element<R> prod = Tens2Element<R>::one(f.n());
        bool first = true;
        for (int j = 1; j <= d; ++j) {
            int ij = term.multidegrees[j - 1];
            if (ij == 0) continue;
            const Tens2Element<R>& power = pol_power(j, ij);
            prod = first ? power : tens_mul(prod, power);
            first = false;
        }
        Tens2Element<R> trail(f.n(), 0, delta * (d - m));
        for (const auto& [mm, cc] : f_power(d - m).terms()) trail.add(Mono(f.n(), 0), mm, cc);
        prod = tens_mul(prod, trail);

        for (const auto& [k, c] : prod.terms()) acc.add(k.first, k.second, c * R(term.coefficient));
    }
    return acc;
}

/// Q_{d,delta}(f) = P_d(E_1(f), ..., E_d(f)): the Newton-Girard substitution
/// path, kept as an independent cross-check of q_map.
template <class R>
Tens2Element<R> q_map_via_e(const SymElement<R>& f, int d) {
    const int delta = f.grade();
    if (delta < 1) throw std::invalid_argument("q_map_via_e: needs grade >= 1");
    Tens2Element<R> acc(f.n(), d, d * (delta - 1));
    std::map<int, Tens2Element<R>> es;
    auto e_of = [&](int j) -> const Tens2Element<R>& {
        auto it = es.find(j);
        if (it == es.end()) it = es.emplace(j, e_map(f, j)).first;
        return it->second;
    };
    for (const auto& term : girard_terms(d, d)) {
        Tens2Element<R> prod = Tens2Element<R>::one(f.n());
        for (int j = 1; j <= d; ++j)
            for (int rep = 0; rep < term.multidegrees[j - 1]; ++rep) prod = tens_mul(prod, e_of(j));
        for (const auto& [k, c] : prod.terms()) acc.add(k.first, k.second, c * R(term.coefficient));
    }
    return acc;
}

/// (pi_{d,d} (x) Id)(f (x) t): pairs f with the first slot of t and carries
/// the second slot through.
template <class R>
CurlyElement<R> pi_tensor_id(const SymElement<R>& f, const Tens2Element<R>& t) {
    if (f.n() != t.n()) throw std::invalid_argument("pi_tensor_id: mismatched n");
    auto [a, b] = t.grade();
    if (f.grade() != a) throw std::invalid_argument("pi_tensor_id: degree mismatch with first slot");
    CurlyElement<R> r(f.n(), a, b);
    PiCache cache;
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [kt, ct] : t.terms()) {
            R c = cf * ct;
            for (const auto& [w, mult] : cache(mf, kt.first)) r.add(w, kt.second, c * R(Rational(mult)));
        }
    }
    return r;
}

/// Brill's polynomial map B(f) = (pi_{d,d} (x) Id)[f (x) Q_d(f)], of degree
/// d+1 in f, landing in S^d(Wedge^2 V) (x) S^{d^2-d} V. Vanishes exactly on
/// products of linear forms.
template <class R>
CurlyElement<R> brill_B(const SymElement<R>& f) {
    if (f.n() < 2) throw std::invalid_argument("brill_B: needs n >= 2");
    const int d = f.grade();
    if (d < 1) throw std::invalid_argument("brill_B: needs grade >= 1");
    return pi_tensor_id(f, q_map(f, d));
}

// ---------------------------------------------------------------------------
// Complete polarization.

/// Memo for repeated subset-sum evaluations across polarize_map calls.
template <class In, class Out>
using PolarizeCache = std::map<In, Out, ElementBefore>;

/// Complete polarization of a degree-k polynomial map P, evaluated at
/// w_1, ..., w_k by inclusion-exclusion:
///   (1/k!) sum_{I nonempty} (-1)^{k-|I|} P(sum_{i in I} w_i).
/// P is memoized on the subset sums, which collapse when the inputs repeat.
template <class In, class Fn, class Out = std::invoke_result_t<Fn, In>>
Out polarize_map(Fn&& P, const std::vector<In>& ws, PolarizeCache<In, Out>* cache = nullptr) {
    const int k = static_cast<int>(ws.size());
    if (k == 0) throw std::invalid_argument("polarize_map: no inputs");
    PolarizeCache<In, Out> local;
    PolarizeCache<In, Out>& memo = cache ? *cache : local;

    auto eval = [&](const In& w) -> const Out& {
        auto it = memo.find(w);
        if (it == memo.end()) it = memo.emplace(w, P(w)).first;
        return it->second;
    };

    bool first = true;
    Out acc;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        In sum = ws[0];
        bool started = false;
        for (int i = 0; i < k; ++i) {
            if (!(mask & (1u << i))) continue;
            if (!started) {
                sum = ws[i];
                started = true;
            } else {
                sum = sum + ws[i];
            }
        }
        int popcount = __builtin_popcount(mask);
        Rational sign = ((k - popcount) % 2 == 0) ? Rational(1) : Rational(-1);
        Out val = sign * eval(sum);
        if (first) {
            acc = std::move(val);
            first = false;
        } else if constexpr (SparseElement<Out>) {
            element_add_inplace(acc, val);
        } else {
            acc = acc + val;
        }
    }
    return Rational(Integer(1), factorial(k)) * acc;
}

/// Polarization Q-bar_d of Q_d at d arguments of degree d; symmetric in fs.
template <class R>
Tens2Element<R> qbar(const std::vector<SymElement<R>>& fs,
                     PolarizeCache<SymElement<R>, Tens2Element<R>>* cache = nullptr) {
    const int d = static_cast<int>(fs.size());
    if (d < 1) throw std::invalid_argument("qbar: needs at least one input");
    for (const auto& f : fs)
        if (f.grade() != d) throw std::invalid_argument("qbar: inputs must have grade d = count");
    return polarize_map([d](const SymElement<R>& f) { return q_map(f, d); }, fs, cache);
}

/// Brill's map B-bar on d+1 degree-d inputs:
///   (1/(d+1)) sum_i (pi_{d,d} (x) Id)[f_i (x) Q-bar_d(fs minus f_i)].
template <class R>
CurlyElement<R> bbar(const std::vector<SymElement<R>>& fs) {
    const int k = static_cast<int>(fs.size());
    if (k < 2) throw std::invalid_argument("bbar: needs d+1 >= 2 inputs");
    const int d = k - 1;
    for (const auto& f : fs)
        if (f.grade() != d) throw std::invalid_argument("bbar: inputs must have grade d = count-1");

    PolarizeCache<SymElement<R>, Tens2Element<R>> cache;
    CurlyElement<R> acc(fs[0].n(), d, d * d - d);
    for (int i = 0; i < k; ++i) {
        std::vector<SymElement<R>> rest;
        rest.reserve(k - 1);
        for (int t = 0; t < k; ++t)
            if (t != i) rest.push_back(fs[t]);
        element_add_inplace(acc, pi_tensor_id(fs[i], qbar(rest, &cache)));
    }
    return Rational(1, k) * acc;
}

} // namespace brill

#endif
