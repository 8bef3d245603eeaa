#ifndef BRILL_MONOMIAL_HPP
#define BRILL_MONOMIAL_HPP

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace brill {

/// Exponent vector for e_1^{a_1} ... e_n^{a_n}. The same representation
/// carries wedge monomials, indexed by the ordered pairs (i<j) in
/// lexicographic order: for n = 3 the slots are (1,2), (1,3), (2,3).
using Mono = std::vector<int>;

inline int degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Canonical term order: lower degree first, then exponent-lexicographic
/// with e_1 > e_2 > ... > e_n (so e_1-heavy monomials come first within a
/// grade).
inline bool mono_before(const Mono& a, const Mono& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a > b;
}

inline bool key_before(const Mono& a, const Mono& b) { return mono_before(a, b); }

inline bool key_before(const std::pair<Mono, Mono>& a, const std::pair<Mono, Mono>& b) {
    if (a.first != b.first) return mono_before(a.first, b.first);
    return mono_before(a.second, b.second);
}

inline bool key_before(const std::vector<Mono>& a, const std::vector<Mono>& b) {
    auto i = a.begin();
    auto j = b.begin();
    for (; i != a.end() && j != b.end(); ++i, ++j) {
        if (*i != *j) return mono_before(*i, *j);
    }
    return a.size() < b.size();
}

template <class Key>
struct KeyBefore {
    bool operator()(const Key& a, const Key& b) const { return key_before(a, b); }
};

/// Number of wedge slots for dim V = n.
inline int wedge_slots(int n) { return n * (n - 1) / 2; }

/// Slot index of e_u ^ e_v for 1-based u < v.
inline int wedge_index(int u, int v, int n) {
    // pairs (1,2),(1,3),...,(1,n),(2,3),...
    return (u - 1) * n - u * (u + 1) / 2 + v - 1;
}

struct WedgeFactor {
    int sign;  // 0 when e_u ^ e_u
    int slot;  // valid when sign != 0
};

/// e_u ^ e_v in the canonical wedge basis: zero on the diagonal, sign -1
/// when u > v. Indices are 1-based.
inline WedgeFactor wedge_of(int u, int v, int n) {
    if (u < 1 || u > n || v < 1 || v > n) throw std::invalid_argument("wedge_of: index out of range");
    if (u == v) return {0, 0};
    if (u < v) return {+1, wedge_index(u, v, n)};
    return {-1, wedge_index(v, u, n)};
}

inline Mono unit_mono(int slots, int pos, int exp = 1) {
    Mono m(slots, 0);
    m[pos] = exp;
    return m;
}

} // namespace brill

#endif
