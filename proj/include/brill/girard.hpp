#ifndef BRILL_GIRARD_HPP
#define BRILL_GIRARD_HPP

#include "brill/rational.hpp"

#include <stdexcept>
#include <vector>

namespace brill {

/// One monomial e_1^{i_1} ... e_d^{i_d} of the Girard expansion of the
/// power sum p_k, with i_1 + 2 i_2 + ... + d i_d = k and coefficient
/// k (-1)^{k + i_1 + ... + i_d} (i_1 + ... + i_d - 1)! / (i_1! ... i_d!).
struct GirardTerm {
    std::vector<int> multidegrees; // (i_1, ..., i_d)
    Rational coefficient;
};

namespace detail {
inline void girard_rec(int k, int d, int pos, int remaining, std::vector<int>& idx,
                       std::vector<GirardTerm>& out) {
    if (pos == d) {
        if (remaining != 0) return;
        int m = 0;
        Integer denom = 1;
        for (int i : idx) {
            m += i;
            denom *= factorial(i);
        }
        Integer num = Integer(k) * factorial(m - 1);
        Rational c(num, denom);
        if ((k + m) % 2 != 0) c = -c;
        out.push_back({idx, c});
        return;
    }
    int weight = pos + 1;
    for (int i = 0; i * weight <= remaining; ++i) {
        idx[pos] = i;
        girard_rec(k, d, pos + 1, remaining - i * weight, idx, out);
    }
    idx[pos] = 0;
}
} // namespace detail

/// All terms of p_k expressed in the elementary symmetric polynomials
/// e_1..e_d (Newton-Girard), in lexicographic order of (i_1..i_d).
inline std::vector<GirardTerm> girard_terms(int k, int d) {
    if (k < 1 || d < 1) throw std::invalid_argument("girard_terms: k, d must be >= 1");
    std::vector<GirardTerm> out;
    std::vector<int> idx(d, 0);
    detail::girard_rec(k, d, 0, k, idx, out);
    return out;
}

} // namespace brill

#endif
