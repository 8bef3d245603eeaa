#ifndef BRILL_REP_HPP
#define BRILL_REP_HPP

#include "brill/elements.hpp"
#include "brill/matrix.hpp"
#include "brill/plethysm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace brill {

/// Torus weight (a_1, ..., a_n): the exponent tally of a monomial across
/// all tensor factors.
using GLWeight = std::vector<int>;

/// Weakly decreasing partition, at most n parts.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) return false;
    return p.empty() || p.back() >= 0;
}

inline GLWeight weight_of_mono(const Mono& m) { return m; }

/// Weight of a wedge-exponent/monomial pair: the wedge letter e_i ^ e_j
/// adds 1 to both a_i and a_j.
inline GLWeight weight_of_curly_key(const Mono& w, const Mono& m, int n) {
    GLWeight a(m.begin(), m.end());
    int slot = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++slot) {
            a[i - 1] += w[slot];
            a[j - 1] += w[slot];
        }
    return a;
}

inline GLWeight weight_of_plethysm_key(const PlethysmKey& key, int n) {
    GLWeight a(n, 0);
    for (const auto& m : key)
        for (int i = 0; i < n; ++i) a[i] += m[i];
    return a;
}

// ---------------------------------------------------------------------------
// Raising / lowering operators E^i_j (1-based; i < j raises, i > j lowers).
// The action is the Leibniz derivation replacing one e_j by e_i per factor
// position, with alternation signs on wedge letters.

template <class R>
SymElement<R> raise_op(const SymElement<R>& x, int i, int j) {
    if (i == j) throw std::invalid_argument("raise_op: i != j required");
    SymElement<R> r(x.n(), x.grade());
    for (const auto& [m, c] : x.terms()) {
        if (m[j - 1] == 0) continue;
        Mono t(m);
        t[j - 1] -= 1;
        t[i - 1] += 1;
        r.add(t, c * R(Rational(m[j - 1])));
    }
    return r;
}

template <class R>
CurlyElement<R> raise_op(const CurlyElement<R>& x, int i, int j) {
    if (i == j) throw std::invalid_argument("raise_op: i != j required");
    const int n = x.n();
    CurlyElement<R> r(n, x.grade().first, x.grade().second);
    for (const auto& [key, c] : x.terms()) {
        const auto& [w, m] = key;
        // Monomial part.
        if (m[j - 1] > 0) {
            Mono t(m);
            t[j - 1] -= 1;
            t[i - 1] += 1;
            r.add(w, t, c * R(Rational(m[j - 1])));
        }
        // Wedge part: E^i_j(e_a ^ e_b) = [a=j] e_i ^ e_b + [b=j] e_a ^ e_i,
        // with wedge_of supplying alternation signs and canonical slots.
        int slot = 0;
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b, ++slot) {
                if (w[slot] == 0) continue;
                WedgeFactor wf{0, 0};
                if (a == j) wf = wedge_of(i, b, n);
                else if (b == j) wf = wedge_of(a, i, n);
                if (wf.sign == 0) continue;
                Mono t(w);
                t[slot] -= 1;
                t[wf.slot] += 1;
                r.add(t, m, c * R(Rational(w[slot] * wf.sign)));
            }
        }
    }
    return r;
}

template <class R>
PlethysmVector<R> raise_op(const PlethysmVector<R>& x, int i, int j) {
    if (i == j) throw std::invalid_argument("raise_op: i != j required");
    PlethysmVector<R> r(x.n(), x.d(), x.factor_count());
    for (const auto& [key, c] : x.terms()) {
        // Leibniz over factor positions; repeated factors contribute once
        // per copy and accumulate.
        for (std::size_t pos = 0; pos < key.size(); ++pos) {
            const Mono& m = key[pos];
            if (m[j - 1] == 0) continue;
            Mono t(m);
            t[j - 1] -= 1;
            t[i - 1] += 1;
            PlethysmKey nk(key);
            nk[pos] = t;
            r.add(std::move(nk), c * R(Rational(m[j - 1])));
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Weight bases and highest weight vectors in S^d(Wedge^2 V) (x) S^{d^2-d} V,
// n = 3.

/// The (j+1)(j+2)/2 monomials
///   (e1^e2)^{d+s-j-t} (e1^e3)^t (e2^e3)^{j-s} (x) e1^{d^2-d-s} e2^t e3^{s-t}
/// for 0 <= t <= s <= j, in (s, t)-lexicographic order. They span the
/// weight-(d^2-j, d, j) space.
inline std::vector<std::pair<Mono, Mono>> weight_basis_curly(int d, int j) {
    if (j < 0 || j > d) throw std::invalid_argument("weight_basis_curly: need 0 <= j <= d");
    const int n = 3;
    std::vector<std::pair<Mono, Mono>> out;
    for (int s = 0; s <= j; ++s) {
        for (int t = 0; t <= s; ++t) {
            Mono w(wedge_slots(n), 0);
            w[wedge_index(1, 2, n)] = d + s - j - t;
            w[wedge_index(1, 3, n)] = t;
            w[wedge_index(2, 3, n)] = j - s;
            Mono m(n, 0);
            m[0] = d * d - d - s;
            m[1] = t;
            m[2] = s - t;
            out.emplace_back(std::move(w), std::move(m));
        }
    }
    return out;
}

/// The highest weight vector of S_{(d^2-j, d, j)} V inside
/// S^d(Wedge^2 V) (x) S^{d^2-d} V:
///   sum_{s=0}^{j} sum_{t=0}^{s} (-1)^t C(j,s) C(s,t) x basis(s, t).
inline CurlyElement<Rational> hwv_tilde(int d, int j) {
    if (j < 0 || j > d) throw std::invalid_argument("hwv_tilde: need 0 <= j <= d");
    CurlyElement<Rational> r(3, d, d * d - d);
    auto basis = weight_basis_curly(d, j);
    std::size_t idx = 0;
    for (int s = 0; s <= j; ++s) {
        for (int t = 0; t <= s; ++t, ++idx) {
            Rational c(binomial(j, s) * binomial(s, t));
            if (t % 2 != 0) c = -c;
            r.add(basis[idx].first, basis[idx].second, c);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Multiplicity of S_lambda V in S^k(S^d V) via the joint kernel of the
// raising operators on the lambda weight space.

/// All degree-k multisets of degree-d monomials (n = 3) with total weight
/// `target`, in canonical order.
inline std::vector<PlethysmKey> plethysm_weight_basis(int k, int d, const GLWeight& target) {
    const int n = 3;
    if (static_cast<int>(target.size()) != n)
        throw std::invalid_argument("plethysm_weight_basis: weight must have 3 parts");

    // Candidate factors in canonical order.
    std::vector<Mono> monos;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) monos.push_back(Mono{a, b, d - a - b});
    std::sort(monos.begin(), monos.end(), mono_before);

    std::vector<PlethysmKey> out;
    PlethysmKey current;
    GLWeight left(target);

    auto feasible = [&](std::size_t from, int factors_left) {
        int total = 0;
        for (int i = 0; i < n; ++i) {
            if (left[i] < 0) return false;
            total += left[i];
        }
        if (total != factors_left * d) return false;
        return from < monos.size() || factors_left == 0;
    };

    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int factors_left) {
        if (factors_left == 0) {
            bool done = true;
            for (int i = 0; i < n; ++i)
                if (left[i] != 0) done = false;
            if (done) out.push_back(current);
            return;
        }
        if (!feasible(from, factors_left)) return;
        for (std::size_t idx = from; idx < monos.size(); ++idx) {
            const Mono& m = monos[idx];
            bool fits = true;
            for (int i = 0; i < n; ++i)
                if (m[i] > left[i]) fits = false;
            if (!fits) continue;
            for (int i = 0; i < n; ++i) left[i] -= m[i];
            current.push_back(m);
            rec(idx, factors_left - 1);
            current.pop_back();
            for (int i = 0; i < n; ++i) left[i] += m[i];
        }
    };
    rec(0, k);
    return out;
}

namespace detail {

// Stacked matrix of the raising operators E^1_2 and E^2_3 on the span of
// the given plethysm basis.
inline RatMatrix raising_matrix_plethysm(const std::vector<PlethysmKey>& basis, int k, int d,
                                         const GLWeight& weight) {
    const int n = 3;
    struct Block {
        int i, j;
        GLWeight target;
        std::vector<PlethysmKey> rows;
        std::map<PlethysmKey, std::size_t, KeyBefore<PlethysmKey>> index;
    };
    std::vector<Block> blocks;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}}) {
        Block b;
        b.i = i;
        b.j = j;
        b.target = weight;
        b.target[i - 1] += 1;
        b.target[j - 1] -= 1;
        b.rows = plethysm_weight_basis(k, d, b.target);
        for (std::size_t r = 0; r < b.rows.size(); ++r) b.index.emplace(b.rows[r], r);
        blocks.push_back(std::move(b));
    }

    std::size_t total_rows = blocks[0].rows.size() + blocks[1].rows.size();
    RatMatrix mat(total_rows == 0 ? 1 : total_rows, basis.size());
    std::size_t row_off = 0;
    for (const auto& b : blocks) {
        for (std::size_t col = 0; col < basis.size(); ++col) {
            PlethysmVector<Rational> v(n, d, k);
            v.add(basis[col], Rational(1));
            auto image = raise_op(v, b.i, b.j);
            for (const auto& [key, c] : image.terms()) {
                auto it = b.index.find(key);
                if (it == b.index.end()) throw std::logic_error("raising image outside target basis");
                mat.at(row_off + it->second, col) += c;
            }
        }
        row_off += b.rows.size();
    }
    return mat;
}

} // namespace detail

/// Multiplicity of S_lambda V in S^k(S^d V), n = 3: the dimension of the
/// joint kernel of E^1_2 and E^2_3 on the lambda weight space.
inline int multiplicity(const Partition& lambda, int k, int d) {
    if (!is_partition(lambda) || lambda.size() > 3)
        throw std::invalid_argument("multiplicity: lambda must be a partition with <= 3 parts");
    GLWeight w(3, 0);
    for (std::size_t i = 0; i < lambda.size(); ++i) w[i] = lambda[i];
    int total = w[0] + w[1] + w[2];
    if (total != k * d) throw std::invalid_argument("multiplicity: |lambda| must equal k*d");

    auto basis = plethysm_weight_basis(k, d, w);
    if (basis.empty()) return 0;
    check_cols_cap(static_cast<long long>(basis.size()), "multiplicity");
    auto mat = detail::raising_matrix_plethysm(basis, k, d, w);
    return static_cast<int>(kernel_basis(mat).size());
}

/// Pieri decomposition S_{(d,d)} V (x) S^{d^2-d} V = sum_j S_{(d^2-j, d, j)} V.
/// Shapes that fail dominance are dropped; that can only happen at d = 1,
/// where the j = 1 shape (0, 1, 1) does not occur.
inline std::vector<Partition> pieri_components(int d) {
    if (d < 1) throw std::invalid_argument("pieri_components: d >= 1");
    std::vector<Partition> out;
    for (int j = 0; j <= d; ++j) {
        Partition lam{d * d - j, d, j};
        if (is_partition(lam)) out.push_back(std::move(lam));
    }
    return out;
}

/// dim S_lambda C^3 = (l1-l2+1)(l2-l3+1)(l1-l3+2)/2.
inline Integer weyl_dim(const Partition& lambda) {
    if (!is_partition(lambda) || lambda.size() > 3)
        throw std::invalid_argument("weyl_dim: lambda must be a partition with <= 3 parts");
    long long l1 = lambda.size() > 0 ? lambda[0] : 0;
    long long l2 = lambda.size() > 1 ? lambda[1] : 0;
    long long l3 = lambda.size() > 2 ? lambda[2] : 0;
    return Integer(l1 - l2 + 1) * Integer(l2 - l3 + 1) * Integer(l1 - l3 + 2) / 2;
}

} // namespace brill

#endif
