#ifndef BRILL_ELEMENTS_HPP
#define BRILL_ELEMENTS_HPP

#include "brill/caps.hpp"
#include "brill/monomial.hpp"
#include "brill/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace brill {

template <class R>
bool coeff_is_zero(const R& c) {
    return c == R{};
}

namespace detail {

/// Shared sparse-term storage: Key -> nonzero coefficient, iterated in
/// canonical order. Zero coefficients are never stored.
template <class Key, class R>
class TermMap {
public:
    using Map = std::map<Key, R, KeyBefore<Key>>;
    using const_iterator = typename Map::const_iterator;

    void add(const Key& k, const R& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    // Insertion of keys known to arrive in strictly ascending canonical
    // order (amortized O(1) via end hint).
    void append_ordered(const Key& k, R&& c) { terms_.emplace_hint(terms_.end(), k, std::move(c)); }

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    const R* find(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? nullptr : &it->second;
    }

    bool operator==(const TermMap& o) const { return terms_ == o.terms_; }

    // Canonical order on stored values, usable as a map comparator.
    bool before(const TermMap& o) const {
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        for (; i != terms_.end() && j != o.terms_.end(); ++i, ++j) {
            if (i->first != j->first) return key_before(i->first, j->first);
            if (!(i->second == j->second)) return i->second < j->second;
        }
        return terms_.size() < o.terms_.size();
    }

private:
    Map terms_;
};

} // namespace detail

/// Sparse element of S^m V in the monomial basis, dim V = n.
template <class R = Rational>
class SymElement {
public:
    SymElement() : n_(0), grade_(0) {}
    SymElement(int n, int grade) : n_(n), grade_(grade) {
        if (n < 1 || grade < 0) throw std::invalid_argument("SymElement: bad dimensions");
    }

    static SymElement monomial(int n, const Mono& m, R c = R(Rational(1))) {
        SymElement e(n, degree(m));
        e.add(m, c);
        return e;
    }

    static SymElement one(int n) { return monomial(n, Mono(n, 0)); }

    int n() const { return n_; }
    int grade() const { return grade_; }

    void add(const Mono& m, const R& c) {
        if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("SymElement: wrong monomial length");
        if (degree(m) != grade_) throw std::invalid_argument("SymElement: monomial degree != grade");
        terms_.add(m, c);
    }

    const detail::TermMap<Mono, R>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const SymElement& o) const {
        return n_ == o.n_ && grade_ == o.grade_ && terms_ == o.terms_;
    }

    bool before(const SymElement& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (grade_ != o.grade_) return grade_ < o.grade_;
        return terms_.before(o.terms_);
    }

private:
    int n_, grade_;
    detail::TermMap<Mono, R> terms_;
};

/// Sparse element of S^a V (x) S^b V.
template <class R = Rational>
class Tens2Element {
public:
    using Key = std::pair<Mono, Mono>;

    Tens2Element() : n_(0), grade_{0, 0} {}
    Tens2Element(int n, int a, int b) : n_(n), grade_{a, b} {
        if (n < 1 || a < 0 || b < 0) throw std::invalid_argument("Tens2Element: bad dimensions");
    }

    static Tens2Element one(int n) {
        Tens2Element e(n, 0, 0);
        e.add(Mono(n, 0), Mono(n, 0), R(Rational(1)));
        return e;
    }

    int n() const { return n_; }
    std::pair<int, int> grade() const { return grade_; }

    void add(const Mono& m1, const Mono& m2, const R& c) {
        if (static_cast<int>(m1.size()) != n_ || static_cast<int>(m2.size()) != n_)
            throw std::invalid_argument("Tens2Element: wrong monomial length");
        if (degree(m1) != grade_.first || degree(m2) != grade_.second)
            throw std::invalid_argument("Tens2Element: monomial degrees != grades");
        terms_.add({m1, m2}, c);
    }

    void append_sorted(const Key& k, R&& c) {
        if (degree(k.first) != grade_.first || degree(k.second) != grade_.second)
            throw std::invalid_argument("Tens2Element: monomial degrees != grades");
        terms_.append_ordered(k, std::move(c));
    }

    const detail::TermMap<Key, R>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Tens2Element& o) const {
        return n_ == o.n_ && grade_ == o.grade_ && terms_ == o.terms_;
    }

    bool before(const Tens2Element& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (grade_ != o.grade_) return grade_ < o.grade_;
        return terms_.before(o.terms_);
    }

private:
    int n_;
    std::pair<int, int> grade_;
    detail::TermMap<Key, R> terms_;
};

/// Sparse element of S^d(Wedge^2 V) (x) S^m V: a wedge-exponent monomial
/// paired with an ordinary monomial.
template <class R = Rational>
class CurlyElement {
public:
    using Key = std::pair<Mono, Mono>; // (wedge exponents, monomial exponents)

    CurlyElement() : n_(0), grade_{0, 0} {}
    CurlyElement(int n, int wedge_grade, int mono_grade) : n_(n), grade_{wedge_grade, mono_grade} {
        if (n < 2) throw std::invalid_argument("CurlyElement: needs n >= 2");
    }

    int n() const { return n_; }
    std::pair<int, int> grade() const { return grade_; }

    void add(const Mono& w, const Mono& m, const R& c) {
        if (static_cast<int>(w.size()) != wedge_slots(n_) || static_cast<int>(m.size()) != n_)
            throw std::invalid_argument("CurlyElement: wrong key length");
        if (degree(w) != grade_.first || degree(m) != grade_.second)
            throw std::invalid_argument("CurlyElement: key degrees != grades");
        terms_.add({w, m}, c);
    }

    const detail::TermMap<Key, R>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const CurlyElement& o) const {
        return n_ == o.n_ && grade_ == o.grade_ && terms_ == o.terms_;
    }

    bool before(const CurlyElement& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (grade_ != o.grade_) return grade_ < o.grade_;
        return terms_.before(o.terms_);
    }

private:
    int n_;
    std::pair<int, int> grade_; // (wedge degree d, monomial degree m)
    detail::TermMap<Key, R> terms_;
};

// ---------------------------------------------------------------------------
// Linear structure shared by the element kinds.

template <class R>
void element_add_term(SymElement<R>& e, const Mono& k, const R& c) {
    e.add(k, c);
}
template <class R>
void element_add_term(Tens2Element<R>& e, const typename Tens2Element<R>::Key& k, const R& c) {
    e.add(k.first, k.second, c);
}
template <class R>
void element_add_term(CurlyElement<R>& e, const typename CurlyElement<R>::Key& k, const R& c) {
    e.add(k.first, k.second, c);
}

template <class R>
SymElement<R> element_scaled(const SymElement<R>& x, const R& s) {
    SymElement<R> r(x.n(), x.grade());
    for (const auto& [k, c] : x.terms()) r.add(k, c * s);
    return r;
}
template <class R>
Tens2Element<R> element_scaled(const Tens2Element<R>& x, const R& s) {
    Tens2Element<R> r(x.n(), x.grade().first, x.grade().second);
    for (const auto& [k, c] : x.terms()) r.add(k.first, k.second, c * s);
    return r;
}
template <class R>
CurlyElement<R> element_scaled(const CurlyElement<R>& x, const R& s) {
    CurlyElement<R> r(x.n(), x.grade().first, x.grade().second);
    for (const auto& [k, c] : x.terms()) r.add(k.first, k.second, c * s);
    return r;
}

template <class E>
concept SparseElement = requires(const E& e) { e.terms(); e.grade(); e.n(); };

template <SparseElement E>
E& element_add_inplace(E& x, const E& y) {
    if (x.n() != y.n() || x.grade() != y.grade())
        throw std::invalid_argument("element sum: mismatched spaces");
    for (const auto& [k, c] : y.terms()) element_add_term(x, k, c);
    return x;
}

template <SparseElement E>
E operator+(const E& x, const E& y) {
    E r = x;
    element_add_inplace(r, y);
    return r;
}

template <SparseElement E>
E operator*(const Rational& s, const E& x) {
    using R = std::decay_t<decltype(x.terms().begin()->second)>;
    return element_scaled(x, R(s));
}

template <SparseElement E>
E operator-(const E& x) {
    return Rational(-1) * x;
}

template <SparseElement E>
E operator-(const E& x, const E& y) {
    return x + (-y);
}

/// Canonical strict order on whole elements (memoization keys, fixtures).
struct ElementBefore {
    template <SparseElement E>
    bool operator()(const E& a, const E& b) const {
        return a.before(b);
    }
};

// ---------------------------------------------------------------------------
// Multiplication and polarization.

/// Ordinary polynomial product in S^* V.
template <class R>
SymElement<R> sym_mul(const SymElement<R>& f, const SymElement<R>& g) {
    if (f.n() != g.n()) throw std::invalid_argument("sym_mul: mismatched n");
    check_term_cap(static_cast<long long>(f.size()) * static_cast<long long>(g.size()), "sym_mul");
    SymElement<R> r(f.n(), f.grade() + g.grade());
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            Mono m(mf);
            for (int i = 0; i < f.n(); ++i) m[i] += mg[i];
            r.add(m, cf * cg);
        }
    }
    return r;
}

template <class R>
SymElement<R> sym_pow(const SymElement<R>& f, int k) {
    if (k < 0) throw std::invalid_argument("sym_pow: negative exponent");
    SymElement<R> r = SymElement<R>::one(f.n());
    for (int i = 0; i < k; ++i) r = sym_mul(r, f);
    return r;
}

/// Slotwise product (a (x) b) (c (x) d) = ac (x) bd, extended bilinearly.
/// Large products accumulate through a sort-merge pass instead of repeated
/// tree inserts.
template <class R>
Tens2Element<R> tens_mul(const Tens2Element<R>& x, const Tens2Element<R>& y) {
    if (x.n() != y.n()) throw std::invalid_argument("tens_mul: mismatched n");
    const long long pairs = static_cast<long long>(x.size()) * static_cast<long long>(y.size());
    check_term_cap(pairs, "tens_mul");
    auto [a1, b1] = x.grade();
    auto [a2, b2] = y.grade();
    Tens2Element<R> r(x.n(), a1 + a2, b1 + b2);
    if (pairs <= 4096) {
        for (const auto& [kx, cx] : x.terms()) {
            for (const auto& [ky, cy] : y.terms()) {
                Mono m1(kx.first), m2(kx.second);
                for (int i = 0; i < x.n(); ++i) {
                    m1[i] += ky.first[i];
                    m2[i] += ky.second[i];
                }
                r.add(m1, m2, cx * cy);
            }
        }
        return r;
    }
    using Key = typename Tens2Element<R>::Key;
    std::vector<std::pair<Key, R>> prods;
    prods.reserve(static_cast<std::size_t>(pairs));
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            Key k(kx);
            for (int i = 0; i < x.n(); ++i) {
                k.first[i] += ky.first[i];
                k.second[i] += ky.second[i];
            }
            prods.emplace_back(std::move(k), cx * cy);
        }
    }
    std::sort(prods.begin(), prods.end(),
              [](const auto& a, const auto& b) { return key_before(a.first, b.first); });
    for (std::size_t i = 0; i < prods.size();) {
        R acc = std::move(prods[i].second);
        std::size_t j = i + 1;
        for (; j < prods.size() && prods[j].first == prods[i].first; ++j) acc = acc + prods[j].second;
        if (!coeff_is_zero(acc)) r.append_sorted(prods[i].first, std::move(acc));
        i = j;
    }
    return r;
}

template <class R>
Tens2Element<R> tens_pow(const Tens2Element<R>& x, int k) {
    if (k < 0) throw std::invalid_argument("tens_pow: negative exponent");
    Tens2Element<R> r = Tens2Element<R>::one(x.n());
    for (int i = 0; i < k; ++i) r = tens_mul(r, x);
    return r;
}

/// f (x) g as an element of S^a V (x) S^b V.
template <class R>
Tens2Element<R> tens_of(const SymElement<R>& f, const SymElement<R>& g) {
    if (f.n() != g.n()) throw std::invalid_argument("tens_of: mismatched n");
    Tens2Element<R> r(f.n(), f.grade(), g.grade());
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) r.add(mf, mg, cf * cg);
    return r;
}

namespace detail {
template <class Fn>
void enumerate_sub_monomials(const Mono& alpha, Mono& beta, int pos, int left,
                             const Integer& coeff, Fn&& emit) {
    if (pos == static_cast<int>(alpha.size())) {
        if (left == 0) emit(beta, coeff);
        return;
    }
    int hi = std::min(alpha[pos], left);
    for (int b = 0; b <= hi; ++b) {
        beta[pos] = b;
        enumerate_sub_monomials(alpha, beta, pos + 1, left - b, coeff * binomial(alpha[pos], b),
                                emit);
    }
    beta[pos] = 0;
}
} // namespace detail

/// j-th polarization f_{j, delta-j} in the sum-over-subsets convention
/// (no 1/C(delta, j) normalization): a monomial e^alpha maps to
/// sum_{beta <= alpha, |beta| = j} prod_i C(alpha_i, beta_i) e^beta (x) e^{alpha-beta}.
template <class R>
Tens2Element<R> polarize_element(const SymElement<R>& f, int j) {
    const int delta = f.grade();
    if (j < 0 || j > delta) throw std::invalid_argument("polarize_element: j out of range");
    Tens2Element<R> r(f.n(), j, delta - j);
    Mono beta(f.n(), 0);
    for (const auto& [alpha, c] : f.terms()) {
        detail::enumerate_sub_monomials(alpha, beta, 0, j,
                                        Integer(1), [&](const Mono& b, const Integer& binom) {
                                            Mono rest(alpha);
                                            for (int i = 0; i < f.n(); ++i) rest[i] -= b[i];
                                            r.add(b, rest, c * R(Rational(binom)));
                                        });
    }
    return r;
}

// ---------------------------------------------------------------------------
// The projection pi_{d,d} : S^d V (x) S^d V -> S^d(Wedge^2 V).

/// Wedge-monomial expansion of pi_{d,d}(e^alpha (x) e^beta) with signed
/// integer multiplicities.
using PiMonoResult = std::map<Mono, long long, KeyBefore<Mono>>;

namespace detail {

// Assignments are grouped by the matrix m[u][v] = #(copies of e_u paired
// with copies of e_v); diagonal entries are skipped outright since
// e_u ^ e_u = 0. Each matrix accounts for
//   prod_u (alpha_u! / prod_v m[u][v]!) * prod_v beta_v!
// of the d! permutations; the multinomials accumulate in `partial` during
// the recursion and the beta factorials are applied once at the end.
inline void pi_distribute(int n, const Mono& alpha, Mono& caps, Mono& wedge, int& sign, int u,
                          int v, int remaining, long long partial, PiMonoResult& out);

inline void pi_letter(int n, const Mono& alpha, Mono& caps, Mono& wedge, int& sign, int u,
                      long long partial, PiMonoResult& out) {
    if (u == n) {
        out[wedge] += sign * partial;
        return;
    }
    pi_distribute(n, alpha, caps, wedge, sign, u, 0, alpha[u], partial, out);
}

inline void pi_distribute(int n, const Mono& alpha, Mono& caps, Mono& wedge, int& sign, int u,
                          int v, int remaining, long long partial, PiMonoResult& out) {
    if (v == n) {
        if (remaining == 0) pi_letter(n, alpha, caps, wedge, sign, u + 1, partial, out);
        return;
    }
    if (v == u) {
        pi_distribute(n, alpha, caps, wedge, sign, u, v + 1, remaining, partial, out);
        return;
    }
    auto wf = wedge_of(u + 1, v + 1, n);
    long long ways = 1; // C(remaining, m), updated incrementally
    int limit = std::min(remaining, caps[v]);
    for (int m = 0; m <= limit; ++m) {
        if (m > 0) {
            ways = ways * (remaining - m + 1) / m;
            caps[v] -= 1;
            wedge[wf.slot] += 1;
            if (wf.sign < 0) sign = -sign;
        }
        pi_distribute(n, alpha, caps, wedge, sign, u, v + 1, remaining - m, partial * ways, out);
    }
    for (int m = limit; m >= 1; --m) {
        caps[v] += 1;
        wedge[wf.slot] -= 1;
        if (wf.sign < 0) sign = -sign;
    }
}

} // namespace detail

/// pi_{d,d} on the monomial pair e^alpha (x) e^beta: the sum over all d!
/// permutations of the pairwise wedge products, as wedge monomials with
/// signed integer multiplicities. Requires |alpha| = |beta|.
inline PiMonoResult pi_mono(const Mono& alpha, const Mono& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("pi_mono: mismatched n");
    if (degree(alpha) != degree(beta)) throw std::invalid_argument("pi_mono: degree mismatch");
    const int n = static_cast<int>(alpha.size());
    PiMonoResult raw;
    Mono caps(beta);
    Mono wedge(wedge_slots(n), 0);
    int sign = +1;
    detail::pi_letter(n, alpha, caps, wedge, sign, 0, 1, raw);
    long long beta_fact = 1;
    for (int i = 0; i < n; ++i)
        for (int k = 2; k <= beta[i]; ++k) beta_fact *= k;
    PiMonoResult out;
    for (auto& [w, c] : raw) {
        long long v = c * beta_fact;
        if (v != 0) out[w] = v;
    }
    return out;
}

/// Memoizing wrapper for pi_mono; share one instance per pipeline call.
class PiCache {
public:
    const PiMonoResult& operator()(const Mono& a, const Mono& b) {
        auto it = memo_.find({a, b});
        if (it == memo_.end()) it = memo_.emplace(std::make_pair(a, b), pi_mono(a, b)).first;
        return it->second;
    }

private:
    std::map<std::pair<Mono, Mono>, PiMonoResult, KeyBefore<std::pair<Mono, Mono>>> memo_;
};

/// pi_{d,d} applied to an element of S^d V (x) S^d V, landing in
/// S^d(Wedge^2 V) with a trivial degree-0 monomial part.
template <class R>
CurlyElement<R> pi_dd(const Tens2Element<R>& t) {
    auto [a, b] = t.grade();
    if (a != b) throw std::invalid_argument("pi_dd: slots must have equal degree");
    CurlyElement<R> r(t.n(), a, 0);
    Mono trivial(t.n(), 0);
    PiCache cache;
    for (const auto& [k, c] : t.terms()) {
        for (const auto& [w, mult] : cache(k.first, k.second))
            r.add(w, trivial, c * R(Rational(mult)));
    }
    return r;
}

} // namespace brill

#endif
