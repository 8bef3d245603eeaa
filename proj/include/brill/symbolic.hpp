#ifndef BRILL_SYMBOLIC_HPP
#define BRILL_SYMBOLIC_HPP

#include "brill/brill_map.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace brill {

/// Sparse multivariate polynomial over the rationals in countably many
/// variables x_0, x_1, ...; exponent vectors are padded with zeros on
/// comparison, so values built over different variable counts mix freely.
/// Serves as the generic coefficient domain of the Brill pipeline.
class MultiPoly {
public:
    using Exps = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (!c.is_zero()) terms_[Exps{}] = c;
    }

    static MultiPoly variable(int idx, const Rational& c = Rational(1)) {
        MultiPoly p;
        if (!c.is_zero()) {
            Exps e(idx + 1, 0);
            e[idx] = 1;
            p.terms_[std::move(e)] = c;
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) deg = std::max(deg, brill::degree(e));
        return deg;
    }

    // Exponent order: total degree, then reverse-lexicographic on padded
    // exponents (mirrors the monomial order used elsewhere).
    struct ExpsBefore {
        bool operator()(const Exps& a, const Exps& b) const {
            int da = brill::degree(a), db = brill::degree(b);
            if (da != db) return da < db;
            std::size_t len = std::max(a.size(), b.size());
            for (std::size_t i = 0; i < len; ++i) {
                int av = i < a.size() ? a[i] : 0;
                int bv = i < b.size() ? b[i] : 0;
                if (av != bv) return av > bv;
            }
            return false;
        }
    };

    using Terms = std::map<Exps, Rational, ExpsBefore>;
    const Terms& terms() const { return terms_; }

    void add_term(Exps e, const Rational& c) {
        if (c.is_zero()) return;
        while (!e.empty() && e.back() == 0) e.pop_back();
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_term_cap(static_cast<long long>(a.terms_.size()) * b.terms_.size(), "MultiPoly mul");
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exps e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    bool operator<(const MultiPoly& o) const {
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        for (; i != terms_.end() && j != o.terms_.end(); ++i, ++j) {
            if (i->first != j->first) return ExpsBefore{}(i->first, j->first);
            if (i->second != j->second) return i->second < j->second;
        }
        return terms_.size() < o.terms_.size();
    }

    /// Substitute each variable by the given polynomial (index-aligned).
    MultiPoly substitute(const std::vector<MultiPoly>& values) const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            MultiPoly term{c};
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (i >= values.size()) throw std::invalid_argument("substitute: missing variable value");
                for (int k = 0; k < e[i]; ++k) term = term * values[i];
            }
            r = r + term;
        }
        return r;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        Rational r(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (i >= point.size()) throw std::invalid_argument("evaluate: missing coordinate");
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            }
            r += t;
        }
        return r;
    }

private:
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Explicit Brill equations over generic coefficients.

/// Monomial basis of S^d V over n variables in canonical order; the
/// coefficient variable c_k corresponds to basis()[k].
inline std::vector<Mono> sym_basis(int n, int d) {
    std::vector<Mono> out;
    Mono m(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            m[pos] = left;
            out.push_back(m);
            return;
        }
        for (int a = left; a >= 0; --a) {
            m[pos] = a;
            rec(pos + 1, left - a);
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), mono_before);
    return out;
}

/// One coordinate equation of Brill's map: the CurlyElement coordinate and
/// the degree-(d+1) polynomial in the generic coefficients c_alpha.
struct BrillEquation {
    Mono wedge;
    Mono mono;
    MultiPoly poly;
};

inline long long symbolic_size_estimate(int d, int n) {
    auto dim_sym = [](long long deg, long long vars) {
        Integer b = binomial(deg + vars - 1, vars - 1);
        return static_cast<long long>(b);
    };
    long long nvars = dim_sym(d, n);
    Integer polys = binomial(nvars + d, d + 1); // monomials of degree d+1 in c
    long long coords = dim_sym(d, wedge_slots(n)) * dim_sym(d * (d - 1), n);
    Integer total = polys * coords;
    if (total > Integer(std::numeric_limits<long long>::max())) return std::numeric_limits<long long>::max();
    return static_cast<long long>(total);
}

/// Runs Brill's map on the generic element f = sum_alpha c_alpha e^alpha
/// with coefficients in Q[c] and returns the nonzero coordinates: each is
/// one degree-(d+1) equation of the Chow variety.
inline std::vector<BrillEquation> symbolic_brill(int d, int n) {
    if (d < 2 || n < 2) throw std::invalid_argument("symbolic_brill: need d >= 2, n >= 2");
    check_term_cap(symbolic_size_estimate(d, n), "symbolic_brill");

    auto basis = sym_basis(n, d);
    SymElement<MultiPoly> f(n, d);
    for (std::size_t k = 0; k < basis.size(); ++k)
        f.add(basis[k], MultiPoly::variable(static_cast<int>(k)));

    auto B = brill_B(f);
    std::vector<BrillEquation> out;
    for (const auto& [key, poly] : B.terms()) out.push_back({key.first, key.second, poly});
    return out;
}

/// The coefficient vector c_alpha of a concrete f in the generic-variable
/// order used by symbolic_brill.
inline std::vector<Rational> coefficient_point(const SymElement<Rational>& f) {
    auto basis = sym_basis(f.n(), f.grade());
    std::vector<Rational> point(basis.size(), Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (const Rational* c = f.terms().find(basis[k])) point[k] = *c;
    return point;
}

/// c_alpha of the generic product of d linear forms (sum_i a_{r,i} e_i),
/// expressed as polynomials in the d*n symbolic form coefficients: variable
/// index r*n + i holds the i-th coordinate of the r-th form.
inline std::vector<MultiPoly> product_coefficient_polys(int d, int n) {
    SymElement<MultiPoly> acc = SymElement<MultiPoly>::one(n);
    for (int r = 0; r < d; ++r) {
        SymElement<MultiPoly> lin(n, 1);
        for (int i = 0; i < n; ++i) lin.add(unit_mono(n, i), MultiPoly::variable(r * n + i));
        acc = sym_mul(acc, lin);
    }
    auto basis = sym_basis(n, d);
    std::vector<MultiPoly> out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (const MultiPoly* c = acc.terms().find(basis[k])) out[k] = *c;
    return out;
}

} // namespace brill

#endif
