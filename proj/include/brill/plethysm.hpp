#ifndef BRILL_PLETHYSM_HPP
#define BRILL_PLETHYSM_HPP

#include "brill/elements.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace brill {

/// A multiset of k degree-d monomials, canonically sorted. The monomial
/// basis of S^k(S^d V).
using PlethysmKey = std::vector<Mono>;

inline PlethysmKey make_plethysm_key(std::vector<Mono> factors) {
    std::sort(factors.begin(), factors.end(), mono_before);
    return factors;
}

/// Formal linear combination of monomials of S^k(S^d V): each key is a
/// multiset of k monomials of degree d.
template <class R = Rational>
class PlethysmVector {
public:
    PlethysmVector() : n_(0), d_(0), k_(0) {}
    PlethysmVector(int n, int d, int k) : n_(n), d_(d), k_(k) {
        if (n < 1 || d < 0 || k < 0) throw std::invalid_argument("PlethysmVector: bad dimensions");
    }

    int n() const { return n_; }
    int d() const { return d_; }
    int factor_count() const { return k_; }
    std::pair<int, int> grade() const { return {k_, d_}; }

    void add(PlethysmKey key, const R& c) {
        if (static_cast<int>(key.size()) != k_)
            throw std::invalid_argument("PlethysmVector: wrong factor count");
        for (const auto& m : key) {
            if (static_cast<int>(m.size()) != n_ || degree(m) != d_)
                throw std::invalid_argument("PlethysmVector: factor has wrong degree");
        }
        std::sort(key.begin(), key.end(), mono_before);
        terms_.add(key, c);
    }

    const detail::TermMap<PlethysmKey, R>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const PlethysmVector& o) const {
        return n_ == o.n_ && d_ == o.d_ && k_ == o.k_ && terms_ == o.terms_;
    }

    bool before(const PlethysmVector& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (d_ != o.d_) return d_ < o.d_;
        if (k_ != o.k_) return k_ < o.k_;
        return terms_.before(o.terms_);
    }

private:
    int n_, d_, k_;
    detail::TermMap<PlethysmKey, R> terms_;
};

template <class R>
void element_add_term(PlethysmVector<R>& e, const PlethysmKey& k, const R& c) {
    e.add(k, c);
}

template <class R>
PlethysmVector<R> element_scaled(const PlethysmVector<R>& x, const R& s) {
    PlethysmVector<R> r(x.n(), x.d(), x.factor_count());
    for (const auto& [k, c] : x.terms()) r.add(k, c * s);
    return r;
}

} // namespace brill

#endif
