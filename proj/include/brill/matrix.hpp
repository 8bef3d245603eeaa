#ifndef BRILL_MATRIX_HPP
#define BRILL_MATRIX_HPP

#include "brill/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace brill {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

namespace detail {

// Fraction-free (Bareiss-style) forward elimination over the integers after
// clearing row denominators. Pivots are chosen deterministically: for each
// column in increasing index, the first row (top-down) with a nonzero entry.
// Returns the echelon matrix together with the pivot (row, col) list.
struct Echelon {
    std::vector<std::vector<Integer>> m;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

inline Echelon bareiss_echelon(const RatMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < cols; ++c)
            lcm = boost::multiprecision::lcm(lcm, rat_den(a.at(r, c)));
        for (std::size_t c = 0; c < cols; ++c)
            m[r][c] = rat_num(a.at(r, c)) * (lcm / rat_den(a.at(r, c)));
    }

    Echelon e;
    Integer prev = 1;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t sel = pr;
        while (sel < rows && m[sel][pc] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pr) std::swap(m[sel], m[pr]);
        for (std::size_t r = pr + 1; r < rows; ++r) {
            for (std::size_t c = pc + 1; c < cols; ++c) {
                Integer t = m[pr][pc] * m[r][c] - m[r][pc] * m[pr][c];
                m[r][c] = t / prev; // exact division (Bareiss)
            }
            m[r][pc] = 0;
        }
        prev = m[pr][pc];
        e.pivots.emplace_back(pr, pc);
        ++pr;
    }
    e.m = std::move(m);
    return e;
}

} // namespace detail

/// Rank via the same elimination used by kernel_basis.
inline std::size_t rat_rank(const RatMatrix& m) {
    return detail::bareiss_echelon(m).pivots.size();
}

/// Exact basis of {x : Mx = 0}, one vector per free column, in increasing
/// free-column order. Each vector is normalized so its first nonzero entry
/// is 1.
inline std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& a) {
    const std::size_t cols = a.cols();
    detail::Echelon e = detail::bareiss_echelon(a);

    std::vector<bool> is_pivot(cols, false);
    for (auto [r, c] : e.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> x(cols);
        x[fc] = 1;
        // Back-substitution over pivot rows, bottom-up.
        for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
            auto [r, c] = *it;
            Rational s = 0;
            for (std::size_t k = c + 1; k < cols; ++k)
                if (!x[k].is_zero() && e.m[r][k] != 0) s += Rational(e.m[r][k]) * x[k];
            x[c] = -s / Rational(e.m[r][c]);
        }
        for (auto& v : x) {
            if (!v.is_zero()) {
                Rational lead = v;
                for (auto& w : x) w /= lead;
                break;
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace brill

#endif
