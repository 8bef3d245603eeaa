#ifndef BRILL_CAPS_HPP
#define BRILL_CAPS_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace brill {

/// Raised when an operation would exceed a configured resource cap.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline long long env_cap(const char* name, long long fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return std::stoll(v);
        } catch (...) {
        }
    }
    return fallback;
}
} // namespace detail

/// Term-count limit per element. Override with BRILL_MAX_TERMS.
inline long long max_terms() {
    static const long long v = detail::env_cap("BRILL_MAX_TERMS", 10'000'000);
    return v;
}

/// Column limit for exact kernel computations. Override with BRILL_MAX_COLS.
inline long long max_matrix_cols() {
    static const long long v = detail::env_cap("BRILL_MAX_COLS", 5'000);
    return v;
}

inline void check_term_cap(long long estimate, const char* where) {
    if (estimate > max_terms())
        throw cap_error(std::string(where) + ": estimated term count " + std::to_string(estimate) +
                        " exceeds cap " + std::to_string(max_terms()));
}

inline void check_cols_cap(long long cols, const char* where) {
    if (cols > max_matrix_cols())
        throw cap_error(std::string(where) + ": " + std::to_string(cols) +
                        " matrix columns exceed cap " + std::to_string(max_matrix_cols()));
}

} // namespace brill

#endif
