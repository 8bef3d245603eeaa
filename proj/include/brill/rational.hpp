#ifndef BRILL_RATIONAL_HPP
#define BRILL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace brill {

/// Arbitrary-precision integer and exact rational scalar.
///
/// Invariants are maintained by the backend: rationals are always stored
/// reduced (gcd(num, den) = 1) with a positive denominator, and zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// num/den as a reduced rational with positive denominator. Throws on a
/// zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

/// Exact multiplicative inverse. Throws on zero.
inline Rational rat_inv(const Rational& a) {
    if (a.is_zero()) throw std::domain_error("division by zero");
    return Rational(1) / a;
}

/// Serializes as "p/q" in base 10, or just "p" when q = 1.
inline std::string rat_to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p", "p/q" or "-p/q". Rejects anything else.
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
    }
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// C(n, k); zero when k is out of range.
inline Integer binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

} // namespace brill

#endif
