#ifndef DCP_RATIONAL_HPP
#define DCP_RATIONAL_HPP

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dcp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Int pow2(long k) {
    if (k < 0) throw std::invalid_argument("pow2: negative exponent");
    return Int(1) << k;
}

/// Stirling number of the second kind S(n,j); 0 outside support.
inline Int stirling2(long n, long j) {
    if (n < 0 || j < 0) return 0;
    if (j > n) return 0;
    if (n == 0) return 1;  // j == 0 here
    if (j == 0) return 0;
    // One row of the recurrence at a time.
    std::vector<Int> row(static_cast<size_t>(n) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (long m = 1; m <= n; ++m) {
        for (long i = std::min(m, n); i >= 1; --i)
            row[static_cast<size_t>(i)] = Int(i) * row[static_cast<size_t>(i)] + row[static_cast<size_t>(i) - 1];
        row[0] = 0;
    }
    return row[static_cast<size_t>(j)];
}

/// Numerator of Rat assumed integral; throws otherwise.
inline Int rat_to_int(const Rat& r) {
    if (denominator(r) != 1) throw std::domain_error("rat_to_int: value is not an integer");
    return numerator(r);
}

}  // namespace dcp

#endif
