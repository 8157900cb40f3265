#ifndef DCP_COMBINAT_HPP
#define DCP_COMBINAT_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "dcp/qpoly.hpp"
#include "dcp/rational.hpp"

namespace dcp {

/// f_{n,j}(q) = S(n,j) * (q^{n-j} - q)/(q-1), n > j >= 1.
inline QPoly f_poly(long n, long j) {
    if (!(n > j && j >= 1)) throw std::invalid_argument("f_poly: need n > j >= 1");
    return Rat(stirling2(n, j)) * QPoly::geometric(n - j);
}

/// ftilde(n,m) = S(n,m) * (q^{n-m+1} - q)/(q-1), n > m.
inline QPoly ftilde_poly(long n, long m) {
    if (!(n > m)) throw std::invalid_argument("ftilde_poly: need n > m");
    return Rat(stirling2(n, m)) * QPoly::geometric(n - m + 1);
}

/// h_{n,j}(q) = (sum_{k=1}^{n+2-j} C(n,k-1) S(n+1-k,j-1) 2^{n+2-j-k}) * (q^{n+1-j}-q)/(q-1).
/// Out-of-support Stirling arguments contribute 0.
inline QPoly h_poly(long n, long j) {
    if (!(n >= j && j >= 1)) throw std::invalid_argument("h_poly: need n >= j >= 1");
    Int count = 0;
    for (long k = 1; k <= n + 1 - (j - 1); ++k) {
        long e = n + 1 - (j - 1) - k;
        count += binomial(n, k - 1) * stirling2(n + 1 - k, j - 1) * pow2(e);
    }
    return Rat(count) * QPoly::geometric(n + 1 - j);
}

/// J_k(m): lists 1 <= j_1 < ... < j_k <= m with j_i - j_{i-1} >= 2 for i >= 2.
inline std::vector<std::vector<long>> jk_lists(long k, long m) {
    std::vector<std::vector<long>> out;
    if (k < 1 || m < 1) return out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long next_min) -> void {
        if (static_cast<long>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (long j = next_min; j <= m; ++j) {
            cur.push_back(j);
            self(self, j + 2);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Jtilde_k(n-1) (and Jtilde_{k,s} when s is given): (k+1)-tuples
/// (j_1,...,j_k, j_{k+1}=n-1) with j_1 < ... < j_k < n-1, j_2-j_1 >= 1,
/// j_i - j_{i-1} >= 2 for i in {3,...,k+1}; optionally j_k <= s.
inline std::vector<std::vector<long>> jk_tilde_lists(long k, long n, std::optional<long> s = std::nullopt) {
    std::vector<std::vector<long>> out;
    if (k < 1 || n < 2) return out;
    const long top = n - 1;  // j_{k+1}
    std::vector<long> cur;
    auto rec = [&](auto&& self, long next_min) -> void {
        long i = static_cast<long>(cur.size()) + 1;  // index of the element being placed
        if (i == k + 1) {
            // place j_{k+1} = n-1 under the gap rule (applies when k+1 >= 3)
            if (cur.back() >= top) return;
            if (k + 1 >= 3 && top - cur.back() < 2) return;
            if (s && cur.back() > *s) return;
            cur.push_back(top);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (long j = next_min; j < top; ++j) {
            if (i == 2 && j - cur.back() < 1) continue;
            if (i >= 3 && j - cur.back() < 2) continue;
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace dcp

#endif
