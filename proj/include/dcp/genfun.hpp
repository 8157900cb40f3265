#ifndef DCP_GENFUN_HPP
#define DCP_GENFUN_HPP

#include <stdexcept>

#include "dcp/combinat.hpp"
#include "dcp/series.hpp"

namespace dcp {

namespace detail {

inline QPoly poly_q() { return QPoly::q_pow(1); }

/// e^{yS} as a y-graded series: sum_k (S^k/k!) y^k, S with no constant term.
inline TSeries exp_y(const TSeries& s) {
    if (!s.is_zero() && s.min_tdeg() < 1) throw std::domain_error("exp_y: nonzero constant term");
    TSeries r = TSeries::constant(s.order_t(), QPoly(1));
    TSeries pw = TSeries::constant(s.order_t(), QPoly(1));
    Rat fact = 1;
    for (long k = 1; k <= s.order_t(); ++k) {
        pw = (pw * s).mul_y();
        if (pw.is_zero()) break;
        fact *= k;
        r += Rat(1) / fact * pw;
    }
    return r;
}

}  // namespace detail

/// The tree series lambda(q,t) = t + O(t^2), solved order by order from
/// lambda' = 1/(1 - psi(lambda)), psi = (e^{q lambda} - q e^{lambda} + q - 1)/(q - 1).
inline TSeries lambda_series(long order) {
    if (order < 1) throw std::invalid_argument("lambda_series: order must be >= 1");
    TSeries lam = TSeries::t_var(order);
    QPoly q = detail::poly_q();
    for (long it = 0; it < order; ++it) {
        TSeries bracket = (q * lam).exp() - q * lam.exp() + TSeries::constant(order, q - QPoly(1));
        TSeries psi = bracket.div_qminus1();
        TSeries deriv = (TSeries::constant(order, QPoly(1)) - psi).reciprocal();
        TSeries next = deriv.integrate_t();
        if (next == lam) break;
        lam = next;
    }
    return lam;
}

/// Phi(q,t) = e^lambda - 1.
inline TSeries phi(long order) {
    return lambda_series(order).exp() - TSeries::constant(order, QPoly(1));
}

/// Phi(q,t,y) = e^{y lambda} - 1; y-degree counts maximal nested-set elements.
inline TSeries phi_y(long order) {
    return detail::exp_y(lambda_series(order)) - TSeries::constant(order, QPoly(1));
}

struct BSeries {
    TSeries lambda_b, gamma_b, mu_b, phi_b_y;
};

inline BSeries b_series(long order) {
    QPoly q = detail::poly_q();
    TSeries lam_b = Rat(1, 2) * lambda_series(order);
    TSeries bracket = (q * lam_b).exp() - q * lam_b.exp();
    TSeries gamma_b = bracket.div_qminus1() + TSeries::constant(order, QPoly(1));
    TSeries mu_b = (TSeries::constant(order, QPoly(1)) - gamma_b).reciprocal()
                 - TSeries::constant(order, QPoly(1));
    // y grades by weak trees only: a strong chain collapses to rank zero,
    // not to a symbol, so the mu_b factor carries no y
    TSeries phi_b = detail::exp_y(lam_b) * (mu_b + TSeries::constant(order, QPoly(1)))
                  - TSeries::constant(order, QPoly(1));
    return {std::move(lam_b), std::move(gamma_b), std::move(mu_b), std::move(phi_b)};
}

/// Which lambda feeds the exponential factor of the verbatim Phi_D; the
/// source formula is ambiguous, so both readings exist. Neither reproduces
/// the enumerated minimal D polynomials (kept as documented regressions);
/// d_series below carries the corrected construction.
enum class LambdaReading { full, halved };

struct DSeries {
    TSeries gamma_d, mu_d, phi_d_y;
};

/// Corrected D series. Strong vertices in a D nested-set tree are pure
/// strong subspaces of cardinality >= 3 (a strong pair splits into its two
/// colored lines); the constraint binds only at the bottom of a strong
/// chain — every higher vertex spans >= 5 leaves — so only the bottom
/// factor loses the t^2 term q t^2/8 of gamma_B:
///   mu_D = (gamma_B - q t^2/8) / (1 - gamma_B).
/// The doubled colored pairs a D nested set may additionally contain carry
/// a zero geometric factor and never reach the basis. The t^n/(2^{n-1} n!)
/// normalization enters as a single global factor of 2:
///   Phi_D(q,t,y) = 2 ( e^{y lambda_B} (mu_D + 1) - 1 ).
inline DSeries d_series(long order) {
    QPoly q = detail::poly_q();
    BSeries b = b_series(order);
    TSeries gamma_d = b.gamma_b;
    gamma_d.set(2, 0, QPoly());
    TSeries mu_d = gamma_d * (TSeries::constant(order, QPoly(1)) - b.gamma_b).reciprocal();
    TSeries phi_d = Rat(2) * (detail::exp_y(b.lambda_b) * (mu_d + TSeries::constant(order, QPoly(1)))
                              - TSeries::constant(order, QPoly(1)));
    return {std::move(gamma_d), std::move(mu_d), std::move(phi_d)};
}

/// The D series exactly as displayed in the source: gamma_D doubled with
/// three correction terms, Phi_D = e^{y lambda}(y mu_D + 1) - 1 with the
/// lambda reading left open. Disagrees with the enumeration under either
/// reading; retained so the discrepancy stays visible.
inline DSeries d_series_printed(long order, LambdaReading reading = LambdaReading::halved) {
    QPoly q = detail::poly_q();
    BSeries b = b_series(order);
    TSeries corrections(order);
    corrections.set(2, 0, Rat(1, 2 * 4) * q);                       // q t^2/(2! 2^2)
    corrections.set(3, 0, Rat(1, 6 * 8) * (Rat(4) * q + q * q));    // (4q+q^2) t^3/(3! 2^3)
    for (long n = 4; n <= order; ++n)
        corrections.set(n, 0, Rat(binomial(n, 2)) / Rat(factorial(n) * pow2(n)) * q);
    TSeries gamma_d = Rat(2) * (b.gamma_b - corrections);
    TSeries mu_d = (TSeries::constant(order, QPoly(1)) - gamma_d).reciprocal()
                 - TSeries::constant(order, QPoly(1));
    TSeries lam = reading == LambdaReading::halved ? b.lambda_b : lambda_series(order);
    TSeries phi_d = detail::exp_y(lam) * (mu_d.mul_y() + TSeries::constant(order, QPoly(1)))
                  - TSeries::constant(order, QPoly(1));
    return {std::move(gamma_d), std::move(mu_d), std::move(phi_d)};
}

/// Weak-only forest strata with one singleton symbol marked: the series
/// y t e^{y lambda_B}; feeds the strong-singleton correction of the D
/// interpolation.
inline TSeries d_marked_singleton_series(long order) {
    return detail::exp_y(Rat(1, 2) * lambda_series(order));
}

/// n! [t^n] Phi: the minimal-model polynomial of the rank n-1 braid arrangement.
inline QPoly minimal_A_from_series(long n, long order = 0) {
    if (order < n) order = n;
    return Rat(factorial(n)) * phi(order).coeff_t(n);
}

/// 2^n n! [t^n] Phi_B at y=1.
inline QPoly minimal_B_from_series(long n, long order = 0) {
    if (order < n) order = n;
    return Rat(pow2(n) * factorial(n)) * b_series(order).phi_b_y.coeff_t(n);
}

}  // namespace dcp

#endif
