#ifndef QLINEAR_TRAJECTORY_HPP
#define QLINEAR_TRAJECTORY_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace qlinear {

/**
 * Deterministic trajectory system: the pair-survival curve p, the codegree
 * curves y_j, the available-edge curve h = y_0, and the error envelopes
 * eps_j, together with the smoothing exponent f, the envelope exponent
 * beta = 1/(6 q^2) and the target stopping step m0. All logarithms are
 * natural; beta is carried exactly as the integer denominator 6 q^2 so that
 * beta-dependent exponents stay exact rationals until the final evaluation.
 */
struct TrajectoryParams {
    int n = 0;
    int q = 0;
    double f = 0.0;              // (ln ln n)^2
    std::int64_t beta_den = 0;   // beta = 1 / beta_den, beta_den = 6 q^2
    std::int64_t m0 = 0;         // floor((n(n-1)/(q(q-1))) (1 - n^-beta))

    double beta() const { return 1.0 / static_cast<double>(beta_den); }
    double nn1() const { return static_cast<double>(n) * (n - 1); }
    double t_of(std::int64_t step) const { return static_cast<double>(step) / nn1(); }
    double t_m0() const { return t_of(m0); }
};

// f, beta, m0 as defined above; m0 is evaluated in high-precision arithmetic
// before the floor. Throws std::domain_error unless 3 <= q <= n and n >= 16.
TrajectoryParams make_params(int n, int q);

// p(t) = 1 - q(q-1) t, evaluable at any t (the curve domain is enforced by
// eval_curves, not here, so the boundary can be probed).
inline double p_of(int q, double t) { return 1.0 - static_cast<double>(q) * (q - 1) * t; }

// Derivative magnitude carried as (sign, ln|value|) to avoid cancellation
// near p -> n^-beta.
struct SignedLog {
    int sign = 0;
    double log_abs = -std::numeric_limits<double>::infinity();
    double value() const { return sign * std::exp(log_abs); }
};

struct CurvePoint {
    double t = 0.0;
    double p = 1.0;
    std::vector<double> log_y;      // j = 0 .. q-1; h = y_0
    std::vector<double> log_eps;    // eps_H = eps_0
    std::vector<SignedLog> dy;      // y_j'
    std::vector<SignedLog> deps;    // eps_j'

    double log_h() const { return log_y[0]; }
    double log_eps_h() const { return log_eps[0]; }
    double y(int j) const { return std::exp(log_y[static_cast<std::size_t>(j)]); }
    double eps(int j) const { return std::exp(log_eps[static_cast<std::size_t>(j)]); }
    double h() const { return y(0); }
    double eps_h() const { return eps(0); }
};

// All curves, envelopes and first derivatives at time t. Throws
// std::domain_error for t outside [0, m0/(n(n-1))].
CurvePoint eval_curves(const TrajectoryParams& params, double t);

/**
 * Numeric report of the five one-step drift relations at (t, j):
 *   (a) the exact identity (C(q,2)-C(j,2)) y_j y_2 / h = |y_j'| / (n(n-1)),
 *       reported as a relative residual. The printed source relation carries
 *       y_j' < 0 on the right; the identity holds for the magnitude, so the
 *       sign convention is flagged rather than guessed.
 *   (b) C(q,2) y_j eps_2 / h over eps_j'/(n(n-1)): equals
 *       C(q,2)/(C(j,2)+2C(q,2)) <= 1/2 exactly, equality iff j in {0,1}.
 *   (c, d) for 3 <= m <= q-1, q C(q,m) y_j y_m / h and the eps_m analogue
 *       over eps_j'/(n(n-1)): asymptotically vanishing ratios, reported as
 *       numbers (trend-tested over a grid of n, never asserted pointwise).
 *   (e) the Taylor remainder terms sup|y_j''|/(2 n^2(n-1)^2) and
 *       sup|eps_j''|/(2 n^2(n-1)^2) over eps_j'/(n(n-1)).
 */
struct Lemma6Report {
    int j = 0;
    double t = 0.0;
    double a_residual = 0.0;        // |lhs/rhs - 1| of relation (a)
    bool a_sign_flip = false;       // y_j' < 0 while the printed lhs is positive
    double b_ratio_eval = 0.0;      // numerically evaluated relation (b)
    std::int64_t b_num = 0;         // closed form C(q,2)
    std::int64_t b_den = 0;         //             C(j,2) + 2 C(q,2)
    struct OrderRatios {
        int m = 0;
        double c_ratio = 0.0;
        double d_ratio = 0.0;
    };
    std::vector<OrderRatios> cd;    // m = 3 .. q-1 (empty when q <= 3)
    double e_ratio_y = 0.0;
    double e_ratio_eps = 0.0;
};

Lemma6Report lemma6_report(const TrajectoryParams& params, double t, int j);

/**
 * Freedman-inequality budget for the band martingale of a size-j set:
 * one-step ceiling C, accumulated-drift ceiling V (constant-free explicit
 * expression), initial slack z = eps_j(0), and the tail exponent
 * z^2 / (2C(V+z)), all carried in log scale.
 */
struct FreedmanBudget {
    int j = 0;
    double log_c = 0.0;
    double log_v = 0.0;
    double log_z = 0.0;
    double log_exponent = 0.0;      // ln of z^2/(2C(V+z))
    double log_z2_over_cv = 0.0;    // ln of z^2/(C V), the ">> 1" diagnostic
    double z2_cv_over_qf4 = 0.0;    // z^2/(C V) divided by q^(f-4)
};

FreedmanBudget freedman_budget(const TrajectoryParams& params, int j);

}  // namespace qlinear

#endif
