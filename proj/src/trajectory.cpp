#include "qlinear/trajectory.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>

#include "qlinear/combinatorics.hpp"

namespace qlinear {

namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

double logaddexp(double a, double b) {
    if (a < b) std::swap(a, b);
    if (std::isinf(b) && b < 0) return a;
    return a + std::log1p(std::exp(b - a));
}

}  // namespace

TrajectoryParams make_params(int n, int q) {
    if (q < 3 || q > n || n < 16)
        throw std::domain_error("make_params: require 3 <= q <= n and n >= 16");
    TrajectoryParams params;
    params.n = n;
    params.q = q;
    params.f = std::pow(std::log(std::log(static_cast<double>(n))), 2.0);
    params.beta_den = 6LL * q * q;

    HighFloat hn(n), hq(q);
    HighFloat beta = HighFloat(1) / HighFloat(params.beta_den);
    HighFloat cap = hn * (hn - 1) / (hq * (hq - 1));
    HighFloat value = cap * (HighFloat(1) - exp(-beta * log(hn)));
    params.m0 = static_cast<std::int64_t>(floor(value));
    return params;
}

CurvePoint eval_curves(const TrajectoryParams& params, double t) {
    const double t_end = params.t_m0();
    if (!(t >= 0.0) || t > t_end * (1.0 + 1e-12))
        throw std::domain_error("eval_curves: t outside [0, m0/(n(n-1))]");
    const int n = params.n;
    const int q = params.q;
    const std::int64_t A = choose2(q);
    const double log_n = std::log(static_cast<double>(n));
    const double log_q = std::log(static_cast<double>(q));
    const double log_qq1 = std::log(static_cast<double>(q) * (q - 1));
    const double p = p_of(q, t);
    const double log_p = std::log(p);
    // exponent of n in eps_j: -1 + 3 A / beta_den, kept rational until here
    const double n_exp = -1.0 + 3.0 * static_cast<double>(A) / static_cast<double>(params.beta_den);

    CurvePoint pt;
    pt.t = t;
    pt.p = p;
    pt.log_y.resize(static_cast<std::size_t>(q));
    pt.log_eps.resize(static_cast<std::size_t>(q));
    pt.dy.resize(static_cast<std::size_t>(q));
    pt.deps.resize(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
        const std::int64_t Cj = choose2(j);
        const double lb = log_binom(n - j, q - j);
        const double y_exp = static_cast<double>(A - Cj);
        const double e_exp = -static_cast<double>(Cj + 2 * A);
        pt.log_y[j] = lb + y_exp * log_p;
        pt.log_eps[j] = lb + n_exp * log_n + params.f * log_q + e_exp * log_p;
        // y_j' = C(n-j,q-j) (A-Cj) p^(A-Cj-1) * (-q(q-1))  -> negative
        pt.dy[j] = {-1, lb + std::log(y_exp) + (y_exp - 1.0) * log_p + log_qq1};
        // eps_j' = eps_j * (Cj+2A) q(q-1) / p  -> positive
        pt.deps[j] = {+1, pt.log_eps[j] + std::log(static_cast<double>(Cj + 2 * A)) - log_p + log_qq1};
    }
    return pt;
}

Lemma6Report lemma6_report(const TrajectoryParams& params, double t, int j) {
    if (j < 0 || j >= params.q) throw std::domain_error("lemma6_report: require 0 <= j <= q-1");
    const int n = params.n;
    const int q = params.q;
    const std::int64_t A = choose2(q);
    const std::int64_t Cj = choose2(j);
    const double log_nn1 = std::log(params.nn1());
    const double log_q = std::log(static_cast<double>(q));
    const CurvePoint pt = eval_curves(params, t);

    Lemma6Report rep;
    rep.j = j;
    rep.t = t;

    // (a) exact identity, compared in log space.
    {
        double lhs = std::log(static_cast<double>(A - Cj)) + pt.log_y[j] + pt.log_y[2] - pt.log_h();
        double rhs = pt.dy[j].log_abs - log_nn1;
        rep.a_residual = std::fabs(std::expm1(lhs - rhs));
        rep.a_sign_flip = pt.dy[j].sign < 0;
    }

    // (b) evaluated ratio and its closed form.
    {
        double num = std::log(static_cast<double>(A)) + pt.log_y[j] + pt.log_eps[2] - pt.log_h();
        double den = pt.deps[j].log_abs - log_nn1;
        rep.b_ratio_eval = std::exp(num - den);
        rep.b_num = A;
        rep.b_den = Cj + 2 * A;
    }

    // (c, d) higher-order drift terms against eps_j'.
    for (int m = 3; m <= q - 1; ++m) {
        double common = log_q + std::log(binom_d(q, m)) + pt.log_y[j] - pt.log_h() -
                        (pt.deps[j].log_abs - log_nn1);
        Lemma6Report::OrderRatios r;
        r.m = m;
        r.c_ratio = std::exp(common + pt.log_y[m]);
        r.d_ratio = std::exp(common + pt.log_eps[m]);
        rep.cd.push_back(r);
    }

    // (e) Taylor remainder terms. sup|y_j''| sits at p = 1 (its p-exponent is
    // nonnegative for q >= 3); sup|eps_j''| at p(t_m0), the domain end.
    {
        const double lb = log_binom(n - j, q - j);
        const double log_qq1 = std::log(static_cast<double>(q) * (q - 1));
        const double n_exp =
            -1.0 + 3.0 * static_cast<double>(A) / static_cast<double>(params.beta_den);
        double sup_ypp = lb + std::log(static_cast<double>(A - Cj)) +
                         std::log(static_cast<double>(A - Cj - 1)) + 2.0 * log_qq1;
        double log_p_end = std::log(p_of(q, params.t_m0()));
        double sup_epp = lb + n_exp * std::log(static_cast<double>(n)) +
                         params.f * log_q + std::log(static_cast<double>(Cj + 2 * A)) +
                         std::log(static_cast<double>(Cj + 2 * A + 1)) +
                         (-static_cast<double>(Cj + 2 * A) - 2.0) * log_p_end + 2.0 * log_qq1;
        double den = pt.deps[j].log_abs - log_nn1;
        rep.e_ratio_y = std::exp(sup_ypp - std::log(2.0) - 2.0 * log_nn1 - den);
        rep.e_ratio_eps = std::exp(sup_epp - std::log(2.0) - 2.0 * log_nn1 - den);
    }
    return rep;
}

FreedmanBudget freedman_budget(const TrajectoryParams& params, int j) {
    if (j < 0 || j >= params.q) throw std::domain_error("freedman_budget: require 0 <= j <= q-1");
    const int n = params.n;
    const int q = params.q;
    const std::int64_t A = choose2(q);
    const double log_n = std::log(static_cast<double>(n));
    const double log_q = std::log(static_cast<double>(q));

    FreedmanBudget b;
    b.j = j;
    b.log_c = std::log(static_cast<double>(q - 1)) + log_binom(n - j, q - j - 1);
    b.log_v = log_binom(n - j, q - j) + (params.f + 2.0) * log_q +
              (-1.0 + 6.0 * static_cast<double>(A) / static_cast<double>(params.beta_den)) * log_n;
    b.log_z = log_binom(n - j, q - j) + params.f * log_q +
              (-1.0 + 3.0 * static_cast<double>(A) / static_cast<double>(params.beta_den)) * log_n;
    b.log_exponent = 2.0 * b.log_z - (std::log(2.0) + b.log_c + logaddexp(b.log_v, b.log_z));
    b.log_z2_over_cv = 2.0 * b.log_z - b.log_c - b.log_v;
    b.z2_cv_over_qf4 = std::exp(b.log_z2_over_cv - (params.f - 4.0) * log_q);
    return b;
}

}  // namespace qlinear
