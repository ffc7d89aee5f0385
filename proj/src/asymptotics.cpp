#include "bandlim/asymptotics.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <string>

#include "bandlim/errors.hpp"

namespace bandlim {

namespace {

// log(exp(a) + exp(b)) without overflow
double logaddexp(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log|exp(a) - exp(b)|; -inf when equal
double logdiffexp_abs(double a, double b) {
    double hi = std::max(a, b), lo = std::min(a, b);
    if (hi == lo) return -kInf;
    double d = -std::expm1(lo - hi);  // 1 - exp(lo-hi) in (0, 1]
    return hi + std::log(d);
}

}  // namespace

double t_coefficient(int m, TVariant variant) {
    if (m < 1) throw InvalidInputError("t coefficient needs m >= 1");
    if (m > 100000) throw NumericalError("t coefficient order too large");

    if (m == 1) return variant == TVariant::printed ? 0.0 : 1.0;

    // The summands reach ~2^m while the total stays below 1, so carry
    // roughly m extra bits through the accumulation.
    mpfr_prec_t prec = m + 96;
    mpfr_t acc, term, root;
    mpfr_init2(acc, prec);
    mpfr_init2(term, prec);
    mpfr_init2(root, prec);
    mpfr_set_zero(acc, 1);

    mpz_t binom;
    mpz_init(binom);
    int r0 = (variant == TVariant::printed) ? 1 : 0;
    for (int r = r0; r <= m - 1; ++r) {
        mpz_bin_uiui(binom, static_cast<unsigned long>(m - 1), static_cast<unsigned long>(r));
        // sqrt(r+1) - sqrt(r)
        mpfr_set_ui(root, static_cast<unsigned long>(r + 1), MPFR_RNDN);
        mpfr_sqrt(term, root, MPFR_RNDN);
        mpfr_set_ui(root, static_cast<unsigned long>(r), MPFR_RNDN);
        mpfr_sqrt(root, root, MPFR_RNDN);
        mpfr_sub(term, term, root, MPFR_RNDN);
        mpfr_mul_z(term, term, binom, MPFR_RNDN);
        if (r & 1)
            mpfr_sub(acc, acc, term, MPFR_RNDN);
        else
            mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    double out = mpfr_get_d(acc, MPFR_RNDN);
    mpz_clear(binom);
    mpfr_clear(acc);
    mpfr_clear(term);
    mpfr_clear(root);
    if (!std::isfinite(out)) throw NumericalError("t coefficient evaluation overflowed");
    return out;
}

double bias_limit(const GmmModel& model, const Hyperplane& plane, int m, TVariant variant) {
    if (m < 1) throw InvalidInputError("bias limit needs m >= 1");
    double t = t_coefficient(m, variant);
    double integral = boundary_power_integral(model, plane, static_cast<double>(m) + 1.0);
    return t / std::sqrt(2.0 * M_PI) * integral;
}

double finite_m_prediction(const GmmModel& model, const Hyperplane& plane, int m, double sigma,
                           TVariant variant) {
    if (m < 1) throw InvalidInputError("prediction needs m >= 1");
    if (!(sigma > 0)) throw InvalidInputError("sigma must be positive");
    double t = t_coefficient(m, variant);
    if (!(t > 0))
        throw VariantInconsistencyError(
            "bias limit is nonpositive under this coefficient variant (t(m) = " +
            std::to_string(t) + "), prediction undefined");
    // assembled in logs: the boundary integral underflows a double at large m
    double log_integral = boundary_power_integral_log(model, plane, static_cast<double>(m) + 1.0);
    double log_bias = std::log(t) - 0.5 * std::log(2.0 * M_PI) + log_integral;
    double mass = region_mass(model, plane);
    if (!(mass > 0)) throw VariantInconsistencyError("region mass vanishes, prediction undefined");
    return std::exp((std::log(sigma) + log_bias - std::log(mass)) / m);
}

double limit_bandwidth(const GmmModel& model, const Hyperplane& plane) {
    return sup_on_boundary(model, plane);
}

double bernstein_tail_bound(long n, int m, double sigma, int d, double expected_v,
                            double epsilon) {
    if (n < 1 || m < 1 || d < 1) throw InvalidInputError("n, m, d must be positive");
    if (!(sigma > 0) || !(expected_v > 0) || !(epsilon > 0))
        throw InvalidInputError("sigma, expected_v, epsilon must be positive");

    long blocks = n / (m + 1);
    if (blocks < 1) return 2.0;  // vacuous regime

    double log_c = std::log(2.0) - 0.5 * d * std::log(2.0 * M_PI);  // log C
    double log_cm = m * log_c;
    double log_sig_pow = (static_cast<double>(m) * d + 1.0) * std::log(sigma);
    double log_ev = std::log(expected_v);

    // numerator: blocks * sigma^(md+1) * eps^2
    double log_num = std::log(static_cast<double>(blocks)) + log_sig_pow + 2.0 * std::log(epsilon);
    // denominator: 2 C^m E[V] + (2/3) |C^m - sigma^(md+1) E[V]| eps
    double log_t1 = std::log(2.0) + log_cm + log_ev;
    double log_t2 = std::log(2.0 / 3.0) + logdiffexp_abs(log_cm, log_sig_pow + log_ev) +
                    std::log(epsilon);
    double log_den = logaddexp(log_t1, log_t2);

    double exponent = -std::exp(log_num - log_den);
    return 2.0 * std::exp(exponent);
}

Schedule schedule(long n, double x, double y, int d) {
    if (n < 3) throw InvalidInputError("schedule needs n >= 3");
    if (!(x > 0.0 && x < 1.0)) throw InvalidInputError("x must lie in (0, 1)");
    if (!(y > 0.5 && y < 1.0)) throw InvalidInputError("y must lie in (1/2, 1)");
    if (d < 1) throw InvalidInputError("dimension must be positive");

    Schedule s;
    s.n = n;
    s.x = x;
    s.y = y;
    long m = std::lround(std::pow(std::log(static_cast<double>(n)), y));
    s.m = static_cast<int>(std::max(1L, m));
    s.sigma = std::pow(static_cast<double>(n), -x / (static_cast<double>(s.m) * d + 1.0));
    return s;
}

ConditionReport check_conditions(long n, double sigma, int m, int d) {
    if (n < 1 || m < 1 || d < 1 || !(sigma > 0))
        throw InvalidInputError("conditions need positive n, sigma, m, d");
    ConditionReport r;
    r.n = n;
    r.sigma = sigma;
    r.m = m;
    r.d = d;
    r.quantity_c3a = static_cast<double>(m) / static_cast<double>(n);
    r.quantity_c3b = m * sigma * sigma;
    r.quantity_c4 = std::exp(std::log(1.0 / sigma) / m);

    double log_c = std::log(2.0) - 0.5 * d * std::log(2.0 * M_PI);
    r.log_quantity_c5 = std::log(static_cast<double>(n)) +
                        (static_cast<double>(m) * d + 1.0) * std::log(sigma) -
                        std::log(static_cast<double>(m)) - m * log_c;
    r.log_strong_c5 = r.log_quantity_c5 - std::log(std::log(static_cast<double>(n)));
    r.quantity_c5 = std::exp(r.log_quantity_c5);  // may underflow to 0; log form stays finite
    r.strong_c5 = std::exp(r.log_strong_c5);
    return r;
}

}  // namespace bandlim
