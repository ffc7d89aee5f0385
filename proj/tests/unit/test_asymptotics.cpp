#include <doctest.h>

#include <cmath>
#include <vector>

#include "bandlim/asymptotics.hpp"
#include "bandlim/errors.hpp"

using namespace bandlim;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.5066282746310002;

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

Hyperplane vertical_line(double offset) {
    Hyperplane h;
    h.normal = v2(1.0, 0.0);
    h.offset = offset;
    return h;
}

// independent route to the corrected coefficient:
//   t(m) = (1 / (2 sqrt(pi))) * int_0^inf s^(-3/2) (1 - e^-s)^m ds
// substituting s = u^2 on [0, X] and closing the tail with 2/sqrt(X);
// the neglected remainder is below m e^-X.
double t_integral_oracle(int m) {
    const double X = 50.0;
    const double U = std::sqrt(X);
    const int N = 400000;  // composite Simpson
    const double h = U / N;
    auto f = [m](double u) {
        if (u == 0.0) return m == 1 ? 2.0 : 0.0;
        double b = -std::expm1(-u * u);
        return 2.0 * std::pow(b, m) / (u * u);
    };
    double s = f(0.0) + f(U);
    for (int i = 1; i < N; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return (s * h / 3.0 + 2.0 / std::sqrt(X)) / (2.0 * std::sqrt(kPi));
}

}  // namespace

TEST_CASE("coefficient base cases") {
    CHECK(t_coefficient(1, TVariant::printed) == 0.0);
    CHECK(t_coefficient(1, TVariant::corrected) == 1.0);
    CHECK(t_coefficient(2, TVariant::corrected) ==
          doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
    CHECK(t_coefficient(2, TVariant::printed) ==
          doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-15));
    // m = 3 by hand: 3 - 3 sqrt(2) + sqrt(3)  (corrected telescoped)
    CHECK(t_coefficient(3, TVariant::corrected) ==
          doctest::Approx(3.0 - 3.0 * std::sqrt(2.0) + std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("coefficient matches the frozen table") {
    struct Row {
        int m;
        double t;
    };
    const Row table[] = {
        {2, 0.5857864376269049512},   {3, 0.48941012044959214712}, {5, 0.41444042945761214367},
        {10, 0.35143000095953803694}, {20, 0.31040100636189201619}, {30, 0.29222699911599224926},
        {50, 0.27337484736170324469}, {64, 0.26550735243590096336}, {100, 0.25289218913311087226},
        {150, 0.24289700664582244816}, {200, 0.23649943612866109913},
        {300, 0.22830282772429944741}};
    for (const Row& r : table) {
        CHECK(t_coefficient(r.m, TVariant::corrected) == doctest::Approx(r.t).epsilon(1e-14));
        CHECK(t_coefficient(r.m, TVariant::printed) ==
              doctest::Approx(r.t - 1.0).epsilon(1e-13));
    }
}

TEST_CASE("coefficient agrees with its integral representation") {
    // values off the frozen grid, crossing the naive-summation breakdown at m ~ 45
    for (int m : {4, 7, 33, 47, 81, 128, 257}) {
        CHECK(t_coefficient(m, TVariant::corrected) ==
              doctest::Approx(t_integral_oracle(m)).epsilon(1e-12));
    }
}

TEST_CASE("coefficient variants differ by exactly one") {
    for (int m : {2, 5, 17, 40, 90, 250}) {
        double c = t_coefficient(m, TVariant::corrected);
        double p = t_coefficient(m, TVariant::printed);
        // the r = 0 term is 1; each variant rounds once, so allow an ulp
        CHECK(p == doctest::Approx(c - 1.0).epsilon(5e-15));
    }
}

TEST_CASE("coefficient decreases in m and stays in (0, 1)") {
    double prev = t_coefficient(1, TVariant::corrected);
    for (int m = 2; m <= 300; m += 7) {
        double t = t_coefficient(m, TVariant::corrected);
        REQUIRE(t > 0.0);
        REQUIRE(t < prev);
        prev = t;
    }
}

TEST_CASE("coefficient rejects out-of-range orders") {
    CHECK_THROWS_AS(t_coefficient(0, TVariant::corrected), InvalidInputError);
    CHECK_THROWS_AS(t_coefficient(-3, TVariant::corrected), InvalidInputError);
    CHECK_THROWS_AS(t_coefficient(100001, TVariant::corrected), NumericalError);
}

TEST_CASE("bias limit at the stock boundary") {
    GmmModel m = reference_gmm();
    Hyperplane h = vertical_line(0.0);
    // m = 1: coefficient is 1, so the bias is the squared-density line
    // integral over sqrt(2 pi)
    CHECK(bias_limit(m, h, 1, TVariant::corrected) ==
          doctest::Approx(0.015888068646409862 / kSqrt2Pi).epsilon(1e-6));
    CHECK(bias_limit(m, h, 2, TVariant::corrected) ==
          doctest::Approx(0.000401929174022526).epsilon(1e-6));
    CHECK(bias_limit(m, h, 3, TVariant::corrected) ==
          doctest::Approx(3.859072522494053e-5).epsilon(1e-6));
    // printed m = 1 collapses to zero
    CHECK(bias_limit(m, h, 1, TVariant::printed) == 0.0);

    // the variants differ by the boundary integral over sqrt(2 pi)
    for (int order : {2, 5, 11}) {
        double gap = bias_limit(m, h, order, TVariant::corrected) -
                     bias_limit(m, h, order, TVariant::printed);
        double integral = boundary_power_integral(m, h, order + 1);
        CHECK(gap == doctest::Approx(integral / kSqrt2Pi).epsilon(1e-10));
    }
}

TEST_CASE("finite-order prediction matches the frozen oracle values") {
    GmmModel m = reference_gmm();
    Hyperplane h = vertical_line(0.0);
    CHECK(finite_m_prediction(m, h, 10, 0.1, TVariant::corrected) ==
          doctest::Approx(0.067744174164060931).epsilon(1e-6));
    CHECK(finite_m_prediction(m, h, 20, 0.1, TVariant::corrected) ==
          doctest::Approx(0.092745615573251189).epsilon(1e-6));
    CHECK(finite_m_prediction(m, h, 30, 0.1, TVariant::corrected) ==
          doctest::Approx(0.10364656697053222).epsilon(1e-6));

    CHECK(finite_m_prediction(m, vertical_line(-2.0), 20, 0.1, TVariant::corrected) ==
          doctest::Approx(0.092531457109933).epsilon(1e-6));
    CHECK(finite_m_prediction(m, vertical_line(-1.0), 20, 0.1, TVariant::corrected) ==
          doctest::Approx(0.051802595808103).epsilon(1e-6));
    CHECK(finite_m_prediction(m, vertical_line(1.0), 20, 0.1, TVariant::corrected) ==
          doctest::Approx(0.019490020185664).epsilon(1e-6));
    CHECK(finite_m_prediction(m, vertical_line(2.0), 20, 0.1, TVariant::corrected) ==
          doctest::Approx(0.21076666235936).epsilon(1e-6));
}

TEST_CASE("prediction is mirror symmetric") {
    GmmModel m = reference_gmm();
    GmmModel mirror = m;
    for (auto& c : mirror.components) c.mean = -c.mean;
    Hyperplane h = vertical_line(0.7);
    Hyperplane reflected;
    reflected.normal = v2(-1.0, 0.0);
    reflected.offset = 0.7;
    CHECK(finite_m_prediction(mirror, reflected, 12, 0.1, TVariant::corrected) ==
          doctest::Approx(finite_m_prediction(m, h, 12, 0.1, TVariant::corrected))
              .epsilon(1e-9));
}

TEST_CASE("prediction under the nonpositive-coefficient variant is refused") {
    GmmModel m = reference_gmm();
    Hyperplane h = vertical_line(0.0);
    CHECK_THROWS_AS(finite_m_prediction(m, h, 1, 0.1, TVariant::printed),
                    VariantInconsistencyError);
    CHECK_THROWS_AS(finite_m_prediction(m, h, 20, 0.1, TVariant::printed),
                    VariantInconsistencyError);
}

TEST_CASE("prediction approaches the limit from below, with a stubborn gap") {
    GmmModel m = reference_gmm();
    Hyperplane h = vertical_line(0.0);
    double sup = limit_bandwidth(m, h);
    CHECK(sup == doctest::Approx(0.13278817607283055).epsilon(1e-10));

    double prev = 0.0;
    for (int order : {10, 20, 30, 60, 120, 200}) {
        double p = finite_m_prediction(m, h, order, 0.1, TVariant::corrected);
        REQUIRE(p > prev);
        REQUIRE(p < sup);
        prev = p;
    }
    // the residual gap at order 200 sits near 4.2 percent, shrinking like
    // log(m)/m rather than vanishing by m = 200
    double gap = 1.0 - prev / sup;
    CHECK(gap > 0.0415);
    CHECK(gap < 0.0425);
}

TEST_CASE("bernstein bound saturates at two and decays with n") {
    CHECK(bernstein_tail_bound(2500, 20, 0.1, 2, 1.0, 0.1) == doctest::Approx(2.0).epsilon(1e-9));
    // epsilon -> 0 approaches exp(0); zero itself is rejected
    CHECK(bernstein_tail_bound(1000, 2, 0.3, 2, 0.5, 1e-15) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(bernstein_tail_bound(1000, 2, 0.3, 2, 0.5, 0.0), InvalidInputError);

    // monotone nonincreasing in epsilon
    double prev = 2.0;
    for (double eps : {0.001, 0.01, 0.05, 0.1, 0.5, 1.0}) {
        double b = bernstein_tail_bound(100000, 2, 0.3, 2, 0.5, eps);
        REQUIRE(b <= prev + 1e-15);
        prev = b;
    }

    // decays with n
    double large = bernstein_tail_bound(10000, 1, 0.3, 1, 0.5, 0.2);
    CHECK(large < 1e-8);
    double after = bernstein_tail_bound(20000, 1, 0.3, 1, 0.5, 0.2);
    CHECK(after > 0.0);
    CHECK(after < large);
}

TEST_CASE("bernstein log-space path matches the direct formula") {
    // parameters chosen so the direct double evaluation does not underflow
    CHECK(bernstein_tail_bound(100000, 2, 0.3, 2, 0.7, 0.03) ==
          doctest::Approx(1.2048395250574826).epsilon(1e-12));

    // stays finite and positive far beyond where sigma^(md+1) underflows
    for (int order : {40, 70, 100}) {
        double b = bernstein_tail_bound(5000, order, 0.1, 2, 1.0, 0.1);
        REQUIRE(std::isfinite(b));
        REQUIRE(b > 0.0);
        REQUIRE(b <= 2.0);
    }
}

TEST_CASE("bernstein with too few samples per block") {
    // fewer than one block: the bound degenerates to the trivial two
    CHECK(bernstein_tail_bound(2, 20, 0.1, 2, 1.0, 0.5) == 2.0);
}

TEST_CASE("schedule examples and invariants") {
    Schedule s = schedule(2500, 0.5, 0.75, 2);
    CHECK(s.m == 5);
    CHECK(s.sigma == doctest::Approx(0.70072591836804393).epsilon(1e-15));
    CHECK(s.n == 2500);
    CHECK(s.x == 0.5);
    CHECK(s.y == 0.75);

    for (long n : {3L, 10L, 100L, 10000L, 1000000L}) {
        for (double x : {0.2, 0.5, 0.9}) {
            for (double y : {0.55, 0.75, 0.95}) {
                Schedule sc = schedule(n, x, y, 2);
                REQUIRE(sc.m >= 1);
                REQUIRE(sc.m == std::lround(std::pow(std::log(double(n)), y)));
                // sigma^(md+1) = n^-x exactly up to rounding
                REQUIRE(std::pow(sc.sigma, sc.m * 2 + 1) ==
                        doctest::Approx(std::pow(double(n), -x)).epsilon(1e-12));
            }
        }
    }
    // tiny n clamps the order at one
    CHECK(schedule(3, 0.5, 0.51, 2).m == 1);
}

TEST_CASE("schedule rejects out-of-range exponents") {
    CHECK_THROWS_AS(schedule(2, 0.5, 0.75, 2), InvalidInputError);
    CHECK_THROWS_AS(schedule(2500, 0.0, 0.75, 2), InvalidInputError);
    CHECK_THROWS_AS(schedule(2500, 1.0, 0.75, 2), InvalidInputError);
    CHECK_THROWS_AS(schedule(2500, 0.5, 0.5, 2), InvalidInputError);
    CHECK_THROWS_AS(schedule(2500, 0.5, 1.0, 2), InvalidInputError);
}

TEST_CASE("condition report quantities") {
    ConditionReport r = check_conditions(2500, 0.1, 20, 2);
    CHECK(r.quantity_c3a == doctest::Approx(0.008).epsilon(1e-15));
    CHECK(r.quantity_c3b == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(r.quantity_c4 == doctest::Approx(1.1220184543019634).epsilon(1e-14));
    CHECK(r.quantity_c5 == doctest::Approx(1.096244599510337e-29).epsilon(1e-12));
    CHECK(r.strong_c5 == doctest::Approx(1.401122383469164e-30).epsilon(1e-12));
    CHECK(r.log_quantity_c5 == doctest::Approx(std::log(1.096244599510337e-29)).epsilon(1e-12));

    // unit kernel width flattens the fourth quantity
    CHECK(check_conditions(2500, 1.0, 20, 2).quantity_c4 == 1.0);

    // log forms stay finite where the raw ones underflow
    ConditionReport deep = check_conditions(2500, 0.1, 300, 2);
    CHECK(deep.quantity_c5 == 0.0);
    CHECK(std::isfinite(deep.log_quantity_c5));
    CHECK(std::isfinite(deep.log_strong_c5));
    CHECK(deep.log_strong_c5 < deep.log_quantity_c5);

    // the sample-complexity quantity collapses as the order grows at small sigma
    double prev = kInf;
    for (int order : {2, 5, 10, 20, 40}) {
        double lg = check_conditions(2500, 0.1, order, 2).log_quantity_c5;
        REQUIRE(lg < prev);
        prev = lg;
    }
}

TEST_CASE("limit bandwidth equals the boundary supremum") {
    GmmModel m = reference_gmm();
    for (double c : {-2.0, 0.0, 1.0, 2.0}) {
        Hyperplane h = vertical_line(c);
        CHECK(limit_bandwidth(m, h) == sup_on_boundary(m, h));
    }
}
