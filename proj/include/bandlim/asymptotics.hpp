#pragma once

#include "bandlim/density.hpp"
#include "bandlim/types.hpp"

namespace bandlim {

// Alternating-binomial coefficient t(m).
//   printed:   sum_{r=1}^{m-1} C(m-1, r) (-1)^r (sqrt(r+1) - sqrt(r))
//   corrected: the same sum starting at r = 0
// The two differ by exactly 1 (the r = 0 term). The alternating sum cancels
// catastrophically in double precision beyond m ~ 45, so terms are
// accumulated in extended precision scaled with m and rounded once at the
// end.
double t_coefficient(int m, TVariant variant);

// (t(m)/sqrt(2 pi)) * integral of p^(m+1) over the boundary.
double bias_limit(const GmmModel& model, const Hyperplane& plane, int m, TVariant variant);

// sigma^(1/m) * (bias_limit / region_mass)^(1/m); the theoretical finite-m
// counterpart of the empirical bandwidth estimate.
double finite_m_prediction(const GmmModel& model, const Hyperplane& plane, int m, double sigma,
                           TVariant variant);

// The limiting bandwidth: sup of the density on the boundary.
double limit_bandwidth(const GmmModel& model, const Hyperplane& plane);

// 2 exp(-floor(n/(m+1)) sigma^(md+1) eps^2 /
//        (2 C^m E[V] + (2/3)|C^m - sigma^(md+1) E[V]| eps)), C = 2/(2 pi)^(d/2).
// Evaluated in log space; finite for m well beyond 100.
double bernstein_tail_bound(long n, int m, double sigma, int d, double expected_v, double epsilon);

// m = round((ln n)^y) clamped to >= 1, sigma = n^(-x/(m d + 1)).
Schedule schedule(long n, double x, double y, int d);

ConditionReport check_conditions(long n, double sigma, int m, int d);

}  // namespace bandlim
