#pragma once

#include <Eigen/Dense>

#include "csop/moebius.hpp"

namespace csop {

using CoeffVec = Eigen::VectorXcd;

/// Truncated Cauchy product. Entry n is sum_{m=0}^{n} u[m] * v[n-m],
/// accumulated in ascending m; the result length is min(|u|, |v|). Entry n
/// depends only on the length-(n+1) prefixes of u and v, so truncated
/// products of truncated series are prefix-stable.
CoeffVec series_mul(const CoeffVec& u, const CoeffVec& v);

/// First `order` Taylor coefficients of (az+b)/(cz+d) at 0, by the linear
/// recurrence d x_k + c x_{k-1} = 0 (k >= 2). Requires the pole strictly
/// outside the closed unit disk, i.e. |c| < |d|.
CoeffVec taylor_coeffs(const MoebiusC& m, int order);

/// First `order` Taylor coefficients of an analytic weight (denominator
/// zero-free on the closed disk by construction).
CoeffVec taylor_coeffs(const AnalyticWeight& w, int order);

}  // namespace csop
