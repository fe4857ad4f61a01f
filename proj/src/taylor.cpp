#include "csop/taylor.hpp"

#include <cmath>
#include <stdexcept>

namespace csop {

CoeffVec series_mul(const CoeffVec& u, const CoeffVec& v) {
    const Eigen::Index n = std::min(u.size(), v.size());
    CoeffVec w(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Cplx acc(0.0, 0.0);
        for (Eigen::Index m = 0; m <= k; ++m) {
            acc += u[m] * v[k - m];
        }
        w[k] = acc;
    }
    return w;
}

namespace {

// Coefficients of (n0 + n1 z)/(d0 + d1 z): matching powers in
// (d0 + d1 z) sum x_k z^k = n0 + n1 z gives
//   x_0 = n0/d0,  x_1 = (n1 - d1 x_0)/d0,  x_k = -(d1/d0) x_{k-1}.
CoeffVec degree_one_ratio_coeffs(Cplx n0, Cplx n1, Cplx d0, Cplx d1, int order) {
    if (order <= 0) {
        throw std::invalid_argument("taylor_coeffs: order must be positive");
    }
    CoeffVec x(order);
    x[0] = n0 / d0;
    if (order > 1) {
        x[1] = (n1 - d1 * x[0]) / d0;
    }
    const Cplx q = -(d1 / d0);
    for (int k = 2; k < order; ++k) {
        x[k] = q * x[k - 1];
    }
    return x;
}

}  // namespace

CoeffVec taylor_coeffs(const MoebiusC& m, int order) {
    if (!(std::abs(m.c) < std::abs(m.d))) {
        throw std::domain_error("taylor_coeffs: pole in the closed unit disk");
    }
    return degree_one_ratio_coeffs(m.b, m.a, m.d, m.c, order);
}

CoeffVec taylor_coeffs(const AnalyticWeight& w, int order) {
    CoeffVec x = degree_one_ratio_coeffs(w.num0, w.num1, w.den0, w.den1, order);
    if (w.surd != 1.0) {
        for (Eigen::Index k = 0; k < x.size(); ++k) {
            x[k] *= w.surd;
        }
    }
    return x;
}

}  // namespace csop
