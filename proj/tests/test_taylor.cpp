#include "csop/taylor.hpp"

#include <cmath>

#include "doctest.h"

using csop::CoeffVec;
using csop::Cplx;
using csop::MoebiusC;

TEST_CASE("series_mul truncated Cauchy product") {
    CoeffVec u(3), v(3);
    u << 1, 1, 1;
    v << 1, 1, 1;
    const CoeffVec w = csop::series_mul(u, v);
    REQUIRE(w.size() == 3);
    CHECK(w(0) == Cplx(1));
    CHECK(w(1) == Cplx(2));
    CHECK(w(2) == Cplx(3));

    CoeffVec s(2);
    s << 2, -1;
    CHECK(csop::series_mul(u, s).size() == 2);
    CHECK(csop::series_mul(u, s)(1) == Cplx(1));
}

TEST_CASE("series_mul is prefix-stable") {
    const int n = 24;
    CoeffVec u(n), v(n);
    for (int i = 0; i < n; ++i) {
        u(i) = Cplx(std::sin(i + 1.0), std::cos(2.0 * i));
        v(i) = Cplx(1.0 / (i + 1.0), std::sin(3.0 * i));
    }
    const CoeffVec full = csop::series_mul(u, v);
    for (const int k : {1, 5, 16}) {
        const CoeffVec part = csop::series_mul(u.head(k), v.head(k));
        // Entry n only reads prefixes of length n+1, so the truncated
        // product reproduces the leading entries bit for bit.
        CHECK((part.array() == full.head(k).array()).all());
    }
}

TEST_CASE("geometric series coefficients are exact") {
    // 1/(1 - z/2): coefficients 2^-k, all dyadic.
    const MoebiusC m(Cplx(0), Cplx(1), Cplx(-0.5), Cplx(1));
    const CoeffVec c = csop::taylor_coeffs(m, 20);
    for (int k = 0; k < 20; ++k) {
        CHECK(c(k) == Cplx(std::pow(0.5, k)));
    }
}

TEST_CASE("constant map expands to its value") {
    const CoeffVec c =
        csop::taylor_coeffs(MoebiusC(Cplx(0), Cplx(0.3), Cplx(0), Cplx(1)), 8);
    CHECK(c(0) == Cplx(0.3));
    for (int k = 1; k < 8; ++k) {
        CHECK(c(k) == Cplx(0));
    }
}

TEST_CASE("first coefficients of a generic map") {
    // (az+b)/(cz+d): x0 = b/d, x1 = (a - c x0)/d, x_k = -(c/d) x_{k-1}.
    const MoebiusC m(Cplx(0.3, 0.1), Cplx(0.25), Cplx(-0.2, 0.05), Cplx(1));
    const CoeffVec c = csop::taylor_coeffs(m, 6);
    CHECK(c(0) == Cplx(0.25));
    CHECK(std::abs(c(1) - (Cplx(0.3, 0.1) - Cplx(-0.2, 0.05) * Cplx(0.25))) < 1e-16);
    for (int k = 2; k < 6; ++k) {
        CHECK(std::abs(c(k) - (-Cplx(-0.2, 0.05)) * c(k - 1)) < 1e-16);
    }
    // Sanity: the truncated series evaluates close to the map well inside
    // the disk of convergence.
    const Cplx z(0.2, 0.1);
    Cplx acc(0);
    const CoeffVec full = csop::taylor_coeffs(m, 64);
    for (int k = 63; k >= 0; --k) {
        acc = acc * z + full(k);
    }
    CHECK(std::abs(acc - m(z)) < 1e-14);
}

TEST_CASE("taylor guards") {
    CHECK_THROWS_AS(csop::taylor_coeffs(MoebiusC(Cplx(1), Cplx(0), Cplx(1), Cplx(0.5)), 4),
                    std::domain_error);
    CHECK_THROWS_AS(csop::taylor_coeffs(MoebiusC::identity(), 0), std::invalid_argument);
    CHECK_THROWS_AS(csop::taylor_coeffs(MoebiusC::identity(), -3), std::invalid_argument);
}

TEST_CASE("weight coefficients carry the surd prefactor") {
    // zeta at b = 1/2: coefficients sqrt(3)/2 * 2^-k.
    const csop::WeightedSymbol tz = csop::tau_zeta(0.5);
    const CoeffVec c = csop::taylor_coeffs(tz.psi, 16);
    const double s = std::sqrt(0.75);
    for (int k = 0; k < 16; ++k) {
        CHECK(c(k) == Cplx(s * std::pow(0.5, k)));
    }

    const CoeffVec lin = csop::taylor_coeffs(csop::AnalyticWeight::linear(Cplx(2), Cplx(3)), 5);
    CHECK(lin(0) == Cplx(2));
    CHECK(lin(1) == Cplx(3));
    CHECK(lin(2) == Cplx(0));
}
