#include "csop/exact_chain.hpp"

#include <stdexcept>
#include <vector>

namespace csop {

bool ExactParams::admissible() const {
    if (a.norm() > 1) {
        return false;
    }
    if (b * b >= 1) {
        return false;
    }
    const GaussianRational tail = GaussianRational(b) * (GaussianRational(1) - a);
    return sqrt_sum_within(a.norm(), tail.norm(), Rational(1));
}

MoebiusQ sigma_map_exact(const ExactParams& p) {
    const GaussianRational beta = GaussianRational(p.b) * (GaussianRational(1) - p.a);
    return MoebiusQ(p.a, beta, GaussianRational(0), GaussianRational(1));
}

MoebiusQ phi_adjoint_exact(const ExactParams& p) {
    const GaussianRational beta_bar =
        (GaussianRational(p.b) * (GaussianRational(1) - p.a)).conj();
    return MoebiusQ(p.a.conj(), GaussianRational(0), -beta_bar, GaussianRational(1));
}

MoebiusQ tau_map_exact(const Rational& b) {
    if (!(b * b < 1)) {
        throw std::invalid_argument("tau_map_exact: b must lie in (-1, 1)");
    }
    return MoebiusQ(GaussianRational(-1), GaussianRational(b), GaussianRational(-b),
                    GaussianRational(1));
}

SurdRatFunc zeta_ratfunc(const Rational& b) {
    if (!(b * b < 1)) {
        throw std::invalid_argument("zeta_ratfunc: b must lie in (-1, 1)");
    }
    return SurdRatFunc(RationalPoly::constant(GaussianRational(1)),
                       RationalPoly::linear(GaussianRational(1), GaussianRational(-b)),
                       1, 1 - b * b);
}

SurdRatFunc psi_adjoint_ratfunc(const ExactParams& p) {
    const GaussianRational beta_bar =
        (GaussianRational(p.b) * (GaussianRational(1) - p.a)).conj();
    return SurdRatFunc(RationalPoly::constant(GaussianRational(1)),
                       RationalPoly::linear(GaussianRational(1), -beta_bar));
}

SurdRatFunc substitute_moebius(const SurdRatFunc& f, const MoebiusQ& m) {
    if (f.is_zero()) {
        return f;
    }
    const RationalPoly zn = RationalPoly::linear(m.b, m.a);
    const RationalPoly zd = RationalPoly::linear(m.d, m.c);
    const int deg = std::max(f.num().degree(), f.den().degree());

    // Powers zn^k and zd^k for k = 0..deg.
    std::vector<RationalPoly> pn(deg + 1), pd(deg + 1);
    pn[0] = RationalPoly::constant(GaussianRational(1));
    pd[0] = pn[0];
    for (int k = 1; k <= deg; ++k) {
        pn[k] = pn[k - 1] * zn;
        pd[k] = pd[k - 1] * zd;
    }

    // p(m(z)) cleared of denominators: sum_k p_k zn^k zd^(deg-k).
    const auto homogenize = [&](const RationalPoly& poly) {
        RationalPoly acc;
        for (int k = 0; k <= deg; ++k) {
            acc = acc + poly.coeff(k) * (pn[k] * pd[deg - k]);
        }
        return acc;
    };

    RationalPoly num = homogenize(f.num());
    RationalPoly den = homogenize(f.den());
    if (den.is_zero()) {
        throw std::domain_error("substitute_moebius: denominator vanishes identically");
    }
    return SurdRatFunc(std::move(num), std::move(den), f.surd_power(), f.surd_sq());
}

bool verify_symbol_chain(const ExactParams& p) {
    const MoebiusQ tau = tau_map_exact(p.b);
    const MoebiusQ phi_tilde = reflect_conj(phi_adjoint_exact(p));
    const MoebiusQ chain = compose(tau, compose(phi_tilde, tau));
    return equal_as_map(chain, sigma_map_exact(p));
}

std::array<SurdRatFunc, 3> weight_product_factors(const ExactParams& p,
                                                  const SurdRatFunc& zeta) {
    const MoebiusQ tau = tau_map_exact(p.b);
    const MoebiusQ phi_tilde = reflect_conj(phi_adjoint_exact(p));
    const SurdRatFunc f1 = zeta.conj_coeffs();
    const SurdRatFunc f2 =
        substitute_moebius(psi_adjoint_ratfunc(p).conj_coeffs(), tau);
    const SurdRatFunc f3 = substitute_moebius(zeta, compose(phi_tilde, tau));
    return {f1, f2, f3};
}

std::array<SurdRatFunc, 3> weight_product_factors(const ExactParams& p) {
    return weight_product_factors(p, zeta_ratfunc(p.b));
}

bool verify_weight_product(const ExactParams& p, const SurdRatFunc& zeta) {
    const auto f = weight_product_factors(p, zeta);
    return ratfunc_equal(f[0] * f[1] * f[2], SurdRatFunc::one());
}

bool verify_weight_product(const ExactParams& p) {
    return verify_weight_product(p, zeta_ratfunc(p.b));
}

namespace {

// D(z) = (1 - b^2 + a b^2) - a b z.
RationalPoly common_denominator(const ExactParams& p) {
    const GaussianRational one(1);
    const GaussianRational b2(p.b * p.b);
    return RationalPoly::linear(one - b2 + p.a * b2, -(p.a * GaussianRational(p.b)));
}

}  // namespace

MoebiusQ inner_map_target(const ExactParams& p) {
    const RationalPoly d = common_denominator(p);
    const GaussianRational ab = p.a * GaussianRational(p.b);
    return MoebiusQ(-p.a, ab, d.coeff(1), d.coeff(0));
}

SurdRatFunc factor2_target(const ExactParams& p) {
    return SurdRatFunc(RationalPoly::linear(GaussianRational(1), GaussianRational(-p.b)),
                       common_denominator(p));
}

SurdRatFunc factor3_target(const ExactParams& p) {
    return SurdRatFunc(common_denominator(p),
                       RationalPoly::constant(GaussianRational(1 - p.b * p.b)), 1,
                       1 - p.b * p.b);
}

}  // namespace csop
