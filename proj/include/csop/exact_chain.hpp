#pragma once

#include <array>

#include "csop/moebius.hpp"
#include "csop/ratfunc.hpp"

namespace csop {

/// Exact symbol parameters: a Gaussian rational, b rational and real.
struct ExactParams {
    GaussianRational a;
    Rational b;

    /// |a| <= 1, |b| < 1 and |a| + |b(1-a)| <= 1, decided exactly.
    bool admissible() const;
};

/// sigma(z) = a z + b(1-a).
MoebiusQ sigma_map_exact(const ExactParams& p);

/// phi(z) = conj(a) z / (1 - b(1-conj(a)) z), the adjoint-side symbol.
MoebiusQ phi_adjoint_exact(const ExactParams& p);

/// The disk involution tau(z) = (b - z)/(1 - b z).
MoebiusQ tau_map_exact(const Rational& b);

/// zeta(z) = s/(1 - b z) with the tracked surd s = sqrt(1-b^2).
SurdRatFunc zeta_ratfunc(const Rational& b);

/// psi(z) = 1 / (1 - b(1-conj(a)) z), the adjoint-side weight.
SurdRatFunc psi_adjoint_ratfunc(const ExactParams& p);

/// Substitutes a Moebius map into a rational function by homogenizing
/// numerator and denominator to a common degree.
SurdRatFunc substitute_moebius(const SurdRatFunc& f, const MoebiusQ& m);

/// The symbol identity behind the conjugation argument:
/// tau . reflect_conj(phi) . tau == sigma, exactly as maps.
bool verify_symbol_chain(const ExactParams& p);

/// The weight factors collected when moving the candidate conjugation across
/// the weighted operator:
///   F1(z) = conj(zeta(conj z)),
///   F2(z) = conj(psi(tau(conj z))),
///   F3(z) = zeta(conj(phi(tau(conj z)))).
/// Their product must collapse to the constant 1. The second overload swaps
/// in a replacement for zeta (used by the perturbed negative control).
std::array<SurdRatFunc, 3> weight_product_factors(const ExactParams& p);
std::array<SurdRatFunc, 3> weight_product_factors(const ExactParams& p,
                                                  const SurdRatFunc& zeta);

bool verify_weight_product(const ExactParams& p);
bool verify_weight_product(const ExactParams& p, const SurdRatFunc& zeta);

/// Closed forms of the intermediate quantities, restated coefficientwise;
/// used as independent targets by the symbolic checks. With
/// D(z) = (1 - b^2 + a b^2) - a b z:
///   inner map  (phi-reflected after tau) = (a b - a z)/D(z),
///   factor 2 = (1 - b z)/D(z),
///   factor 3 = s D(z)/(1 - b^2).
MoebiusQ inner_map_target(const ExactParams& p);
SurdRatFunc factor2_target(const ExactParams& p);
SurdRatFunc factor3_target(const ExactParams& p);

}  // namespace csop
