#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "csop/rational.hpp"

namespace csop {

using Cplx = std::complex<double>;

inline constexpr double kParamSlack = 1e-12;

/// Moebius map z -> (a z + b)/(c z + d), templated over the coefficient
/// field (std::complex<double> for numerics, GaussianRational for exact
/// work). A singular coefficient matrix is allowed and describes a
/// constant map (e.g. the affine symbol with a = 0); only an identically
/// zero denominator is rejected.
template <class K>
struct MoebiusMap {
    K a, b, c, d;

    MoebiusMap(K a_, K b_, K c_, K d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (scalar_is_zero(c) && scalar_is_zero(d)) {
            throw std::invalid_argument("MoebiusMap: denominator is identically zero");
        }
    }

    static MoebiusMap identity() { return MoebiusMap(K(1), K(0), K(0), K(1)); }

    K determinant() const { return a * d - b * c; }

    K operator()(const K& z) const {
        K den = c * z + d;
        if (scalar_is_zero(den)) {
            throw std::domain_error("MoebiusMap: evaluation at a pole");
        }
        return (a * z + b) / den;
    }

    /// Scales coefficients so d == 1, falling back to c == 1 when d == 0.
    MoebiusMap normalized() const {
        K s = scalar_is_zero(d) ? c : d;
        return MoebiusMap(a / s, b / s, c / s, d / s);
    }
};

using MoebiusC = MoebiusMap<Cplx>;
using MoebiusQ = MoebiusMap<GaussianRational>;

/// Composition f . g (apply g first); the coefficient matrices multiply.
template <class K>
MoebiusMap<K> compose(const MoebiusMap<K>& f, const MoebiusMap<K>& g) {
    return MoebiusMap<K>(f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                         f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d);
}

/// The reflected map z -> conj(m(conj z)); conjugates each coefficient.
template <class K>
MoebiusMap<K> reflect_conj(const MoebiusMap<K>& m) {
    return MoebiusMap<K>(conjugate(m.a), conjugate(m.b), conjugate(m.c), conjugate(m.d));
}

namespace detail {
// Two maps agree as functions iff their coefficient vectors are
// proportional, i.e. all six 2x2 minors of the stacked 2x4 matrix vanish.
template <class K>
std::array<K, 6> cross_minors(const MoebiusMap<K>& m1, const MoebiusMap<K>& m2) {
    const std::array<K, 4> u{m1.a, m1.b, m1.c, m1.d};
    const std::array<K, 4> v{m2.a, m2.b, m2.c, m2.d};
    std::array<K, 6> out{K(0), K(0), K(0), K(0), K(0), K(0)};
    size_t k = 0;
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = i + 1; j < 4; ++j) {
            out[k++] = u[i] * v[j] - u[j] * v[i];
        }
    }
    return out;
}
}  // namespace detail

inline bool equal_as_map(const MoebiusQ& m1, const MoebiusQ& m2) {
    for (const auto& minor : detail::cross_minors(m1, m2)) {
        if (!minor.is_zero()) {
            return false;
        }
    }
    return true;
}

inline bool equal_as_map(const MoebiusC& m1, const MoebiusC& m2, double tol = 1e-10) {
    double s1 = 0.0, s2 = 0.0;
    for (const Cplx& x : {m1.a, m1.b, m1.c, m1.d}) {
        s1 = std::max(s1, std::abs(x));
    }
    for (const Cplx& x : {m2.a, m2.b, m2.c, m2.d}) {
        s2 = std::max(s2, std::abs(x));
    }
    const double scale = std::max(s1 * s2, 1e-300);
    for (const auto& minor : detail::cross_minors(m1, m2)) {
        if (std::abs(minor) > tol * scale) {
            return false;
        }
    }
    return true;
}

/// Image of the unit disk under a Moebius map with |d| != |c|: a disk with
///   center = (b conj(d) - a conj(c)) / (|d|^2 - |c|^2),
///   radius = |ad - bc| / | |d|^2 - |c|^2 |.
struct ImageDisk {
    Cplx center;
    double radius;
};

ImageDisk image_disk(const MoebiusC& m);

/// Whether m maps the closed unit disk into itself. Returns false when
/// |c| == |d| (the image is a half-plane); throws std::domain_error when
/// |d| < |c| (pole inside the disk, so the map is not even analytic there).
bool is_self_map(const MoebiusC& m);
bool is_self_map(const MoebiusQ& m);

/// Parameter pair for the affine symbol family sigma(z) = a z + b(1-a)
/// and its weighted counterparts.
struct SymbolParams {
    Cplx a;
    Cplx b;

    // |a| + |b(1-a)|; the family needs this <= 1 (and |a| <= 1, |b| < 1).
    double admissibility_sum() const {
        return std::abs(a) + std::abs(b * (Cplx(1.0) - a));
    }
    bool admissible() const {
        return std::abs(a) <= 1.0 + kParamSlack && std::abs(b) < 1.0 &&
               admissibility_sum() <= 1.0 + kParamSlack;
    }
};

/// Degree-(1,1) analytic weight s * (num0 + num1 z)/(den0 + den1 z) with an
/// optional real surd prefactor s (used for the zeta weights). The
/// denominator must have no zero in the closed unit disk, i.e. |den1| < |den0|.
struct AnalyticWeight {
    Cplx num0{1.0}, num1{0.0};
    Cplx den0{1.0}, den1{0.0};
    double surd{1.0};

    AnalyticWeight() = default;
    AnalyticWeight(Cplx n0, Cplx n1, Cplx d0, Cplx d1, double s = 1.0)
        : num0(n0), num1(n1), den0(d0), den1(d1), surd(s) {
        if (!(std::abs(den1) < std::abs(den0))) {
            throw std::domain_error("AnalyticWeight: denominator zero in the closed disk");
        }
        if (!(surd > 0.0) || !std::isfinite(surd)) {
            throw std::invalid_argument("AnalyticWeight: prefactor must be positive");
        }
    }

    static AnalyticWeight constant(Cplx v) { return AnalyticWeight(v, 0.0, 1.0, 0.0); }
    // c0 + c1 z
    static AnalyticWeight linear(Cplx c0, Cplx c1) {
        return AnalyticWeight(c0, c1, 1.0, 0.0);
    }

    Cplx eval(Cplx z) const { return surd * (num0 + num1 * z) / (den0 + den1 * z); }
};

struct WeightedSymbol {
    MoebiusC phi;
    AnalyticWeight psi;
};

/// sigma(z) = a z + b(1-a).
MoebiusC sigma_map(const SymbolParams& p);

/// phi(z) = a z / (1 - b(1-a) z), psi(z) = 1 / (1 - b(1-a) z). The weighted
/// operator T_psi C_phi built from this pair is itself complex symmetric.
WeightedSymbol phi_psi_summary(const SymbolParams& p);

/// Same family at the conjugate parameters: phi(z) = conj(a) z / (1 - conj(b(1-a)) z)
/// etc. The weighted operator for this pair equals the adjoint of C_sigma.
WeightedSymbol phi_psi_adjoint(const SymbolParams& p);

/// The disk involution tau(z) = (b - z)/(1 - b z) for real b in (-1,1),
/// together with zeta(z) = sqrt(1-b^2)/(1 - b z) (the normalized reproducing
/// kernel at tau(0)); T_zeta C_tau is a self-adjoint unitary.
WeightedSymbol tau_zeta(double b);

/// Adjoint factorization C_m^* = T_g C_phi T_h^* for a Moebius self-map m:
///   g = 1/(-conj(b) z + conj(d)),  h = c z + d,
///   phi = (conj(a) z - conj(c)) / (-conj(b) z + conj(d)).
struct KreinFactorization {
    AnalyticWeight g;
    AnalyticWeight h;
    MoebiusC phi;
};

KreinFactorization krein_adjoint(const MoebiusC& m);

/// Fixed points of a Moebius map in the extended plane.
struct FixedPointSet {
    bool is_identity{false};
    bool includes_infinity{false};
    std::vector<Cplx> points;  // finite fixed points
};

FixedPointSet fixed_points(const MoebiusC& m);

}  // namespace csop
