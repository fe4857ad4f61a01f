#include "csop/moebius.hpp"

#include <cmath>

namespace csop {

namespace {
constexpr double kSelfMapSlack = 1e-12;
}

ImageDisk image_disk(const MoebiusC& m) {
    const double dd = std::norm(m.d) - std::norm(m.c);
    if (dd == 0.0) {
        throw std::domain_error("image_disk: |c| == |d|, image is a half-plane");
    }
    const Cplx center = (m.b * std::conj(m.d) - m.a * std::conj(m.c)) / dd;
    const double radius = std::abs(m.determinant()) / std::abs(dd);
    return {center, radius};
}

bool is_self_map(const MoebiusC& m) {
    const double dd = std::norm(m.d) - std::norm(m.c);
    if (dd == 0.0) {
        return false;  // image is a half-plane, never inside the disk
    }
    if (dd < 0.0) {
        throw std::domain_error("is_self_map: pole inside the closed unit disk");
    }
    const ImageDisk disk = image_disk(m);
    return std::abs(disk.center) + disk.radius <= 1.0 + kSelfMapSlack;
}

bool is_self_map(const MoebiusQ& m) {
    const Rational dd = m.d.norm() - m.c.norm();
    if (dd == 0) {
        return false;
    }
    if (dd < 0) {
        throw std::domain_error("is_self_map: pole inside the closed unit disk");
    }
    // |center| + radius <= 1 with denominator dd > 0 cleared:
    //   sqrt(|b conj(d) - a conj(c)|^2) + sqrt(|ad - bc|^2) <= dd.
    const GaussianRational center_num = m.b * m.d.conj() - m.a * m.c.conj();
    return sqrt_sum_within(center_num.norm(), m.determinant().norm(), dd);
}

MoebiusC sigma_map(const SymbolParams& p) {
    return MoebiusC(p.a, p.b * (Cplx(1.0) - p.a), Cplx(0.0), Cplx(1.0));
}

WeightedSymbol phi_psi_summary(const SymbolParams& p) {
    const Cplx beta = p.b * (Cplx(1.0) - p.a);
    MoebiusC phi(p.a, Cplx(0.0), -beta, Cplx(1.0));
    AnalyticWeight psi(Cplx(1.0), Cplx(0.0), Cplx(1.0), -beta);
    return {phi, psi};
}

WeightedSymbol phi_psi_adjoint(const SymbolParams& p) {
    const Cplx beta_bar = std::conj(p.b * (Cplx(1.0) - p.a));
    MoebiusC phi(std::conj(p.a), Cplx(0.0), -beta_bar, Cplx(1.0));
    AnalyticWeight psi(Cplx(1.0), Cplx(0.0), Cplx(1.0), -beta_bar);
    return {phi, psi};
}

WeightedSymbol tau_zeta(double b) {
    if (!(std::abs(b) < 1.0)) {
        throw std::invalid_argument("tau_zeta: b must lie in (-1, 1)");
    }
    MoebiusC tau(Cplx(-1.0), Cplx(b), Cplx(-b), Cplx(1.0));
    AnalyticWeight zeta(Cplx(1.0), Cplx(0.0), Cplx(1.0), Cplx(-b),
                        std::sqrt(1.0 - b * b));
    return {tau, zeta};
}

KreinFactorization krein_adjoint(const MoebiusC& m) {
    if (!is_self_map(m)) {
        throw std::invalid_argument("krein_adjoint: symbol is not a self-map of the disk");
    }
    const Cplx ab = std::conj(m.a);
    const Cplx bb = std::conj(m.b);
    const Cplx cb = std::conj(m.c);
    const Cplx db = std::conj(m.d);
    AnalyticWeight g(Cplx(1.0), Cplx(0.0), db, -bb);
    AnalyticWeight h(m.d, m.c, Cplx(1.0), Cplx(0.0));
    MoebiusC phi(ab, -cb, -bb, db);
    return {g, h, phi};
}

FixedPointSet fixed_points(const MoebiusC& m) {
    FixedPointSet out;
    if (m.determinant() == 0.0) {
        // Constant map: the fixed point is its value.
        out.points.push_back(m.c == 0.0 ? m.b / m.d : m.a / m.c);
        return out;
    }
    // Fixed points solve c z^2 + (d - a) z - b = 0.
    const Cplx A = m.c;
    const Cplx B = m.d - m.a;
    const Cplx C = -m.b;
    if (A == 0.0) {
        out.includes_infinity = true;
        if (B == 0.0) {
            if (C == 0.0) {
                out.is_identity = true;  // z + 0, scaled
            }
            // otherwise a translation: infinity is the only fixed point
        } else {
            out.points.push_back(-C / B);
        }
        return out;
    }
    const Cplx disc = std::sqrt(B * B - 4.0 * A * C);
    const Cplx r1 = (-B + disc) / (2.0 * A);
    const Cplx r2 = (-B - disc) / (2.0 * A);
    out.points.push_back(r1);
    if (std::abs(r1 - r2) > 0.0) {
        out.points.push_back(r2);
    }
    return out;
}

}  // namespace csop
