#include "csop/trunc_ops.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"

using csop::Cplx;
using csop::MoebiusC;
using csop::SymbolParams;
using csop::TruncOp;

namespace {
const SymbolParams kP{Cplx(0.45, 0.2), Cplx(0.35)};
}  // namespace

TEST_CASE("composition matrix basics") {
    const TruncOp id = csop::composition_matrix(MoebiusC::identity(), 8);
    CHECK(csop::max_abs(id.mat - Eigen::MatrixXcd::Identity(8, 8)) == 0.0);
    CHECK(id.exactness == csop::Exactness::ExactCompression);

    // z -> a z: columns a^j e_j, dyadic a keeps everything exact.
    const TruncOp dl = csop::composition_matrix(MoebiusC(Cplx(0.5), Cplx(0), Cplx(0), Cplx(1)), 8);
    for (int j = 0; j < 8; ++j) {
        CHECK(dl.mat(j, j) == Cplx(std::pow(0.5, j)));
    }
    CHECK(std::abs(dl.mat.sum() - dl.mat.diagonal().sum()) == 0.0);

    // sigma = z/2 + 1/4: column j expands sigma^j, all entries dyadic.
    const TruncOp sg =
        csop::composition_matrix(MoebiusC(Cplx(0.5), Cplx(0.25), Cplx(0), Cplx(1)), 3);
    Eigen::MatrixXcd want(3, 3);
    want << Cplx(1), Cplx(0.25), Cplx(0.0625),
            Cplx(0), Cplx(0.5), Cplx(0.25),
            Cplx(0), Cplx(0), Cplx(0.25);
    CHECK((sg.mat.array() == want.array()).all());

    // A constant symbol compresses to powers of the value in row 0.
    const TruncOp cn =
        csop::composition_matrix(MoebiusC(Cplx(0), Cplx(0.3), Cplx(0), Cplx(1)), 4);
    Cplx acc(1);
    for (int j = 0; j < 4; ++j) {
        CHECK(cn.mat(0, j) == acc);
        acc *= Cplx(0.3);
    }
    CHECK(csop::max_abs(cn.mat.bottomRows(3)) == 0.0);

    CHECK_THROWS_AS(csop::composition_matrix(MoebiusC(Cplx(2), Cplx(0), Cplx(0), Cplx(1)), 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(csop::composition_matrix(MoebiusC::identity(), 0),
                    std::invalid_argument);
}

TEST_CASE("toeplitz matrix holds the symbol coefficients on diagonals") {
    const csop::AnalyticWeight w(Cplx(1), Cplx(0.5, 0.25), Cplx(1), Cplx(-0.5));
    const TruncOp t = csop::toeplitz_matrix(w, 12);
    const Eigen::VectorXcd c = csop::taylor_coeffs(w, 12);
    for (int i = 0; i < 12; ++i) {
        for (int j = 0; j < 12; ++j) {
            CHECK(t.mat(i, j) == (i >= j ? c(i - j) : Cplx(0)));
        }
    }

    // psi = 1 is the identity section; psi = 1 - z drops to the two diagonals.
    const TruncOp one = csop::toeplitz_matrix(csop::AnalyticWeight::constant(Cplx(1)), 5);
    CHECK(csop::max_abs(one.mat - Eigen::MatrixXcd::Identity(5, 5)) == 0.0);
    const TruncOp dz =
        csop::toeplitz_matrix(csop::AnalyticWeight::linear(Cplx(1), Cplx(-1)), 2);
    Eigen::MatrixXcd want(2, 2);
    want << Cplx(1), Cplx(0), Cplx(-1), Cplx(1);
    CHECK((dz.mat.array() == want.array()).all());
}

TEST_CASE("weighted section equals the Toeplitz-times-composition product bit for bit") {
    const csop::WeightedSymbol ws = csop::phi_psi_summary(kP);
    const int n = 48;
    const TruncOp w = csop::weighted_comp_matrix(ws.psi, ws.phi, n);
    const TruncOp t = csop::toeplitz_matrix(ws.psi, n);
    const TruncOp c = csop::composition_matrix(ws.phi, n);

    // Lower-triangular Toeplitz times composition: row n of the product only
    // reads coefficients 0..n, so the finite product reproduces the exact
    // compression. Accumulating over m downwards adds the structural zeros
    // first and then matches the convolution order used by the builder.
    Eigen::MatrixXcd ref(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Cplx acc(0);
            for (int m = n - 1; m >= 0; --m) {
                acc += t.mat(i, m) * c.mat(m, j);
            }
            ref(i, j) = acc;
        }
    }
    CHECK((w.mat.array() == ref.array()).all());
    CHECK(w.exactness == csop::Exactness::ExactCompression);

    // Column 0 is the weight itself.
    CHECK((w.mat.col(0).array() == csop::taylor_coeffs(ws.psi, n).array()).all());
}

TEST_CASE("weighted section degenerates to its factors") {
    const csop::WeightedSymbol ws = csop::phi_psi_summary(kP);

    // psi = 1 reproduces the plain composition section.
    const csop::AnalyticWeight one = csop::AnalyticWeight::constant(Cplx(1));
    CHECK((csop::weighted_comp_matrix(one, ws.phi, 16).mat.array() ==
           csop::composition_matrix(ws.phi, 16).mat.array())
              .all());

    // phi = z reproduces the plain Toeplitz section.
    CHECK((csop::weighted_comp_matrix(ws.psi, MoebiusC::identity(), 16).mat.array() ==
           csop::toeplitz_matrix(ws.psi, 16).mat.array())
              .all());

    // a = b = 1/2, N = 2: W = [[1, 0], [1/4, 1/2]].
    const csop::WeightedSymbol wh = csop::phi_psi_summary({Cplx(0.5), Cplx(0.5)});
    const TruncOp w2 = csop::weighted_comp_matrix(wh.psi, wh.phi, 2);
    Eigen::MatrixXcd want(2, 2);
    want << Cplx(1), Cplx(0), Cplx(0.25), Cplx(0.5);
    CHECK((w2.mat.array() == want.array()).all());
}

TEST_CASE("sections are prefix-stable under truncation size") {
    const csop::WeightedSymbol ws = csop::phi_psi_adjoint(kP);
    const TruncOp big = csop::weighted_comp_matrix(ws.psi, ws.phi, 64);
    const TruncOp small = csop::weighted_comp_matrix(ws.psi, ws.phi, 24);
    CHECK((big.mat.topLeftCorner(24, 24).array() == small.mat.array()).all());

    const TruncOp cb = csop::composition_matrix(csop::sigma_map(kP), 64);
    const TruncOp cs = csop::composition_matrix(csop::sigma_map(kP), 24);
    CHECK((cb.mat.topLeftCorner(24, 24).array() == cs.mat.array()).all());
}

TEST_CASE("adjoint and multiply propagate exactness") {
    const TruncOp c = csop::composition_matrix(csop::sigma_map(kP), 16);
    const TruncOp a = csop::adjoint(c);
    CHECK(a.exactness == csop::Exactness::ExactCompression);
    CHECK((a.mat.array() == c.mat.adjoint().array()).all());

    const TruncOp p = csop::multiply(a, c);
    CHECK(p.exactness == csop::Exactness::Truncated);
    CHECK(csop::max_abs(p.mat - a.mat * c.mat) == 0.0);
    CHECK_THROWS_AS(csop::multiply(a, csop::composition_matrix(csop::sigma_map(kP), 8)),
                    std::invalid_argument);

    // Adjoint of diag(1, a, a^2, ...) conjugates every entry.
    const TruncOp dg =
        csop::composition_matrix(MoebiusC(Cplx(0.3, 0.4), Cplx(0), Cplx(0), Cplx(1)), 5);
    const TruncOp dga = csop::adjoint(dg);
    for (int k = 0; k < 5; ++k) {
        CHECK(dga.mat(k, k) == std::conj(dg.mat(k, k)));
    }
    CHECK(std::abs(dga.mat.sum() - dga.mat.diagonal().sum()) == 0.0);
}

TEST_CASE("conjugations") {
    const csop::ConjLinearOp j = csop::coeff_conjugation(4);
    Eigen::VectorXcd v(4);
    v << Cplx(1, 2), Cplx(-3, 0.5), Cplx(0, -1), Cplx(2, 0);
    CHECK((j.apply(v).array() == v.conjugate().array()).all());

    const TruncOp u = csop::rotation_unitary(0.7, 4);
    const csop::ConjLinearOp cu = csop::compose_conjugation(j, u);
    // (J U) v = conj(U v) = conj(U) conj(v): the basis picks up conj(U).
    CHECK(csop::max_abs(cu.basis - u.mat.conjugate()) == 0.0);
    CHECK(csop::max_abs(cu.apply(v) - (u.mat * v).conjugate()) == 0.0);

    // Composing with the identity section leaves J untouched.
    const csop::ConjLinearOp ci =
        csop::compose_conjugation(j, csop::composition_matrix(MoebiusC::identity(), 4));
    CHECK(csop::max_abs(ci.basis - Eigen::MatrixXcd::Identity(4, 4)) == 0.0);

    // At b = 0 the involution section is diag((-1)^n), so J U has that basis.
    const csop::WeightedSymbol t0 = csop::tau_zeta(0.0);
    const csop::ConjLinearOp c0 =
        csop::compose_conjugation(j, csop::weighted_comp_matrix(t0.psi, t0.phi, 4));
    Eigen::MatrixXcd alt = Eigen::MatrixXcd::Zero(4, 4);
    for (int k = 0; k < 4; ++k) {
        alt(k, k) = Cplx(k % 2 == 0 ? 1.0 : -1.0);
    }
    CHECK(csop::max_abs(c0.basis - alt) == 0.0);
    CHECK((c0.apply(v).array() == (alt * v.conjugate()).array()).all());

    CHECK_THROWS_AS(csop::matrix_conjugation(Eigen::MatrixXcd::Zero(3, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(csop::coeff_conjugation(0), std::invalid_argument);
}

TEST_CASE("rotation unitary") {
    const double th = 1.3;
    const TruncOp u = csop::rotation_unitary(th, 6);
    for (int k = 0; k < 6; ++k) {
        CHECK(u.mat(k, k) == std::polar(1.0, th * k));
    }
    CHECK(csop::max_abs(u.mat.adjoint() * u.mat - Eigen::MatrixXcd::Identity(6, 6)) <
          1e-15);

    // theta = 0 is the identity exactly; theta = pi alternates signs.
    CHECK(csop::max_abs(csop::rotation_unitary(0.0, 5).mat -
                        Eigen::MatrixXcd::Identity(5, 5)) == 0.0);
    Eigen::MatrixXcd alt = Eigen::MatrixXcd::Zero(3, 3);
    alt.diagonal() << Cplx(1), Cplx(-1), Cplx(1);
    CHECK(csop::max_abs(csop::rotation_unitary(std::numbers::pi, 3).mat - alt) < 1e-15);
}

TEST_CASE("residual helpers") {
    Eigen::MatrixXcd m(2, 2);
    m << Cplx(0, 1), Cplx(-3, 4), Cplx(0.5), Cplx(0);
    CHECK(csop::max_abs(m) == 5.0);
    CHECK(csop::leading_max_abs(m, 1) == 1.0);

    // Diagonal sections are J-symmetric: T B - B T^t vanishes identically.
    const TruncOp u = csop::rotation_unitary(0.4, 8);
    CHECK(csop::symmetry_residual(u, csop::coeff_conjugation(8), 8) == 0.0);

    // The shift is not: S - S^t has unit entries.
    const csop::AnalyticWeight zw = csop::AnalyticWeight::linear(Cplx(0), Cplx(1));
    const TruncOp s = csop::toeplitz_matrix(zw, 8);
    CHECK(csop::symmetry_residual(s, csop::coeff_conjugation(8), 4) == 1.0);

    const csop::ConjugationDefect jd = csop::conjugation_defect(csop::coeff_conjugation(8), 8);
    CHECK(jd.isometry == 0.0);
    CHECK(jd.involution == 0.0);

    const csop::ConjugationDefect sd =
        csop::conjugation_defect(csop::matrix_conjugation(2.0 * Eigen::MatrixXcd::Identity(4, 4)), 4);
    CHECK(sd.isometry == 3.0);
    CHECK(sd.involution == 3.0);
}

TEST_CASE("disk involution section is a self-adjoint near-involution") {
    const csop::WeightedSymbol tz = csop::tau_zeta(0.4);
    const TruncOp u = csop::weighted_comp_matrix(tz.psi, tz.phi, 64);
    CHECK(csop::max_abs(u.mat - u.mat.adjoint()) < 1e-12);
    const csop::ConjugationDefect d =
        csop::conjugation_defect(csop::matrix_conjugation(u.mat.conjugate()), 8);
    CHECK(d.isometry < 1e-10);
    CHECK(d.involution < 1e-10);
}

TEST_CASE("block decomposition") {
    Eigen::MatrixXcd m(3, 3);
    m << Cplx(1), Cplx(0), Cplx(0), Cplx(0), Cplx(5), Cplx(6), Cplx(0), Cplx(7), Cplx(8);
    csop::BlockDecomposition bd = csop::block_decompose(TruncOp{m, csop::Exactness::ExactCompression});
    CHECK(bd.clean);
    CHECK(bd.corner == Cplx(1));
    CHECK(bd.boundary_residual == 0.0);
    CHECK(csop::max_abs(bd.lower - m.bottomRightCorner(2, 2)) == 0.0);

    m(0, 2) = Cplx(0, 0.25);
    bd = csop::block_decompose(TruncOp{m, csop::Exactness::ExactCompression});
    CHECK(!bd.clean);
    CHECK(bd.boundary_residual == 0.25);

    // phi = az splits into corner 1 and the diagonal tail diag(a, a^2, ...).
    const csop::BlockDecomposition db = csop::block_decompose(
        csop::composition_matrix(MoebiusC(Cplx(0.5), Cplx(0), Cplx(0), Cplx(1)), 4));
    CHECK(db.clean);
    CHECK(db.corner == Cplx(1));
    for (int k = 1; k < 4; ++k) {
        CHECK(db.lower(k - 1, k - 1) == Cplx(std::pow(0.5, k)));
    }
    CHECK(std::abs(db.lower.sum() - db.lower.diagonal().sum()) == 0.0);

    const csop::BlockDecomposition di =
        csop::block_decompose(csop::composition_matrix(MoebiusC::identity(), 4));
    CHECK(di.clean);
    CHECK(di.corner == Cplx(1));
    CHECK(csop::max_abs(di.lower - Eigen::MatrixXcd::Identity(3, 3)) == 0.0);

    CHECK_THROWS_AS(csop::block_decompose(TruncOp{Eigen::MatrixXcd::Identity(1, 1),
                                                  csop::Exactness::ExactCompression}),
                    std::invalid_argument);
}
