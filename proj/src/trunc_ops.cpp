#include "csop/trunc_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace csop {

namespace {

void require_positive_size(int n) {
    if (n <= 0) {
        throw std::invalid_argument("section size must be positive");
    }
}

void require_same_size(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("section sizes do not match");
    }
}

void require_block(int k, int n) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("block size must satisfy 1 <= k <= N");
    }
}

}  // namespace

TruncOp composition_matrix(const MoebiusC& phi, int n) {
    require_positive_size(n);
    if (!is_self_map(phi)) {
        throw std::invalid_argument("composition_matrix: phi is not a self-map of the disk");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    m(0, 0) = 1.0;
    if (n == 1) {
        return {m, Exactness::ExactCompression};
    }
    const CoeffVec base = taylor_coeffs(phi, n);
    CoeffVec p = base;
    m.col(1) = p;
    for (int j = 2; j < n; ++j) {
        p = series_mul(p, base);
        m.col(j) = p;
    }
    return {m, Exactness::ExactCompression};
}

TruncOp toeplitz_matrix(const AnalyticWeight& psi, int n) {
    require_positive_size(n);
    const CoeffVec c = taylor_coeffs(psi, n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            m(i, j) = c[i - j];
        }
    }
    return {m, Exactness::ExactCompression};
}

TruncOp weighted_comp_matrix(const AnalyticWeight& psi, const MoebiusC& phi, int n) {
    require_positive_size(n);
    if (!is_self_map(phi)) {
        throw std::invalid_argument(
            "weighted_comp_matrix: phi is not a self-map of the disk");
    }
    const CoeffVec psi_c = taylor_coeffs(psi, n);
    Eigen::MatrixXcd m(n, n);
    m.col(0) = psi_c;
    if (n > 1) {
        const CoeffVec base = taylor_coeffs(phi, n);
        CoeffVec p = base;
        m.col(1) = series_mul(psi_c, p);
        for (int j = 2; j < n; ++j) {
            p = series_mul(p, base);
            m.col(j) = series_mul(psi_c, p);
        }
    }
    return {m, Exactness::ExactCompression};
}

TruncOp adjoint(const TruncOp& t) {
    return {t.mat.adjoint(), t.exactness};
}

TruncOp multiply(const TruncOp& s, const TruncOp& t) {
    require_same_size(s.size(), t.size());
    return {s.mat * t.mat, Exactness::Truncated};
}

ConjLinearOp coeff_conjugation(int n) {
    require_positive_size(n);
    return {Eigen::MatrixXcd::Identity(n, n)};
}

ConjLinearOp matrix_conjugation(Eigen::MatrixXcd basis) {
    if (basis.rows() == 0 || basis.rows() != basis.cols()) {
        throw std::invalid_argument("matrix_conjugation: basis must be square");
    }
    return {std::move(basis)};
}

ConjLinearOp compose_conjugation(const ConjLinearOp& c, const TruncOp& u) {
    require_same_size(c.size(), u.size());
    return {c.basis * u.mat.conjugate()};
}

TruncOp rotation_unitary(double theta, int n) {
    require_positive_size(n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        m(j, j) = std::polar(1.0, theta * j);
    }
    return {m, Exactness::ExactCompression};
}

double max_abs(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return m.cwiseAbs().maxCoeff();
}

double leading_max_abs(const Eigen::MatrixXcd& m, int k) {
    require_block(k, static_cast<int>(std::min(m.rows(), m.cols())));
    return max_abs(m.topLeftCorner(k, k));
}

double symmetry_residual(const TruncOp& t, const ConjLinearOp& c, int k) {
    require_same_size(t.size(), c.size());
    require_block(k, t.size());
    // Only the leading k x k block of T B - B T^t is needed; partial
    // products keep this O(k^2 N) instead of O(N^3).
    const auto tk = t.mat.topRows(k);
    const Eigen::MatrixXcd r =
        tk * c.basis.leftCols(k) - c.basis.topRows(k) * tk.transpose();
    return max_abs(r);
}

ConjugationDefect conjugation_defect(const ConjLinearOp& c, int k) {
    require_block(k, c.size());
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(k, k);
    const auto cols = c.basis.leftCols(k);
    const double iso = max_abs(cols.adjoint() * cols - id);
    const double invol =
        max_abs(c.basis.topRows(k) * c.basis.conjugate().leftCols(k) - id);
    return {iso, invol};
}

BlockDecomposition block_decompose(const TruncOp& t) {
    const int n = t.size();
    if (n < 2) {
        throw std::invalid_argument("block_decompose: need N >= 2");
    }
    double br = 0.0;
    for (int j = 1; j < n; ++j) {
        br = std::max(br, std::abs(t.mat(0, j)));
        br = std::max(br, std::abs(t.mat(j, 0)));
    }
    return {t.mat(0, 0), t.mat.bottomRightCorner(n - 1, n - 1), br, br == 0.0};
}

}  // namespace csop
