#pragma once

#include <Eigen/Dense>

#include "csop/moebius.hpp"
#include "csop/taylor.hpp"

namespace csop {

/// Whether the stored N x N section agrees entrywise with the compression
/// P_N T P_N of the underlying infinite operator. All matrix builders below
/// produce exact compressions (Taylor prefixes are truncation-stable);
/// products of sections are generally not.
enum class Exactness { ExactCompression, Truncated };

/// Finite section of an operator on H^2 in the monomial basis.
struct TruncOp {
    Eigen::MatrixXcd mat;
    Exactness exactness{Exactness::ExactCompression};

    int size() const { return static_cast<int>(mat.rows()); }
};

/// Conjugate-linear operator v -> B * conj(v). The coefficient conjugation J
/// has B = I; conjugations built from unitaries carry the unitary inside B.
struct ConjLinearOp {
    Eigen::MatrixXcd basis;

    int size() const { return static_cast<int>(basis.rows()); }
    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
        return basis * v.conjugate();
    }
};

/// Section of the composition operator C_phi f = f . phi; column j holds the
/// first N Taylor coefficients of phi^j. Requires phi to map the closed disk
/// into itself.
TruncOp composition_matrix(const MoebiusC& phi, int n);

/// Section of the analytic Toeplitz operator T_psi f = psi * f
/// (lower-triangular Toeplitz matrix of the Taylor coefficients of psi).
TruncOp toeplitz_matrix(const AnalyticWeight& psi, int n);

/// Section of the weighted composition operator T_psi C_phi; column j holds
/// the first N coefficients of psi * phi^j.
TruncOp weighted_comp_matrix(const AnalyticWeight& psi, const MoebiusC& phi, int n);

/// Conjugate transpose. Compression commutes with adjoints, so exactness is
/// preserved.
TruncOp adjoint(const TruncOp& t);

/// Plain section product; marked Truncated since compression does not
/// commute with operator products in general.
TruncOp multiply(const TruncOp& s, const TruncOp& t);

/// The coefficient conjugation J, (Jf)(z) = conj(f(conj z)): B = I.
ConjLinearOp coeff_conjugation(int n);

ConjLinearOp matrix_conjugation(Eigen::MatrixXcd basis);

/// The conjugate-linear composition c . u of a conjugation with a linear
/// section u: v -> B_c * conj(U v), i.e. basis B_c * conj(U).
ConjLinearOp compose_conjugation(const ConjLinearOp& c, const TruncOp& u);

/// Diagonal unitary U_theta = diag(e^{i j theta}), the section of
/// f(z) -> f(e^{i theta} z).
TruncOp rotation_unitary(double theta, int n);

double max_abs(const Eigen::MatrixXcd& m);
double leading_max_abs(const Eigen::MatrixXcd& m, int k);

/// Deviation of T from C-symmetry: max-abs over the leading k x k block of
/// T B - B T^t (entrywise transpose, no conjugation). When C is an
/// involutive conjugation this block vanishes in the limit iff T = C T* C
/// on the corresponding modes.
double symmetry_residual(const TruncOp& t, const ConjLinearOp& c, int k);

/// Defect of a candidate conjugation: isometry = ||B* B - I||_max and
/// involution = ||B conj(B) - I||_max over the leading k x k block.
struct ConjugationDefect {
    double isometry;
    double involution;
};

ConjugationDefect conjugation_defect(const ConjLinearOp& c, int k);

/// Splits T along the decomposition (constants) + z H^2: scalar corner
/// T(0,0), the lower (N-1) x (N-1) block, and the largest off-block entry in
/// the first row/column. clean means the off-block entries vanish exactly.
struct BlockDecomposition {
    Cplx corner;
    Eigen::MatrixXcd lower;
    double boundary_residual;
    bool clean;
};

BlockDecomposition block_decompose(const TruncOp& t);

}  // namespace csop
