/**
 * Isospectral deformation of the Dirac matrix: block splitting, functional
 * calculus g(D), the QR realization D_t = Q^T D_0 Q with Q R = exp(-t g(D_0)),
 * the decomposition D_t = c_t + c_t^T + m_t, and a Runge-Kutta integrator
 * for the Lax equation D' = [B, D] used to cross-validate the QR flow.
 */

#ifndef SPECGEO_DEFORM_HPP
#define SPECGEO_DEFORM_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "specgeo/spectral.hpp"

namespace specgeo {

/** Block decomposition A = plus + minus + zero along the given offsets. */
struct BlockSplit {
    Eigen::MatrixXd plus;   // upper-right blocks (row block < column block)
    Eigen::MatrixXd minus;  // lower-left blocks
    Eigen::MatrixXd zero;   // diagonal blocks
};

/** Polynomial g(x) = c_0 + c_1 x + ... applied to D by functional calculus. */
struct GSpec {
    std::vector<double> coeffs;

    double eval(double x) const;
    static GSpec identity() { return GSpec{{0.0, 1.0}}; }
    static GSpec cube() { return GSpec{{0.0, 0.0, 0.0, 1.0}}; }
};

/**
 * State of the QR flow at time t.  Q R exp(log_scale) = exp(-t g(D_0));
 * the scalar shift keeps the exponential representable at large t and
 * cancels in Q.  R has positive diagonal, making the factorization unique.
 */
struct DeformationState {
    double t = 0;
    Eigen::MatrixXd Q;
    Eigen::MatrixXd R;
    double log_scale = 0;
    Eigen::MatrixXd D_t;
    std::vector<int> offsets;
};

/** Block index of matrix row/column i under the given offsets. */
int block_of(int i, const std::vector<int>& offsets);

BlockSplit block_split(const Eigen::MatrixXd& a, const std::vector<int>& offsets);

/** B(A) = A^+ - A^-; antisymmetric whenever A is symmetric. */
Eigen::MatrixXd bracket_generator(const Eigen::MatrixXd& a,
                                  const std::vector<int>& offsets);

/** g(D) = U g(Lambda) U^T from the spectral decomposition of symmetric D. */
Eigen::MatrixXd apply_g(const Eigen::MatrixXd& d, const GSpec& g);

/**
 * QR factorization with Q orthogonal and R upper triangular with positive
 * diagonal (modified Gram-Schmidt with one re-orthogonalization pass).
 * Throws std::runtime_error on numerically singular input.
 */
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> qr_decompose(const Eigen::MatrixXd& m);

/** The QR flow at time t: D_t = Q^T D_0 Q for Q R = exp(-t g(D_0)). */
DeformationState qr_deform(const DiracMatrix& d0, const GSpec& g, double t);

/**
 * Split a deformed operator into the new exterior derivative c (strictly
 * lower block band, matching the position of d in the undeformed matrix)
 * and the diagonal-block part m, so that D_t = c + c^T + m.
 */
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> split_deformed(
    const Eigen::MatrixXd& d_t, const std::vector<int>& offsets);

/** Right-hand side [B, D] of the Lax equation, B = bracket of g(D). */
Eigen::MatrixXd lax_rhs(const Eigen::MatrixXd& d, const GSpec& g,
                        const std::vector<int>& offsets);

/** Classical fourth-order one-step integration of D' = [B, D]. */
Eigen::MatrixXd lax_integrate(const DiracMatrix& d0, const GSpec& g, double t,
                              int steps);

/** Largest |entry| outside the diagonal and adjacent block band. */
double band_leakage(const Eigen::MatrixXd& d_t, const std::vector<int>& offsets);

/**
 * Kernel dimensions of the blocks of (c + c^T)^2 for a deformed exterior
 * derivative c, via the rank-nullity count b_k = f_k - rank(c_k) -
 * rank(c_{k-1}) on the band sub-blocks (c maps k-forms to (k+1)-forms and
 * c*c = 0).  Ranks come from singular values with a per-block relative
 * cutoff, which keeps the count meaningful when the flow shrinks c
 * exponentially and an absolute eigenvalue cutoff on (c + c^T)^2 would not.
 */
std::vector<int> deformed_betti(const Eigen::MatrixXd& c,
                                const std::vector<int>& offsets, double tol = 1e-8);

}  // namespace specgeo

#endif
