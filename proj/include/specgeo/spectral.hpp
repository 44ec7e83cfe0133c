/**
 * Signed exterior derivative, Dirac and Hodge matrices, Betti numbers,
 * McKean-Singer supertraces, spectra, the spectral function F_G and its
 * inverse (integrated density of states), Lidskii-Last stability and the
 * dimension-1 arcsin limit law.
 */

#ifndef SPECGEO_SPECTRAL_HPP
#define SPECGEO_SPECTRAL_HPP

#include <Eigen/Dense>
#include <vector>

#include "specgeo/complex.hpp"

namespace specgeo {

/**
 * Dense symmetric Dirac matrix D = d + d* with recorded block offsets
 * b_0 = 0 < b_1 < ... < b_{q+1} = n, where b_{k+1} - b_k = f_k.
 */
struct DiracMatrix {
    Eigen::MatrixXd matrix;
    std::vector<int> offsets;
};

/** Diagonal blocks L_0..L_q of the Hodge Laplacian L = D^2. */
struct HodgeBlocks {
    std::vector<Eigen::MatrixXd> blocks;
};

/** Ascending list of eigenvalues. */
struct Spectrum {
    std::vector<double> values;
    std::size_t size() const { return values.size(); }
};

/**
 * Sign of the incidence of a codimension-1 face y in x: (-1)^j where j is
 * the 0-based position in x of the vertex missing from y; 0 when y is not
 * a codimension-1 face of x.  Both simplices must be sorted.
 */
int incidence_sign(const Simplex& x, const Simplex& y);

DiracMatrix dirac(const Complex& c);

HodgeBlocks hodge(const Complex& c);

/** Extract the diagonal blocks of a matrix partitioned by `offsets`. */
HodgeBlocks diagonal_blocks(const Eigen::MatrixXd& m, const std::vector<int>& offsets);

/**
 * Nullities of the given symmetric PSD blocks: eigenvalues below
 * tol * max(1, lambda_max) of the block count as zero.
 */
std::vector<int> block_nullities(const HodgeBlocks& h, double tol);

/** Betti vector of c: kernel dimensions of the Hodge blocks. */
std::vector<int> betti(const Complex& c, double tol = 1e-8);

/** McKean-Singer supertrace sum_k (-1)^k tr(exp(-t L_k)); t >= 0. */
double supertrace(const HodgeBlocks& h, double t);

/** Supertrace of the n-th power, sum_k (-1)^k tr(L_k^n); n >= 0. */
double supertrace_power(const HodgeBlocks& h, int n);

/**
 * Ascending eigenvalues of a symmetric matrix; throws std::invalid_argument
 * when the input is not symmetric (to 1e-10 relative).
 */
Spectrum spectrum(const Eigen::MatrixXd& m);

/**
 * Spectral function F(x) = lambda_ceil(n x) on [0,1], with F(0) = 0 and
 * F(1) = lambda_max.  Throws outside [0,1].
 */
double spectral_function_value(const Spectrum& s, double x);

/** Integrated density of states: fraction of eigenvalues <= lambda. */
double ids_value(const Spectrum& s, double lambda);

/**
 * L1 distance of the two spectral step functions on [0,1], integrated
 * exactly from the order statistics.
 */
double l1_distance(const Spectrum& a, const Spectrum& b);

struct LidskiiReport {
    double lhs;  // l1 distance of sorted eigenvalue vectors
    double rhs;  // entrywise absolute sum of A - B
    bool ok;     // lhs <= rhs + 1e-9
};

/** Lidskii-Last inequality check for two symmetric matrices of equal size. */
LidskiiReport lidskii_check(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/** CDF (2/pi) arcsin(sqrt(x)/2) of the arcsin law on [0,4]; clamped outside. */
double arcsin_cdf(double x);

/** Kirchhoff Laplacian (degree matrix minus adjacency) of a graph. */
Eigen::MatrixXd kirchhoff(const Graph& g);

}  // namespace specgeo

#endif
