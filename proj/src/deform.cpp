#include "specgeo/deform.hpp"

#include <cmath>
#include <stdexcept>

namespace specgeo {

double GSpec::eval(double x) const {
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int block_of(int i, const std::vector<int>& offsets) {
    if (offsets.size() < 2 || i < 0 || i >= offsets.back())
        throw std::invalid_argument("block_of: index outside offset range");
    int b = 0;
    while (offsets[b + 1] <= i) ++b;
    return b;
}

namespace {

void check_offsets(const Eigen::MatrixXd& a, const std::vector<int>& offsets) {
    if (a.rows() != a.cols()) throw std::invalid_argument("block ops: square matrix required");
    if (offsets.size() < 2 || offsets.front() != 0 || offsets.back() != a.rows())
        throw std::invalid_argument("block ops: offsets must run from 0 to n");
    for (std::size_t k = 0; k + 1 < offsets.size(); ++k)
        if (offsets[k] >= offsets[k + 1])
            throw std::invalid_argument("block ops: offsets must be strictly increasing");
}

}  // namespace

BlockSplit block_split(const Eigen::MatrixXd& a, const std::vector<int>& offsets) {
    check_offsets(a, offsets);
    const int n = static_cast<int>(a.rows());
    std::vector<int> blk(n);
    for (int i = 0; i < n; ++i) blk[i] = block_of(i, offsets);
    BlockSplit out{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n),
                   Eigen::MatrixXd::Zero(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (blk[i] < blk[j])
                out.plus(i, j) = a(i, j);
            else if (blk[i] > blk[j])
                out.minus(i, j) = a(i, j);
            else
                out.zero(i, j) = a(i, j);
        }
    return out;
}

Eigen::MatrixXd bracket_generator(const Eigen::MatrixXd& a,
                                  const std::vector<int>& offsets) {
    BlockSplit s = block_split(a, offsets);
    return s.plus - s.minus;
}

Eigen::MatrixXd apply_g(const Eigen::MatrixXd& d, const GSpec& g) {
    if (g.coeffs.empty())
        throw std::invalid_argument("apply_g: polynomial needs at least one coefficient");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d);
    Eigen::VectorXd gl = es.eigenvalues();
    for (Eigen::Index i = 0; i < gl.size(); ++i) gl(i) = g.eval(gl(i));
    return es.eigenvectors() * gl.asDiagonal() * es.eigenvectors().transpose();
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> qr_decompose(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("qr_decompose: square matrix required");
    const int n = static_cast<int>(m.rows());
    Eigen::MatrixXd q = m;
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    const double scale = m.cwiseAbs().maxCoeff();
    for (int k = 0; k < n; ++k) {
        // Two orthogonalization passes against the previous columns.
        for (int pass = 0; pass < 2; ++pass)
            for (int j = 0; j < k; ++j) {
                double proj = q.col(j).dot(q.col(k));
                q.col(k) -= proj * q.col(j);
                r(j, k) += proj;
            }
        double norm = q.col(k).norm();
        if (!(norm > scale * 1e-13))
            throw std::runtime_error("qr_decompose: matrix is numerically singular");
        r(k, k) = norm;
        q.col(k) /= norm;
    }
    return {q, r};
}

DeformationState qr_deform(const DiracMatrix& d0, const GSpec& g, double t) {
    const int n = static_cast<int>(d0.matrix.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d0.matrix);
    Eigen::VectorXd gl = es.eigenvalues();
    for (Eigen::Index i = 0; i < gl.size(); ++i) gl(i) = g.eval(gl(i));

    // The condition number of exp(-t g(D_0)) is exp(t * spread), which would
    // drown the QR factorization in roundoff at large t.  The flow composes:
    // exp(-(s+h) g(D_0)) factors through exp(-h g(D_s)), so we take substeps
    // whose exponent spread stays moderate and accumulate Q and R.
    const double spread = gl.size() ? std::abs(t) * (gl.maxCoeff() - gl.minCoeff()) : 0.0;
    const int substeps = std::max(1, static_cast<int>(std::ceil(spread / 14.0)));
    const double h = t / substeps;

    Eigen::VectorXd w = gl;
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = -h * gl(i);
    // Shift the exponent by its maximum: the scalar factor exp(shift) cancels
    // in Q and keeps the exponential representable.
    const double shift = w.size() ? w.maxCoeff() : 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = std::exp(w(i) - shift);
    Eigen::MatrixXd step =
        es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();

    DeformationState state;
    state.t = t;
    state.offsets = d0.offsets;
    state.Q = Eigen::MatrixXd::Identity(n, n);
    state.R = Eigen::MatrixXd::Identity(n, n);
    state.log_scale = 0;
    for (int s = 0; s < substeps; ++s) {
        // exp(-h g(D_s)) in the frame accumulated so far.
        Eigen::MatrixXd m = state.Q.transpose() * step * state.Q;
        auto [q, r] = qr_decompose(m);
        state.Q = state.Q * q;
        state.R = r * state.R;
        state.log_scale += shift;
    }
    state.D_t = state.Q.transpose() * d0.matrix * state.Q;
    return state;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> split_deformed(
    const Eigen::MatrixXd& d_t, const std::vector<int>& offsets) {
    BlockSplit s = block_split(d_t, offsets);
    return {s.minus, s.zero};  // d lives in the lower block band at t = 0
}

Eigen::MatrixXd lax_rhs(const Eigen::MatrixXd& d, const GSpec& g,
                        const std::vector<int>& offsets) {
    check_offsets(d, offsets);
    // Generator matching the unique elementwise QR factorization of
    // exp(-t g(D_0)): the antisymmetrization of the strictly lower triangle
    // of g(D).  It coincides with the block bracket whenever g(D) has zero
    // diagonal blocks (in particular at t = 0 for odd g); once diagonal
    // blocks appear, the block bracket instead generates the flow of a
    // block-QR factorization, which is unique only up to block-diagonal
    // orthogonal conjugation.  Orientation is pinned by the QR/ODE
    // agreement test.
    Eigen::MatrixXd gd = apply_g(d, g);
    Eigen::MatrixXd lower = gd.triangularView<Eigen::StrictlyLower>();
    Eigen::MatrixXd b = lower - lower.transpose();
    return b * d - d * b;
}

Eigen::MatrixXd lax_integrate(const DiracMatrix& d0, const GSpec& g, double t,
                              int steps) {
    if (steps < 1) throw std::invalid_argument("lax_integrate: steps must be >= 1");
    const double h = t / steps;
    Eigen::MatrixXd d = d0.matrix;
    for (int s = 0; s < steps; ++s) {
        Eigen::MatrixXd k1 = lax_rhs(d, g, d0.offsets);
        Eigen::MatrixXd k2 = lax_rhs(d + 0.5 * h * k1, g, d0.offsets);
        Eigen::MatrixXd k3 = lax_rhs(d + 0.5 * h * k2, g, d0.offsets);
        Eigen::MatrixXd k4 = lax_rhs(d + h * k3, g, d0.offsets);
        d += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return d;
}

double band_leakage(const Eigen::MatrixXd& d_t, const std::vector<int>& offsets) {
    check_offsets(d_t, offsets);
    const int n = static_cast<int>(d_t.rows());
    std::vector<int> blk(n);
    for (int i = 0; i < n; ++i) blk[i] = block_of(i, offsets);
    double leak = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(blk[i] - blk[j]) > 1) leak = std::max(leak, std::abs(d_t(i, j)));
    return leak;
}

}  // namespace specgeo
