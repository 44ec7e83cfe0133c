#include "specgeo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specgeo {

int incidence_sign(const Simplex& x, const Simplex& y) {
    if (x.size() != y.size() + 1) return 0;
    std::size_t i = 0, j = 0;
    int missing_index = -1;
    while (i < x.size()) {
        if (j < y.size() && x[i] == y[j]) {
            ++i;
            ++j;
        } else {
            if (missing_index >= 0) return 0;  // more than one vertex missing
            missing_index = static_cast<int>(i);
            ++i;
        }
    }
    if (j != y.size()) return 0;
    return missing_index % 2 == 0 ? 1 : -1;
}

DiracMatrix dirac(const Complex& c) {
    const auto& ss = c.simplices();
    const int n = static_cast<int>(ss.size());
    DiracMatrix out;
    out.matrix = Eigen::MatrixXd::Zero(n, n);

    FVector f = c.f_vector();
    out.offsets.assign(1, 0);
    for (std::int64_t fk : f) out.offsets.push_back(out.offsets.back() + static_cast<int>(fk));

    // d sits below the diagonal: row dimension exceeds column dimension by one.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            if (ss[i].size() != ss[j].size() + 1) continue;
            int s = incidence_sign(ss[i], ss[j]);
            if (s != 0) {
                out.matrix(i, j) = s;
                out.matrix(j, i) = s;
            }
        }
    return out;
}

HodgeBlocks diagonal_blocks(const Eigen::MatrixXd& m, const std::vector<int>& offsets) {
    HodgeBlocks out;
    for (std::size_t k = 0; k + 1 < offsets.size(); ++k) {
        int b = offsets[k];
        int sz = offsets[k + 1] - b;
        out.blocks.push_back(m.block(b, b, sz, sz));
    }
    return out;
}

HodgeBlocks hodge(const Complex& c) {
    DiracMatrix d = dirac(c);
    Eigen::MatrixXd l = d.matrix * d.matrix;
    return diagonal_blocks(l, d.offsets);
}

std::vector<int> block_nullities(const HodgeBlocks& h, double tol) {
    if (tol <= 0) throw std::invalid_argument("block_nullities: tol must be positive");
    std::vector<int> out;
    for (const auto& block : h.blocks) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
        const auto& vals = es.eigenvalues();
        double cutoff = tol * std::max(1.0, vals.size() ? std::abs(vals(vals.size() - 1)) : 1.0);
        int nullity = 0;
        for (Eigen::Index i = 0; i < vals.size(); ++i)
            if (std::abs(vals(i)) <= cutoff) ++nullity;
        out.push_back(nullity);
    }
    return out;
}

std::vector<int> betti(const Complex& c, double tol) {
    return block_nullities(hodge(c), tol);
}

double supertrace(const HodgeBlocks& h, double t) {
    if (t < 0) throw std::invalid_argument("supertrace: t must be >= 0");
    double str = 0;
    double sign = 1;
    for (const auto& block : h.blocks) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
        double tr = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            tr += std::exp(-t * es.eigenvalues()(i));
        str += sign * tr;
        sign = -sign;
    }
    return str;
}

double supertrace_power(const HodgeBlocks& h, int n) {
    if (n < 0) throw std::invalid_argument("supertrace_power: n must be >= 0");
    double str = 0;
    double sign = 1;
    for (const auto& block : h.blocks) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
        double tr = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            tr += std::pow(es.eigenvalues()(i), n);
        str += sign * tr;
        sign = -sign;
    }
    return str;
}

Spectrum spectrum(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("spectrum: matrix must be square");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument("spectrum: matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    Spectrum out;
    out.values.assign(es.eigenvalues().data(),
                      es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(out.values.begin(), out.values.end());
    return out;
}

double spectral_function_value(const Spectrum& s, double x) {
    if (x < 0 || x > 1)
        throw std::invalid_argument("spectral_function_value: x must lie in [0,1]");
    if (s.values.empty()) throw std::invalid_argument("spectral_function_value: empty spectrum");
    const auto n = static_cast<double>(s.values.size());
    auto idx = static_cast<std::size_t>(std::ceil(n * x));
    if (idx == 0) return 0.0;
    return s.values[idx - 1];
}

double ids_value(const Spectrum& s, double lambda) {
    if (s.values.empty()) return 0.0;
    auto it = std::upper_bound(s.values.begin(), s.values.end(), lambda);
    return static_cast<double>(it - s.values.begin()) / static_cast<double>(s.values.size());
}

double l1_distance(const Spectrum& a, const Spectrum& b) {
    if (a.values.empty() || b.values.empty())
        throw std::invalid_argument("l1_distance: empty spectrum");
    const std::int64_t na = static_cast<std::int64_t>(a.values.size());
    const std::int64_t nb = static_cast<std::int64_t>(b.values.size());
    // Positions in units of 1/(na*nb): F_a jumps at multiples of nb, F_b at
    // multiples of na.  Both functions are constant between breakpoints.
    std::int64_t cur = 0;
    std::int64_t ia = 1, ib = 1;
    double total = 0;
    const double denom = static_cast<double>(na) * static_cast<double>(nb);
    while (ia <= na && ib <= nb) {
        std::int64_t next = std::min(ia * nb, ib * na);
        total += static_cast<double>(next - cur) *
                 std::abs(a.values[ia - 1] - b.values[ib - 1]);
        cur = next;
        if (ia * nb == next) ++ia;
        if (ib * na == next) ++ib;
    }
    return total / denom;
}

LidskiiReport lidskii_check(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("lidskii_check: size mismatch");
    Spectrum sa = spectrum(a);
    Spectrum sb = spectrum(b);
    double lhs = 0;
    for (std::size_t i = 0; i < sa.values.size(); ++i)
        lhs += std::abs(sa.values[i] - sb.values[i]);
    double rhs = (a - b).cwiseAbs().sum();
    return LidskiiReport{lhs, rhs, lhs <= rhs + 1e-9};
}

double arcsin_cdf(double x) {
    if (x <= 0) return 0.0;
    if (x >= 4) return 1.0;
    return 2.0 / M_PI * std::asin(std::sqrt(x) / 2.0);
}

Eigen::MatrixXd kirchhoff(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        l(u, u) += 1;
        l(v, v) += 1;
        l(u, v) -= 1;
        l(v, u) -= 1;
    }
    return l;
}

}  // namespace specgeo
