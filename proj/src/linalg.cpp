#include "excdom/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace excdom {

Complex det_dense(const DenseOperator& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("det_dense: operator must be square");
    }
    if (m.rows() > 64) {
        throw std::invalid_argument("det_dense: dimension exceeds 64");
    }
    if (m.rows() == 0) return Complex(1.0);
    if (m.rows() == 1) return m(0, 0);
    return Eigen::PartialPivLU<DenseOperator>(m).determinant();
}

namespace {

std::array<Complex, 3> cardano(const CubicPolynomial& p) {
    const Complex c2 = p.c[2], c1 = p.c[1], c0 = p.c[0];
    const Complex shift = c2 / 3.0;
    // Depressed form S^3 + q1 S + q0 with T = S - c2/3.
    const Complex q1 = c1 - c2 * c2 / 3.0;
    const Complex q0 = c0 - c1 * c2 / 3.0 + 2.0 * c2 * c2 * c2 / 27.0;

    const Complex half_q0 = q0 / 2.0;
    const Complex third_q1 = q1 / 3.0;
    const Complex disc = half_q0 * half_q0 + third_q1 * third_q1 * third_q1;
    Complex u = std::pow(-half_q0 + std::sqrt(disc), 1.0 / 3.0);
    if (std::abs(u) < 1e-300) {
        u = std::pow(-half_q0 - std::sqrt(disc), 1.0 / 3.0);
    }
    std::array<Complex, 3> roots;
    if (std::abs(u) < 1e-300) {
        roots = {-shift, -shift, -shift};
        return roots;
    }
    const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
    Complex uk = u;
    for (int k = 0; k < 3; ++k) {
        roots[k] = uk - third_q1 / uk - shift;
        uk *= omega;
    }
    return roots;
}

std::array<Complex, 3> companion_roots(const CubicPolynomial& p) {
    Eigen::Matrix3cd comp = Eigen::Matrix3cd::Zero();
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    comp(0, 2) = -p.c[0];
    comp(1, 2) = -p.c[1];
    comp(2, 2) = -p.c[2];
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(comp, /*computeEigenvectors=*/false);
    const auto ev = es.eigenvalues();
    return {ev(0), ev(1), ev(2)};
}

void polish(const CubicPolynomial& p, std::array<Complex, 3>& roots) {
    for (auto& r : roots) {
        for (int it = 0; it < 2; ++it) {
            const Complex f = p.eval(r);
            const Complex df = (3.0 * p.c[3] * r + 2.0 * p.c[2]) * r + p.c[1];
            if (std::abs(df) < 1e-300) break;
            const Complex step = f / df;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            r -= step;
        }
    }
}

// Roots closer than this (relative) separation are treated as multiple: the
// extraction noise near a k-fold root grows like (coefficient error)^(1/k),
// so clusters below the limit carry no positional information, while the
// mean of a cluster and the derivative roots are determined directly by the
// coefficients to full precision.
constexpr double kMinRootSeparation = 1e-5;

void snap_clusters(const CubicPolynomial& p, std::array<Complex, 3>& roots) {
    const Complex c2 = p.c[2], c1 = p.c[1];
    const Complex mean = -c2 / 3.0;
    const double scale = 1.0 + std::abs(mean);
    const double limit = kMinRootSeparation * scale;

    // Triple root. For roots mean + d_i (sum d_i = 0) the depressed
    // coefficient is q1 = -sum d_i^2 / 2 exactly, so sqrt|q1| measures the
    // root spread with only coefficient-level noise.
    const Complex q1 = c1 - c2 * c2 / 3.0;
    if (std::sqrt(std::abs(q1)) < limit) {
        roots = {mean, mean, mean};
        return;
    }

    // Double root: a pair snaps onto the derivative root r* between them
    // when the half-gap it implies, sqrt(|m(r*)| / |r* - b|) with b the
    // exact complementary root under the double hypothesis, is below the
    // resolution limit.
    auto derivative_root_near = [&](Complex guess) -> Complex {
        const Complex a = Complex(3.0), b = 2.0 * p.c[2], c = p.c[1];
        const Complex sq = std::sqrt(b * b - 4.0 * a * c);
        const Complex r1 = (-b + sq) / (2.0 * a);
        const Complex r2 = (-b - sq) / (2.0 * a);
        return std::abs(r1 - guess) < std::abs(r2 - guess) ? r1 : r2;
    };
    for (auto [i, j, k] :
         {std::tuple{0, 1, 2}, std::tuple{1, 2, 0}, std::tuple{0, 2, 1}}) {
        if (std::abs(roots[i] - roots[j]) > 1e3 * limit) continue;
        const Complex mid = (roots[i] + roots[j]) / 2.0;
        const Complex rstar = derivative_root_near(mid);
        const Complex other = -c2 - 2.0 * rstar;
        const double separation = std::max(std::abs(rstar - other), limit);
        const double half_gap = std::sqrt(std::abs(p.eval(rstar)) / separation);
        if (half_gap < limit && std::abs(rstar - mid) < 1e3 * limit) {
            roots[i] = roots[j] = rstar;
            roots[k] = other;
            return;
        }
    }
}

}  // namespace

std::array<Complex, 3> roots_monic_cubic(const CubicPolynomial& p) {
    const Complex c2 = p.c[2], c1 = p.c[1], c0 = p.c[0];
    const Complex q1 = c1 - c2 * c2 / 3.0;
    const Complex q0 = c0 - c1 * c2 / 3.0 + 2.0 * c2 * c2 * c2 / 27.0;
    // Cubic discriminant of the depressed form, against its natural scale.
    const Complex disc = -4.0 * q1 * q1 * q1 - 27.0 * q0 * q0;
    const double disc_scale =
        std::max({1.0, std::pow(std::abs(q1), 3.0), std::pow(std::abs(q0), 2.0)});

    std::array<Complex, 3> roots;
    if (std::abs(disc) < 1e-12 * disc_scale) {
        roots = companion_roots(p);
    } else {
        roots = cardano(p);
    }
    polish(p, roots);
    snap_clusters(p, roots);
    std::sort(roots.begin(), roots.end(),
              [](const Complex& a, const Complex& b) { return a.real() > b.real(); });
    return roots;
}

std::vector<ComplexVector> solve_vandermonde(const std::vector<double>& nodes,
                                             const std::vector<ComplexVector>& rhs,
                                             double min_node_gap) {
    const std::size_t m = nodes.size();
    if (m == 0 || rhs.size() != m) {
        throw std::invalid_argument("solve_vandermonde: need one rhs vector per node");
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (std::abs(nodes[i] - nodes[j]) <= min_node_gap) {
                throw std::invalid_argument("solve_vandermonde: node collision, system degenerate");
            }
        }
    }
    const Eigen::Index dim = rhs.front().size();
    Eigen::MatrixXcd a(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
                Complex(std::pow(nodes[i], 2.0 * static_cast<double>(k) + 1.0));
        }
    }
    Eigen::MatrixXcd b(m, dim);
    for (std::size_t k = 0; k < m; ++k) {
        if (rhs[k].size() != dim) {
            throw std::invalid_argument("solve_vandermonde: rhs dimensions differ");
        }
        b.row(static_cast<Eigen::Index>(k)) = rhs[k].transpose();
    }
    const Eigen::MatrixXcd sol = a.partialPivLu().solve(b);
    std::vector<ComplexVector> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = sol.row(static_cast<Eigen::Index>(i)).transpose();
    }
    return out;
}

}  // namespace excdom
