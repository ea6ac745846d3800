#ifndef EXCDOM_LINALG_HPP
#define EXCDOM_LINALG_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

namespace excdom {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Monic cubic c[3]*T^3 + c[2]*T^2 + c[1]*T + c[0] with c[3] == 1.
struct CubicPolynomial {
    std::array<Complex, 4> c{Complex(0), Complex(0), Complex(0), Complex(1)};

    Complex eval(Complex t) const { return ((c[3] * t + c[2]) * t + c[1]) * t + c[0]; }
};

/// Determinant of a square dense operator (dimension <= 64) via pivoted LU.
/// Throws std::invalid_argument on non-square or oversized input.
Complex det_dense(const DenseOperator& m);

/// Roots of a monic cubic, sorted by descending real part.
///
/// Closed-form Cardano, with a companion-matrix eigenvalue fallback when the
/// discriminant is too small for Cardano to be stable. Clusters of
/// near-multiple roots are snapped to the value implied by the coefficients
/// (triple: -c2/3; double: the nearby root of the derivative), which is the
/// only resolvable answer below the perturbation noise floor.
std::array<Complex, 3> roots_monic_cubic(const CubicPolynomial& p);

/// Solve sum_i nodes[i]^(2k+1) * e_i = rhs[k] for the vectors e_i,
/// k = 0..nodes.size()-1. Nodes must be positive and pairwise distinct
/// (separation > min_node_gap), otherwise throws std::invalid_argument.
std::vector<ComplexVector> solve_vandermonde(const std::vector<double>& nodes,
                                             const std::vector<ComplexVector>& rhs,
                                             double min_node_gap = 1e-12);

}  // namespace excdom

#endif
