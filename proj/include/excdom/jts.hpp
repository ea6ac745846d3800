#ifndef EXCDOM_JTS_HPP
#define EXCDOM_JTS_HPP

#include <vector>

#include "excdom/albert.hpp"
#include "excdom/tolerances.hpp"

namespace excdom {

/// Q(x)y = (x|y)x - x# x conj(y); quadratic in x, antilinear in y.
AlbertElement q_apply(const AlbertElement& x, const AlbertElement& y);

/// Triple product {xyz} = (x|y)z + (z|y)x - (x cross z) cross conj(y);
/// symmetric bilinear in (x,z), antilinear in y.
AlbertElement triple(const AlbertElement& x, const AlbertElement& y, const AlbertElement& z);

/// 27x27 matrix of the complex-linear map z -> {xyz}.
DenseOperator d_operator(const AlbertElement& x, const AlbertElement& y);

/// Bergman operator B(x,y) = Id - D(x,y) + Q(x)Q(y) (the composition of the
/// two antilinear Q maps is complex-linear). Det B(x,y) equals the generic
/// norm to the power 18.
DenseOperator bergman_operator(const AlbertElement& x, const AlbertElement& y);

/// Powers x^(k,y): x^(1,y) = x, x^(k+1,y) = (1/2) D(x,y) x^(k,y).
AlbertElement power(const AlbertElement& x, int k, const AlbertElement& y);

/// Odd power x^(m) for odd m >= 1; x^(2k+1) = x^(k+1,x).
AlbertElement odd_power(const AlbertElement& x, int m);

/// Coefficients of the generic minimal polynomial. Degree 3 on the full
/// 27-dimensional system, degree 2 on the 16-dimensional subsystem:
///   T^3 - (x|y) T^2 + (x#|y#) T - det x conj(det y)   (degree 3)
///   T^2 - (x|y) T + (x#|y#)                           (degree 2)
struct MinimalPolynomial {
    int degree = 3;
    Complex herm;        // (x|y)
    Complex herm_sharp;  // (x#|y#)
    Complex det_term;    // det x * conj(det y); zero for degree 2

    CubicPolynomial monic_cubic() const;  // degree 2 is embedded as T * m(T)
};

MinimalPolynomial minimal_polynomial(const AlbertElement& x, const AlbertElement& y);

/// Singular-value data of x: strictly decreasing lambda_i > 0 with tripotents
/// e_i such that x = sum lambda_i e_i. Carries a frame-validity certificate.
struct SpectralDecomposition {
    struct Pair {
        double lambda;
        AlbertElement tripotent;
    };
    std::vector<Pair> pairs;
    double merge_tolerance = 0.0;     // lambda-gap threshold actually applied
    bool low_confidence = false;      // separation near the merge threshold,
                                      // or certificates failed at every grouping
    double tripotency_residual = 0.0;      // max over i of |{e_i e_i e_i} - 2 e_i|
    double orthogonality_residual = 0.0;   // max over i != j of |D(e_i, e_j)|
    double reconstruction_residual = 0.0;  // |x - sum lambda_i e_i|
};

/// Spectral decomposition via the minimal polynomial: roots of m(T;x,x) are
/// the lambda_i^2, tripotents are recovered from odd powers by a Vandermonde
/// solve. Near-equal singular values are merged; if the frame certificates
/// fail, merging is coarsened adaptively (close roots below the noise floor
/// cannot be split reliably).
SpectralDecomposition spectral_decompose(const AlbertElement& x,
                                         const Tolerances& tol = default_tolerances);

/// Number of nonzero singular values counted with multiplicity.
int rank(const AlbertElement& x, const Tolerances& tol = default_tolerances);

}  // namespace excdom

#endif
