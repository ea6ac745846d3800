#ifndef EXCDOM_TYPE_V_HPP
#define EXCDOM_TYPE_V_HPP

#include <optional>
#include <vector>

#include "excdom/tripotents.hpp"

namespace excdom {

/// Element of the 16-dimensional subsystem spanned by the second and third
/// off-diagonal slots: x = F2(b) + F3(c).
struct WElement {
    Octonion b{};
    Octonion c{};

    static constexpr std::size_t kDim = 16;
    static WElement zero() { return {}; }
    static WElement from_vector(const ComplexVector& v);
    ComplexVector to_vector() const;
    static WElement basis(std::size_t k);

    WElement& operator+=(const WElement& rhs);
    WElement& operator-=(const WElement& rhs);
    WElement& operator*=(Complex s);
};

WElement operator+(WElement a, const WElement& b);
WElement operator-(WElement a, const WElement& b);
WElement operator*(Complex s, WElement a);
WElement operator-(WElement a);

AlbertElement embed(const WElement& x);

/// Inverse of embed; throws if the diagonal or first off-diagonal slot of `a`
/// carries more than tolerance mass.
WElement restrict_to_w(const AlbertElement& a, const Tolerances& tol = default_tolerances);

Complex hermitian_product(const WElement& a, const WElement& b);
double coord_norm(const WElement& a);

/// Adjoint of the embedded element, expressed directly in (b, c) coordinates:
/// x# = -n(b) e2 - n(c) e3 + ~F1(bc). Lands in the Peirce-zero space of e1;
/// det of the embedding is identically zero.
AlbertElement sharp_w(const WElement& x);

/// Q and the triple product evaluated by the closed octonion formulas (the
/// production path); the ambient route restrict(triple(embed...)) is the
/// cross-check oracle in the tests.
WElement q_apply_w(const WElement& x, const WElement& y);
WElement triple_w(const WElement& x, const WElement& y, const WElement& z);

DenseOperator d_operator_w(const WElement& x, const WElement& y);
DenseOperator bergman_operator_w(const WElement& x, const WElement& y);

/// Degree-2 generic minimal polynomial T^2 - (x|y) T + (x#|y#).
MinimalPolynomial minimal_polynomial_w(const WElement& x, const WElement& y);

/// For a null unit octonion beta ((beta|beta)=1, n(beta)=0): orthonormal
/// bases of ker L(beta) and ker L(conj beta), each of complex dimension 4.
/// ker L(beta) = Im L(~beta), so the bases come from column reductions of the
/// conjugate left-multiplication operators.
struct KernelSplit {
    std::vector<Octonion> ker_beta;
    std::vector<Octonion> ker_beta_bar;
};

KernelSplit kernel_split(const Octonion& beta, const Tolerances& tol = default_tolerances);

/// W-tripotent certificate; rank is 0, 1 or 2 (the embedding has determinant
/// zero, so rank 3 cannot occur).
struct WTripotentCertificate {
    WElement element;
    int rank = 0;
    double triple_residual = 0.0;
    std::array<double, 2> invariants{};  // ((x|x), (x#|x#))
};

std::optional<WTripotentCertificate> classify_tripotent_w(const WElement& x,
                                                          const Tolerances& tol = default_tolerances);

PeirceDecomposition peirce_w(const WTripotentCertificate& e);

std::pair<int, int> q_involution_split_w(const WTripotentCertificate& e,
                                         const Tolerances& tol = default_tolerances);

FrameInvariants frame_invariants_w(const std::vector<WElement>& frame,
                                   const Tolerances& tol = default_tolerances);

}  // namespace excdom

#endif
