#ifndef EXCDOM_TRIPOTENTS_HPP
#define EXCDOM_TRIPOTENTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "excdom/jts.hpp"

namespace excdom {

/// Certificate that an element satisfies {eee} = 2e, with its rank and the
/// invariant triple ((e|e), (e#|e#), |det e|^2) that characterizes the rank:
/// rank 1: (1,0,0), rank 2: (2,1,0), rank 3: (3,3,1).
struct TripotentCertificate {
    AlbertElement element;
    int rank = 0;
    double triple_residual = 0.0;
    std::array<double, 3> invariants{};
};

/// Returns the certificate, or nullopt when x is not a tripotent. Throws
/// std::runtime_error when {xxx} = 2x holds but the invariant triple is
/// inconsistent with every rank (corrupted input).
std::optional<TripotentCertificate> classify_tripotent(const AlbertElement& x,
                                                       const Tolerances& tol = default_tolerances);

/// Eigenprojectors of D(e,e) onto the eigenvalues 0, 1, 2 and their complex
/// dimensions. Built by Lagrange interpolation at the known spectrum {0,1,2}:
///   P0 = (D-I)(D-2I)/2,  P1 = -D(D-2I),  P2 = D(D-I)/2.
struct PeirceDecomposition {
    DenseOperator p0, p1, p2;
    int d0 = 0, d1 = 0, d2 = 0;
    double projector_residual = 0.0;  // max of |Pi^2-Pi|, |Pi Pj|, |sum Pi - I|
};

/// Peirce decomposition from an explicit D(e,e) matrix (27x27 on the full
/// system, 16x16 on the subsystem). Dimension extraction by rounding
/// projector traces; a trace more than 0.01 from an integer throws.
PeirceDecomposition peirce_from_d_matrix(const DenseOperator& d);

PeirceDecomposition peirce(const TripotentCertificate& e);

/// Real dimensions of the +1/-1 eigenspaces of the antilinear involution
/// Q(e) on V2(e); both equal dim_C V2(e). Verifies Q(e)^2 = Id on V2 and
/// Q(e) = 0 on V1 + V0.
std::pair<int, int> q_involution_split(const TripotentCertificate& e,
                                       const Tolerances& tol = default_tolerances);

/// True iff D(e,f) = 0 (operator norm below tolerance). Orthogonal
/// tripotents necessarily satisfy (e|f) = 0; a violation throws.
bool are_orthogonal(const TripotentCertificate& e, const TripotentCertificate& f,
                    const Tolerances& tol = default_tolerances);

/// Maximal-tripotent membership via the algebraic characterization
/// x = det x * (conj x)#, for x != 0.
bool is_maximal_frame_element(const AlbertElement& x, const Tolerances& tol = default_tolerances);

/// Numerical invariants of a simple triple system recomputed from the joint
/// Peirce dimensions of a frame: r = frame size, a = dim V_ij (i != j),
/// b = dim V_0i, g = 2 + a(r-1) + b.
struct FrameInvariants {
    int a = 0, b = 0, r = 0, g = 0;
};

/// Census over projector sets, one PeirceDecomposition per frame element.
FrameInvariants census_from_projectors(const std::vector<PeirceDecomposition>& ps);

FrameInvariants frame_invariants(const std::vector<AlbertElement>& frame,
                                 const Tolerances& tol = default_tolerances);

}  // namespace excdom

#endif
