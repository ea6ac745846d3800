#ifndef EXCDOM_COMPACTIFY_HPP
#define EXCDOM_COMPACTIFY_HPP

#include <optional>

#include "excdom/type_v.hpp"

namespace excdom {

/// Homogeneous coordinates [lambda, x, y, mu] in P(C + V + V + C). Points of
/// the compactification satisfy y# = mu x, x# = lambda y, (x:y) = 3 lambda mu
/// (all homogeneous of degree 2).
struct FreudenthalPoint {
    Complex lambda;
    AlbertElement x;
    AlbertElement y;
    Complex mu;

    double scale() const;  // largest coordinate-block norm
};

struct MembershipResiduals {
    double adjoint_y = 0.0;  // |y# - mu x|   / scale^2
    double adjoint_x = 0.0;  // |x# - lambda y| / scale^2
    double pairing = 0.0;    // |(x:y) - 3 lambda mu| / scale^2
    double max() const { return std::max({adjoint_y, adjoint_x, pairing}); }
};

MembershipResiduals membership_residuals(const FreudenthalPoint& p);

/// x -> [1, x, x#, det x].
FreudenthalPoint embed_v(const AlbertElement& x);

/// Inverse of embed_v on the dense chart lambda != 0; nullopt marks a point
/// at infinity. Throws std::invalid_argument if p is not on the manifold.
std::optional<AlbertElement> dehomogenize(const FreudenthalPoint& p,
                                          const Tolerances& tol = default_tolerances);

/// Projective equality, normalizing by the largest-magnitude coordinate.
bool projectively_equal(const FreudenthalPoint& p, const FreudenthalPoint& q,
                        const Tolerances& tol = default_tolerances);

/// Point of the rank-one cone {[z] : z# = 0} in P(V).
struct RankOnePoint {
    AlbertElement z;
};

/// x -> [e1 + x - e1 x (x#)]; the image satisfies z# = 0 and (z:e1) = 1.
RankOnePoint embed_w(const WElement& x);

/// Cone membership and chart data for [z]: the adjoint residual, whether
/// (z:e1) != 0, and if so the recovered W element (with the residual of the
/// Peirce-zero block against -e1 x x#).
struct ConeMembership {
    bool on_cone = false;
    double cone_residual = 0.0;   // |z#| / (1 + |z|^2)
    bool in_chart = false;
    std::optional<WElement> w;
    double chart_residual = 0.0;  // V0(e1) block mismatch after normalization
};

ConeMembership p_membership(const AlbertElement& z, const Tolerances& tol = default_tolerances);

}  // namespace excdom

#endif
