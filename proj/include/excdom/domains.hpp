#ifndef EXCDOM_DOMAINS_HPP
#define EXCDOM_DOMAINS_HPP

#include <array>
#include <string>
#include <vector>

#include "excdom/type_v.hpp"

namespace excdom {

enum class Location { Interior, Boundary, Exterior };

/// Classification of a point against the bounded symmetric domain: the
/// defining inequality values, the roots of m(T;x,x), the boundary stratum
/// (number of roots at 1) and a confidence margin (distance of the nearest
/// non-unit root to the decision surface at 1).
struct DomainVerdict {
    Location location = Location::Interior;
    int stratum = 0;  // 0 unless location == Boundary
    std::vector<double> f;
    std::vector<double> roots;  // roots of m(T;x,x), descending
    double margin = 0.0;
    bool low_confidence = false;
    bool dual_agrees = true;  // inequality-sign method matches the root method
};

/// The r inequality values f_{k+1} = (1/k!) d^k/dT^k m(T;x,x) at T=1.
std::array<double, 3> inequality_values_v(const AlbertElement& x);
std::array<double, 2> inequality_values_w(const WElement& x);

DomainVerdict classify_v(const AlbertElement& x, const Tolerances& tol = default_tolerances);
DomainVerdict classify_w(const WElement& x, const Tolerances& tol = default_tolerances);

/// Decomposition x = e + y of a boundary point: e the rank-k tripotent with
/// unit singular values, y = x - e in the Peirce-zero space of e and interior
/// to the subsystem domain there. Computed from the spectral decomposition.
struct StratumProjection {
    AlbertElement tripotent;
    AlbertElement residual;
    int stratum = 0;
    double peirce_zero_residual = 0.0;  // |(P1+P2)(x-e)|
    std::vector<double> residual_roots;  // nonzero roots of m(T;y,y)
    bool low_confidence = false;
};

/// Throws std::invalid_argument if classify_v does not place x on the boundary.
StratumProjection project_to_stratum_frame(const AlbertElement& x,
                                           const Tolerances& tol = default_tolerances);

/// Shilov boundary membership: the maximal-tripotent manifold.
bool shilov_test_v(const AlbertElement& x, const Tolerances& tol = default_tolerances);
bool shilov_test_w(const WElement& x, const Tolerances& tol = default_tolerances);

/// Geometry of the boundary stratum and tripotent manifold through a
/// tripotent of rank k: Peirce dimensions, normal/tangent dimensions and CR
/// types. The stratum carries one more complex tangent block (the
/// Peirce-zero part) than the tripotent manifold.
struct BoundaryReport {
    int rank = 0;
    int d0 = 0, d1 = 0, d2 = 0;          // complex Peirce dimensions
    int normal_dim_real = 0;             // dim_R V2+(e)
    int stratum_cr_s = 0, stratum_cr_t = 0;
    int manifold_cr_s = 0, manifold_cr_t = 0;
    int stratum_dim_real = 0;
    int manifold_dim_real = 0;
    int affine_rank = 0;                 // rank of the Peirce-zero subsystem
};

BoundaryReport boundary_report(const TripotentCertificate& e,
                               const Tolerances& tol = default_tolerances);
BoundaryReport boundary_report_w(const WTripotentCertificate& e,
                                 const Tolerances& tol = default_tolerances);

std::string to_string(Location loc);

}  // namespace excdom

#endif
