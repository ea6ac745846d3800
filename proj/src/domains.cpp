#include "excdom/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace excdom {

namespace {

// Shared verdict logic: roots descending, r inequality values.
DomainVerdict verdict_from_roots(std::vector<double> roots, std::vector<double> f,
                                 const Tolerances& tol) {
    DomainVerdict v;
    std::sort(roots.rbegin(), roots.rend());
    v.roots = roots;
    v.f = std::move(f);

    int at_one = 0;
    double margin = std::numeric_limits<double>::infinity();
    for (double r : v.roots) {
        if (std::abs(r - 1.0) < tol.cls) {
            ++at_one;
        } else {
            margin = std::min(margin, std::abs(r - 1.0));
        }
    }
    const double rmax = v.roots.front();
    if (at_one == 0) {
        v.location = rmax < 1.0 ? Location::Interior : Location::Exterior;
        v.stratum = 0;
    } else if (rmax > 1.0 + tol.cls) {
        // A root beyond 1 dominates: the point is outside the closure.
        v.location = Location::Exterior;
        v.stratum = 0;
    } else {
        v.location = Location::Boundary;
        v.stratum = at_one;
    }
    // All roots at 1 (the Shilov stratum) leaves no non-unit root: nominal margin.
    v.margin = std::isfinite(margin) ? margin : 1.0;
    v.low_confidence = v.margin <= 10.0 * tol.cls;

    // Inequality-sign cross check.
    Location by_signs;
    int sign_stratum = 0;
    const bool all_pos = std::all_of(v.f.begin(), v.f.end(),
                                     [&](double x) { return x > tol.cls; });
    if (all_pos) {
        by_signs = Location::Interior;
    } else {
        std::size_t k = 0;
        while (k < v.f.size() && std::abs(v.f[k]) <= tol.cls) ++k;
        const bool rest_pos =
            std::all_of(v.f.begin() + static_cast<std::ptrdiff_t>(k), v.f.end(),
                        [&](double x) { return x > tol.cls; });
        if (k >= 1 && rest_pos) {
            by_signs = Location::Boundary;
            sign_stratum = static_cast<int>(k);
        } else {
            by_signs = Location::Exterior;
        }
    }
    v.dual_agrees =
        by_signs == v.location && (v.location != Location::Boundary || sign_stratum == v.stratum);
    return v;
}

}  // namespace

std::array<double, 3> inequality_values_v(const AlbertElement& x) {
    const MinimalPolynomial m = minimal_polynomial(x, x);
    const double s1 = m.herm.real();
    const double s2 = m.herm_sharp.real();
    const double s3 = m.det_term.real();
    return {1.0 - s1 + s2 - s3, 3.0 - 2.0 * s1 + s2, 3.0 - s1};
}

std::array<double, 2> inequality_values_w(const WElement& x) {
    const MinimalPolynomial m = minimal_polynomial_w(x, x);
    const double s1 = m.herm.real();
    const double s2 = m.herm_sharp.real();
    return {1.0 - s1 + s2, 2.0 - s1};
}

DomainVerdict classify_v(const AlbertElement& x, const Tolerances& tol) {
    const auto croots = roots_monic_cubic(minimal_polynomial(x, x).monic_cubic());
    std::vector<double> roots;
    for (const auto& r : croots) roots.push_back(std::max(r.real(), 0.0));
    const auto f = inequality_values_v(x);
    return verdict_from_roots(std::move(roots), {f.begin(), f.end()}, tol);
}

DomainVerdict classify_w(const WElement& x, const Tolerances& tol) {
    const MinimalPolynomial m = minimal_polynomial_w(x, x);
    const double s1 = m.herm.real();
    const double s2 = m.herm_sharp.real();
    const double disc = std::max(s1 * s1 - 4.0 * s2, 0.0);
    const double sq = std::sqrt(disc);
    std::vector<double> roots = {std::max((s1 + sq) / 2.0, 0.0), std::max((s1 - sq) / 2.0, 0.0)};
    const auto g = inequality_values_w(x);
    return verdict_from_roots(std::move(roots), {g.begin(), g.end()}, tol);
}

StratumProjection project_to_stratum_frame(const AlbertElement& x, const Tolerances& tol) {
    const DomainVerdict v = classify_v(x, tol);
    if (v.location != Location::Boundary) {
        throw std::invalid_argument("project_to_stratum_frame: point is not on the boundary");
    }

    const SpectralDecomposition sd = spectral_decompose(x, tol);
    StratumProjection out;
    out.stratum = v.stratum;
    out.low_confidence = sd.low_confidence;

    AlbertElement e = AlbertElement::zero();
    bool found = false;
    for (const auto& [lambda, trip] : sd.pairs) {
        if (std::abs(lambda - 1.0) < std::max(tol.cls, sd.merge_tolerance)) {
            e += trip;
            found = true;
        } else if (std::abs(lambda - 1.0) < 10.0 * std::max(tol.cls, sd.merge_tolerance)) {
            out.low_confidence = true;
        }
    }
    if (!found) {
        throw std::runtime_error("project_to_stratum_frame: no unit singular value found");
    }
    out.tripotent = e;
    out.residual = x - e;

    const auto cert = classify_tripotent(e, tol);
    if (!cert || cert->rank != v.stratum) out.low_confidence = true;

    if (cert) {
        const PeirceDecomposition p = peirce(*cert);
        const ComplexVector y = out.residual.to_vector();
        out.peirce_zero_residual = ((p.p1 + p.p2) * y).norm();
    }
    const auto yroots = roots_monic_cubic(minimal_polynomial(out.residual, out.residual).monic_cubic());
    for (const auto& r : yroots) {
        if (r.real() > tol.cls) out.residual_roots.push_back(r.real());
    }
    std::sort(out.residual_roots.rbegin(), out.residual_roots.rend());
    return out;
}

bool shilov_test_v(const AlbertElement& x, const Tolerances& tol) {
    if (coord_norm(x) < tol.cls) return false;
    return is_maximal_frame_element(x, tol);
}

bool shilov_test_w(const WElement& x, const Tolerances& tol) {
    const AlbertElement sharp = sharp_w(x);
    return std::abs(hermitian_product(x, x).real() - 2.0) < tol.cls &&
           std::abs(hermitian_product(sharp, sharp).real() - 1.0) < tol.cls;
}

namespace {

BoundaryReport report_from_parts(int rank, int d0, int d1, int d2, int normal_dim, int total_rank) {
    BoundaryReport r;
    r.rank = rank;
    r.d0 = d0;
    r.d1 = d1;
    r.d2 = d2;
    r.normal_dim_real = normal_dim;
    r.stratum_cr_s = d1 + d0;
    r.stratum_cr_t = normal_dim;
    r.manifold_cr_s = d1;
    r.manifold_cr_t = normal_dim;
    r.stratum_dim_real = 2 * (d1 + d0) + normal_dim;
    r.manifold_dim_real = 2 * d1 + normal_dim;
    r.affine_rank = total_rank - rank;
    return r;
}

}  // namespace

BoundaryReport boundary_report(const TripotentCertificate& e, const Tolerances& tol) {
    if (e.rank == 0) throw std::invalid_argument("boundary_report: rank-0 tripotent has no stratum");
    const PeirceDecomposition p = peirce(e);
    const auto [dplus, dminus] = q_involution_split(e, tol);
    if (dplus != p.d2 || dminus != p.d2) {
        throw std::runtime_error("Q(e) eigenspace dimensions disagree with dim V2(e)");
    }
    return report_from_parts(e.rank, p.d0, p.d1, p.d2, dplus, 3);
}

BoundaryReport boundary_report_w(const WTripotentCertificate& e, const Tolerances& tol) {
    if (e.rank == 0) throw std::invalid_argument("boundary_report: rank-0 tripotent has no stratum");
    const PeirceDecomposition p = peirce_w(e);
    const auto [dplus, dminus] = q_involution_split_w(e, tol);
    if (dplus != p.d2 || dminus != p.d2) {
        throw std::runtime_error("Q(e) eigenspace dimensions disagree with dim W2(e)");
    }
    return report_from_parts(e.rank, p.d0, p.d1, p.d2, dplus, 2);
}

std::string to_string(Location loc) {
    switch (loc) {
        case Location::Interior: return "interior";
        case Location::Boundary: return "boundary";
        case Location::Exterior: return "exterior";
    }
    return "unknown";
}

}  // namespace excdom
