#include "excdom/compactify.hpp"

#include <cmath>
#include <stdexcept>

namespace excdom {

double FreudenthalPoint::scale() const {
    return std::max({std::abs(lambda), coord_norm(x), coord_norm(y), std::abs(mu)});
}

MembershipResiduals membership_residuals(const FreudenthalPoint& p) {
    const double s2 = p.scale() * p.scale();
    if (s2 == 0.0) {
        throw std::invalid_argument("projective point has all coordinates zero");
    }
    MembershipResiduals r;
    r.adjoint_y = coord_norm(adjoint(p.y) - p.mu * p.x) / s2;
    r.adjoint_x = coord_norm(adjoint(p.x) - p.lambda * p.y) / s2;
    r.pairing = std::abs(scalar_product(p.x, p.y) - 3.0 * p.lambda * p.mu) / s2;
    return r;
}

FreudenthalPoint embed_v(const AlbertElement& x) {
    return FreudenthalPoint{Complex(1.0), x, adjoint(x), determinant(x)};
}

std::optional<AlbertElement> dehomogenize(const FreudenthalPoint& p, const Tolerances& tol) {
    if (membership_residuals(p).max() > tol.cls) {
        throw std::invalid_argument("point does not satisfy the manifold equations");
    }
    if (std::abs(p.lambda) <= tol.cls * p.scale()) return std::nullopt;
    const AlbertElement x = (1.0 / p.lambda) * p.x;
    if (!projectively_equal(embed_v(x), p, tol)) {
        throw std::runtime_error("dehomogenize: round trip is not projectively consistent");
    }
    return x;
}

namespace {

Eigen::VectorXcd flatten(const FreudenthalPoint& p) {
    Eigen::VectorXcd v(2 + 2 * AlbertElement::kDim);
    v(0) = p.lambda;
    v.segment(1, AlbertElement::kDim) = p.x.to_vector();
    v.segment(1 + AlbertElement::kDim, AlbertElement::kDim) = p.y.to_vector();
    v(1 + 2 * AlbertElement::kDim) = p.mu;
    return v;
}

}  // namespace

bool projectively_equal(const FreudenthalPoint& p, const FreudenthalPoint& q,
                        const Tolerances& tol) {
    const Eigen::VectorXcd a = flatten(p);
    const Eigen::VectorXcd b = flatten(q);
    Eigen::Index pivot = 0;
    a.cwiseAbs().maxCoeff(&pivot);
    if (std::abs(b(pivot)) <= tol.cls * b.cwiseAbs().maxCoeff()) return false;
    const Eigen::VectorXcd an = a / a(pivot);
    const Eigen::VectorXcd bn = b / b(pivot);
    return (an - bn).norm() < tol.cls * (1.0 + an.norm() + bn.norm());
}

RankOnePoint embed_w(const WElement& x) {
    const AlbertElement e1 = AlbertElement::diag_unit(0);
    return RankOnePoint{e1 + embed(x) - cross(e1, sharp_w(x))};
}

ConeMembership p_membership(const AlbertElement& z, const Tolerances& tol) {
    const double nz = coord_norm(z);
    if (nz == 0.0) throw std::invalid_argument("p_membership: z must be nonzero");

    ConeMembership m;
    m.cone_residual = coord_norm(adjoint(z)) / (1.0 + nz * nz);
    m.on_cone = m.cone_residual < tol.cls;
    if (!m.on_cone) return m;

    const Complex chart = z.alpha[0];  // (z : e1)
    m.in_chart = std::abs(chart) > tol.cls * nz;
    if (!m.in_chart) return m;

    const AlbertElement zn = (1.0 / chart) * z;
    const WElement x{zn.off[1], zn.off[2]};
    const AlbertElement e1 = AlbertElement::diag_unit(0);
    const AlbertElement expected_v0 = -1.0 * cross(e1, sharp_w(x));
    AlbertElement v0_part = AlbertElement::zero();
    v0_part.alpha[1] = zn.alpha[1];
    v0_part.alpha[2] = zn.alpha[2];
    v0_part.off[0] = zn.off[0];
    m.chart_residual = coord_norm(v0_part - expected_v0) / (1.0 + coord_norm(zn));
    if (m.chart_residual > tol.cls) {
        throw std::runtime_error("p_membership: chart inversion mismatch in the Peirce-zero block");
    }
    m.w = x;
    return m;
}

}  // namespace excdom
