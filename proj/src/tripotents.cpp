#include "excdom/tripotents.hpp"

#include <cmath>
#include <stdexcept>

namespace excdom {

namespace {

int trace_dimension(const DenseOperator& p) {
    const double t = p.trace().real();
    const double r = std::round(t);
    if (std::abs(t - r) > 0.01 || std::abs(p.trace().imag()) > 0.01) {
        throw std::runtime_error("projector trace is not close to an integer; input is not a tripotent");
    }
    return static_cast<int>(r);
}

// Real 2n x 2n form of the antilinear map y -> Q(e)y, basis (e_k, i e_k).
Eigen::MatrixXd realify_q(const AlbertElement& e) {
    const auto n = static_cast<Eigen::Index>(AlbertElement::kDim);
    Eigen::MatrixXd a(2 * n, 2 * n);
    for (Eigen::Index k = 0; k < 2 * n; ++k) {
        ComplexVector u = ComplexVector::Zero(n);
        u(k % n) = (k < n) ? Complex(1.0) : Complex(0.0, 1.0);
        const ComplexVector w = q_apply(e, AlbertElement::from_vector(u)).to_vector();
        a.col(k).head(n) = w.real();
        a.col(k).tail(n) = w.imag();
    }
    return a;
}

Eigen::MatrixXd realify_linear(const DenseOperator& m) {
    const Eigen::Index n = m.rows();
    Eigen::MatrixXd a(2 * n, 2 * n);
    a.topLeftCorner(n, n) = m.real();
    a.topRightCorner(n, n) = -m.imag();
    a.bottomLeftCorner(n, n) = m.imag();
    a.bottomRightCorner(n, n) = m.real();
    return a;
}

}  // namespace

std::optional<TripotentCertificate> classify_tripotent(const AlbertElement& x,
                                                       const Tolerances& tol) {
    const double nx = coord_norm(x);
    const double residual = coord_norm(triple(x, x, x) - 2.0 * x);
    if (!std::isfinite(nx) || !std::isfinite(residual)) {
        throw std::runtime_error("tripotent classification: non-finite input");
    }
    if (residual >= tol.cls * (1.0 + nx * nx * nx)) return std::nullopt;

    TripotentCertificate cert;
    cert.element = x;
    cert.triple_residual = residual;
    cert.invariants = {hermitian_product(x, x).real(),
                       hermitian_product(adjoint(x), adjoint(x)).real(),
                       std::norm(determinant(x))};

    static constexpr std::array<std::array<double, 3>, 4> expected = {
        {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {2.0, 1.0, 0.0}, {3.0, 3.0, 1.0}}};
    const int k = static_cast<int>(std::round(cert.invariants[0]));
    if (k < 0 || k > 3) {
        throw std::runtime_error("tripotent invariants inconsistent: (x|x) not in 0..3");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(cert.invariants[i] - expected[static_cast<std::size_t>(k)][i]) >
            tol.cls * (1.0 + nx * nx * nx)) {
            throw std::runtime_error("tripotent invariants inconsistent with every rank");
        }
    }
    cert.rank = k;
    return cert;
}

PeirceDecomposition peirce_from_d_matrix(const DenseOperator& d) {
    const Eigen::Index n = d.rows();
    const DenseOperator id = DenseOperator::Identity(n, n);
    PeirceDecomposition p;
    p.p0 = 0.5 * (d - id) * (d - 2.0 * id);
    p.p1 = -d * (d - 2.0 * id);
    p.p2 = 0.5 * d * (d - id);
    p.d0 = trace_dimension(p.p0);
    p.d1 = trace_dimension(p.p1);
    p.d2 = trace_dimension(p.p2);

    double res = (p.p0 + p.p1 + p.p2 - id).norm();
    const std::array<const DenseOperator*, 3> ps = {&p.p0, &p.p1, &p.p2};
    for (std::size_t i = 0; i < 3; ++i) {
        res = std::max(res, ((*ps[i]) * (*ps[i]) - *ps[i]).norm());
        for (std::size_t j = 0; j < 3; ++j) {
            if (i != j) res = std::max(res, ((*ps[i]) * (*ps[j])).norm());
        }
    }
    p.projector_residual = res;
    return p;
}

PeirceDecomposition peirce(const TripotentCertificate& e) {
    return peirce_from_d_matrix(d_operator(e.element, e.element));
}

std::pair<int, int> q_involution_split(const TripotentCertificate& e, const Tolerances& tol) {
    const Eigen::MatrixXd a = realify_q(e.element);
    const Eigen::MatrixXd a2 = a * a;

    const PeirceDecomposition p = peirce(e);
    const Eigen::MatrixXd p2r = realify_linear(p.p2);
    const Eigen::Index n2 = a.rows();
    const double scale = 1.0 + static_cast<double>(n2);
    if ((a2 - p2r).norm() > tol.cls * scale) {
        throw std::runtime_error("Q(e) squared does not match the projector onto V2(e)");
    }
    if ((a * (Eigen::MatrixXd::Identity(n2, n2) - p2r)).norm() > tol.cls * scale) {
        throw std::runtime_error("Q(e) does not vanish on V1(e) + V0(e)");
    }

    const double tr_a = a.trace();
    const double tr_a2 = a2.trace();
    const double dplus = 0.5 * (tr_a2 + tr_a);
    const double dminus = 0.5 * (tr_a2 - tr_a);
    if (std::abs(dplus - std::round(dplus)) > 0.01 || std::abs(dminus - std::round(dminus)) > 0.01) {
        throw std::runtime_error("Q(e) eigenspace dimensions are not integral");
    }
    return {static_cast<int>(std::round(dplus)), static_cast<int>(std::round(dminus))};
}

bool are_orthogonal(const TripotentCertificate& e, const TripotentCertificate& f,
                    const Tolerances& tol) {
    const double scale =
        (1.0 + coord_norm(e.element)) * (1.0 + coord_norm(f.element));
    const bool orth = d_operator(e.element, f.element).norm() < tol.cls * scale;
    if (orth && std::abs(hermitian_product(e.element, f.element)) > tol.cls * scale) {
        throw std::runtime_error("orthogonal tripotents with nonzero Hermitian product");
    }
    return orth;
}

bool is_maximal_frame_element(const AlbertElement& x, const Tolerances& tol) {
    const double nx = coord_norm(x);
    if (nx == 0.0) throw std::invalid_argument("is_maximal_frame_element: x must be nonzero");
    const AlbertElement rhs = determinant(x) * adjoint(complex_conjugate(x));
    return coord_norm(x - rhs) < tol.cls * (1.0 + nx * nx * nx);
}

FrameInvariants census_from_projectors(const std::vector<PeirceDecomposition>& ps) {
    FrameInvariants inv;
    inv.r = static_cast<int>(ps.size());
    if (ps.size() < 2) {
        throw std::invalid_argument("census needs a frame of at least two tripotents");
    }
    inv.a = trace_dimension(ps[0].p1 * ps[1].p1);
    DenseOperator zero_others = ps[0].p1;
    for (std::size_t j = 1; j < ps.size(); ++j) zero_others = zero_others * ps[j].p0;
    inv.b = trace_dimension(zero_others);
    inv.g = 2 + inv.a * (inv.r - 1) + inv.b;
    return inv;
}

FrameInvariants frame_invariants(const std::vector<AlbertElement>& frame, const Tolerances& tol) {
    std::vector<PeirceDecomposition> ps;
    for (const auto& f : frame) {
        const auto cert = classify_tripotent(f, tol);
        if (!cert || cert->rank != 1) {
            throw std::invalid_argument("frame elements must be minimal tripotents");
        }
        ps.push_back(peirce(*cert));
    }
    return census_from_projectors(ps);
}

}  // namespace excdom
