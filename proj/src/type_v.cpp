#include "excdom/type_v.hpp"

#include <cmath>
#include <stdexcept>

namespace excdom {

WElement WElement::from_vector(const ComplexVector& v) {
    if (v.size() != kDim) {
        throw std::invalid_argument("expected a 16-dimensional coordinate vector");
    }
    WElement x;
    for (std::size_t i = 0; i < 8; ++i) {
        x.b.c[i] = v(static_cast<Eigen::Index>(i));
        x.c.c[i] = v(static_cast<Eigen::Index>(8 + i));
    }
    return x;
}

ComplexVector WElement::to_vector() const {
    ComplexVector v(kDim);
    for (std::size_t i = 0; i < 8; ++i) {
        v(static_cast<Eigen::Index>(i)) = b.c[i];
        v(static_cast<Eigen::Index>(8 + i)) = c.c[i];
    }
    return v;
}

WElement WElement::basis(std::size_t k) {
    ComplexVector v = ComplexVector::Zero(kDim);
    v(static_cast<Eigen::Index>(k)) = Complex(1.0);
    return from_vector(v);
}

WElement& WElement::operator+=(const WElement& rhs) {
    b += rhs.b;
    c += rhs.c;
    return *this;
}

WElement& WElement::operator-=(const WElement& rhs) {
    b -= rhs.b;
    c -= rhs.c;
    return *this;
}

WElement& WElement::operator*=(Complex s) {
    b *= s;
    c *= s;
    return *this;
}

WElement operator+(WElement a, const WElement& b) { return a += b; }
WElement operator-(WElement a, const WElement& b) { return a -= b; }
WElement operator*(Complex s, WElement a) { return a *= s; }
WElement operator-(WElement a) { return a *= Complex(-1.0); }

AlbertElement embed(const WElement& x) {
    AlbertElement a;
    a.off[1] = x.b;
    a.off[2] = x.c;
    return a;
}

WElement restrict_to_w(const AlbertElement& a, const Tolerances& tol) {
    double outside = coord_norm2(a.off[0]);
    for (const auto& al : a.alpha) outside += std::norm(al);
    if (std::sqrt(outside) > tol.cls * (1.0 + coord_norm(a))) {
        throw std::invalid_argument("element has mass outside the F2+F3 subspace");
    }
    return WElement{a.off[1], a.off[2]};
}

Complex hermitian_product(const WElement& a, const WElement& b) {
    return hermitian_form(a.b, b.b) + hermitian_form(a.c, b.c);
}

double coord_norm(const WElement& a) { return std::sqrt(coord_norm2(a.b) + coord_norm2(a.c)); }

AlbertElement sharp_w(const WElement& x) {
    AlbertElement out;
    out.alpha[1] = -quad_norm(x.b);
    out.alpha[2] = -quad_norm(x.c);
    out.off[0] = cayley_conj(x.b * x.c);
    return out;
}

WElement q_apply_w(const WElement& x, const WElement& y) {
    const Octonion yb = cayley_conj(bar(y.b));
    const Octonion yc_bar = bar(y.c);
    const Octonion yc = cayley_conj(yc_bar);
    WElement out;
    out.b = (x.b * yb) * x.b + (x.b * yc_bar) * cayley_conj(x.c);
    out.c = cayley_conj(x.b) * (bar(y.b) * x.c) + (x.c * yc) * x.c;
    return out;
}

WElement triple_w(const WElement& x, const WElement& y, const WElement& z) {
    const Octonion yb_bar = bar(y.b);
    const Octonion yb_bar_conj = cayley_conj(yb_bar);
    const Octonion yc_bar = bar(y.c);
    const Octonion yc_bar_conj = cayley_conj(yc_bar);
    WElement out;
    out.b = (x.b * yb_bar_conj) * z.b + (z.b * yb_bar_conj) * x.b +
            (x.b * yc_bar) * cayley_conj(z.c) + (z.b * yc_bar) * cayley_conj(x.c);
    out.c = cayley_conj(x.b) * (yb_bar * z.c) + cayley_conj(z.b) * (yb_bar * x.c) +
            x.c * (yc_bar_conj * z.c) + z.c * (yc_bar_conj * x.c);
    return out;
}

DenseOperator d_operator_w(const WElement& x, const WElement& y) {
    DenseOperator m(WElement::kDim, WElement::kDim);
    for (std::size_t k = 0; k < WElement::kDim; ++k) {
        m.col(static_cast<Eigen::Index>(k)) = triple_w(x, y, WElement::basis(k)).to_vector();
    }
    return m;
}

DenseOperator bergman_operator_w(const WElement& x, const WElement& y) {
    DenseOperator m(WElement::kDim, WElement::kDim);
    for (std::size_t k = 0; k < WElement::kDim; ++k) {
        const WElement b = WElement::basis(k);
        const WElement col = b - triple_w(x, y, b) + q_apply_w(x, q_apply_w(y, b));
        m.col(static_cast<Eigen::Index>(k)) = col.to_vector();
    }
    return m;
}

MinimalPolynomial minimal_polynomial_w(const WElement& x, const WElement& y) {
    MinimalPolynomial m;
    m.degree = 2;
    m.herm = hermitian_product(x, y);
    m.herm_sharp = hermitian_product(sharp_w(x), sharp_w(y));
    m.det_term = Complex(0.0);
    return m;
}

namespace {

std::vector<Octonion> column_space_basis(const DenseOperator& m, int expected_rank,
                                         const Tolerances& tol) {
    Eigen::ColPivHouseholderQR<DenseOperator> qr(m);
    qr.setThreshold(tol.cls);
    const int r = static_cast<int>(qr.rank());
    if (r != expected_rank) {
        throw std::runtime_error("kernel basis has unexpected dimension");
    }
    const DenseOperator q = qr.householderQ() * DenseOperator::Identity(m.rows(), r);
    std::vector<Octonion> basis;
    for (int j = 0; j < r; ++j) {
        Octonion v;
        for (std::size_t i = 0; i < 8; ++i) v.c[i] = q(static_cast<Eigen::Index>(i), j);
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

KernelSplit kernel_split(const Octonion& beta, const Tolerances& tol) {
    if (std::abs(hermitian_form(beta, beta) - 1.0) > tol.cls ||
        std::abs(quad_norm(beta)) > tol.cls) {
        throw std::invalid_argument("kernel_split: beta must satisfy (beta|beta)=1, n(beta)=0");
    }
    // ker L(beta) = Im L(~beta)
    KernelSplit split;
    split.ker_beta = column_space_basis(left_mult_operator(cayley_conj(beta)), 4, tol);
    split.ker_beta_bar = column_space_basis(left_mult_operator(cayley_conj(bar(beta))), 4, tol);
    return split;
}

std::optional<WTripotentCertificate> classify_tripotent_w(const WElement& x,
                                                          const Tolerances& tol) {
    const double nx = coord_norm(x);
    const double residual = coord_norm(triple_w(x, x, x) - 2.0 * x);
    if (!std::isfinite(nx) || !std::isfinite(residual)) {
        throw std::runtime_error("tripotent classification: non-finite input");
    }
    if (residual >= tol.cls * (1.0 + nx * nx * nx)) return std::nullopt;

    WTripotentCertificate cert;
    cert.element = x;
    cert.triple_residual = residual;
    const AlbertElement sharp = sharp_w(x);
    cert.invariants = {hermitian_product(x, x).real(), hermitian_product(sharp, sharp).real()};

    static constexpr std::array<std::array<double, 2>, 3> expected = {
        {{0.0, 0.0}, {1.0, 0.0}, {2.0, 1.0}}};
    const int k = static_cast<int>(std::round(cert.invariants[0]));
    if (k < 0 || k > 2) {
        throw std::runtime_error("W tripotent invariants inconsistent: (x|x) not in 0..2");
    }
    for (std::size_t i = 0; i < 2; ++i) {
        if (std::abs(cert.invariants[i] - expected[static_cast<std::size_t>(k)][i]) >
            tol.cls * (1.0 + nx * nx * nx)) {
            throw std::runtime_error("W tripotent invariants inconsistent with every rank");
        }
    }
    cert.rank = k;

    // Consistency with the ambient classification.
    const auto ambient = classify_tripotent(embed(x), tol);
    if (!ambient || ambient->rank != cert.rank) {
        throw std::runtime_error("W tripotent rank disagrees with the ambient classification");
    }
    return cert;
}

PeirceDecomposition peirce_w(const WTripotentCertificate& e) {
    return peirce_from_d_matrix(d_operator_w(e.element, e.element));
}

std::pair<int, int> q_involution_split_w(const WTripotentCertificate& e, const Tolerances& tol) {
    const auto n = static_cast<Eigen::Index>(WElement::kDim);
    Eigen::MatrixXd a(2 * n, 2 * n);
    for (Eigen::Index k = 0; k < 2 * n; ++k) {
        ComplexVector u = ComplexVector::Zero(n);
        u(k % n) = (k < n) ? Complex(1.0) : Complex(0.0, 1.0);
        const ComplexVector w = q_apply_w(e.element, WElement::from_vector(u)).to_vector();
        a.col(k).head(n) = w.real();
        a.col(k).tail(n) = w.imag();
    }
    const Eigen::MatrixXd a2 = a * a;
    const double tr_a = a.trace();
    const double tr_a2 = a2.trace();
    const double dplus = 0.5 * (tr_a2 + tr_a);
    const double dminus = 0.5 * (tr_a2 - tr_a);
    if (std::abs(dplus - std::round(dplus)) > 0.01 || std::abs(dminus - std::round(dminus)) > 0.01) {
        throw std::runtime_error("Q(e) eigenspace dimensions are not integral");
    }
    (void)tol;
    return {static_cast<int>(std::round(dplus)), static_cast<int>(std::round(dminus))};
}

FrameInvariants frame_invariants_w(const std::vector<WElement>& frame, const Tolerances& tol) {
    std::vector<PeirceDecomposition> ps;
    for (const auto& f : frame) {
        const auto cert = classify_tripotent_w(f, tol);
        if (!cert || cert->rank != 1) {
            throw std::invalid_argument("frame elements must be minimal tripotents");
        }
        ps.push_back(peirce_w(*cert));
    }
    return census_from_projectors(ps);
}

}  // namespace excdom
