#include "excdom/jts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace excdom {

AlbertElement q_apply(const AlbertElement& x, const AlbertElement& y) {
    return hermitian_product(x, y) * x - cross(adjoint(x), complex_conjugate(y));
}

AlbertElement triple(const AlbertElement& x, const AlbertElement& y, const AlbertElement& z) {
    return hermitian_product(x, y) * z + hermitian_product(z, y) * x -
           cross(cross(x, z), complex_conjugate(y));
}

DenseOperator d_operator(const AlbertElement& x, const AlbertElement& y) {
    DenseOperator m(AlbertElement::kDim, AlbertElement::kDim);
    for (std::size_t k = 0; k < AlbertElement::kDim; ++k) {
        m.col(static_cast<Eigen::Index>(k)) = triple(x, y, AlbertElement::basis(k)).to_vector();
    }
    return m;
}

DenseOperator bergman_operator(const AlbertElement& x, const AlbertElement& y) {
    DenseOperator m(AlbertElement::kDim, AlbertElement::kDim);
    for (std::size_t k = 0; k < AlbertElement::kDim; ++k) {
        const AlbertElement b = AlbertElement::basis(k);
        const AlbertElement col = b - triple(x, y, b) + q_apply(x, q_apply(y, b));
        m.col(static_cast<Eigen::Index>(k)) = col.to_vector();
    }
    return m;
}

AlbertElement power(const AlbertElement& x, int k, const AlbertElement& y) {
    if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
    AlbertElement p = x;
    for (int i = 1; i < k; ++i) p = 0.5 * triple(x, y, p);
    return p;
}

AlbertElement odd_power(const AlbertElement& x, int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("odd_power: exponent must be odd and >= 1");
    return power(x, (m + 1) / 2, x);
}

CubicPolynomial MinimalPolynomial::monic_cubic() const {
    CubicPolynomial p;
    if (degree == 3) {
        p.c = {-det_term, herm_sharp, -herm, Complex(1.0)};
    } else {
        // T * (T^2 - herm T + herm_sharp)
        p.c = {Complex(0.0), herm_sharp, -herm, Complex(1.0)};
    }
    return p;
}

MinimalPolynomial minimal_polynomial(const AlbertElement& x, const AlbertElement& y) {
    MinimalPolynomial m;
    m.degree = 3;
    m.herm = hermitian_product(x, y);
    m.herm_sharp = hermitian_product(adjoint(x), adjoint(y));
    m.det_term = determinant(x) * std::conj(determinant(y));
    return m;
}

namespace {

struct Certificates {
    double tripotency = 0.0;
    double orthogonality = 0.0;
    double reconstruction = 0.0;
};

Certificates certify(const AlbertElement& x, const std::vector<double>& lambdas,
                     const std::vector<AlbertElement>& es) {
    Certificates c;
    AlbertElement recon = AlbertElement::zero();
    for (std::size_t i = 0; i < es.size(); ++i) {
        c.tripotency = std::max(c.tripotency, coord_norm(triple(es[i], es[i], es[i]) - 2.0 * es[i]));
        recon += lambdas[i] * es[i];
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            c.orthogonality = std::max(c.orthogonality, d_operator(es[i], es[j]).norm());
        }
    }
    c.reconstruction = coord_norm(x - recon);
    return c;
}

// Recover one tripotent per node from the odd powers of x.
std::vector<AlbertElement> recover_frame(const AlbertElement& x, const std::vector<double>& nodes) {
    std::vector<ComplexVector> rhs;
    AlbertElement p = x;
    rhs.push_back(p.to_vector());
    for (std::size_t k = 1; k < nodes.size(); ++k) {
        p = 0.5 * triple(x, x, p);
        rhs.push_back(p.to_vector());
    }
    const auto sols = solve_vandermonde(nodes, rhs, 0.0);
    std::vector<AlbertElement> es;
    es.reserve(sols.size());
    for (const auto& v : sols) es.push_back(AlbertElement::from_vector(v));
    return es;
}

// Group sorted-descending lambdas whose gap is below `window`; each group is
// represented by the mean of its member roots (the root sums are determined
// by the coefficients far more accurately than the individual cluster
// members).
std::vector<double> group_by_gap(const std::vector<double>& roots, double window) {
    std::vector<double> nodes;
    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t j = i + 1;
        while (j < roots.size() &&
               std::sqrt(std::max(roots[i], 0.0)) - std::sqrt(std::max(roots[j], 0.0)) < window) {
            ++j;
        }
        double mean = 0.0;
        for (std::size_t t = i; t < j; ++t) mean += roots[t];
        mean /= static_cast<double>(j - i);
        nodes.push_back(std::sqrt(std::max(mean, 0.0)));
        i = j;
    }
    return nodes;
}

}  // namespace

SpectralDecomposition spectral_decompose(const AlbertElement& x, const Tolerances& tol) {
    SpectralDecomposition out;

    const MinimalPolynomial mp = minimal_polynomial(x, x);
    const auto croots = roots_monic_cubic(mp.monic_cubic());
    std::vector<double> roots;
    for (const auto& r : croots) roots.push_back(std::max(r.real(), 0.0));
    std::sort(roots.rbegin(), roots.rend());

    const double lambda_max = std::sqrt(roots.front());
    const double merge_window = 1e-6 * (1.0 + lambda_max);
    out.merge_tolerance = merge_window;

    // Drop the zero part: x has no component along singular value 0.
    std::vector<double> positive;
    for (double r : roots) {
        if (r > tol.cls) positive.push_back(r);
    }
    if (positive.empty()) {
        out.reconstruction_residual = coord_norm(x);
        return out;
    }

    // Flag separations in the ambiguous band just above the merge window.
    for (std::size_t i = 0; i + 1 < positive.size(); ++i) {
        const double gap = std::sqrt(positive[i]) - std::sqrt(positive[i + 1]);
        if (gap >= merge_window && gap < 10.0 * merge_window) out.low_confidence = true;
    }

    const double cert_scale = 1.0 + coord_norm(x);
    double window = merge_window;
    std::vector<double> nodes;
    std::vector<AlbertElement> es;
    Certificates certs;
    while (true) {
        nodes = group_by_gap(positive, window);
        es = recover_frame(x, nodes);
        certs = certify(x, nodes, es);
        const bool ok = certs.tripotency < tol.cls * cert_scale &&
                        certs.orthogonality < tol.cls * cert_scale &&
                        certs.reconstruction < tol.cls * cert_scale;
        if (ok || nodes.size() == 1) {
            if (!ok) out.low_confidence = true;
            break;
        }
        // Coarsen: widen the window past the smallest surviving gap, with
        // geometric growth so the loop always terminates.
        double smallest = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            smallest = std::min(smallest, nodes[i] - nodes[i + 1]);
        }
        window = std::max(window * 4.0, smallest * (1.0 + 1e-9));
        out.low_confidence = true;
    }

    out.merge_tolerance = window;
    out.tripotency_residual = certs.tripotency;
    out.orthogonality_residual = certs.orthogonality;
    out.reconstruction_residual = certs.reconstruction;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out.pairs.push_back({nodes[i], es[i]});
    }
    return out;
}

int rank(const AlbertElement& x, const Tolerances& tol) {
    const auto croots = roots_monic_cubic(minimal_polynomial(x, x).monic_cubic());
    int r = 0;
    for (const auto& root : croots) {
        if (root.real() > tol.cls) ++r;
    }
    return r;
}

}  // namespace excdom
