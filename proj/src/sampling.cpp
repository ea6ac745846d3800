#include "excdom/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace excdom {

Octonion Sampler::octonion() {
    Octonion x;
    for (auto& c : x.c) c = gaussian_complex();
    return x;
}

Octonion Sampler::real_octonion() {
    Octonion x;
    for (auto& c : x.c) c = Complex(gaussian());
    return x;
}

Octonion Sampler::null_unit_octonion() {
    Octonion b1 = real_octonion();
    Octonion b2 = real_octonion();
    // Gram-Schmidt in the Euclidean real form, then normalize to n = 1/4.
    const double n1 = quad_norm(b1).real();
    b1 *= Complex(0.5 / std::sqrt(n1));
    const Complex proj = bilinear_form(b2, b1) / bilinear_form(b1, b1);
    b2 -= proj * b1;
    const double n2 = quad_norm(b2).real();
    b2 *= Complex(0.5 / std::sqrt(n2));
    return b1 + Complex(0.0, 1.0) * b2;
}

AlbertElement Sampler::albert() {
    AlbertElement x;
    for (auto& a : x.alpha) a = gaussian_complex();
    for (auto& o : x.off) o = octonion();
    return x;
}

WElement Sampler::w_element() { return WElement{octonion(), octonion()}; }

CompositionElement Sampler::composition(const AlgebraSignature& sig) {
    CompositionElement x(sig);
    for (std::size_t i = 0; i < sig.dimension(); ++i) {
        x[i] = sig.field == Field::Real ? Complex(gaussian()) : gaussian_complex();
    }
    return x;
}

CompositionElement Sampler::integer_composition(const AlgebraSignature& sig) {
    std::uniform_int_distribution<int> dist(-2, 2);
    CompositionElement x(sig);
    for (std::size_t i = 0; i < sig.dimension(); ++i) {
        const double re = dist(gen_);
        const double im = sig.field == Field::Real ? 0.0 : dist(gen_);
        x[i] = Complex(re, im);
    }
    return x;
}

AlbertElement Sampler::rank_k_tripotent(int k, const Tolerances& tol) {
    if (k < 1 || k > 3) throw std::invalid_argument("rank_k_tripotent: k must be 1..3");
    for (int attempt = 0; attempt < 64; ++attempt) {
        const AlbertElement x = albert();
        const SpectralDecomposition sd = spectral_decompose(x, tol);
        if (static_cast<int>(sd.pairs.size()) != 3 || sd.low_confidence) continue;
        // Demand honest separation so the recovered frame is accurate.
        bool separated = true;
        for (std::size_t i = 0; i + 1 < sd.pairs.size(); ++i) {
            if (sd.pairs[i].lambda - sd.pairs[i + 1].lambda < 0.05 * (1.0 + sd.pairs[0].lambda)) {
                separated = false;
            }
        }
        if (!separated || sd.tripotency_residual > 1e-9 * (1.0 + coord_norm(x))) continue;
        AlbertElement e = AlbertElement::zero();
        for (int i = 0; i < k; ++i) e += sd.pairs[static_cast<std::size_t>(i)].tripotent;
        if (classify_tripotent(e, tol)) return e;
    }
    throw std::runtime_error("rank_k_tripotent: no well-separated sample found");
}

double spectral_norm(const AlbertElement& x) {
    const auto roots = roots_monic_cubic(minimal_polynomial(x, x).monic_cubic());
    double rmax = 0.0;
    for (const auto& r : roots) rmax = std::max(rmax, r.real());
    return std::sqrt(std::max(rmax, 0.0));
}

double spectral_norm(const WElement& x) {
    const MinimalPolynomial m = minimal_polynomial_w(x, x);
    const double s1 = m.herm.real();
    const double s2 = m.herm_sharp.real();
    const double disc = std::max(s1 * s1 - 4.0 * s2, 0.0);
    return std::sqrt(std::max((s1 + std::sqrt(disc)) / 2.0, 0.0));
}

AlbertElement rescale_to_spectral_norm(const AlbertElement& x, double target) {
    const double s = spectral_norm(x);
    if (s <= 0.0) throw std::invalid_argument("rescale_to_spectral_norm: zero element");
    return Complex(target / s) * x;
}

WElement rescale_to_spectral_norm(const WElement& x, double target) {
    const double s = spectral_norm(x);
    if (s <= 0.0) throw std::invalid_argument("rescale_to_spectral_norm: zero element");
    return Complex(target / s) * x;
}

}  // namespace excdom
