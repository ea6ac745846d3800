#ifndef EXCDOM_SAMPLING_HPP
#define EXCDOM_SAMPLING_HPP

#include <random>

#include "excdom/domains.hpp"

namespace excdom {

/// Deterministic sampling: a fixed seed reproduces every draw exactly.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double gaussian() { return normal_(gen_); }
    Complex gaussian_complex() { return {normal_(gen_), normal_(gen_)}; }

    Octonion octonion();
    Octonion real_octonion();

    /// beta = b1 + i b2 with (b1:b2) = 0, n(b1) = n(b2) = 1/4; then
    /// (beta|beta) = 1 and n(beta) = 0.
    Octonion null_unit_octonion();

    AlbertElement albert();
    WElement w_element();
    CompositionElement composition(const AlgebraSignature& sig);

    /// Gaussian coordinates drawn from {-2,...,2}: products of such elements
    /// stay exact in double precision.
    CompositionElement integer_composition(const AlgebraSignature& sig);

    /// Random tripotent of rank k, built from the spectral frame of a random
    /// element with well-separated singular values.
    AlbertElement rank_k_tripotent(int k, const Tolerances& tol = default_tolerances);

    std::mt19937_64& raw() { return gen_; }

  private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Largest singular value: sqrt of the largest root of m(T;x,x).
double spectral_norm(const AlbertElement& x);
double spectral_norm(const WElement& x);

/// Rescale so the largest singular value equals `target` (the canonical way
/// to manufacture boundary points). Throws on zero input.
AlbertElement rescale_to_spectral_norm(const AlbertElement& x, double target);
WElement rescale_to_spectral_norm(const WElement& x, double target);

}  // namespace excdom

#endif
