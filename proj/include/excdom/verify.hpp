#ifndef EXCDOM_VERIFY_HPP
#define EXCDOM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "excdom/sampling.hpp"

namespace excdom {

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    int trials = 0;
    bool pass = false;
};

/// Sample counts per identity family. Defaults match the acceptance suite;
/// the CLI can override them uniformly for quicker runs.
struct SuiteCounts {
    int composition = 1000;  // per algebra model
    int albert = 500;
    int jts = 500;
    int trace_v = 500;
    int bergman_v = 200;
    int trace_w = 300;
    int bergman_w = 200;
    int w_consistency = 200;
    int spectral = 200;
    int classify = 1000;
    int projection = 200;
    int compactify = 500;
    int kernel = 100;
    int peirce_random = 6;

    static SuiteCounts uniform(int n);
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    SuiteCounts counts{};
    Tolerances tol{};
    bool inject_perturbation = false;  // negative-control hook: forces a failure
};

std::vector<CheckResult> suite_composition_algebras(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_dimension_ladder(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_albert_identities(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_jts_axioms(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_trace_determinant(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_minimal_polynomial(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_w_consistency(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_spectral(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_peirce_census(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_numerical_invariants(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_boundary_classification(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_stratum_projection(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_compactification(Sampler& rng, const VerifyOptions& o);
std::vector<CheckResult> suite_kernel_lemma(Sampler& rng, const VerifyOptions& o);

/// Runs every suite in a fixed order with a sampler seeded from o.seed.
std::vector<CheckResult> run_verification(const VerifyOptions& o);

}  // namespace excdom

#endif
