// Acceptance suite: every release criterion exercised at full sample counts,
// one PASS/FAIL line per criterion. Exit status 0 iff all criteria pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "excdom/verify.hpp"

using namespace excdom;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> prefixes;  // matching check-name prefixes
    double runtime_limit_s = 0.0;       // 0 = unconstrained
    double elapsed_s = 0.0;
};

bool name_matches(const std::string& name, const std::vector<std::string>& prefixes) {
    for (const auto& p : prefixes) {
        if (name.rfind(p, 0) == 0) return true;
    }
    return false;
}

}  // namespace

int main() {
    VerifyOptions options;
    options.seed = 20240915;

    Sampler rng(options.seed);
    std::vector<CheckResult> results;
    const auto run = [&](auto&& suite, double* elapsed = nullptr) {
        const auto t0 = std::chrono::steady_clock::now();
        auto part = suite(rng, options);
        const auto t1 = std::chrono::steady_clock::now();
        if (elapsed) *elapsed = std::chrono::duration<double>(t1 - t0).count();
        for (auto& r : part) results.push_back(std::move(r));
    };

    std::vector<Criterion> criteria = {
        {1, "composition-algebra identity corpus, 11 models x 1000 samples", {"composition/"}, 10.0},
        {2, "dimension ladder: alternativity holds through dim 8, fails at dim 16", {"ladder/"}},
        {3, "adjoint/cross identity family on 500 random triples", {"albert/"}},
        {4, "Jordan triple axioms J1 and J2 on 500 random triples", {"jts/"}},
        {5, "operator trace and Bergman determinant identities (V and W)", {"trace-det/"}, 60.0},
        {6, "generic minimal polynomial, diagonal (1,2,3) benchmark", {"minpoly/"}},
        {7, "Peirce census and projector algebra (V and W)", {"peirce/", "w/"}},
        {8, "numerical invariants a,b,r,g recomputed from frames", {"invariants/"}},
        {9, "boundary stratification with dual-method agreement", {"domains/", "spectral/"}},
        {10, "stratum projection recovers synthetic tripotents", {"projection/"}},
        {11, "projective compactifications: membership and round trips", {"compactify/"}},
        {12, "kernel lemma for null octonions: dims 4+4 and reconstruction", {"kernel/"}},
    };

    run([](Sampler& r, const VerifyOptions& o) { return suite_composition_algebras(r, o); },
        &criteria[0].elapsed_s);
    run([](Sampler& r, const VerifyOptions& o) { return suite_dimension_ladder(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_albert_identities(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_jts_axioms(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_trace_determinant(r, o); },
        &criteria[4].elapsed_s);
    run([](Sampler& r, const VerifyOptions& o) { return suite_minimal_polynomial(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_w_consistency(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_spectral(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_peirce_census(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_numerical_invariants(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_boundary_classification(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_stratum_projection(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_compactification(r, o); });
    run([](Sampler& r, const VerifyOptions& o) { return suite_kernel_lemma(r, o); });

    bool all_pass = true;
    for (auto& c : criteria) {
        bool pass = true;
        double worst = 0.0;
        std::string worst_name;
        int covered = 0;
        for (const auto& r : results) {
            if (!name_matches(r.name, c.prefixes)) continue;
            ++covered;
            const double ratio = r.tolerance > 0.0 ? r.max_residual / r.tolerance : 1.0;
            if (ratio > worst) {
                worst = ratio;
                worst_name = r.name;
            }
            pass = pass && r.pass;
        }
        if (covered == 0) pass = false;
        if (c.runtime_limit_s > 0.0 && c.elapsed_s > c.runtime_limit_s) pass = false;

        std::printf("CRITERION %2d: %s  %s (checks=%d, worst=%s at %.2e of tolerance",
                    c.id, pass ? "PASS" : "FAIL", c.title.c_str(), covered,
                    worst_name.c_str(), worst);
        if (c.runtime_limit_s > 0.0) {
            std::printf(", runtime %.2fs/%.0fs", c.elapsed_s, c.runtime_limit_s);
        }
        std::printf(")\n");
        all_pass = all_pass && pass;
    }

    std::printf("%s\n", all_pass ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
