#include "helpers.hpp"

#include <thread>

#include "excdom/domains.hpp"

using namespace excdom;
using excdom::testing::e;
using excdom::testing::null_unit;

TEST_SUITE("domains") {
    TEST_CASE("inequality values on canonical points") {
        const auto f0 = inequality_values_v(AlbertElement::zero());
        CHECK(f0[0] == doctest::Approx(1.0));
        CHECK(f0[1] == doctest::Approx(3.0));
        CHECK(f0[2] == doctest::Approx(3.0));

        const auto f1 = inequality_values_v(e(0));
        CHECK(f1[0] == doctest::Approx(0.0));
        CHECK(f1[1] == doctest::Approx(1.0));
        CHECK(f1[2] == doctest::Approx(2.0));

        const auto f3 = inequality_values_v(AlbertElement::diagonal(1.0, 1.0, 1.0));
        CHECK(std::abs(f3[0]) < 1e-14);
        CHECK(std::abs(f3[1]) < 1e-14);
        CHECK(std::abs(f3[2]) < 1e-14);

        const auto g0 = inequality_values_w(WElement::zero());
        CHECK(g0[0] == doctest::Approx(1.0));
        CHECK(g0[1] == doctest::Approx(2.0));
        const auto g1 = inequality_values_w(WElement{null_unit(), Octonion{}});
        CHECK(std::abs(g1[0]) < 1e-14);
        CHECK(g1[1] == doctest::Approx(1.0));
        const auto g2 = inequality_values_w(WElement{Octonion::unit(), Octonion{}});
        CHECK(std::abs(g2[0]) < 1e-14);
        CHECK(std::abs(g2[1]) < 1e-14);
    }

    TEST_CASE("inequality values match the derivative formulation") {
        Sampler rng(121);
        for (int t = 0; t < 30; ++t) {
            const AlbertElement x = rng.albert();
            const MinimalPolynomial m = minimal_polynomial(x, x);
            const double s1 = m.herm.real(), s2 = m.herm_sharp.real(), s3 = m.det_term.real();
            const auto f = inequality_values_v(x);
            // m(1), m'(1), m''(1)/2 of T^3 - s1 T^2 + s2 T - s3.
            CHECK(f[0] == doctest::Approx(1.0 - s1 + s2 - s3).epsilon(1e-12));
            CHECK(f[1] == doctest::Approx(3.0 - 2.0 * s1 + s2).epsilon(1e-12));
            CHECK(f[2] == doctest::Approx(3.0 - s1).epsilon(1e-12));
        }
    }

    TEST_CASE("classification of canonical points") {
        const auto interior = classify_v(Complex(0.5) * e(0));
        CHECK(interior.location == Location::Interior);
        CHECK(interior.stratum == 0);
        CHECK(interior.dual_agrees);

        const auto s1 = classify_v(e(0));
        CHECK(s1.location == Location::Boundary);
        CHECK(s1.stratum == 1);
        CHECK(s1.dual_agrees);

        const auto s2 = classify_v(e(0) + e(1));
        CHECK(s2.location == Location::Boundary);
        CHECK(s2.stratum == 2);

        const auto s3 = classify_v(AlbertElement::diagonal(1.0, 1.0, 1.0));
        CHECK(s3.location == Location::Boundary);
        CHECK(s3.stratum == 3);

        const auto exterior = classify_v(Complex(2.0) * e(0));
        CHECK(exterior.location == Location::Exterior);
        CHECK(exterior.roots[0] == doctest::Approx(4.0));

        const auto w1 = classify_w(WElement{null_unit(), Octonion{}});
        CHECK(w1.location == Location::Boundary);
        CHECK(w1.stratum == 1);
        const auto w2 = classify_w(WElement{Octonion::unit(), Octonion{}});
        CHECK(w2.location == Location::Boundary);
        CHECK(w2.stratum == 2);
    }

    TEST_CASE("inequality values along a scaled diagonal unit") {
        for (double t : {0.2, 0.5, 0.9}) {
            const auto v = classify_v(Complex(t) * e(0));
            CHECK(v.location == Location::Interior);
            CHECK(v.f[0] == doctest::Approx(1.0 - t * t));
            CHECK(v.f[1] == doctest::Approx(3.0 - 2.0 * t * t));
            CHECK(v.f[2] == doctest::Approx(3.0 - t * t));
        }
    }

    TEST_CASE("interior scaling of a random direction") {
        Sampler rng(122);
        const AlbertElement u = rescale_to_spectral_norm(rng.albert(), 1.0);
        CHECK(classify_v(Complex(0.7) * u).location == Location::Interior);
        CHECK(classify_v(u).location == Location::Boundary);
        CHECK(classify_v(Complex(1.3) * u).location == Location::Exterior);
    }

    TEST_CASE("dual-method agreement on rescaled samples") {
        Sampler rng(123);
        static constexpr std::array<double, 4> scales = {0.5, 0.99, 1.0, 1.5};
        for (int t = 0; t < 60; ++t) {
            const double target = scales[static_cast<std::size_t>(t) % 4];
            const AlbertElement x = rescale_to_spectral_norm(rng.albert(), target);
            const auto v = classify_v(x);
            if (v.margin > 1e-6) CHECK(v.dual_agrees);
        }
    }

    TEST_CASE("stratum projection on diagonal data") {
        const auto p = project_to_stratum_frame(AlbertElement::diagonal(1.0, 0.5, 0.0));
        CHECK(p.stratum == 1);
        CHECK(coord_norm(p.tripotent - e(0)) < 1e-10);
        CHECK(coord_norm(p.residual - Complex(0.5) * e(1)) < 1e-10);
        CHECK(p.peirce_zero_residual < 1e-10);

        const auto p2 = project_to_stratum_frame(e(0) + e(1));
        CHECK(p2.stratum == 2);
        CHECK(coord_norm(p2.tripotent - (e(0) + e(1))) < 1e-10);
        CHECK(coord_norm(p2.residual) < 1e-10);

        const auto p3 = project_to_stratum_frame(AlbertElement::diagonal(1.0, 0.3, 0.2));
        CHECK(coord_norm(p3.tripotent - e(0)) < 1e-10);
        REQUIRE(p3.residual_roots.size() == 2);
        CHECK(p3.residual_roots[0] == doctest::Approx(0.09));
        CHECK(p3.residual_roots[1] == doctest::Approx(0.04));

        CHECK_THROWS_AS(project_to_stratum_frame(Complex(0.5) * e(0)), std::invalid_argument);
    }

    TEST_CASE("stratum projection recovers synthetic boundary points") {
        Sampler rng(124);
        for (int t = 0; t < 12; ++t) {
            const int k = 1 + t % 3;
            const AlbertElement tri = rng.rank_k_tripotent(k);
            AlbertElement x = tri;
            if (k < 3) {
                const auto cert = classify_tripotent(tri);
                const auto p = peirce(*cert);
                const AlbertElement raw =
                    AlbertElement::from_vector(p.p0 * rng.albert().to_vector());
                x += rescale_to_spectral_norm(raw, 0.5);
            }
            const auto proj = project_to_stratum_frame(x);
            CHECK(proj.stratum == k);
            CHECK(coord_norm(proj.tripotent - tri) < 1e-6);
            CHECK(proj.peirce_zero_residual < 1e-7 * (1.0 + coord_norm(x)));
            for (double r : proj.residual_roots) CHECK(r < 1.0);
        }
    }

    TEST_CASE("shilov boundary membership") {
        CHECK(shilov_test_v(AlbertElement::diagonal(1.0, 1.0, 1.0)));
        CHECK(shilov_test_v(AlbertElement::diagonal(std::polar(1.0, 0.4), std::polar(1.0, 1.1),
                                                    std::polar(1.0, -0.8))));
        CHECK_FALSE(shilov_test_v(e(0)));
        CHECK_FALSE(shilov_test_v(AlbertElement::diagonal(1.0, 1.0, 0.5)));

        CHECK(shilov_test_w(WElement{Octonion::unit(), Octonion{}}));
        CHECK_FALSE(shilov_test_w(WElement{null_unit(), Octonion{}}));

        // Shilov membership must match the top-stratum verdict.
        const auto v = classify_w(WElement{Octonion::unit(), Octonion{}});
        CHECK(v.stratum == 2);
    }

    TEST_CASE("boundary reports") {
        const auto r1 = boundary_report(*classify_tripotent(e(0)));
        CHECK(r1.d0 == 10);
        CHECK(r1.d1 == 16);
        CHECK(r1.normal_dim_real == 1);
        CHECK(r1.stratum_dim_real == 53);
        CHECK(r1.manifold_dim_real == 33);
        CHECK(r1.manifold_cr_s == 16);
        CHECK(r1.manifold_cr_t == 1);
        CHECK(r1.affine_rank == 2);

        const auto r2 = boundary_report(*classify_tripotent(e(0) + e(1)));
        CHECK(r2.stratum_dim_real == 44);
        CHECK(r2.stratum_cr_s == 17);
        CHECK(r2.stratum_cr_t == 10);
        CHECK(r2.manifold_cr_s == 16);
        CHECK(r2.manifold_cr_t == 10);
        CHECK(r2.manifold_dim_real == 42);

        const auto r3 = boundary_report(*classify_tripotent(AlbertElement::diagonal(1.0, 1.0, 1.0)));
        CHECK(r3.normal_dim_real == 27);
        CHECK(r3.manifold_dim_real == 27);
        CHECK(r3.manifold_cr_s == 0);

        const auto rw = boundary_report_w(*classify_tripotent_w(WElement{null_unit(), Octonion{}}));
        CHECK(rw.d0 == 5);
        CHECK(rw.d1 == 10);
        CHECK(rw.manifold_dim_real == 21);
        CHECK(rw.manifold_cr_s == 10);
        CHECK(rw.manifold_cr_t == 1);

        const auto rw2 = boundary_report_w(*classify_tripotent_w(WElement{Octonion::unit(), Octonion{}}));
        CHECK(rw2.manifold_cr_s == 8);
        CHECK(rw2.manifold_cr_t == 8);
        CHECK(rw2.manifold_dim_real == 24);
    }

    TEST_CASE("stratum closure along the diagonal path") {
        for (double t : {0.5, 0.9, 0.99}) {
            const auto v = classify_v(AlbertElement::diagonal(1.0, 1.0, t));
            CHECK(v.location == Location::Boundary);
            CHECK(v.stratum == 2);
        }
        CHECK(classify_v(AlbertElement::diagonal(1.0, 1.0, 1.0)).stratum == 3);
    }

    TEST_CASE("exterior points still get a full verdict") {
        const auto v = classify_v(Complex(3.0) * e(0));
        CHECK(v.location == Location::Exterior);
        CHECK(v.f.size() == 3);
        CHECK(v.roots.size() == 3);
        CHECK(v.roots[0] == doctest::Approx(9.0));
    }

    TEST_CASE("classification is pure: concurrent callers agree") {
        Sampler rng(125);
        std::vector<AlbertElement> points;
        for (int i = 0; i < 16; ++i) points.push_back(rng.albert());
        std::vector<DomainVerdict> expected;
        for (const auto& p : points) expected.push_back(classify_v(p));

        std::array<bool, 4> ok{};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < ok.size(); ++w) {
            pool.emplace_back([&, w] {
                bool good = true;
                for (std::size_t i = 0; i < points.size(); ++i) {
                    const auto v = classify_v(points[i]);
                    good = good && v.location == expected[i].location &&
                           v.roots == expected[i].roots;
                }
                ok[w] = good;
            });
        }
        for (auto& t : pool) t.join();
        for (bool g : ok) CHECK(g);
    }

    TEST_CASE("margin is the nearest non-unit root distance to 1") {
        // roots (4, 0.998..., 0.25): exterior, but the middle root decides
        // the confidence margin.
        const auto v = classify_v(AlbertElement::diagonal(2.0, 0.9991, 0.5));
        CHECK(v.location == Location::Exterior);
        CHECK(v.margin == doctest::Approx(1.0 - 0.9991 * 0.9991).epsilon(1e-6));

        const auto b = classify_v(AlbertElement::diagonal(1.0, 0.5, 0.0));
        CHECK(b.location == Location::Boundary);
        CHECK(b.margin == doctest::Approx(0.75));

        // Every singular value on the boundary: nominal margin, high confidence.
        const auto s3 = classify_v(AlbertElement::diagonal(1.0, 1.0, 1.0));
        CHECK(s3.margin == doctest::Approx(1.0));
        CHECK_FALSE(s3.low_confidence);
    }
}
