#include "helpers.hpp"

using namespace excdom;
using excdom::testing::e;
using excdom::testing::null_unit;

namespace {

WElement canonical_minimal() { return WElement{null_unit(), Octonion{}}; }
WElement canonical_maximal() { return WElement{Octonion::unit(), Octonion{}}; }

}  // namespace

TEST_SUITE("type_v") {
    TEST_CASE("embedding and restriction round trip") {
        Sampler rng(101);
        const WElement x = rng.w_element();
        const AlbertElement a = embed(x);
        CHECK(coord_norm2(a.off[0]) == 0.0);
        CHECK(std::abs(a.alpha[0]) + std::abs(a.alpha[1]) + std::abs(a.alpha[2]) == 0.0);
        CHECK(coord_norm(restrict_to_w(a) - x) == 0.0);

        const WElement just_b{rng.octonion(), Octonion{}};
        CHECK(coord_norm2(embed(just_b).off[2]) == 0.0);

        CHECK_THROWS_AS(restrict_to_w(e(0)), std::invalid_argument);
    }

    TEST_CASE("sharp lands in the Peirce-zero space of e1") {
        Sampler rng(102);
        for (int t = 0; t < 30; ++t) {
            const WElement x = rng.w_element();
            const AlbertElement sharp = sharp_w(x);
            const double s2 = std::pow(1.0 + coord_norm(x), 2.0);
            CHECK(coord_norm(sharp - adjoint(embed(x))) < 1e-12 * s2);
            CHECK(std::abs(sharp.alpha[0]) == 0.0);
            CHECK(coord_norm2(sharp.off[1]) == 0.0);
            CHECK(coord_norm2(sharp.off[2]) == 0.0);
            CHECK(std::abs(determinant(embed(x))) < 1e-11 * s2 * (1.0 + coord_norm(x)));
        }

        // Single-slot element: x# = -n(b) e2.
        const Octonion b = Sampler(103).octonion();
        const AlbertElement sharp = sharp_w(WElement{b, Octonion{}});
        CHECK(std::abs(sharp.alpha[1] + quad_norm(b)) < 1e-13 * (1.0 + coord_norm2(b)));
        CHECK(std::abs(sharp.alpha[2]) == 0.0);
        CHECK(coord_norm2(sharp.off[0]) == 0.0);

        CHECK(coord_norm(sharp_w(WElement::zero())) == 0.0);
    }

    TEST_CASE("null-pair elements have vanishing sharp") {
        // n(b) = n(c) = 0 and bc = 0 forces x# = 0.
        const Octonion beta = null_unit();
        const Octonion gamma = cayley_conj(beta) * (bar(beta) * Sampler(104).octonion());
        CHECK(std::abs(quad_norm(gamma)) < 1e-12 * (1.0 + coord_norm2(gamma)));
        CHECK(coord_norm(beta * gamma) < 1e-12 * (1.0 + coord_norm(gamma)));
        const WElement x{beta, gamma};
        CHECK(coord_norm(sharp_w(x)) < 1e-12 * (1.0 + coord_norm2(x.b) + coord_norm2(x.c)));
    }

    TEST_CASE("closed forms agree with the ambient triple system") {
        Sampler rng(105);
        for (int t = 0; t < 50; ++t) {
            const WElement x = rng.w_element();
            const WElement y = rng.w_element();
            const WElement z = rng.w_element();
            const double s =
                (1.0 + coord_norm(x)) * (1.0 + coord_norm(y)) * (1.0 + coord_norm(z));

            const AlbertElement ambient = triple(embed(x), embed(y), embed(z));
            const WElement expected = restrict_to_w(ambient, Tolerances{1e-9, 1e-6});
            CHECK(coord_norm(triple_w(x, y, z) - expected) < 1e-9 * s);

            const AlbertElement qa = q_apply(embed(x), embed(y));
            const WElement qw = restrict_to_w(qa, Tolerances{1e-9, 1e-6});
            CHECK(coord_norm(q_apply_w(x, y) - qw) <
                  1e-9 * std::pow(1.0 + coord_norm(x), 2.0) * (1.0 + coord_norm(y)));
        }
    }

    TEST_CASE("triple at a zero slot stays consistent") {
        Sampler rng(106);
        const WElement x = rng.w_element();
        const WElement y = rng.w_element();
        const WElement expected = restrict_to_w(triple(embed(x), embed(y), embed(WElement::zero())));
        CHECK(coord_norm(triple_w(x, y, WElement::zero()) - expected) == 0.0);
    }

    TEST_CASE("minimal polynomial of W has degree two") {
        const MinimalPolynomial m = minimal_polynomial_w(canonical_maximal(), canonical_maximal());
        CHECK(m.degree == 2);
        CHECK(std::abs(m.herm - Complex(2.0)) < 1e-14);
        CHECK(std::abs(m.herm_sharp - Complex(1.0)) < 1e-14);

        const MinimalPolynomial z = minimal_polynomial_w(WElement::zero(), WElement::zero());
        CHECK(std::abs(z.herm) == 0.0);
        CHECK(std::abs(z.herm_sharp) == 0.0);

        const MinimalPolynomial u = minimal_polynomial_w(canonical_minimal(), canonical_minimal());
        CHECK(std::abs(u.herm - Complex(1.0)) < 1e-14);
        CHECK(std::abs(u.herm_sharp) < 1e-14);
    }

    TEST_CASE("kernel split dimensions and identities") {
        Sampler rng(107);
        for (int t = 0; t < 10; ++t) {
            const Octonion beta = rng.null_unit_octonion();
            const KernelSplit ks = kernel_split(beta);
            CHECK(ks.ker_beta.size() == 4);
            CHECK(ks.ker_beta_bar.size() == 4);
            for (const auto& v : ks.ker_beta) CHECK(coord_norm(beta * v) < 1e-10);
            for (const auto& v : ks.ker_beta_bar) CHECK(coord_norm(bar(beta) * v) < 1e-10);

            const Octonion x = rng.octonion();
            const Octonion recon = cayley_conj(beta) * (bar(beta) * x) +
                                   cayley_conj(bar(beta)) * (beta * x);
            CHECK(coord_norm(x - recon) < 1e-10 * (1.0 + coord_norm(x)));
        }
        Octonion not_null = Octonion::unit();
        CHECK_THROWS_AS(kernel_split(not_null), std::invalid_argument);
    }

    TEST_CASE("w tripotent classification") {
        const auto cu = classify_tripotent_w(canonical_minimal());
        REQUIRE(cu);
        CHECK(cu->rank == 1);
        CHECK(cu->invariants[0] == doctest::Approx(1.0));
        CHECK(cu->invariants[1] == doctest::Approx(0.0));

        const auto cw = classify_tripotent_w(canonical_maximal());
        REQUIRE(cw);
        CHECK(cw->rank == 2);
        CHECK(cw->invariants[0] == doctest::Approx(2.0));
        CHECK(cw->invariants[1] == doctest::Approx(1.0));

        const auto c0 = classify_tripotent_w(WElement::zero());
        REQUIRE(c0);
        CHECK(c0->rank == 0);

        Sampler rng(108);
        CHECK_FALSE(classify_tripotent_w(rng.w_element()));
    }

    TEST_CASE("peirce decomposition in W") {
        const auto pu = peirce_w(*classify_tripotent_w(canonical_minimal()));
        CHECK(pu.d0 == 5);
        CHECK(pu.d1 == 10);
        CHECK(pu.d2 == 1);
        CHECK(pu.projector_residual < 1e-7);

        const auto pw = peirce_w(*classify_tripotent_w(canonical_maximal()));
        CHECK(pw.d0 == 0);
        CHECK(pw.d1 == 8);
        CHECK(pw.d2 == 8);

        // For the maximal w = F2(unit): W2 is the F2 slot, W1 the F3 slot.
        Sampler rng(109);
        const WElement f2{rng.octonion(), Octonion{}};
        CHECK((pw.p2 * f2.to_vector() - f2.to_vector()).norm() < 1e-11 * (1.0 + coord_norm(f2)));
        const WElement f3{Octonion{}, rng.octonion()};
        CHECK((pw.p1 * f3.to_vector() - f3.to_vector()).norm() < 1e-11 * (1.0 + coord_norm(f3)));
    }

    TEST_CASE("simultaneous peirce census of the canonical W frame") {
        const WElement u = canonical_minimal();
        const WElement v{bar(null_unit()), Octonion{}};
        const FrameInvariants inv = frame_invariants_w({u, v});
        CHECK(inv.a == 6);
        CHECK(inv.b == 4);
        CHECK(inv.r == 2);
        CHECK(inv.g == 12);
    }

    TEST_CASE("a mixed-slot frame reproduces the same invariants") {
        // (F2(beta), F3(~conj(beta))) is also a frame: the second element is a
        // null unit in the other slot, orthogonal to the first.
        const Octonion beta = null_unit();
        const WElement u{beta, Octonion{}};
        const WElement v{Octonion{}, cayley_conj(bar(beta))};
        const auto cu = classify_tripotent_w(u);
        const auto cv = classify_tripotent_w(v);
        REQUIRE(cu);
        REQUIRE(cv);
        CHECK(cu->rank == 1);
        CHECK(cv->rank == 1);
        CHECK(d_operator_w(u, v).norm() < 1e-12);

        const FrameInvariants inv = frame_invariants_w({u, v});
        CHECK(inv.a == 6);
        CHECK(inv.b == 4);
        CHECK(inv.g == 12);
    }

    TEST_CASE("w trace and bergman identities") {
        Sampler rng(110);
        for (int t = 0; t < 20; ++t) {
            const WElement x = rng.w_element();
            const WElement y = rng.w_element();
            CHECK(std::abs(d_operator_w(x, y).trace() - 12.0 * hermitian_product(x, y)) <
                  1e-10 * (1.0 + coord_norm(x)) * (1.0 + coord_norm(y)));
        }
        for (int t = 0; t < 5; ++t) {
            WElement x = rng.w_element();
            WElement y = rng.w_element();
            x *= Complex(0.4 / std::sqrt(hermitian_product(x, x).real()));
            y *= Complex(0.4 / std::sqrt(hermitian_product(y, y).real()));
            const MinimalPolynomial m = minimal_polynomial_w(x, y);
            const Complex n = Complex(1.0) - m.herm + m.herm_sharp;
            CHECK(std::abs(det_dense(bergman_operator_w(x, y)) - std::pow(n, 12.0)) /
                      std::abs(std::pow(n, 12.0)) <
                  1e-6);
        }
    }

    TEST_CASE("subsystem closure under the closed-form triple") {
        Sampler rng(111);
        const WElement x = rng.w_element();
        const WElement y = rng.w_element();
        const WElement z = rng.w_element();
        // The closed form produces (b, c) pairs by construction; the ambient
        // product must stay inside the subspace as well.
        const AlbertElement ambient = triple(embed(x), embed(y), embed(z));
        CHECK_NOTHROW(restrict_to_w(ambient, Tolerances{1e-9, 1e-6}));
    }
}
