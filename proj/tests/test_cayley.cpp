#include "helpers.hpp"

using namespace excdom;
using excdom::testing::null_unit;

TEST_SUITE("cayley") {
    TEST_CASE("unit element is neutral in every model") {
        Sampler rng(21);
        for (const auto& sig :
             {AlgebraSignature::compact_real(3), AlgebraSignature::split_real(3),
              AlgebraSignature::complex_level(3), AlgebraSignature::compact_real(0)}) {
            const auto e = CompositionElement::unit(sig);
            const auto a = rng.composition(sig);
            CHECK(coord_norm(cd_multiply(e, a) - a) < 1e-14 * (1.0 + coord_norm(a)));
            CHECK(coord_norm(cd_multiply(a, e) - a) < 1e-14 * (1.0 + coord_norm(a)));
            CHECK(std::abs(norm_form(e) - Complex(1.0)) < 1e-15);
        }
    }

    TEST_CASE("quaternion level: products expand the doubling recursion") {
        // Basis order (1, i, v, vi) with i^2 = v^2 = -1; expanding the
        // doubling product by hand gives i v = -(vi), v i = +(vi).
        const auto sig = AlgebraSignature::compact_real(2);
        const auto i = CompositionElement::basis(sig, 1);
        const auto v = CompositionElement::basis(sig, 2);
        const auto vi = CompositionElement::basis(sig, 3);

        CHECK(coord_norm(cd_multiply(i, i) + CompositionElement::unit(sig)) < 1e-15);
        CHECK(coord_norm(cd_multiply(v, v) + CompositionElement::unit(sig)) < 1e-15);
        CHECK(coord_norm(cd_multiply(vi, vi) + CompositionElement::unit(sig)) < 1e-15);
        CHECK(coord_norm(cd_multiply(i, v) + vi) < 1e-15);
        CHECK(coord_norm(cd_multiply(v, i) - vi) < 1e-15);
        // Associativity holds at dimension 4.
        Sampler rng(22);
        const auto a = rng.composition(sig);
        const auto b = rng.composition(sig);
        const auto c = rng.composition(sig);
        CHECK(coord_norm(associator(a, b, c)) <
              1e-12 * (1.0 + coord_norm(a)) * (1.0 + coord_norm(b)) * (1.0 + coord_norm(c)));
    }

    TEST_CASE("norm is multiplicative on octonions") {
        Sampler rng(23);
        const auto sig = AlgebraSignature::complex_level(3);
        for (int t = 0; t < 100; ++t) {
            const auto a = rng.composition(sig);
            const auto b = rng.composition(sig);
            const double na = coord_norm(a), nb = coord_norm(b);
            CHECK(std::abs(norm_form(cd_multiply(a, b)) - norm_form(a) * norm_form(b)) <
                  1e-9 * (1.0 + na * na) * (1.0 + nb * nb));
        }
    }

    TEST_CASE("conjugation fixes the unit and negates its complement") {
        const auto sig = AlgebraSignature::compact_real(3);
        CHECK(coord_norm(conjugate(CompositionElement::unit(sig)) -
                         CompositionElement::unit(sig)) < 1e-15);
        for (std::size_t k = 1; k < 8; ++k) {
            const auto v = CompositionElement::basis(sig, k);
            CHECK(coord_norm(conjugate(v) + v) < 1e-15);
        }
    }

    TEST_CASE("conjugation reverses products") {
        Sampler rng(24);
        const auto sig = AlgebraSignature::split_real(3);
        for (int t = 0; t < 100; ++t) {
            const auto a = rng.composition(sig);
            const auto b = rng.composition(sig);
            CHECK(coord_norm(conjugate(cd_multiply(a, b)) -
                             cd_multiply(conjugate(b), conjugate(a))) <
                  1e-10 * (1.0 + coord_norm(a)) * (1.0 + coord_norm(b)));
        }
    }

    TEST_CASE("degree-2 equation and trace") {
        Sampler rng(25);
        for (const auto& sig : {AlgebraSignature::compact_real(3), AlgebraSignature::split_real(2)}) {
            const auto e = CompositionElement::unit(sig);
            for (int t = 0; t < 50; ++t) {
                const auto a = rng.composition(sig);
                const double na = coord_norm(a);
                CHECK(coord_norm(cd_multiply(a, a) - trace_form(a) * a + norm_form(a) * e) <
                      1e-10 * (1.0 + na * na));
            }
        }
    }

    TEST_CASE("all-ones compact octonion has norm 8") {
        std::vector<Complex> ones(8, Complex(1.0));
        const CompositionElement a(AlgebraSignature::compact_real(3), ones);
        CHECK(std::abs(norm_form(a) - Complex(8.0)) < 1e-15);
    }

    TEST_CASE("bilinear form polarizes the norm") {
        Sampler rng(35);
        for (const auto& sig :
             {AlgebraSignature::compact_real(3), AlgebraSignature::split_real(3),
              AlgebraSignature::complex_level(2)}) {
            const auto a = rng.composition(sig);
            const auto b = rng.composition(sig);
            const double s = (1.0 + coord_norm(a)) * (1.0 + coord_norm(b));
            CHECK(std::abs(bilinear_form(a, a) - 2.0 * norm_form(a)) < 1e-12 * s * s);
            CHECK(std::abs(bilinear_form(a, b) -
                           (norm_form(a + b) - norm_form(a) - norm_form(b))) < 1e-12 * s * s);
            CHECK(std::abs(trace_form(a) - bilinear_form(a, CompositionElement::unit(sig))) <
                  1e-14 * s);
        }
    }

    TEST_CASE("commutator vanishes exactly up to the complex level") {
        Sampler rng(26);
        for (int l = 0; l <= 1; ++l) {
            const auto sig = AlgebraSignature::compact_real(l);
            const auto a = rng.integer_composition(sig);
            const auto b = rng.integer_composition(sig);
            CHECK(coord_norm(commutator(a, b)) == 0.0);
        }
        // Level 2 is noncommutative.
        const auto sig = AlgebraSignature::compact_real(2);
        CHECK(coord_norm(commutator(CompositionElement::basis(sig, 1),
                                    CompositionElement::basis(sig, 2))) > 1.0);
    }

    TEST_CASE("associator alternates on octonions, vanishes with repeats") {
        Sampler rng(27);
        const auto sig = AlgebraSignature::complex_level(3);
        for (int t = 0; t < 50; ++t) {
            const auto a = rng.composition(sig);
            const auto c = rng.composition(sig);
            const double s = (1.0 + coord_norm(a)) * (1.0 + coord_norm(a)) * (1.0 + coord_norm(c));
            CHECK(coord_norm(associator(a, a, c)) < 1e-10 * s);
            CHECK(coord_norm(associator(a, c, a)) < 1e-10 * s);
            CHECK(coord_norm(associator(c, a, a)) < 1e-10 * s);
        }
    }

    TEST_CASE("dimension 16 breaks alternativity with a definite witness") {
        const auto sig = AlgebraSignature::compact_real(4);
        // Frozen witness: integer coordinates make the violation exact.
        const auto x = CompositionElement::basis(sig, 1) + CompositionElement::basis(sig, 10);
        const auto y = CompositionElement::basis(sig, 4);
        CHECK(coord_norm(associator(x, conjugate(x), y)) == 2.0);

        Sampler rng(28);
        double best = 0.0;
        for (int t = 0; t < 200; ++t) {
            const auto a = rng.composition(sig);
            const auto b = rng.composition(sig);
            best = std::max(best, coord_norm(associator(a, conjugate(a), b)));
        }
        CHECK(best > 0.1);
    }

    TEST_CASE("moufang identities: exact zero with integer quaternions") {
        Sampler rng(29);
        const auto sig = AlgebraSignature::compact_real(2);
        for (int t = 0; t < 20; ++t) {
            const auto r = moufang_residuals(rng.integer_composition(sig),
                                             rng.integer_composition(sig),
                                             rng.integer_composition(sig));
            CHECK(r.left == 0.0);
            CHECK(r.right == 0.0);
            CHECK(r.central == 0.0);
        }
    }

    TEST_CASE("moufang identities hold on octonions, fail at dimension 16") {
        Sampler rng(30);
        const auto oct = AlgebraSignature::complex_level(3);
        for (int t = 0; t < 50; ++t) {
            const auto a = rng.composition(oct);
            const auto x = rng.composition(oct);
            const auto y = rng.composition(oct);
            const auto r = moufang_residuals(a, x, y);
            const double s = std::pow(1.0 + coord_norm(a), 2.0) * (1.0 + coord_norm(x)) *
                             (1.0 + coord_norm(y));
            CHECK(r.left < 1e-9 * s);
            CHECK(r.right < 1e-9 * s);
            CHECK(r.central < 1e-9 * s);
        }
        const auto dim16 = AlgebraSignature::compact_real(4);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const auto r = moufang_residuals(rng.composition(dim16), rng.composition(dim16),
                                             rng.composition(dim16));
            worst = std::max(worst, r.central);
        }
        CHECK(worst > 0.1);
    }

    TEST_CASE("signature mismatch is rejected") {
        const auto a = CompositionElement::unit(AlgebraSignature::compact_real(3));
        const auto b = CompositionElement::unit(AlgebraSignature::split_real(3));
        CHECK_THROWS_AS(cd_multiply(a, b), std::invalid_argument);
    }

    TEST_CASE("octonion type agrees with the generic recursion") {
        Sampler rng(31);
        for (int t = 0; t < 50; ++t) {
            const Octonion a = rng.octonion();
            const Octonion b = rng.octonion();
            const Octonion via_table = a * b;
            const Octonion via_generic = to_octonion(cd_multiply(to_generic(a), to_generic(b)));
            CHECK(coord_norm(via_table - via_generic) <
                  1e-13 * (1.0 + coord_norm(a)) * (1.0 + coord_norm(b)));
            CHECK(std::abs(quad_norm(a) - norm_form(to_generic(a))) < 1e-12 * (1.0 + coord_norm2(a)));
        }
    }

    TEST_CASE("bar is a complex-conjugate homomorphism") {
        Sampler rng(32);
        for (int t = 0; t < 50; ++t) {
            const Octonion a = rng.octonion();
            const Octonion b = rng.octonion();
            CHECK(coord_norm(bar(a * b) - bar(a) * bar(b)) <
                  1e-12 * (1.0 + coord_norm(a)) * (1.0 + coord_norm(b)));
            // Cayley conjugation and bar commute.
            CHECK(coord_norm(bar(cayley_conj(a)) - cayley_conj(bar(a))) < 1e-15);
        }
    }

    TEST_CASE("left multiplication operator") {
        CHECK((left_mult_operator(Octonion::unit()) - DenseOperator::Identity(8, 8)).norm() <
              1e-15);

        Sampler rng(33);
        for (int t = 0; t < 20; ++t) {
            const Octonion b = rng.octonion();
            const DenseOperator composite =
                left_mult_operator(cayley_conj(b)) * left_mult_operator(b);
            CHECK((composite - quad_norm(b) * DenseOperator::Identity(8, 8)).norm() <
                  1e-12 * (1.0 + coord_norm2(b)));
        }

        Eigen::ColPivHouseholderQR<DenseOperator> qr(left_mult_operator(null_unit()));
        qr.setThreshold(1e-8);
        CHECK(qr.rank() == 4);
    }

    TEST_CASE("canonical null unit satisfies the defining relations") {
        const Octonion beta = null_unit();
        CHECK(std::abs(hermitian_form(beta, beta) - Complex(1.0)) < 1e-15);
        CHECK(std::abs(quad_norm(beta)) < 1e-15);
        Sampler rng(34);
        const Octonion sampled = rng.null_unit_octonion();
        CHECK(std::abs(hermitian_form(sampled, sampled) - Complex(1.0)) < 1e-12);
        CHECK(std::abs(quad_norm(sampled)) < 1e-12);
    }
}
