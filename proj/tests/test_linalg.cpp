#include "helpers.hpp"

#include "excdom/linalg.hpp"

using namespace excdom;

namespace {

// Brute-force cofactor expansion, the independent determinant oracle.
Complex det_cofactor(const DenseOperator& m) {
    const Eigen::Index n = m.rows();
    if (n == 1) return m(0, 0);
    Complex det(0.0);
    double sign = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        DenseOperator minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        det += sign * m(0, j) * det_cofactor(minor);
        sign = -sign;
    }
    return det;
}

}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("determinant of identity and diagonal") {
        CHECK(std::abs(det_dense(DenseOperator::Identity(27, 27)) - Complex(1.0)) < 1e-12);
        DenseOperator d = DenseOperator::Zero(2, 2);
        d(0, 0) = Complex(2.0);
        d(1, 1) = Complex(3.0);
        CHECK(std::abs(det_dense(d) - Complex(6.0)) < 1e-12);
    }

    TEST_CASE("determinant matches the cofactor oracle on random 5x5") {
        Sampler rng(7);
        for (int t = 0; t < 20; ++t) {
            DenseOperator m(5, 5);
            for (Eigen::Index i = 0; i < 5; ++i) {
                for (Eigen::Index j = 0; j < 5; ++j) m(i, j) = rng.gaussian_complex();
            }
            const Complex lu = det_dense(m);
            const Complex co = det_cofactor(m);
            CHECK(std::abs(lu - co) / (1.0 + std::abs(co)) < 1e-12);
        }
    }

    TEST_CASE("determinant is multiplicative on random 8x8") {
        Sampler rng(8);
        for (int t = 0; t < 10; ++t) {
            DenseOperator a(8, 8), b(8, 8);
            for (Eigen::Index i = 0; i < 8; ++i) {
                for (Eigen::Index j = 0; j < 8; ++j) {
                    a(i, j) = rng.gaussian_complex();
                    b(i, j) = rng.gaussian_complex();
                }
            }
            const Complex lhs = det_dense(a * b);
            const Complex rhs = det_dense(a) * det_dense(b);
            CHECK(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)) < 1e-10);
        }
    }

    TEST_CASE("determinant rejects bad shapes") {
        CHECK_THROWS_AS(det_dense(DenseOperator::Zero(2, 3)), std::invalid_argument);
        CHECK_THROWS_AS(det_dense(DenseOperator::Zero(65, 65)), std::invalid_argument);
    }

    TEST_CASE("cubic roots: distinct integers") {
        // (T-1)(T-4)(T-9) = T^3 - 14 T^2 + 49 T - 36
        CubicPolynomial p;
        p.c = {Complex(-36.0), Complex(49.0), Complex(-14.0), Complex(1.0)};
        const auto r = roots_monic_cubic(p);
        CHECK(std::abs(r[0] - Complex(9.0)) < 1e-9);
        CHECK(std::abs(r[1] - Complex(4.0)) < 1e-9);
        CHECK(std::abs(r[2] - Complex(1.0)) < 1e-9);
    }

    TEST_CASE("cubic roots: triple roots") {
        CubicPolynomial zero;  // T^3
        for (const auto& r : roots_monic_cubic(zero)) CHECK(std::abs(r) < 1e-12);

        CubicPolynomial ones;  // (T-1)^3
        ones.c = {Complex(-1.0), Complex(3.0), Complex(-3.0), Complex(1.0)};
        for (const auto& r : roots_monic_cubic(ones)) CHECK(std::abs(r - Complex(1.0)) < 1e-9);
    }

    TEST_CASE("cubic roots reconstruct the coefficients") {
        Sampler rng(11);
        for (int t = 0; t < 200; ++t) {
            CubicPolynomial p;
            p.c = {rng.gaussian_complex(), rng.gaussian_complex(), rng.gaussian_complex(),
                   Complex(1.0)};
            const auto r = roots_monic_cubic(p);
            const double scale = 1.0 + std::abs(p.c[0]) + std::abs(p.c[1]) + std::abs(p.c[2]);
            for (const auto& root : r) {
                CHECK(std::abs(p.eval(root)) < 1e-9 * scale);
            }
            // Elementary symmetric functions against the coefficients.
            CHECK(std::abs(r[0] + r[1] + r[2] + p.c[2]) < 1e-8 * scale);
            CHECK(std::abs(r[0] * r[1] + r[0] * r[2] + r[1] * r[2] - p.c[1]) < 1e-8 * scale);
            CHECK(std::abs(r[0] * r[1] * r[2] + p.c[0]) < 1e-8 * scale);
        }
    }

    TEST_CASE("cubic roots: clustered double root near a simple one") {
        // (T - 1)^2 (T - 0.25), coefficients computed exactly.
        CubicPolynomial p;
        p.c = {Complex(-0.25), Complex(1.5), Complex(-2.25), Complex(1.0)};
        const auto r = roots_monic_cubic(p);
        CHECK(std::abs(r[0] - Complex(1.0)) < 1e-9);
        CHECK(std::abs(r[1] - Complex(1.0)) < 1e-9);
        CHECK(std::abs(r[2] - Complex(0.25)) < 1e-9);
    }

    TEST_CASE("vandermonde solve: single node passthrough") {
        ComplexVector v(3);
        v << Complex(1.0), Complex(2.0), Complex(-0.5);
        const auto sol = solve_vandermonde({2.0}, {Complex(2.0) * v});
        REQUIRE(sol.size() == 1);
        CHECK((sol[0] - v).norm() < 1e-12);
    }

    TEST_CASE("vandermonde solve: synthesized systems invert") {
        Sampler rng(13);
        for (const auto& nodes : std::vector<std::vector<double>>{{1.0, 2.0}, {1.0, 2.0, 3.0}}) {
            std::vector<ComplexVector> truth;
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                ComplexVector v(4);
                for (Eigen::Index k = 0; k < 4; ++k) v(k) = rng.gaussian_complex();
                truth.push_back(v);
            }
            std::vector<ComplexVector> rhs;
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                ComplexVector r = ComplexVector::Zero(4);
                for (std::size_t i = 0; i < nodes.size(); ++i) {
                    r += std::pow(nodes[i], 2.0 * static_cast<double>(k) + 1.0) * truth[i];
                }
                rhs.push_back(r);
            }
            const auto sol = solve_vandermonde(nodes, rhs);
            double residual = 0.0;
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                residual = std::max(residual, (sol[i] - truth[i]).norm());
            }
            CHECK(residual < 1e-9);
        }
    }

    TEST_CASE("vandermonde solve rejects node collisions") {
        ComplexVector v = ComplexVector::Zero(2);
        CHECK_THROWS_AS(solve_vandermonde({1.0, 1.0 + 1e-14}, {v, v}, 1e-12),
                        std::invalid_argument);
    }
}
