#include "excdom/albert.hpp"

#include <cmath>
#include <stdexcept>

namespace excdom {

namespace {

// (i,j,k) running over the even permutations of (0,1,2).
constexpr std::array<std::array<std::size_t, 3>, 3> kEvenPerms = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};

}  // namespace

AlbertElement AlbertElement::diag_unit(std::size_t i) {
    AlbertElement e;
    e.alpha.at(i) = Complex(1.0);
    return e;
}

AlbertElement AlbertElement::diagonal(Complex a0, Complex a1, Complex a2) {
    AlbertElement e;
    e.alpha = {a0, a1, a2};
    return e;
}

AlbertElement AlbertElement::off_slot(std::size_t i, const Octonion& x) {
    AlbertElement e;
    e.off.at(i) = x;
    return e;
}

AlbertElement AlbertElement::from_vector(const ComplexVector& v) {
    if (v.size() != kDim) {
        throw std::invalid_argument("expected a 27-dimensional coordinate vector");
    }
    AlbertElement e;
    for (std::size_t i = 0; i < 3; ++i) e.alpha[i] = v(static_cast<Eigen::Index>(i));
    for (std::size_t s = 0; s < 3; ++s) {
        for (std::size_t i = 0; i < 8; ++i) {
            e.off[s].c[i] = v(static_cast<Eigen::Index>(3 + 8 * s + i));
        }
    }
    return e;
}

ComplexVector AlbertElement::to_vector() const {
    ComplexVector v(kDim);
    for (std::size_t i = 0; i < 3; ++i) v(static_cast<Eigen::Index>(i)) = alpha[i];
    for (std::size_t s = 0; s < 3; ++s) {
        for (std::size_t i = 0; i < 8; ++i) {
            v(static_cast<Eigen::Index>(3 + 8 * s + i)) = off[s].c[i];
        }
    }
    return v;
}

AlbertElement AlbertElement::basis(std::size_t k) {
    ComplexVector v = ComplexVector::Zero(kDim);
    v(static_cast<Eigen::Index>(k)) = Complex(1.0);
    return from_vector(v);
}

AlbertElement& AlbertElement::operator+=(const AlbertElement& rhs) {
    for (std::size_t i = 0; i < 3; ++i) {
        alpha[i] += rhs.alpha[i];
        off[i] += rhs.off[i];
    }
    return *this;
}

AlbertElement& AlbertElement::operator-=(const AlbertElement& rhs) {
    for (std::size_t i = 0; i < 3; ++i) {
        alpha[i] -= rhs.alpha[i];
        off[i] -= rhs.off[i];
    }
    return *this;
}

AlbertElement& AlbertElement::operator*=(Complex s) {
    for (std::size_t i = 0; i < 3; ++i) {
        alpha[i] *= s;
        off[i] *= s;
    }
    return *this;
}

AlbertElement operator+(AlbertElement a, const AlbertElement& b) { return a += b; }
AlbertElement operator-(AlbertElement a, const AlbertElement& b) { return a -= b; }
AlbertElement operator*(Complex s, AlbertElement a) { return a *= s; }
AlbertElement operator-(AlbertElement a) { return a *= Complex(-1.0); }

Complex scalar_product(const AlbertElement& a, const AlbertElement& b) {
    Complex s(0.0);
    for (std::size_t i = 0; i < 3; ++i) {
        s += a.alpha[i] * b.alpha[i];
        s += bilinear_form(a.off[i], b.off[i]);
    }
    return s;
}

Complex hermitian_product(const AlbertElement& a, const AlbertElement& b) {
    Complex s(0.0);
    for (std::size_t i = 0; i < 3; ++i) {
        s += a.alpha[i] * std::conj(b.alpha[i]);
        s += hermitian_form(a.off[i], b.off[i]);
    }
    return s;
}

AlbertElement complex_conjugate(const AlbertElement& a) {
    AlbertElement out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.alpha[i] = std::conj(a.alpha[i]);
        out.off[i] = bar(a.off[i]);
    }
    return out;
}

double coord_norm(const AlbertElement& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        s += std::norm(a.alpha[i]);
        s += coord_norm2(a.off[i]);
    }
    return std::sqrt(s);
}

AlbertElement adjoint(const AlbertElement& a) {
    AlbertElement out;
    for (const auto& [i, j, k] : kEvenPerms) {
        out.alpha[i] = a.alpha[j] * a.alpha[k] - quad_norm(a.off[i]);
        out.off[i] = cayley_conj(a.off[j] * a.off[k] - a.alpha[i] * cayley_conj(a.off[i]));
    }
    return out;
}

AlbertElement cross(const AlbertElement& a, const AlbertElement& b) {
    AlbertElement out;
    for (const auto& [i, j, k] : kEvenPerms) {
        out.alpha[i] = a.alpha[j] * b.alpha[k] + a.alpha[k] * b.alpha[j] -
                       bilinear_form(a.off[i], b.off[i]);
        out.off[i] = cayley_conj(a.off[j] * b.off[k] + b.off[j] * a.off[k] -
                                 a.alpha[i] * cayley_conj(b.off[i]) -
                                 b.alpha[i] * cayley_conj(a.off[i]));
    }
    return out;
}

Complex determinant(const AlbertElement& a) {
    Complex det = a.alpha[0] * a.alpha[1] * a.alpha[2];
    for (std::size_t i = 0; i < 3; ++i) det -= a.alpha[i] * quad_norm(a.off[i]);
    det += trace_form(a.off[0] * (a.off[1] * a.off[2]));
    return det;
}

Complex trilinear_form(const AlbertElement& a, const AlbertElement& b, const AlbertElement& c) {
    return scalar_product(cross(a, b), c);
}

AdjointIdentityResiduals identity_residuals(const AlbertElement& a, const AlbertElement& b,
                                            const AlbertElement& c) {
    const AlbertElement ash = adjoint(a);
    const AlbertElement bsh = adjoint(b);
    const Complex det_a = determinant(a);
    const Complex det_b = determinant(b);
    const Complex ash_b = scalar_product(ash, b);
    const Complex ash_c = scalar_product(ash, c);
    const Complex a_b = scalar_product(a, b);
    const Complex a_c = scalar_product(a, c);
    const Complex b_c = scalar_product(b, c);
    const AlbertElement axb = cross(a, b);
    const AlbertElement axc = cross(a, c);

    AdjointIdentityResiduals r;
    r.det_of_adjoint = std::abs(determinant(ash) - det_a * det_a);

    const double eps = 1e-4;
    const Complex fd =
        (determinant(a + eps * b) - determinant(a - eps * b)) / Complex(2.0 * eps);
    r.det_derivative = std::abs(fd - ash_b);

    r.adjoint_double_cross = coord_norm(cross(ash, axb) - det_a * b - ash_b * a);
    r.cross_pairing = std::abs(scalar_product(axb, cross(ash, c)) - det_a * b_c - ash_b * a_c);
    r.cross_absorption = coord_norm(cross(a, cross(ash, c)) - det_a * c - a_c * ash);
    r.cross_square_expand = coord_norm(cross(axb, axc) + cross(ash, cross(b, c)) - ash_b * c -
                                       ash_c * b - trilinear_form(a, b, c) * a);
    r.cross_mixed_expand = coord_norm(cross(a, cross(axb, c)) + cross(b, cross(ash, c)) -
                                      ash_b * c - b_c * ash - a_c * axb);
    r.adjoint_of_cross = coord_norm(cross(ash, bsh) + adjoint(axb) - ash_b * b -
                                    scalar_product(bsh, a) * a);
    r.det_pairing = std::abs(scalar_product(cross(a, bsh), cross(ash, b)) -
                             3.0 * det_a * det_b - a_b * scalar_product(ash, bsh));
    return r;
}

}  // namespace excdom
