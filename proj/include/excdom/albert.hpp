#ifndef EXCDOM_ALBERT_HPP
#define EXCDOM_ALBERT_HPP

#include <array>

#include "excdom/cayley.hpp"
#include "excdom/linalg.hpp"

namespace excdom {

/// Element of the 27-dimensional space of Cayley-Hermitian 3x3 octonion
/// matrices, stored as three diagonal scalars plus three off-diagonal
/// octonions (the Hermitian symmetry is encoded by construction).
struct AlbertElement {
    std::array<Complex, 3> alpha{};
    std::array<Octonion, 3> off{};

    static AlbertElement zero() { return {}; }
    static AlbertElement diag_unit(std::size_t i);                 // e_{i+1}
    static AlbertElement diagonal(Complex a0, Complex a1, Complex a2);
    static AlbertElement off_slot(std::size_t i, const Octonion& x);  // F_{i+1}(x)

    /// Flat coordinates: [alpha_1..3, F1 octonion, F2 octonion, F3 octonion].
    static constexpr std::size_t kDim = 27;
    static AlbertElement from_vector(const ComplexVector& v);
    ComplexVector to_vector() const;
    static AlbertElement basis(std::size_t k);

    AlbertElement& operator+=(const AlbertElement& rhs);
    AlbertElement& operator-=(const AlbertElement& rhs);
    AlbertElement& operator*=(Complex s);
};

AlbertElement operator+(AlbertElement a, const AlbertElement& b);
AlbertElement operator-(AlbertElement a, const AlbertElement& b);
AlbertElement operator*(Complex s, AlbertElement a);
AlbertElement operator-(AlbertElement a);

Complex scalar_product(const AlbertElement& a, const AlbertElement& b);     // (a:b), bilinear
Complex hermitian_product(const AlbertElement& a, const AlbertElement& b);  // (a|b) = (a : conj b)
AlbertElement complex_conjugate(const AlbertElement& a);
double coord_norm(const AlbertElement& a);

/// Adjoint a#, the cofactor analogue: (a#)# = det(a) a.
AlbertElement adjoint(const AlbertElement& a);

/// Freudenthal product a x b = (a+b)# - a# - b#, evaluated in closed form.
AlbertElement cross(const AlbertElement& a, const AlbertElement& b);

/// Determinant, the octonionic Sarrus rule with associativity-safe grouping.
Complex determinant(const AlbertElement& a);

/// Fully symmetric trilinear form T(a,b,c) = (a x b : c); T(a,a,a) = 6 det a.
Complex trilinear_form(const AlbertElement& a, const AlbertElement& b, const AlbertElement& c);

/// Residuals of the adjoint/cross identity family on given inputs, each as a
/// coordinate norm (or scalar magnitude). All vanish identically.
struct AdjointIdentityResiduals {
    double det_of_adjoint;        // det(a#) - (det a)^2
    double det_derivative;        // central finite difference of det against (a#:b)
    double adjoint_double_cross;  // a# x (a x b) - det(a) b - (a#:b) a
    double cross_pairing;         // (a x b : a# x c) - det(a)(b:c) - (a#:b)(a:c)
    double cross_absorption;      // a x (a# x c) - det(a) c - (a:c) a#
    double cross_square_expand;   // (a x b)x(a x c) + a# x (b x c) - (a#:b)c - (a#:c)b - T(a,b,c)a
    double cross_mixed_expand;    // a x ((a x b) x c) + b x (a# x c) - (a#:b)c - (b:c)a# - (a:c) a x b
    double adjoint_of_cross;      // a# x b# + (a x b)# - (a#:b)b - (b#:a)a
    double det_pairing;           // (a x b# : a# x b) - 3 det(a)det(b) - (a:b)(a#:b#)

    std::array<double, 9> all() const {
        return {det_of_adjoint,     det_derivative,     adjoint_double_cross,
                cross_pairing,      cross_absorption,   cross_square_expand,
                cross_mixed_expand, adjoint_of_cross,   det_pairing};
    }
};

AdjointIdentityResiduals identity_residuals(const AlbertElement& a, const AlbertElement& b,
                                            const AlbertElement& c);

}  // namespace excdom

#endif
