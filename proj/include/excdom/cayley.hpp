#ifndef EXCDOM_CAYLEY_HPP
#define EXCDOM_CAYLEY_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "excdom/linalg.hpp"

namespace excdom {

enum class Field { Real, Complex };

/// Identifies a Cayley-Dickson algebra: ground field plus the doubling
/// parameters mu. Level L gives dimension 2^L; levels 0..3 are composition
/// algebras, level 4 exists only to witness the failure of alternativity.
struct AlgebraSignature {
    Field field = Field::Complex;
    std::vector<double> mu;

    int level() const { return static_cast<int>(mu.size()); }
    std::size_t dimension() const { return std::size_t{1} << mu.size(); }
    bool operator==(const AlgebraSignature&) const = default;

    static AlgebraSignature complex_level(int level);      // field C, mu = -1,...
    static AlgebraSignature compact_real(int level);       // field R, mu = -1,...
    static AlgebraSignature split_real(int level);         // field R, mu = +1,...
};

/// Element of a Cayley-Dickson algebra in the recursive doubling basis:
/// the level-L basis is (B, vB) concatenated, with the unit first.
class CompositionElement {
  public:
    explicit CompositionElement(AlgebraSignature sig);
    CompositionElement(AlgebraSignature sig, std::vector<Complex> coords);

    static CompositionElement unit(const AlgebraSignature& sig);
    static CompositionElement basis(const AlgebraSignature& sig, std::size_t k);

    const AlgebraSignature& signature() const { return sig_; }
    const std::vector<Complex>& coords() const { return coords_; }
    Complex& operator[](std::size_t i) { return coords_[i]; }
    const Complex& operator[](std::size_t i) const { return coords_[i]; }

    CompositionElement& operator+=(const CompositionElement& rhs);
    CompositionElement& operator-=(const CompositionElement& rhs);
    CompositionElement& operator*=(Complex s);

  private:
    AlgebraSignature sig_;
    std::vector<Complex> coords_;
};

CompositionElement operator+(CompositionElement a, const CompositionElement& b);
CompositionElement operator-(CompositionElement a, const CompositionElement& b);
CompositionElement operator*(Complex s, CompositionElement a);
CompositionElement operator-(CompositionElement a);

/// Product in A(mu) = A + vA: (a1+vb1)(a2+vb2) = a1a2 + mu b2~b1 + v(~a1 b2 + a2 b1).
CompositionElement cd_multiply(const CompositionElement& a, const CompositionElement& b);

/// Cayley conjugation ~a = (a:e)e - a.
CompositionElement conjugate(const CompositionElement& a);

Complex norm_form(const CompositionElement& a);                               // n(a)
Complex trace_form(const CompositionElement& a);                              // t(a) = (a:1)
Complex bilinear_form(const CompositionElement& a, const CompositionElement& b);  // (a:b)

CompositionElement commutator(const CompositionElement& x, const CompositionElement& y);
CompositionElement associator(const CompositionElement& x, const CompositionElement& y,
                              const CompositionElement& z);

/// Euclidean norm of the coordinate vector (used for residual scaling; the
/// algebra norm n can vanish on nonzero elements of split or complex algebras).
double coord_norm(const CompositionElement& a);

struct MoufangResiduals {
    double left = 0.0;     // a(x(ay)) - (axa)y
    double right = 0.0;    // ((xa)y)a - x(aya)
    double central = 0.0;  // (ax)(ya) - a((xy)a)
};

MoufangResiduals moufang_residuals(const CompositionElement& a, const CompositionElement& x,
                                   const CompositionElement& y);

/// Complex octonion: the compact complex Cayley algebra, mu = (-1,-1,-1),
/// fixed at dimension 8. Cayley conjugation is complex-linear; `bar` is the
/// complex conjugation with respect to the real form and acts coordinatewise.
struct Octonion {
    std::array<Complex, 8> c{};

    static Octonion unit();
    static Octonion basis(std::size_t k);

    Octonion& operator+=(const Octonion& rhs);
    Octonion& operator-=(const Octonion& rhs);
    Octonion& operator*=(Complex s);
};

Octonion operator+(Octonion a, const Octonion& b);
Octonion operator-(Octonion a, const Octonion& b);
Octonion operator*(Complex s, Octonion a);
Octonion operator-(Octonion a);
Octonion operator*(const Octonion& a, const Octonion& b);

Octonion cayley_conj(const Octonion& a);
Octonion bar(const Octonion& a);

Complex quad_norm(const Octonion& a);    // n(a), complex-bilinear
Complex trace_form(const Octonion& a);   // t(a) = 2 a_0
Complex bilinear_form(const Octonion& a, const Octonion& b);   // (a:b)
Complex hermitian_form(const Octonion& a, const Octonion& b);  // (a|b) = (a : bar b)
double coord_norm2(const Octonion& a);
double coord_norm(const Octonion& a);

/// 8x8 matrix of x -> beta x in the standard basis.
DenseOperator left_mult_operator(const Octonion& beta);

/// Conversions between the fixed octonion type and the generic element over
/// the canonical complex signature (used for identity cross-checks).
CompositionElement to_generic(const Octonion& a);
Octonion to_octonion(const CompositionElement& a);

}  // namespace excdom

#endif
