#include "excdom/cayley.hpp"

#include <cmath>
#include <stdexcept>

namespace excdom {

namespace {

void check_same_signature(const CompositionElement& a, const CompositionElement& b) {
    if (!(a.signature() == b.signature())) {
        throw std::invalid_argument("composition elements have different algebra signatures");
    }
}

// Conjugation fixes the unit coordinate and negates the rest, at every level.
void conj_in_place(Complex* x, std::size_t n) {
    for (std::size_t i = 1; i < n; ++i) x[i] = -x[i];
}

// Recursive doubling product; `mu` indexes the outermost extension parameter.
void cd_mul_rec(const Complex* a, const Complex* b, Complex* out, std::size_t n,
                const double* mu, int level) {
    if (n == 1) {
        out[0] = a[0] * b[0];
        return;
    }
    const std::size_t h = n / 2;
    const double m = mu[level - 1];

    std::vector<Complex> t1(h), t2(h), lhs(h);
    // out_lo = a_lo b_lo + mu * b_hi ~a_hi
    lhs.assign(a + h, a + n);
    conj_in_place(lhs.data(), h);
    cd_mul_rec(b + h, lhs.data(), t1.data(), h, mu, level - 1);
    cd_mul_rec(a, b, t2.data(), h, mu, level - 1);
    for (std::size_t i = 0; i < h; ++i) out[i] = t2[i] + m * t1[i];
    // out_hi = ~a_lo b_hi + b_lo a_hi
    lhs.assign(a, a + h);
    conj_in_place(lhs.data(), h);
    cd_mul_rec(lhs.data(), b + h, t1.data(), h, mu, level - 1);
    cd_mul_rec(b, a + h, t2.data(), h, mu, level - 1);
    for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

std::vector<double> fill_mu(int level, double value) {
    if (level < 0 || level > 4) {
        throw std::invalid_argument("algebra level must be in 0..4");
    }
    return std::vector<double>(static_cast<std::size_t>(level), value);
}

}  // namespace

AlgebraSignature AlgebraSignature::complex_level(int level) {
    return AlgebraSignature{Field::Complex, fill_mu(level, -1.0)};
}

AlgebraSignature AlgebraSignature::compact_real(int level) {
    return AlgebraSignature{Field::Real, fill_mu(level, -1.0)};
}

AlgebraSignature AlgebraSignature::split_real(int level) {
    return AlgebraSignature{Field::Real, fill_mu(level, 1.0)};
}

CompositionElement::CompositionElement(AlgebraSignature sig)
    : sig_(std::move(sig)), coords_(sig_.dimension(), Complex(0.0)) {}

CompositionElement::CompositionElement(AlgebraSignature sig, std::vector<Complex> coords)
    : sig_(std::move(sig)), coords_(std::move(coords)) {
    if (coords_.size() != sig_.dimension()) {
        throw std::invalid_argument("coordinate count does not match algebra dimension");
    }
}

CompositionElement CompositionElement::unit(const AlgebraSignature& sig) {
    CompositionElement e(sig);
    e.coords_[0] = Complex(1.0);
    return e;
}

CompositionElement CompositionElement::basis(const AlgebraSignature& sig, std::size_t k) {
    CompositionElement e(sig);
    e.coords_.at(k) = Complex(1.0);
    return e;
}

CompositionElement& CompositionElement::operator+=(const CompositionElement& rhs) {
    check_same_signature(*this, rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

CompositionElement& CompositionElement::operator-=(const CompositionElement& rhs) {
    check_same_signature(*this, rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

CompositionElement& CompositionElement::operator*=(Complex s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

CompositionElement operator+(CompositionElement a, const CompositionElement& b) { return a += b; }
CompositionElement operator-(CompositionElement a, const CompositionElement& b) { return a -= b; }
CompositionElement operator*(Complex s, CompositionElement a) { return a *= s; }
CompositionElement operator-(CompositionElement a) { return a *= Complex(-1.0); }

CompositionElement cd_multiply(const CompositionElement& a, const CompositionElement& b) {
    check_same_signature(a, b);
    CompositionElement out(a.signature());
    cd_mul_rec(a.coords().data(), b.coords().data(), &out[0], a.signature().dimension(),
               a.signature().mu.data(), a.signature().level());
    return out;
}

CompositionElement conjugate(const CompositionElement& a) {
    CompositionElement out = a;
    conj_in_place(&out[0], a.signature().dimension());
    return out;
}

Complex norm_form(const CompositionElement& a) {
    // n(a+vb) = n(a) - mu n(b) unrolls to sum sigma_i a_i^2 with
    // sigma_i = prod over set bits of (-mu_level).
    Complex n(0.0);
    const auto& mu = a.signature().mu;
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        double sigma = 1.0;
        for (std::size_t bit = 0; bit < mu.size(); ++bit) {
            if (i & (std::size_t{1} << bit)) sigma *= -mu[bit];
        }
        n += sigma * a[i] * a[i];
    }
    return n;
}

Complex trace_form(const CompositionElement& a) { return 2.0 * a[0]; }

Complex bilinear_form(const CompositionElement& a, const CompositionElement& b) {
    check_same_signature(a, b);
    Complex s(0.0);
    const auto& mu = a.signature().mu;
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        double sigma = 1.0;
        for (std::size_t bit = 0; bit < mu.size(); ++bit) {
            if (i & (std::size_t{1} << bit)) sigma *= -mu[bit];
        }
        s += sigma * a[i] * b[i];
    }
    return 2.0 * s;
}

CompositionElement commutator(const CompositionElement& x, const CompositionElement& y) {
    return cd_multiply(x, y) - cd_multiply(y, x);
}

CompositionElement associator(const CompositionElement& x, const CompositionElement& y,
                              const CompositionElement& z) {
    return cd_multiply(x, cd_multiply(y, z)) - cd_multiply(cd_multiply(x, y), z);
}

double coord_norm(const CompositionElement& a) {
    double s = 0.0;
    for (const auto& c : a.coords()) s += std::norm(c);
    return std::sqrt(s);
}

MoufangResiduals moufang_residuals(const CompositionElement& a, const CompositionElement& x,
                                   const CompositionElement& y) {
    const auto axa = cd_multiply(cd_multiply(a, x), a);
    const auto aya = cd_multiply(cd_multiply(a, y), a);
    MoufangResiduals r;
    r.left = coord_norm(cd_multiply(a, cd_multiply(x, cd_multiply(a, y))) - cd_multiply(axa, y));
    r.right = coord_norm(cd_multiply(cd_multiply(cd_multiply(x, a), y), a) - cd_multiply(x, aya));
    r.central = coord_norm(cd_multiply(cd_multiply(a, x), cd_multiply(y, a)) -
                           cd_multiply(a, cd_multiply(cd_multiply(x, y), a)));
    return r;
}

namespace {

// Fixed-size doubling product for the compact case mu = -1 at every level.
template <std::size_t N>
void mul_compact(const Complex* a, const Complex* b, Complex* out) {
    if constexpr (N == 1) {
        out[0] = a[0] * b[0];
    } else {
        constexpr std::size_t H = N / 2;
        std::array<Complex, H> t1, t2, lhs;
        for (std::size_t i = 0; i < H; ++i) lhs[i] = (i == 0) ? a[H] : -a[H + i];
        mul_compact<H>(b + H, lhs.data(), t1.data());
        mul_compact<H>(a, b, t2.data());
        for (std::size_t i = 0; i < H; ++i) out[i] = t2[i] - t1[i];
        for (std::size_t i = 0; i < H; ++i) lhs[i] = (i == 0) ? a[0] : -a[i];
        mul_compact<H>(lhs.data(), b + H, t1.data());
        mul_compact<H>(b, a + H, t2.data());
        for (std::size_t i = 0; i < H; ++i) out[H + i] = t1[i] + t2[i];
    }
}

}  // namespace

Octonion Octonion::unit() {
    Octonion e;
    e.c[0] = Complex(1.0);
    return e;
}

Octonion Octonion::basis(std::size_t k) {
    Octonion e;
    e.c.at(k) = Complex(1.0);
    return e;
}

Octonion& Octonion::operator+=(const Octonion& rhs) {
    for (std::size_t i = 0; i < 8; ++i) c[i] += rhs.c[i];
    return *this;
}

Octonion& Octonion::operator-=(const Octonion& rhs) {
    for (std::size_t i = 0; i < 8; ++i) c[i] -= rhs.c[i];
    return *this;
}

Octonion& Octonion::operator*=(Complex s) {
    for (auto& x : c) x *= s;
    return *this;
}

Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
Octonion operator*(Complex s, Octonion a) { return a *= s; }
Octonion operator-(Octonion a) { return a *= Complex(-1.0); }

Octonion operator*(const Octonion& a, const Octonion& b) {
    Octonion out;
    mul_compact<8>(a.c.data(), b.c.data(), out.c.data());
    return out;
}

Octonion cayley_conj(const Octonion& a) {
    Octonion out = a;
    for (std::size_t i = 1; i < 8; ++i) out.c[i] = -out.c[i];
    return out;
}

Octonion bar(const Octonion& a) {
    Octonion out;
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = std::conj(a.c[i]);
    return out;
}

Complex quad_norm(const Octonion& a) {
    Complex n(0.0);
    for (const auto& x : a.c) n += x * x;
    return n;
}

Complex trace_form(const Octonion& a) { return 2.0 * a.c[0]; }

Complex bilinear_form(const Octonion& a, const Octonion& b) {
    Complex s(0.0);
    for (std::size_t i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
    return 2.0 * s;
}

Complex hermitian_form(const Octonion& a, const Octonion& b) {
    Complex s(0.0);
    for (std::size_t i = 0; i < 8; ++i) s += a.c[i] * std::conj(b.c[i]);
    return 2.0 * s;
}

double coord_norm2(const Octonion& a) {
    double s = 0.0;
    for (const auto& x : a.c) s += std::norm(x);
    return s;
}

double coord_norm(const Octonion& a) { return std::sqrt(coord_norm2(a)); }

DenseOperator left_mult_operator(const Octonion& beta) {
    DenseOperator m(8, 8);
    for (std::size_t j = 0; j < 8; ++j) {
        const Octonion col = beta * Octonion::basis(j);
        for (std::size_t i = 0; i < 8; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col.c[i];
    }
    return m;
}

CompositionElement to_generic(const Octonion& a) {
    return CompositionElement(AlgebraSignature::complex_level(3),
                              std::vector<Complex>(a.c.begin(), a.c.end()));
}

Octonion to_octonion(const CompositionElement& a) {
    if (!(a.signature() == AlgebraSignature::complex_level(3))) {
        throw std::invalid_argument("element is not a canonical complex octonion");
    }
    Octonion out;
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = a[i];
    return out;
}

}  // namespace excdom
