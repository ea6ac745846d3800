#ifndef EXCDOM_TESTS_HELPERS_HPP
#define EXCDOM_TESTS_HELPERS_HPP

#include <doctest.h>

#include <cmath>
#include <limits>

#include "excdom/sampling.hpp"

namespace excdom::testing {

inline Octonion null_unit() {
    // (1 + i e1)/2: two orthonormal real octonions of norm 1/4 each.
    Octonion b;
    b.c[0] = Complex(0.5, 0.0);
    b.c[1] = Complex(0.0, 0.5);
    return b;
}

inline AlbertElement e(std::size_t i) { return AlbertElement::diag_unit(i); }

inline double rel(double residual, double scale) { return residual / (1.0 + scale); }

}  // namespace excdom::testing

#endif
