#ifndef EXCDOM_TOLERANCES_HPP
#define EXCDOM_TOLERANCES_HPP

namespace excdom {

/// Numeric tolerances used throughout the library.
///
/// `alg` bounds residuals of algebraic identities at unit scale; `cls` bounds
/// classification decisions (tripotent rank, boundary strata, subspace
/// membership). Identities are exact in exact arithmetic, so every residual is
/// measured relative to (1 + max operand norm) at the appropriate degree.
struct Tolerances {
    double alg = 1e-9;
    double cls = 1e-7;
};

inline constexpr Tolerances default_tolerances{};

}  // namespace excdom

#endif
