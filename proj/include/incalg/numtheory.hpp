#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "incalg/field.hpp"

namespace incalg {

/// Prime factorization by trial division + Pollard rho. n > 0.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

/// All positive divisors of n > 0, unsorted count capped by caller scale.
std::vector<mpz_class> divisors(const mpz_class& n);

/// All roots in the field of a monic polynomial with the given coefficients
/// (coeffs[i] is the coefficient of t^i, coeffs.back() = 1). Complete: every
/// root in the field is found. Returned sorted by value.
std::vector<Scalar> polynomial_roots(FieldSpec f, const std::vector<Scalar>& coeffs);

/// r with r^d = lambda, if one exists in the field. Over Q the positive root is
/// preferred; over F_p the smallest residue is returned.
std::optional<Scalar> nth_root(FieldSpec f, const Scalar& lambda, unsigned long d);

}  // namespace incalg
