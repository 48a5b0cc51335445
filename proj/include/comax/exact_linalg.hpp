#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "comax/polynomial.hpp"
#include "comax/types.hpp"

namespace comax {

/**
 * det(xI - A) for a square integer matrix, via Hessenberg reduction modulo
 * word-sized primes and Chinese remaindering. The number of primes is fixed in
 * advance from the bound (1 + r)^n on every coefficient, where r is the
 * largest absolute row sum, so the result is exact.
 */
IntegerPolynomial char_poly_modular(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant of a row-major k x k matrix. Consumes its input.
mpz_class bareiss_determinant(std::vector<mpz_class> entries, std::size_t k);

/**
 * det(xI - A) by evaluating the determinant at x = 0..n with Bareiss
 * elimination and interpolating exactly through forward differences.
 * Independent of char_poly_modular; O(n^4) big-integer work.
 */
IntegerPolynomial char_poly_interpolated(const IntMatrix& a);

}  // namespace comax
