#include <doctest.h>

#include <random>

#include "comax/exact_linalg.hpp"

using namespace comax;

TEST_CASE("bareiss determinant")
{
    CHECK(bareiss_determinant({}, 0) == 1);
    CHECK(bareiss_determinant({mpz_class(5)}, 1) == 5);
    CHECK(bareiss_determinant({2, 3, 1, 4}, 2) == 5);
    // needs a pivot swap
    CHECK(bareiss_determinant({0, 1, 1, 0}, 2) == -1);
    CHECK(bareiss_determinant({1, 2, 3, 4, 5, 6, 7, 8, 9}, 3) == 0);
}

TEST_CASE("characteristic polynomial examples")
{
    CHECK(char_poly_modular(IntMatrix(0, 0)).is_one());
    CHECK(char_poly_interpolated(IntMatrix(0, 0)).is_one());

    IntMatrix one(1, 1);
    one << 7;
    CHECK(char_poly_modular(one) == IntegerPolynomial{-7, 1});
    CHECK(char_poly_interpolated(one) == IntegerPolynomial{-7, 1});

    IntMatrix b(4, 4);
    b << 2, -2, 0, 0, -2, 4, -2, 0, 0, -2, 2, 0, 0, 0, 0, 0;
    CHECK(char_poly_modular(b) == IntegerPolynomial{0, 0, 12, -8, 1});
    CHECK(char_poly_interpolated(b) == IntegerPolynomial{0, 0, 12, -8, 1});
}

TEST_CASE("modular and interpolated routes agree")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 1 + trial % 9;
        const long span = trial < 30 ? 5 : 1'000'000'000L;
        std::uniform_int_distribution<long> dist(-span, span);
        IntMatrix a(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                a(i, j) = dist(rng);
        CHECK(char_poly_modular(a) == char_poly_interpolated(a));
    }
}
