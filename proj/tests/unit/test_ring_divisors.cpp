#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "comax/ring_divisors.hpp"

using namespace comax;

namespace {

std::int64_t phi_by_counting(std::int64_t n)
{
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k)
        count += std::gcd(k, n) == 1;
    return count;
}

}  // namespace

TEST_CASE("factorize")
{
    CHECK(factorize(12) == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factorize(97) == std::vector<PrimePower>{{97, 1}});
    CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(2) == std::vector<PrimePower>{{2, 1}});
    CHECK_THROWS_AS(factorize(1), std::invalid_argument);

    for (std::int64_t n = 2; n <= 3000; ++n) {
        std::int64_t product = 1;
        std::int64_t last = 1;
        for (const auto& [p, a] : factorize(n)) {
            CHECK(is_prime(p));
            CHECK(p > last);
            last = p;
            for (int i = 0; i < a; ++i)
                product *= p;
        }
        CHECK(product == n);
    }
}

TEST_CASE("euler_phi")
{
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(7) == 6);
    CHECK(euler_phi(1) == 1);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
    for (std::int64_t n = 1; n <= 2000; ++n)
        CHECK(euler_phi(n) == phi_by_counting(n));
}

TEST_CASE("proper_divisors")
{
    CHECK(proper_divisors(12) == std::vector<std::int64_t>{2, 3, 4, 6});
    CHECK(proper_divisors(13).empty());
    CHECK(proper_divisors(30) == std::vector<std::int64_t>{2, 3, 5, 6, 10, 15});
    CHECK_THROWS_AS(proper_divisors(2), std::invalid_argument);
    for (std::int64_t n = 3; n <= 1000; ++n) {
        std::vector<std::int64_t> expected;
        for (std::int64_t d = 2; d < n; ++d)
            if (n % d == 0)
                expected.push_back(d);
        CHECK(proper_divisors(n) == expected);
    }
}

TEST_CASE("radical")
{
    CHECK(radical(12) == 6);
    CHECK(radical(30) == 30);
    CHECK(radical(8) == 2);
    CHECK(radical(2) == 2);
}

TEST_CASE("label_gcd treats 0 as n")
{
    CHECK(label_gcd(0, 12) == 12);
    CHECK(label_gcd(10, 12) == 2);
    CHECK(label_gcd(7, 12) == 1);
}

TEST_CASE("Modulus")
{
    const Modulus m(360);
    CHECK(m.n() == 360);
    CHECK(m.phi() == 96);
    CHECK(m.radical() == 30);
    CHECK(m.w() == 22);
    CHECK(m.distinct_prime_count() == 3);
    CHECK(m.largest_prime() == 5);
    CHECK_FALSE(m.is_prime());
    CHECK_FALSE(m.is_squarefree());
    CHECK(m.factorization_string() == "2^3*3^2*5^1");

    CHECK(Modulus(13).is_prime());
    CHECK(Modulus(13).factorization_string() == "13^1");
    CHECK(Modulus(30).is_squarefree());

    CHECK_THROWS_WITH_AS(Modulus(2), "n must be at least 3", std::invalid_argument);
    CHECK_THROWS_AS(Modulus(-5), std::invalid_argument);
}
