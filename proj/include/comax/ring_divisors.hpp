#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace comax {

struct PrimePower {
    std::int64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization, primes ascending. Throws for n < 2.
std::vector<PrimePower> factorize(std::int64_t n);

/// Euler's totient. phi(1) = 1. Throws for n < 1.
std::int64_t euler_phi(std::int64_t n);

/// Divisors d of n with 1 < d < n, ascending. Empty when n is prime. Throws for n < 3.
std::vector<std::int64_t> proper_divisors(std::int64_t n);

/// Product of the distinct primes dividing n. Throws for n < 2.
std::int64_t radical(std::int64_t n);

bool is_prime(std::int64_t n);

/// gcd with the ring convention gcd(0, n) = n used for labels of Z_n.
std::int64_t label_gcd(std::int64_t x, std::int64_t n);

/**
 * An integer n >= 3 together with the number-theoretic data every other
 * module consumes: factorization, totient, radical and the ascending list of
 * proper divisors d_1 < ... < d_w. Immutable after construction.
 */
class Modulus {
public:
    explicit Modulus(std::int64_t n);

    std::int64_t n() const noexcept { return n_; }
    const std::vector<PrimePower>& factorization() const noexcept { return factors_; }
    std::int64_t phi() const noexcept { return phi_; }
    std::int64_t radical() const noexcept { return radical_; }
    const std::vector<std::int64_t>& proper_divisors() const noexcept { return proper_; }
    std::size_t w() const noexcept { return proper_.size(); }

    std::size_t distinct_prime_count() const noexcept { return factors_.size(); }
    std::int64_t largest_prime() const noexcept { return factors_.back().prime; }
    bool is_prime() const noexcept { return factors_.size() == 1 && factors_[0].exponent == 1; }
    bool is_squarefree() const noexcept { return radical_ == n_; }

    /// "p1^a1*p2^a2*..." with every exponent written out.
    std::string factorization_string() const;

private:
    std::int64_t n_;
    std::vector<PrimePower> factors_;
    std::int64_t phi_;
    std::int64_t radical_;
    std::vector<std::int64_t> proper_;
};

}  // namespace comax
