#include "comax/ring_divisors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace comax {

std::vector<PrimePower> factorize(std::int64_t n)
{
    if (n < 2)
        throw std::invalid_argument("factorize: n must be at least 2");

    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::int64_t euler_phi(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("euler_phi: n must be at least 1");
    if (n == 1)
        return 1;
    std::int64_t phi = n;
    for (const auto& [p, e] : factorize(n))
        phi = phi / p * (p - 1);
    return phi;
}

namespace {

std::vector<std::int64_t> divisors_from(const std::vector<PrimePower>& factors)
{
    std::vector<std::int64_t> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

std::vector<std::int64_t> proper_divisors(std::int64_t n)
{
    if (n < 3)
        throw std::invalid_argument("proper_divisors: n must be at least 3");
    auto divs = divisors_from(factorize(n));
    return {divs.begin() + 1, divs.end() - 1};
}

std::int64_t radical(std::int64_t n)
{
    if (n < 2)
        throw std::invalid_argument("radical: n must be at least 2");
    std::int64_t r = 1;
    for (const auto& f : factorize(n))
        r *= f.prime;
    return r;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    const auto f = factorize(n);
    return f.size() == 1 && f[0].exponent == 1;
}

std::int64_t label_gcd(std::int64_t x, std::int64_t n)
{
    return x == 0 ? n : std::gcd(x, n);
}

Modulus::Modulus(std::int64_t n)
    : n_(n)
{
    if (n < 3)
        throw std::invalid_argument("n must be at least 3");
    factors_ = factorize(n);
    phi_ = n;
    radical_ = 1;
    for (const auto& [p, e] : factors_) {
        phi_ = phi_ / p * (p - 1);
        radical_ *= p;
    }
    auto divs = divisors_from(factors_);
    proper_.assign(divs.begin() + 1, divs.end() - 1);
}

std::string Modulus::factorization_string() const
{
    std::string s;
    for (const auto& [p, e] : factors_) {
        if (!s.empty())
            s += '*';
        s += std::to_string(p) + '^' + std::to_string(e);
    }
    return s;
}

}  // namespace comax
