#include "comax/exact_linalg.hpp"

#include <mutex>
#include <stdexcept>

namespace comax {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1U)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool miller_rabin(u64 n)
{
    if (n < 2)
        return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % sp == 0)
            return n == sp;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // Deterministic base set for 64-bit integers.
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        a %= n;
        if (a == 0)
            continue;
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// Primes just below 2^62, generated on demand and shared between threads.
std::vector<u64> crt_primes(std::size_t count)
{
    static std::mutex mutex;
    static std::vector<u64> primes;
    std::lock_guard lock(mutex);
    u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
    while (primes.size() < count) {
        if (miller_rabin(candidate))
            primes.push_back(candidate);
        candidate -= 2;
    }
    return {primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(count)};
}

u64 reduce(std::int64_t v, u64 p)
{
    const auto m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    if (r < 0)
        r += m;
    return static_cast<u64>(r);
}

std::vector<u64> char_poly_mod(const IntMatrix& a, u64 p)
{
    const auto n = static_cast<std::size_t>(a.rows());
    std::vector<u64> h(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h[i * n + j] = reduce(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), p);
    auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

    // Similarity reduction to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && at(piv, j) == 0)
            ++piv;
        if (piv == n)
            continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(at(piv, c), at(j + 1, c));
            for (std::size_t r = 0; r < n; ++r)
                std::swap(at(r, piv), at(r, j + 1));
        }
        const u64 inv = invmod(at(j + 1, j), p);
        for (std::size_t k = j + 2; k < n; ++k) {
            const u64 u = mulmod(at(k, j), inv, p);
            if (u == 0)
                continue;
            for (std::size_t c = 0; c < n; ++c)
                at(k, c) = (at(k, c) + p - mulmod(u, at(j + 1, c), p)) % p;
            for (std::size_t r = 0; r < n; ++r)
                at(r, j + 1) = (at(r, j + 1) + mulmod(u, at(r, k), p)) % p;
        }
    }

    // Characteristic polynomials of the leading principal blocks, 1-based as in the usual recurrence.
    auto H = [&](std::size_t i, std::size_t j) { return at(i - 1, j - 1); };
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<u64> pm(m + 1, 0);
        const auto& prev = polys[m - 1];
        const u64 diag = H(m, m);
        for (std::size_t k = 0; k < prev.size(); ++k) {
            pm[k + 1] = (pm[k + 1] + prev[k]) % p;
            pm[k] = (pm[k] + p - mulmod(diag, prev[k], p)) % p;
        }
        u64 t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = mulmod(t, H(m - i + 1, m - i), p);
            if (t == 0)
                break;
            const u64 f = mulmod(t, H(m - i, m), p);
            if (f == 0)
                continue;
            const auto& q = polys[m - i - 1];
            for (std::size_t k = 0; k < q.size(); ++k)
                pm[k] = (pm[k] + p - mulmod(f, q[k], p)) % p;
        }
        polys[m] = std::move(pm);
    }
    return polys[n];
}

void require_square(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("characteristic polynomial needs a square matrix");
}

}  // namespace

IntegerPolynomial char_poly_modular(const IntMatrix& a)
{
    require_square(a);
    const auto n = static_cast<std::size_t>(a.rows());
    if (n == 0)
        return IntegerPolynomial::one();

    std::int64_t rho = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        std::int64_t s = 0;
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            s += a(i, j) < 0 ? -a(i, j) : a(i, j);
        rho = std::max(rho, s);
    }
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(rho + 1), static_cast<unsigned long>(n));
    bound *= 2;

    std::vector<mpz_class> residue(n + 1, 0);
    mpz_class modulus = 1;
    std::size_t used = 0;
    std::vector<u64> primes;
    while (modulus <= bound) {
        if (used == primes.size())
            primes = crt_primes(primes.size() + 16);
        const u64 p = primes[used++];
        const auto cp = char_poly_mod(a, p);
        const mpz_class pz(static_cast<unsigned long>(p));
        const u64 m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
        const u64 m_inv = invmod(m_mod_p, p);
        for (std::size_t k = 0; k <= n; ++k) {
            const u64 r_mod_p = mpz_fdiv_ui(residue[k].get_mpz_t(), p);
            const u64 diff = (cp[k] + p - r_mod_p) % p;
            const u64 t = mulmod(diff, m_inv, p);
            mpz_addmul_ui(residue[k].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
        }
        modulus *= pz;
    }
    const mpz_class half = modulus / 2;
    for (auto& c : residue)
        if (c > half)
            c -= modulus;
    return IntegerPolynomial(std::move(residue));
}

mpz_class bareiss_determinant(std::vector<mpz_class> m, std::size_t k)
{
    if (m.size() != k * k)
        throw std::invalid_argument("bareiss_determinant: size mismatch");
    if (k == 0)
        return 1;
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * k + j]; };
    int sign = 1;
    mpz_class prev = 1;
    mpz_class tmp;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (at(p, p) == 0) {
            std::size_t r = p + 1;
            while (r < k && at(r, p) == 0)
                ++r;
            if (r == k)
                return 0;
            for (std::size_t c = 0; c < k; ++c)
                std::swap(at(p, c), at(r, c));
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                mpz_mul(tmp.get_mpz_t(), at(i, j).get_mpz_t(), at(p, p).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), at(i, p).get_mpz_t(), at(p, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(p, p);
    }
    return sign * at(k - 1, k - 1);
}

IntegerPolynomial char_poly_interpolated(const IntMatrix& a)
{
    require_square(a);
    const auto n = static_cast<std::size_t>(a.rows());

    std::vector<mpz_class> values(n + 1);
    for (std::size_t x = 0; x <= n; ++x) {
        std::vector<mpz_class> m(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const long v = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                m[i * n + j] = (i == j ? static_cast<long>(x) : 0L) - v;
            }
        values[x] = bareiss_determinant(std::move(m), n);
    }

    // Newton forward form: p(x) = sum_k D^k p(0) * C(x, k).
    std::vector<mpz_class> diffs = values;
    std::vector<mpz_class> leading(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        leading[k] = diffs[0];
        for (std::size_t i = 0; i + 1 < diffs.size() - k; ++i)
            diffs[i] = diffs[i + 1] - diffs[i];
    }

    mpz_class nfact;
    mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
    IntegerPolynomial scaled;
    IntegerPolynomial falling = IntegerPolynomial::one();
    mpz_class kfact = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            falling = falling * IntegerPolynomial::linear(mpz_class(static_cast<unsigned long>(k - 1)));
            kfact *= static_cast<unsigned long>(k);
        }
        const mpz_class weight = leading[k] * (nfact / kfact);
        std::vector<mpz_class> term = falling.coefficients();
        for (auto& c : term)
            c *= weight;
        scaled += IntegerPolynomial(std::move(term));
    }
    std::vector<mpz_class> coeffs = scaled.coefficients();
    for (auto& c : coeffs)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), nfact.get_mpz_t());
    return IntegerPolynomial(std::move(coeffs));
}

}  // namespace comax
