#include "comax/quotient_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "comax/exact_linalg.hpp"

namespace comax {

bool CoprimalityGraph::adjacent(std::size_t i, std::size_t j) const
{
    return i != j && std::gcd(divisors.at(i), divisors.at(j)) == 1;
}

CoprimalityGraph coprimality_graph(const Modulus& m)
{
    CoprimalityGraph h{m.proper_divisors(), {}};
    for (std::size_t i = 0; i < h.divisors.size(); ++i)
        for (std::size_t j = i + 1; j < h.divisors.size(); ++j)
            if (std::gcd(h.divisors[i], h.divisors[j]) == 1)
                h.edges.emplace_back(i, j);
    return h;
}

QuotientMatrix g2_quotient(const Modulus& m)
{
    QuotientMatrix b;
    b.divisors = m.proper_divisors();
    const auto w = static_cast<Eigen::Index>(b.divisors.size());
    for (std::int64_t d : b.divisors)
        b.class_sizes.push_back(euler_phi(m.n() / d));
    b.entries = IntMatrix::Zero(w, w);
    for (Eigen::Index i = 0; i < w; ++i)
        for (Eigen::Index j = 0; j < w; ++j) {
            if (i == j || std::gcd(b.divisors[static_cast<std::size_t>(i)],
                                   b.divisors[static_cast<std::size_t>(j)]) != 1)
                continue;
            const std::int64_t nj = b.class_sizes[static_cast<std::size_t>(j)];
            b.entries(i, j) = -nj;
            b.entries(i, i) += nj;
        }
    return b;
}

IntegerPolynomial char_poly(const QuotientMatrix& b)
{
    return char_poly_modular(b.entries);
}

std::vector<double> symmetric_quotient_eigenvalues(const QuotientMatrix& b)
{
    const auto w = static_cast<Eigen::Index>(b.size());
    if (w == 0)
        return {};
    Eigen::MatrixXd sym(w, w);
    for (Eigen::Index i = 0; i < w; ++i)
        for (Eigen::Index j = 0; j < w; ++j) {
            if (i == j) {
                sym(i, j) = static_cast<double>(b.entries(i, i));
            } else if (b.entries(i, j) != 0) {
                const double ni = static_cast<double>(b.class_sizes[static_cast<std::size_t>(i)]);
                const double nj = static_cast<double>(b.class_sizes[static_cast<std::size_t>(j)]);
                sym(i, j) = -std::sqrt(ni * nj);
            } else {
                sym(i, j) = 0.0;
            }
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric quotient eigensolver did not converge");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

// ---------------------------------------------------------------------------

SpectrumMultiset::SpectrumMultiset(std::vector<Eigenvalue> integer_part, IntegerPolynomial residual)
    : residual_(std::move(residual))
{
    if (!residual_.is_monic())
        throw std::invalid_argument("SpectrumMultiset: residual must be monic");
    std::map<std::int64_t, std::int64_t, std::greater<>> merged;
    for (const auto& [v, k] : integer_part) {
        if (k < 0)
            throw std::invalid_argument("SpectrumMultiset: negative multiplicity");
        if (k > 0)
            merged[v] += k;
    }
    for (const auto& [v, k] : merged)
        ints_.push_back({v, k});
}

std::int64_t SpectrumMultiset::size() const
{
    std::int64_t total = residual_.degree();
    for (const auto& e : ints_)
        total += e.multiplicity;
    return total;
}

std::int64_t SpectrumMultiset::multiplicity(std::int64_t value) const
{
    for (const auto& e : ints_)
        if (e.value == value)
            return e.multiplicity;
    return 0;
}

SpectrumMultiset SpectrumMultiset::shifted(std::int64_t delta) const
{
    std::vector<Eigenvalue> moved = ints_;
    for (auto& e : moved)
        e.value += delta;
    return SpectrumMultiset(std::move(moved), residual_.with_roots_shifted(mpz_class(static_cast<long>(delta))));
}

SpectrumMultiset SpectrumMultiset::merged(const SpectrumMultiset& other) const
{
    std::vector<Eigenvalue> all = ints_;
    all.insert(all.end(), other.ints_.begin(), other.ints_.end());
    return SpectrumMultiset(std::move(all), residual_ * other.residual_);
}

IntegerPolynomial SpectrumMultiset::polynomial() const
{
    IntegerPolynomial p = residual_;
    for (const auto& e : ints_)
        p = p * IntegerPolynomial::linear(mpz_class(static_cast<long>(e.value)))
                    .pow(static_cast<unsigned>(e.multiplicity));
    return p;
}

std::vector<double> SpectrumMultiset::numeric_values() const
{
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (const auto& e : ints_)
        out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), static_cast<double>(e.value));
    if (residual_.degree() > 0) {
        std::int64_t found = 0;
        for (const auto& r : real_roots(residual_)) {
            out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
            found += r.multiplicity;
        }
        if (found != residual_.degree())
            throw std::logic_error("residual polynomial has non-real roots");
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Eigenvalue> class_part(const QuotientMatrix& b)
{
    std::vector<Eigenvalue> part;
    for (std::size_t i = 0; i < b.size(); ++i)
        part.push_back({b.row_degree(i), b.class_sizes[i] - 1});
    return part;
}

}  // namespace

IntegerPolynomial g2_char_poly(const Modulus& m)
{
    const QuotientMatrix b = g2_quotient(m);
    IntegerPolynomial p = char_poly(b);
    for (const auto& e : class_part(b))
        p = p * IntegerPolynomial::linear(mpz_class(static_cast<long>(e.value)))
                    .pow(static_cast<unsigned>(e.multiplicity));
    return p;
}

IntegerPolynomial full_char_poly(const Modulus& m)
{
    const mpz_class n(static_cast<long>(m.n()));
    IntegerPolynomial p = IntegerPolynomial{0, 1};
    p = p * IntegerPolynomial::linear(n).pow(static_cast<unsigned>(m.phi()));
    return p * g2_char_poly(m).with_roots_shifted(mpz_class(static_cast<long>(m.phi())));
}

SpectrumMultiset g2_spectrum(const Modulus& m)
{
    const QuotientMatrix b = g2_quotient(m);
    const IntegerPolynomial cp = char_poly(b);

    // Symmetric eigenvalues are accurate far below 1/2, so their floor and
    // ceiling cover every integer root of the exact polynomial.
    std::vector<std::int64_t> candidates;
    for (double v : symmetric_quotient_eigenvalues(b)) {
        candidates.push_back(static_cast<std::int64_t>(std::floor(v)));
        candidates.push_back(static_cast<std::int64_t>(std::ceil(v)));
    }
    IntegerRootSplit split = extract_integer_roots(cp, candidates);

    std::vector<Eigenvalue> ints = class_part(b);
    for (const auto& r : split.roots) {
        if (r.value < 0)
            throw std::logic_error("negative Laplacian eigenvalue in quotient spectrum");
        ints.push_back({r.value, r.multiplicity});
    }
    return SpectrumMultiset(std::move(ints), std::move(split.residual));
}

SpectrumMultiset full_spectrum(const Modulus& m)
{
    const SpectrumMultiset base({{0, 1}, {m.n(), m.phi()}});
    return base.merged(g2_spectrum(m).shifted(m.phi()));
}

bool is_laplacian_integral(const Modulus& m)
{
    return full_spectrum(m).is_integral();
}

// ---------------------------------------------------------------------------

SpectrumMultiset closed_form_prime(std::int64_t p)
{
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("closed_form_prime: p must be an odd prime");
    return SpectrumMultiset({{p, p - 1}, {0, 1}});
}

SpectrumMultiset closed_form_prime_power(std::int64_t p, int m)
{
    if (m < 2 || !is_prime(p))
        throw std::invalid_argument("closed_form_prime_power: needs prime p and m >= 2");
    std::int64_t n = 1;
    for (int i = 0; i < m; ++i)
        n *= p;
    const std::int64_t phi = n / p * (p - 1);
    return SpectrumMultiset({{n, phi}, {phi, n - phi - 1}, {0, 1}});
}

SpectrumMultiset closed_form_two_primes(std::int64_t p, std::int64_t q, int alpha, int beta)
{
    if (!is_prime(p) || !is_prime(q) || p >= q || alpha < 1 || beta < 1)
        throw std::invalid_argument("closed_form_two_primes: needs primes p < q and exponents >= 1");
    std::int64_t s = 1;  // p^(alpha-1) q^(beta-1) = t + 1
    for (int i = 1; i < alpha; ++i)
        s *= p;
    for (int i = 1; i < beta; ++i)
        s *= q;
    const std::int64_t n = s * p * q;
    const std::int64_t phi = s * (p - 1) * (q - 1);
    return SpectrumMultiset({
        {n, phi},
        {s * (p - 1) + phi, s * (q - 1) - 1},
        {s * (q - 1) + phi, s * (p - 1) - 1},
        {phi, s},
        {s * (p + q - 2) + phi, 1},
        {0, 1},
    });
}

std::optional<SpectrumMultiset> closed_form(const Modulus& m)
{
    const auto& f = m.factorization();
    if (f.size() == 1)
        return f[0].exponent == 1 ? closed_form_prime(f[0].prime)
                                  : closed_form_prime_power(f[0].prime, f[0].exponent);
    if (f.size() == 2)
        return closed_form_two_primes(f[0].prime, f[1].prime, f[0].exponent, f[1].exponent);
    return std::nullopt;
}

nlohmann::json spectrum_json(const Modulus& m, const SpectrumMultiset& s)
{
    nlohmann::json ints = nlohmann::json::array();
    for (const auto& e : s.integer_part())
        ints.push_back({e.value, e.multiplicity});
    nlohmann::json residual = nullptr;
    if (!s.is_integral()) {
        residual = nlohmann::json::array();
        for (const auto& c : s.residual().coefficients()) {
            if (c.fits_slong_p())
                residual.push_back(c.get_si());
            else
                residual.push_back(c.get_str());
        }
    }
    return {{"n", m.n()},
            {"phi", m.phi()},
            {"integer_eigenvalues", ints},
            {"residual_poly", residual},
            {"laplacian_integral", s.is_integral()}};
}

}  // namespace comax
