#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "comax/polynomial.hpp"
#include "comax/ring_divisors.hpp"
#include "comax/types.hpp"

namespace comax {

/// Proper divisors of n joined when coprime. The cell template of G2.
struct CoprimalityGraph {
    std::vector<std::int64_t> divisors;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, lexicographic

    bool adjacent(std::size_t i, std::size_t j) const;
};

CoprimalityGraph coprimality_graph(const Modulus& m);

/**
 * Integer quotient matrix of G2 over the divisor classes. With n_i the class
 * sizes, B[i][i] = N_i = sum of n_j over classes j coprime to i, and
 * B[i][j] = -n_j for coprime pairs. B = D^-1 M D for D = diag(sqrt(n_i)), where
 * M is the symmetric quotient with entries -sqrt(n_i n_j), so both share one
 * spectrum.
 */
struct QuotientMatrix {
    std::vector<std::int64_t> divisors;
    std::vector<std::int64_t> class_sizes;
    IntMatrix entries;

    std::size_t size() const noexcept { return divisors.size(); }
    std::int64_t row_degree(std::size_t i) const { return entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)); }
};

QuotientMatrix g2_quotient(const Modulus& m);

/// Exact det(xI - B).
IntegerPolynomial char_poly(const QuotientMatrix& b);

/// Eigenvalues of the symmetric form M, ascending, in double precision.
std::vector<double> symmetric_quotient_eigenvalues(const QuotientMatrix& b);

struct Eigenvalue {
    std::int64_t value;
    std::int64_t multiplicity;

    friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/**
 * Multiset of Laplacian eigenvalues: exact integers with multiplicities plus a
 * residual integer polynomial whose roots are the remaining (non-integer)
 * eigenvalues.
 */
class SpectrumMultiset {
public:
    SpectrumMultiset() : residual_(IntegerPolynomial::one()) {}
    /// Merges repeated values, drops zero multiplicities, sorts descending.
    explicit SpectrumMultiset(std::vector<Eigenvalue> integer_part,
                              IntegerPolynomial residual = IntegerPolynomial::one());

    const std::vector<Eigenvalue>& integer_part() const noexcept { return ints_; }
    const IntegerPolynomial& residual() const noexcept { return residual_; }

    /// Sum of multiplicities plus the residual degree.
    std::int64_t size() const;
    std::int64_t multiplicity(std::int64_t value) const;
    bool is_integral() const { return residual_.degree() == 0; }

    SpectrumMultiset shifted(std::int64_t delta) const;
    SpectrumMultiset merged(const SpectrumMultiset& other) const;

    /// prod (x - v)^mult * residual.
    IntegerPolynomial polynomial() const;

    /// Every eigenvalue ascending with multiplicity; residual roots found numerically.
    std::vector<double> numeric_values() const;

    friend bool operator==(const SpectrumMultiset& a, const SpectrumMultiset& b)
    {
        return a.ints_ == b.ints_ && a.residual_ == b.residual_;
    }

private:
    std::vector<Eigenvalue> ints_;
    IntegerPolynomial residual_;
};

/// mu(G2, x) = prod over classes (x - N_d)^(|A_d| - 1) * det(xI - B).
IntegerPolynomial g2_char_poly(const Modulus& m);

/// x (x - n)^phi(n) mu(G2, x - phi(n)).
IntegerPolynomial full_char_poly(const Modulus& m);

SpectrumMultiset g2_spectrum(const Modulus& m);
SpectrumMultiset full_spectrum(const Modulus& m);

bool is_laplacian_integral(const Modulus& m);

SpectrumMultiset closed_form_prime(std::int64_t p);
SpectrumMultiset closed_form_prime_power(std::int64_t p, int m);
SpectrumMultiset closed_form_two_primes(std::int64_t p, std::int64_t q, int alpha, int beta);

/// The matching closed form when n is p, p^m or p^a q^b; nullopt otherwise.
std::optional<SpectrumMultiset> closed_form(const Modulus& m);

/// {"n","phi","integer_eigenvalues","residual_poly","laplacian_integral"}.
nlohmann::json spectrum_json(const Modulus& m, const SpectrumMultiset& s);

}  // namespace comax
