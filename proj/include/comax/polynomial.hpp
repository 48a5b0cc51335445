#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace comax {

/**
 * Dense univariate polynomial with arbitrary-precision integer coefficients,
 * constant term first. The coefficient vector never carries leading zeros, so
 * the zero polynomial has no coefficients and degree -1.
 *
 * Characteristic polynomials produced by this library are monic.
 */
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<mpz_class> coefficients);
    IntegerPolynomial(std::initializer_list<long> coefficients);

    static IntegerPolynomial one() { return IntegerPolynomial{1}; }
    /// x - r
    static IntegerPolynomial linear(const mpz_class& r);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const std::vector<mpz_class>& coefficients() const noexcept { return c_; }
    /// Coefficient of x^i; zero past the degree.
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const mpz_class& leading() const { return c_.back(); }

    mpz_class evaluate(const mpz_class& x) const;
    mpq_class evaluate(const mpq_class& x) const;

    IntegerPolynomial derivative() const;
    IntegerPolynomial pow(unsigned k) const;

    /// p(x - a): every root moves by +a.
    IntegerPolynomial with_roots_shifted(const mpz_class& a) const;

    /// Synthetic division by (x - r): returns quotient and remainder p(r).
    std::pair<IntegerPolynomial, mpz_class> divide_linear(const mpz_class& r) const;

    IntegerPolynomial& operator+=(const IntegerPolynomial& o);
    IntegerPolynomial& operator-=(const IntegerPolynomial& o);
    friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
    friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) { return a.c_ == b.c_; }

    /// Human-readable form such as "x^4 - 8x^3 + 12x^2".
    std::string to_string() const;

private:
    void trim();

    std::vector<mpz_class> c_;
};

struct IntegerRoot {
    std::int64_t value;
    std::int64_t multiplicity;

    friend bool operator==(const IntegerRoot&, const IntegerRoot&) = default;
};

/// p = prod (x - r)^mult * residual, residual free of integer roots.
struct IntegerRootSplit {
    std::vector<IntegerRoot> roots;  // descending by value
    IntegerPolynomial residual;
};

/**
 * Strips every integer root from a monic polynomial. Candidates are 0 and the
 * divisors (both signs) of the trailing nonzero coefficient, restricted to the
 * Fujiwara root bound. Throws std::range_error when that search range exceeds
 * 2^32; use the candidate overload in that case.
 */
IntegerRootSplit extract_integer_roots(const IntegerPolynomial& p);

/**
 * Same, but only the supplied candidates (and 0) are tested. Complete only when
 * the candidate set contains every integer root, e.g. floor and ceil of
 * sufficiently accurate numeric roots.
 */
IntegerRootSplit extract_integer_roots(const IntegerPolynomial& p,
                                       std::span<const std::int64_t> candidates);

/// Upper bound on |z| over all complex roots z (Fujiwara). Zero for constants.
mpz_class root_bound(const IntegerPolynomial& p);

/// Square-free factors f_1, f_2, ... with p = lc * prod f_i^i (primitive, positive leading).
std::vector<IntegerPolynomial> squarefree_decomposition(const IntegerPolynomial& p);

struct RealRoot {
    double value;
    int multiplicity;
};

/**
 * All distinct real roots with multiplicities, ascending. Roots are isolated
 * exactly with Sturm sequences over Q and refined by bisection until the
 * bracket is narrower than rel_tol * max(1, |root|).
 */
std::vector<RealRoot> real_roots(const IntegerPolynomial& p, double rel_tol = 1e-13);

}  // namespace comax
