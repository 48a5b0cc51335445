#include <doctest.h>

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "comax/comax_graph.hpp"
#include "comax/oracle.hpp"
#include "comax/quotient_spectra.hpp"

using namespace comax;

namespace {

using Spec = std::vector<Eigenvalue>;

SpectrumMultiset ms(Spec s) { return SpectrumMultiset(std::move(s)); }

std::int64_t trace(const SpectrumMultiset& s)
{
    std::int64_t t = 0;
    for (const auto& e : s.integer_part())
        t += e.value * e.multiplicity;
    // sum of roots of a monic residual is minus its second-highest coefficient
    const auto& r = s.residual();
    if (r.degree() > 0)
        t -= r.coeff(static_cast<std::size_t>(r.degree() - 1)).get_si();
    return t;
}

std::int64_t degree_sum(std::int64_t n)
{
    const Modulus m(n);
    std::int64_t total = 0;
    for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y)
            total += adjacent(m, x, y);
    return total;
}

}  // namespace

TEST_CASE("coprimality graph")
{
    const auto h30 = coprimality_graph(Modulus(30));
    // divisors 2,3,5,6,10,15: the triangle on 2,3,5 and each prime against the complementary product
    using E = std::pair<std::size_t, std::size_t>;
    CHECK(h30.edges == std::vector<E>{{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 4}, {2, 3}});

    const auto h8 = coprimality_graph(Modulus(8));
    CHECK(h8.divisors == std::vector<std::int64_t>{2, 4});
    CHECK(h8.edges.empty());

    const auto h12 = coprimality_graph(Modulus(12));
    CHECK(h12.edges == std::vector<E>{{0, 1}, {1, 2}});
    CHECK(h12.adjacent(1, 0));
    CHECK_FALSE(h12.adjacent(0, 2));
}

TEST_CASE("quotient matrix")
{
    const auto b12 = g2_quotient(Modulus(12));
    IntMatrix expected(4, 4);
    expected << 2, -2, 0, 0, -2, 4, -2, 0, 0, -2, 2, 0, 0, 0, 0, 0;
    CHECK(b12.entries == expected);
    CHECK(b12.class_sizes == std::vector<std::int64_t>{2, 2, 2, 1});

    CHECK(g2_quotient(Modulus(13)).size() == 0);

    // The diagonal is N_d = sum of the coprime class sizes; for n = 30 the
    // r-entry is (r-1)(p+q-1) = 16.
    const auto b30 = g2_quotient(Modulus(30));
    std::vector<std::int64_t> diag;
    for (std::size_t i = 0; i < b30.size(); ++i)
        diag.push_back(b30.row_degree(i));
    CHECK(diag == std::vector<std::int64_t>{7, 12, 16, 2, 4, 8});

    // row sums vanish: B is a Laplacian-like quotient
    for (std::int64_t n : {30, 60, 210, 360, 1001})
        CHECK(g2_quotient(Modulus(n)).entries.rowwise().sum().isZero());
}

TEST_CASE("pqr worked example")
{
    for (auto [p, q, r] : {std::array<std::int64_t, 3>{2, 3, 5}, std::array<std::int64_t, 3>{3, 5, 7}}) {
        const auto b = g2_quotient(Modulus(p * q * r));
        // divisor order p, q, r, pq, pr, qr
        CHECK(b.divisors == std::vector<std::int64_t>{p, q, r, p * q, p * r, q * r});
        const std::vector<std::int64_t> big_n{(p - 1) * (q + r - 1), (q - 1) * (p + r - 1), (r - 1) * (p + q - 1),
                                              (p - 1) * (q - 1),     (p - 1) * (r - 1),     (q - 1) * (r - 1)};
        const std::vector<std::int64_t> small_n{(q - 1) * (r - 1), (p - 1) * (r - 1), (p - 1) * (q - 1),
                                                r - 1,             q - 1,             p - 1};
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(b.row_degree(i) == big_n[i]);
            CHECK(b.class_sizes[i] == small_n[i]);
        }
    }
}

TEST_CASE("quotient char poly")
{
    CHECK(char_poly(g2_quotient(Modulus(12))) == IntegerPolynomial{0, 0, 12, -8, 1});
    CHECK(char_poly(g2_quotient(Modulus(7))).is_one());
}

TEST_CASE("spectrum multiset")
{
    const SpectrumMultiset s({{2, 1}, {5, 2}, {2, 2}, {9, 0}}, IntegerPolynomial{-2, 0, 1});
    CHECK(s.integer_part() == Spec{{5, 2}, {2, 3}});
    CHECK(s.size() == 7);
    CHECK(s.multiplicity(2) == 3);
    CHECK(s.multiplicity(9) == 0);
    CHECK_FALSE(s.is_integral());
    CHECK(s.shifted(3).integer_part() == Spec{{8, 2}, {5, 3}});
    CHECK(s.shifted(3).residual() == IntegerPolynomial{7, -6, 1});
    const auto v = s.numeric_values();
    REQUIRE(v.size() == 7);
    CHECK(v.front() == doctest::Approx(-1.41421356237));
    CHECK(v.back() == 5.0);
    CHECK_THROWS_AS(SpectrumMultiset({}, IntegerPolynomial{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SpectrumMultiset({{1, -1}}), std::invalid_argument);
    CHECK(SpectrumMultiset().size() == 0);
}

TEST_CASE("g2 and full spectra")
{
    CHECK(g2_spectrum(Modulus(12)) == ms({{0, 2}, {2, 3}, {4, 1}, {6, 1}}));
    CHECK(g2_spectrum(Modulus(13)) == SpectrumMultiset());
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {3, 5}, {5, 7}, {2, 11}, {7, 13}})
        CHECK(g2_spectrum(Modulus(p * q)) == ms({{0, 1}, {p - 1, q - 2}, {q - 1, p - 2}, {p + q - 2, 1}}));

    CHECK(full_spectrum(Modulus(5)) == ms({{5, 4}, {0, 1}}));
    CHECK(full_spectrum(Modulus(4)) == ms({{4, 2}, {2, 1}, {0, 1}}));
    const auto s12 = full_spectrum(Modulus(12));
    CHECK(s12 == ms({{12, 4}, {10, 1}, {8, 1}, {6, 3}, {4, 2}, {0, 1}}));
    CHECK(trace(s12) == 92);

    for (std::int64_t n = 3; n <= 150; ++n) {
        const auto s = full_spectrum(Modulus(n));
        CHECK(s.size() == n);
        CHECK(trace(s) == degree_sum(n));
        CHECK(s.polynomial() == full_char_poly(Modulus(n)));
    }
}

TEST_CASE("closed forms")
{
    CHECK(closed_form_prime(3) == ms({{3, 2}, {0, 1}}));
    CHECK(closed_form_prime(5) == ms({{5, 4}, {0, 1}}));
    CHECK(closed_form_prime(13) == ms({{13, 12}, {0, 1}}));
    CHECK_THROWS(closed_form_prime(9));

    CHECK(closed_form_prime_power(2, 2) == ms({{4, 2}, {2, 1}, {0, 1}}));
    CHECK(closed_form_prime_power(3, 2) == ms({{9, 6}, {6, 2}, {0, 1}}));
    CHECK(closed_form_prime_power(2, 3) == ms({{8, 4}, {4, 3}, {0, 1}}));

    CHECK(closed_form_two_primes(2, 3, 1, 1) == ms({{6, 2}, {5, 1}, {3, 1}, {2, 1}, {0, 1}}));
    CHECK(closed_form_two_primes(2, 3, 2, 1) == ms({{12, 4}, {10, 1}, {8, 1}, {6, 3}, {4, 2}, {0, 1}}));
    const auto s15 = closed_form_two_primes(3, 5, 1, 1);
    CHECK(s15 == ms({{15, 8}, {14, 1}, {12, 1}, {10, 3}, {8, 1}, {0, 1}}));
    CHECK(trace(s15) == degree_sum(15));
    CHECK(trace(closed_form_two_primes(2, 3, 1, 1)) == 22);

    CHECK_FALSE(closed_form(Modulus(30)).has_value());
    CHECK(*closed_form(Modulus(72)) == full_spectrum(Modulus(72)));
}

TEST_CASE("integrality")
{
    CHECK(is_laplacian_integral(Modulus(72)));
    CHECK(is_laplacian_integral(Modulus(11)));
    // n = 30 is left to the scanner; the answer here only has to be consistent
    const auto s30 = full_spectrum(Modulus(30));
    CHECK(is_laplacian_integral(Modulus(30)) == s30.is_integral());
}

TEST_CASE("both integer-root routes agree on quotient polynomials up to 2000")
{
    int compared = 0;
    for (std::int64_t n = 3; n <= 2000; ++n) {
        const Modulus m(n);
        const auto b = g2_quotient(m);
        const auto cp = char_poly(b);
        std::vector<std::int64_t> cands;
        for (double v : symmetric_quotient_eigenvalues(b)) {
            cands.push_back(static_cast<std::int64_t>(std::floor(v)));
            cands.push_back(static_cast<std::int64_t>(std::ceil(v)));
        }
        const auto hinted = extract_integer_roots(cp, cands);
        const auto searched = extract_integer_roots(cp);
        CHECK_MESSAGE(hinted.roots == searched.roots, "n = ", n);
        CHECK(hinted.residual == searched.residual);
        ++compared;
    }
    CHECK(compared == 1998);
}

TEST_CASE("spectrum json")
{
    const auto j = spectrum_json(Modulus(4), full_spectrum(Modulus(4)));
    CHECK(j["integer_eigenvalues"] == nlohmann::json::parse("[[4,2],[2,1],[0,1]]"));
    CHECK(j["residual_poly"].is_null());
    CHECK(j["laplacian_integral"] == true);
    CHECK(j["phi"] == 2);

    const auto s30 = full_spectrum(Modulus(30));
    const auto j30 = spectrum_json(Modulus(30), s30);
    CHECK(j30["laplacian_integral"] == s30.is_integral());
    if (!s30.is_integral())
        CHECK(j30["residual_poly"].size() == static_cast<std::size_t>(s30.residual().degree() + 1));
}
