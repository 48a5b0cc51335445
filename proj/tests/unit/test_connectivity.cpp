#include <doctest.h>

#include <stdexcept>

#include "comax/connectivity.hpp"

using namespace comax;

namespace {

std::int64_t as_int(const ReportValue& v) { return std::get<std::int64_t>(v); }
bool as_bool(const ReportValue& v) { return std::get<bool>(v); }

}  // namespace

TEST_CASE("spectrum positions")
{
    const SpectrumMultiset s({{12, 4}, {10, 1}, {8, 1}, {6, 3}, {4, 2}, {0, 1}});
    CHECK(*kth_smallest(s, 1).exact == 0);
    CHECK(*kth_smallest(s, 2).exact == 4);
    CHECK(*kth_smallest(s, 4).exact == 6);
    CHECK(*kth_smallest(s, 12).exact == 12);
    CHECK_THROWS_AS(kth_smallest(s, 13), std::out_of_range);
    CHECK(*largest_below(s, 12)->exact == 10);
    CHECK_FALSE(largest_below(s, 0).has_value());

    const SpectrumMultiset r({{5, 1}, {0, 1}}, IntegerPolynomial{-2, 0, 1});
    // ascending: -sqrt2, 0, sqrt2, 5
    CHECK(*kth_smallest(r, 2).exact == 0);
    const auto third = kth_smallest(r, 3);
    CHECK_FALSE(third.exact.has_value());
    CHECK(third.value == doctest::Approx(1.41421356237));
    CHECK(largest_below(r, 5)->value == doctest::Approx(1.41421356237));
    CHECK(*largest_below(r, 1)->exact == 0);
}

TEST_CASE("algebraic connectivity")
{
    auto r = algebraic_connectivity(Modulus(6));
    CHECK(as_int(r.claimed) == 2);
    CHECK(as_int(r.computed) == 2);
    CHECK(r.agrees());

    r = algebraic_connectivity(Modulus(9));
    CHECK(as_int(r.computed) == 6);
    CHECK(r.agrees());

    r = algebraic_connectivity(Modulus(30));
    CHECK(as_int(r.claimed) == 8);
    CHECK(r.outcome != Outcome::skipped);

    // For prime n the second-smallest eigenvalue is p, not p - 1.
    r = algebraic_connectivity(Modulus(7));
    CHECK(as_int(r.computed) == 7);
    CHECK(r.outcome == Outcome::not_applicable);
}

TEST_CASE("vertex connectivity")
{
    auto r = vertex_connectivity(Modulus(6));
    CHECK(as_int(r.computed) == 2);
    CHECK(r.agrees());
    CHECK(as_int(vertex_connectivity(Modulus(5)).computed) == 4);
    CHECK(as_int(vertex_connectivity(Modulus(12)).computed) == 4);
    CHECK(vertex_connectivity(Modulus(61)).outcome == Outcome::skipped);
    CHECK(vertex_connectivity(Modulus(61), 100).agrees());
}

TEST_CASE("g2 connectivity")
{
    auto [c30, cc30] = g2_connectivity_report(Modulus(30));
    CHECK(as_bool(c30.computed));
    CHECK(as_bool(cc30.computed));
    CHECK(c30.agrees());
    CHECK(cc30.agrees());

    auto [c15, cc15] = g2_connectivity_report(Modulus(15));
    CHECK(as_bool(c15.computed));
    CHECK_FALSE(as_bool(cc15.computed));
    CHECK(cc15.agrees());

    auto [c12, cc12] = g2_connectivity_report(Modulus(12));
    CHECK_FALSE(as_bool(c12.computed));
    CHECK(c12.agrees());
    CHECK(cc12.outcome == Outcome::not_applicable);

    CHECK(g2_connectivity_report(Modulus(7)).first.outcome == Outcome::not_applicable);
}

TEST_CASE("g2 components")
{
    CHECK(as_int(g2_component_report(Modulus(12)).computed) == 2);
    CHECK(g2_component_report(Modulus(12)).agrees());
    // A prime power leaves a null graph on p^(m-1) - 1 vertices.
    const auto r = g2_component_report(Modulus(27));
    CHECK(as_int(r.computed) == 8);
    CHECK(as_int(r.claimed) == 9);
    CHECK(r.failed());
}

TEST_CASE("second largest eigenvalue")
{
    auto r = second_largest_report(Modulus(15));
    CHECK(as_bool(r.claimed));
    CHECK(as_bool(r.computed));
    CHECK(r.agrees());
    CHECK(r.note == "lambda2 = 14");

    r = second_largest_report(Modulus(12));
    CHECK_FALSE(as_bool(r.computed));
    CHECK(r.note == "lambda2 = 10");
    CHECK(r.agrees());

    r = second_largest_report(Modulus(8));
    CHECK(r.note == "lambda2 = 4");
    CHECK(r.agrees());
}

TEST_CASE("multiplicities")
{
    auto [radius, phi] = multiplicity_reports(Modulus(12));
    CHECK(as_int(radius.computed) == 4);
    CHECK(as_int(phi.computed) == 2);
    CHECK(radius.agrees());
    CHECK(phi.agrees());

    std::tie(radius, phi) = multiplicity_reports(Modulus(30));
    CHECK(as_int(radius.computed) == 8);
    CHECK(as_int(phi.computed) == 1);
    CHECK(phi.agrees());

    std::tie(radius, phi) = multiplicity_reports(Modulus(9));
    CHECK(as_int(radius.computed) == 6);
    CHECK(as_int(phi.computed) == 2);
    CHECK(as_int(phi.claimed) == 3);
    CHECK(phi.failed());
}

TEST_CASE("kappa of g2")
{
    auto k = kappa_g2_bound(Modulus(15));
    CHECK(as_int(k.report.claimed) == 2);
    CHECK(as_int(k.report.computed) == 2);
    CHECK(k.tight == true);

    k = kappa_g2_bound(Modulus(105));
    CHECK(as_int(k.report.claimed) == 8);
    CHECK(as_int(k.report.computed) <= 8);
    CHECK(k.report.agrees());

    k = kappa_g2_bound(Modulus(30));
    CHECK(as_int(k.report.claimed) == 2);
    CHECK(k.report.agrees());

    CHECK_THROWS_AS(kappa_g2_bound(Modulus(12)), std::invalid_argument);
    CHECK_THROWS_AS(kappa_g2_bound(Modulus(7)), std::invalid_argument);
    CHECK(kappa_g2_bound(Modulus(1155), 128).report.outcome == Outcome::skipped);
}

TEST_CASE("verify_all")
{
    for (std::int64_t n : {12, 7, 30, 36, 105}) {
        bool any_failed = false;
        for (const auto& r : verify_all(Modulus(n)))
            any_failed = any_failed || r.failed();
        CHECK_MESSAGE(!any_failed, "n = ", n);
    }
    const auto reports = verify_all(Modulus(9));
    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.failed(); });
    CHECK(failed == 2);

    const auto j = report_json(reports.front());
    CHECK(j["theorem"] == "spectrum_size");
    CHECK(j["status"] == "agree");
    CHECK(j["agrees"] == true);
}
