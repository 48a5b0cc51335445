#include "comax/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "comax/comax_graph.hpp"
#include "comax/oracle.hpp"

namespace comax {

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::agree:
        return "agree";
    case Outcome::disagree:
        return "disagree";
    case Outcome::skipped:
        return "skipped";
    case Outcome::not_applicable:
        return "not_applicable";
    case Outcome::collision:
        return "collision";
    }
    return "unknown";
}

namespace {

nlohmann::json value_json(const ReportValue& v)
{
    return std::visit(
        [](const auto& x) -> nlohmann::json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return nullptr;
            else
                return x;
        },
        v);
}

TheoremReport make(const Modulus& m, std::string id)
{
    TheoremReport r;
    r.n = m.n();
    r.theorem = std::move(id);
    return r;
}

Outcome agree_if(bool ok) { return ok ? Outcome::agree : Outcome::disagree; }

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

bool fits_dense(const Modulus& m) { return static_cast<std::size_t>(m.n()) <= dense_limit(); }

bool g2_fits_dense(const Modulus& m) { return static_cast<std::size_t>(m.n() - m.phi() - 1) <= dense_limit(); }

struct Run {
    double value;
    std::int64_t count;
    std::optional<std::int64_t> exact;
};

std::vector<Run> ascending_runs(const SpectrumMultiset& s)
{
    std::vector<Run> runs;
    for (const auto& e : s.integer_part())
        runs.push_back({static_cast<double>(e.value), e.multiplicity, e.value});
    if (s.residual().degree() > 0)
        for (const auto& r : real_roots(s.residual()))
            runs.push_back({r.value, r.multiplicity, std::nullopt});
    std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.value < b.value; });
    return runs;
}

}  // namespace

nlohmann::json report_json(const TheoremReport& r)
{
    nlohmann::json j = {{"n", r.n},
                        {"theorem", r.theorem},
                        {"claimed", value_json(r.claimed)},
                        {"computed", value_json(r.computed)},
                        {"agrees", r.agrees()},
                        {"status", to_string(r.outcome)}};
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

SpectralValue kth_smallest(const SpectrumMultiset& s, std::int64_t k)
{
    if (k < 1 || k > s.size())
        throw std::out_of_range("kth_smallest: index outside the spectrum");
    std::int64_t seen = 0;
    for (const auto& run : ascending_runs(s)) {
        seen += run.count;
        if (seen >= k)
            return {run.value, run.exact};
    }
    throw std::logic_error("kth_smallest: spectrum shorter than its size");
}

std::optional<SpectralValue> largest_below(const SpectrumMultiset& s, std::int64_t ceiling)
{
    std::optional<SpectralValue> best;
    for (const auto& run : ascending_runs(s)) {
        const bool below = run.exact ? *run.exact < ceiling : run.value < static_cast<double>(ceiling);
        if (below)
            best = SpectralValue{run.value, run.exact};
    }
    return best;
}

TheoremReport algebraic_connectivity(const Modulus& m, const SpectrumMultiset& spectrum)
{
    TheoremReport r = make(m, "algebraic_connectivity");
    r.claimed = m.phi();
    const SpectralValue second = kth_smallest(spectrum, 2);
    if (second.exact)
        r.computed = *second.exact;
    else
        r.computed = second.value;
    if (m.is_prime()) {
        r.outcome = Outcome::not_applicable;
        r.note = "n prime: G2 is empty and the second-smallest eigenvalue is n";
        return r;
    }
    r.outcome = second.exact ? agree_if(*second.exact == m.phi())
                             : agree_if(std::fabs(second.value - static_cast<double>(m.phi())) <= kNumericTolerance);
    return r;
}

TheoremReport algebraic_connectivity(const Modulus& m)
{
    return algebraic_connectivity(m, full_spectrum(m));
}

TheoremReport vertex_connectivity(const Modulus& m, std::int64_t limit)
{
    TheoremReport r = make(m, "vertex_connectivity");
    r.claimed = m.phi();
    if (m.n() > limit || static_cast<std::size_t>(m.n()) > dense_limit()) {
        r.outcome = Outcome::skipped;
        r.note = "n above the max-flow oracle limit of " + std::to_string(limit);
        return r;
    }
    const auto kappa = static_cast<std::int64_t>(min_vertex_cut(explicit_graph(m)));
    r.computed = kappa;
    r.outcome = agree_if(kappa == m.phi());
    return r;
}

std::pair<TheoremReport, TheoremReport> g2_connectivity_report(const Modulus& m)
{
    TheoremReport conn = make(m, "g2_connected");
    TheoremReport comp = make(m, "g2_complement_connected");
    if (m.is_prime()) {
        conn.outcome = comp.outcome = Outcome::not_applicable;
        conn.note = comp.note = "n prime: G2 is empty";
        return {conn, comp};
    }
    conn.claimed = m.is_squarefree();
    const bool applies_to_complement = m.is_squarefree();
    if (applies_to_complement)
        comp.claimed = m.distinct_prime_count() > 2;
    if (!g2_fits_dense(m)) {
        conn.outcome = Outcome::skipped;
        comp.outcome = applies_to_complement ? Outcome::skipped : Outcome::not_applicable;
        conn.note = comp.note = "G2 above the dense limit";
        return {conn, comp};
    }
    const LabelledGraph g2 = g2_graph(m);
    const bool connected = connected_components(g2.graph) == 1;
    conn.computed = connected;
    conn.outcome = agree_if(connected == m.is_squarefree());

    const bool complement_connected = connected_components(g2.graph.complement()) == 1;
    comp.computed = complement_connected;
    if (applies_to_complement) {
        comp.outcome = agree_if(complement_connected == (m.distinct_prime_count() > 2));
    } else {
        comp.outcome = Outcome::not_applicable;
        comp.note = "statement concerns squarefree n only";
    }
    return {conn, comp};
}

TheoremReport g2_component_report(const Modulus& m)
{
    TheoremReport r = make(m, "g2_components");
    r.claimed = m.n() / m.radical();
    if (m.is_prime()) {
        r.outcome = Outcome::not_applicable;
        r.note = "n prime: G2 is empty";
        return r;
    }
    if (!g2_fits_dense(m)) {
        r.outcome = Outcome::skipped;
        r.note = "G2 above the dense limit";
        return r;
    }
    const auto count = static_cast<std::int64_t>(connected_components(g2_graph(m).graph));
    r.computed = count;
    r.outcome = agree_if(count == m.n() / m.radical());
    return r;
}

TheoremReport second_largest_report(const Modulus& m, const SpectrumMultiset& spectrum)
{
    TheoremReport r = make(m, "second_largest");
    const bool two_primes = m.distinct_prime_count() == 2 && m.is_squarefree();
    r.claimed = two_primes;
    if (m.is_prime()) {
        r.outcome = Outcome::not_applicable;
        r.note = "n prime: the spectrum is {n, 0}";
        return r;
    }
    const auto lambda2 = largest_below(spectrum, m.n());
    if (!lambda2)
        throw std::logic_error("second_largest_report: no eigenvalue below n");
    const double bound = static_cast<double>(m.n() - 1);
    bool equal = false;
    bool within = false;
    if (lambda2->exact) {
        equal = *lambda2->exact == m.n() - 1;
        within = *lambda2->exact <= m.n() - 1;
    } else {
        equal = std::fabs(lambda2->value - bound) <= kNumericTolerance;
        within = lambda2->value <= bound + kNumericTolerance;
    }
    r.computed = equal;
    r.note = "lambda2 = " + (lambda2->exact ? std::to_string(*lambda2->exact) : fmt(lambda2->value));
    r.outcome = agree_if(within && equal == two_primes);
    return r;
}

TheoremReport second_largest_report(const Modulus& m)
{
    return second_largest_report(m, full_spectrum(m));
}

std::pair<TheoremReport, TheoremReport> multiplicity_reports(const Modulus& m, const SpectrumMultiset& spectrum)
{
    TheoremReport radius = make(m, "spectral_radius_multiplicity");
    radius.claimed = m.phi();
    radius.computed = spectrum.multiplicity(m.n());
    radius.outcome = agree_if(spectrum.multiplicity(m.n()) == m.phi());

    TheoremReport phi = make(m, "phi_multiplicity");
    phi.claimed = m.n() / m.radical();
    const std::int64_t mult = spectrum.multiplicity(m.phi());
    phi.computed = mult;
    if (m.is_prime()) {
        phi.outcome = Outcome::not_applicable;
        phi.note = "n prime: G2 is empty";
        return {radius, phi};
    }
    // phi(n) should only come from zero eigenvalues of G2 shifted by phi(n);
    // anything else landing on the same value is a collision.
    const std::int64_t from_g2 = g2_spectrum(m).multiplicity(0);
    if (mult != from_g2) {
        phi.outcome = Outcome::collision;
        phi.note = "another spectral branch lands on phi(n)";
        return {radius, phi};
    }
    phi.outcome = agree_if(mult == m.n() / m.radical());
    return {radius, phi};
}

std::pair<TheoremReport, TheoremReport> multiplicity_reports(const Modulus& m)
{
    return multiplicity_reports(m, full_spectrum(m));
}

KappaG2Report kappa_g2_bound(const Modulus& m, std::size_t vertex_limit)
{
    if (m.is_prime() || !m.is_squarefree())
        throw std::invalid_argument("kappa_g2_bound: n must be squarefree and composite");
    KappaG2Report out;
    TheoremReport& r = out.report;
    r = make(m, "kappa_g2_bound");
    const std::int64_t bound = euler_phi(m.n() / m.largest_prime());
    r.claimed = bound;
    const auto vertices = static_cast<std::size_t>(m.n() - m.phi() - 1);
    if (vertices > vertex_limit || vertices > kVertexCutLimit) {
        r.outcome = Outcome::skipped;
        r.note = "G2 has " + std::to_string(vertices) + " vertices, above the cut limit";
        return out;
    }
    const auto kappa = static_cast<std::int64_t>(min_vertex_cut(g2_graph(m).graph));
    r.computed = kappa;
    r.outcome = agree_if(kappa <= bound);
    out.tight = kappa == bound;
    r.note = *out.tight ? "tight" : "not tight";
    return out;
}

std::vector<TheoremReport> verify_all(const Modulus& m)
{
    std::vector<TheoremReport> out;
    const SpectrumMultiset spectrum = full_spectrum(m);

    TheoremReport size = make(m, "spectrum_size");
    size.claimed = m.n();
    size.computed = spectrum.size();
    size.outcome = agree_if(spectrum.size() == m.n());
    out.push_back(size);

    TheoremReport numeric = make(m, "numeric_oracle");
    numeric.claimed = true;
    if (fits_dense(m)) {
        const auto dense = numeric_spectrum(dense_laplacian(m));
        const auto ours = spectrum.numeric_values();
        double worst = 0.0;
        bool same_length = ours.size() == dense.eigenvalues.size();
        for (std::size_t i = 0; same_length && i < ours.size(); ++i)
            worst = std::max(worst, std::fabs(ours[i] - dense.eigenvalues[i]));
        const bool ok = same_length && worst <= kNumericTolerance;
        numeric.computed = ok;
        numeric.outcome = agree_if(ok);
        numeric.note = "max deviation " + fmt(worst);
    } else {
        numeric.outcome = Outcome::skipped;
        numeric.note = "n above the dense limit";
    }
    out.push_back(numeric);

    TheoremReport exact = make(m, "exact_char_poly");
    exact.claimed = true;
    if (m.n() <= kExactCharPolyLimit) {
        const IntegerPolynomial truth = exact_char_poly_full(m);
        const bool ok = truth == full_char_poly(m) && truth == spectrum.polynomial();
        exact.computed = ok;
        exact.outcome = agree_if(ok);
    } else {
        exact.outcome = Outcome::skipped;
        exact.note = "n above the exact limit of 64";
    }
    out.push_back(exact);

    TheoremReport closed = make(m, "closed_form");
    if (auto cf = closed_form(m)) {
        closed.claimed = true;
        closed.computed = *cf == spectrum;
        closed.outcome = agree_if(*cf == spectrum);
    } else {
        closed.outcome = Outcome::not_applicable;
        closed.note = "n has three or more distinct prime factors";
    }
    out.push_back(closed);

    out.push_back(algebraic_connectivity(m, spectrum));
    out.push_back(vertex_connectivity(m));
    auto [g2c, g2cc] = g2_connectivity_report(m);
    out.push_back(g2c);
    out.push_back(g2cc);
    out.push_back(g2_component_report(m));
    out.push_back(second_largest_report(m, spectrum));
    auto [radius, phi] = multiplicity_reports(m, spectrum);
    out.push_back(radius);
    out.push_back(phi);

    if (!m.is_prime() && m.is_squarefree()) {
        out.push_back(kappa_g2_bound(m).report);
    } else {
        TheoremReport k = make(m, "kappa_g2_bound");
        k.outcome = Outcome::not_applicable;
        k.note = m.is_prime() ? "n prime: G2 is empty" : "n is not squarefree";
        out.push_back(k);
    }
    return out;
}

}  // namespace comax
