#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "comax/quotient_spectra.hpp"
#include "comax/ring_divisors.hpp"

namespace comax {

using ReportValue = std::variant<std::monostate, bool, std::int64_t, double>;

enum class Outcome { agree, disagree, skipped, not_applicable, collision };

const char* to_string(Outcome o);

/**
 * A statement checked for one n: the value the closed formula claims next to
 * the value measured from spectra or brute force.
 */
struct TheoremReport {
    std::int64_t n = 0;
    std::string theorem;
    ReportValue claimed;
    ReportValue computed;
    Outcome outcome = Outcome::skipped;
    std::string note;

    bool agrees() const { return outcome == Outcome::agree; }
    bool failed() const { return outcome == Outcome::disagree; }
};

nlohmann::json report_json(const TheoremReport& r);

/// A spectrum position: exact when it lands on an integer eigenvalue.
struct SpectralValue {
    double value;
    std::optional<std::int64_t> exact;
};

/// k-th smallest eigenvalue (k = 1 is the smallest), counting multiplicity.
SpectralValue kth_smallest(const SpectrumMultiset& s, std::int64_t k);

/// Largest eigenvalue strictly below `ceiling`; nullopt if none.
std::optional<SpectralValue> largest_below(const SpectrumMultiset& s, std::int64_t ceiling);

inline constexpr std::int64_t kVertexConnectivityLimit = 60;
inline constexpr std::size_t kG2CutLimit = 128;
inline constexpr double kNumericTolerance = 1e-6;

/// Second-smallest eigenvalue against phi(n). Not applicable for prime n.
TheoremReport algebraic_connectivity(const Modulus& m, const SpectrumMultiset& spectrum);
TheoremReport algebraic_connectivity(const Modulus& m);

/// Max-flow kappa(Gamma(Z_n)) against phi(n); skipped above `limit`.
TheoremReport vertex_connectivity(const Modulus& m, std::int64_t limit = kVertexConnectivityLimit);

/// First: G2 connected iff n squarefree. Second: for squarefree n, the
/// complement of G2 connected iff n has more than two prime factors.
std::pair<TheoremReport, TheoremReport> g2_connectivity_report(const Modulus& m);

/// G2 component count against n / rad(n).
TheoremReport g2_component_report(const Modulus& m);

/// lambda_2 (largest eigenvalue below n) against the claim lambda_2 = n - 1 iff n = pq.
TheoremReport second_largest_report(const Modulus& m, const SpectrumMultiset& spectrum);
TheoremReport second_largest_report(const Modulus& m);

/// mult(n) = phi(n) and mult(phi(n)) = n / rad(n).
std::pair<TheoremReport, TheoremReport> multiplicity_reports(const Modulus& m, const SpectrumMultiset& spectrum);
std::pair<TheoremReport, TheoremReport> multiplicity_reports(const Modulus& m);

struct KappaG2Report {
    TheoremReport report;
    std::optional<bool> tight;  // computed == bound, when computed
};

/// kappa(G2) <= phi(n / p_max) for squarefree composite n. Throws otherwise.
KappaG2Report kappa_g2_bound(const Modulus& m, std::size_t vertex_limit = kG2CutLimit);

/// Every check for one n: oracle comparisons, closed form and all reports.
std::vector<TheoremReport> verify_all(const Modulus& m);

}  // namespace comax
