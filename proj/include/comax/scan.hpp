#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace comax {

struct ScanRecord {
    std::int64_t n = 0;
    std::string factorization;
    bool laplacian_integral = false;
    std::int64_t distinct_prime_count = 0;
    std::int64_t residual_degree = 0;
    std::int64_t wall_time_ms = 0;
};

enum class ScanFilter { all, integral, nonintegral };

struct ScanOptions {
    std::int64_t from = 3;
    std::int64_t to = 3;
    unsigned workers = 1;
    ScanFilter filter = ScanFilter::all;
    bool timing = false;  // wall_time_ms stays 0 otherwise, so output is reproducible
};

struct ScanSummary {
    std::int64_t scanned = 0;
    std::int64_t integral = 0;
    std::int64_t nonintegral = 0;
    std::int64_t written = 0;
};

inline constexpr std::int64_t kDefaultScanLimit = 1'000'000;

/// Upper bound on `to`; COMAX_SCAN_LIMIT overrides the default.
std::int64_t scan_limit();

ScanRecord scan_one(std::int64_t n, bool timing = false);

inline const char* kScanCsvHeader =
    "n,factorization,laplacian_integral,distinct_prime_count,residual_degree,wall_time_ms";

std::string csv_row(const ScanRecord& r);
nlohmann::json record_json(const ScanRecord& r);

/**
 * Computes one record per n in [from, to] on a pool of workers. `sink` is
 * called from the calling thread only, in ascending n, for every record that
 * passes the filter. Throws std::invalid_argument for a bad range.
 */
ScanSummary scan_range(const ScanOptions& opts, const std::function<void(const ScanRecord&)>& sink);

/// Scan into CSV, or into a JSON array when `json` is set.
ScanSummary write_scan(const ScanOptions& opts, std::ostream& out, bool json);

}  // namespace comax
