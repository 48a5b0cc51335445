#include "comax/scan.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "comax/quotient_spectra.hpp"
#include "comax/ring_divisors.hpp"

namespace comax {

std::int64_t scan_limit()
{
    if (const char* env = std::getenv("COMAX_SCAN_LIMIT")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v >= 3)
            return v;
    }
    return kDefaultScanLimit;
}

ScanRecord scan_one(std::int64_t n, bool timing)
{
    const auto start = std::chrono::steady_clock::now();
    const Modulus m(n);
    const SpectrumMultiset s = full_spectrum(m);
    ScanRecord r;
    r.n = n;
    r.factorization = m.factorization_string();
    r.laplacian_integral = s.is_integral();
    r.distinct_prime_count = static_cast<std::int64_t>(m.distinct_prime_count());
    r.residual_degree = s.residual().degree();
    if (timing)
        r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return r;
}

std::string csv_row(const ScanRecord& r)
{
    return std::to_string(r.n) + ',' + r.factorization + ',' + (r.laplacian_integral ? "true" : "false") + ',' +
           std::to_string(r.distinct_prime_count) + ',' + std::to_string(r.residual_degree) + ',' +
           std::to_string(r.wall_time_ms);
}

nlohmann::json record_json(const ScanRecord& r)
{
    return {{"n", r.n},
            {"factorization", r.factorization},
            {"laplacian_integral", r.laplacian_integral},
            {"distinct_prime_count", r.distinct_prime_count},
            {"residual_degree", r.residual_degree},
            {"wall_time_ms", r.wall_time_ms}};
}

namespace {

bool passes(ScanFilter f, const ScanRecord& r)
{
    switch (f) {
    case ScanFilter::integral:
        return r.laplacian_integral;
    case ScanFilter::nonintegral:
        return !r.laplacian_integral;
    case ScanFilter::all:
        break;
    }
    return true;
}

}  // namespace

ScanSummary scan_range(const ScanOptions& opts, const std::function<void(const ScanRecord&)>& sink)
{
    if (opts.from < 3 || opts.from > opts.to)
        throw std::invalid_argument("scan range must satisfy 3 <= from <= to");
    if (opts.to > scan_limit())
        throw std::invalid_argument("scan range exceeds the scan limit of " + std::to_string(scan_limit()));

    const unsigned workers = std::max(1U, opts.workers);
    // Bounded look-ahead keeps the reorder buffer small on long ranges.
    const std::int64_t window = 256 * static_cast<std::int64_t>(workers);

    std::mutex mu;
    std::condition_variable cv;
    std::map<std::int64_t, ScanRecord> done;
    std::int64_t next_task = opts.from;
    std::int64_t next_emit = opts.from;
    std::exception_ptr failure;

    auto work = [&] {
        for (;;) {
            std::int64_t n;
            {
                std::unique_lock lock(mu);
                cv.wait(lock, [&] { return failure || next_task > opts.to || next_task < next_emit + window; });
                if (failure || next_task > opts.to)
                    return;
                n = next_task++;
            }
            try {
                ScanRecord r = scan_one(n, opts.timing);
                std::lock_guard lock(mu);
                done.emplace(n, std::move(r));
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure)
                    failure = std::current_exception();
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i)
        pool.emplace_back(work);

    ScanSummary summary;
    {
        std::unique_lock lock(mu);
        while (next_emit <= opts.to) {
            cv.wait(lock, [&] { return failure || done.count(next_emit) > 0; });
            if (failure)
                break;
            ScanRecord r = std::move(done.at(next_emit));
            done.erase(next_emit);
            ++next_emit;
            cv.notify_all();
            lock.unlock();
            ++summary.scanned;
            ++(r.laplacian_integral ? summary.integral : summary.nonintegral);
            std::exception_ptr sink_failure;
            if (passes(opts.filter, r)) {
                try {
                    sink(r);
                    ++summary.written;
                } catch (...) {
                    sink_failure = std::current_exception();
                }
            }
            lock.lock();
            if (sink_failure) {
                failure = sink_failure;
                break;
            }
        }
    }
    cv.notify_all();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return summary;
}

ScanSummary write_scan(const ScanOptions& opts, std::ostream& out, bool json)
{
    if (json) {
        bool first = true;
        out << "[\n";
        auto summary = scan_range(opts, [&](const ScanRecord& r) {
            out << (first ? "  " : ",\n  ") << record_json(r).dump();
            first = false;
        });
        out << (first ? "]\n" : "\n]\n");
        return summary;
    }
    out << kScanCsvHeader << '\n';
    return scan_range(opts, [&](const ScanRecord& r) { out << csv_row(r) << '\n'; });
}

}  // namespace comax
