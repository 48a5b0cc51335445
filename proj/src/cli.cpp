#include "comax/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "comax/comax_graph.hpp"
#include "comax/connectivity.hpp"
#include "comax/oracle.hpp"
#include "comax/quotient_spectra.hpp"
#include "comax/scan.hpp"

namespace comax::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Modulus modulus_arg(std::int64_t n)
{
    try {
        return Modulus(n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string value_text(const ReportValue& v)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return "-";
            else if constexpr (std::is_same_v<T, bool>)
                return x ? "true" : "false";
            else {
                std::ostringstream os;
                os.precision(12);
                os << x;
                return os.str();
            }
        },
        v);
}

// ---------------------------------------------------------------- spectrum

std::string pretty_spectrum(const SpectrumMultiset& s)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& e : s.integer_part()) {
        os << (first ? "" : " ") << e.value;
        if (e.multiplicity > 1)
            os << '^' << e.multiplicity;
        first = false;
    }
    if (!s.is_integral())
        os << " | roots of " << s.residual().to_string();
    return os.str();
}

void csv_spectrum(const SpectrumMultiset& s, std::ostream& out)
{
    out << "value,multiplicity,exact\n";
    std::vector<std::tuple<double, std::string, std::int64_t, bool>> rows;
    for (const auto& e : s.integer_part())
        rows.emplace_back(static_cast<double>(e.value), std::to_string(e.value), e.multiplicity, true);
    if (!s.is_integral())
        for (const auto& r : real_roots(s.residual())) {
            std::ostringstream os;
            os.precision(15);
            os << r.value;
            rows.emplace_back(r.value, os.str(), r.multiplicity, false);
        }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
    for (const auto& [v, text, k, exact] : rows)
        out << text << ',' << k << ',' << (exact ? "true" : "false") << '\n';
}

int cmd_spectrum(std::int64_t n, const std::string& format, std::ostream& out)
{
    const Modulus m = modulus_arg(n);
    const SpectrumMultiset s = full_spectrum(m);
    if (format == "json")
        out << spectrum_json(m, s).dump(2) << '\n';
    else if (format == "csv")
        csv_spectrum(s, out);
    else
        out << pretty_spectrum(s) << '\n';
    return kOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(std::int64_t n, bool json, std::ostream& out, std::ostream& err)
{
    const Modulus m = modulus_arg(n);
    const auto reports = verify_all(m);
    std::vector<std::string> failing;
    for (const auto& r : reports)
        if (r.failed())
            failing.push_back(r.theorem);

    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports)
            arr.push_back(report_json(r));
        out << nlohmann::json{{"n", n}, {"reports", arr}, {"ok", failing.empty()}}.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            out << r.theorem << ": " << to_string(r.outcome) << " (claimed " << value_text(r.claimed)
                << ", computed " << value_text(r.computed) << ')';
            if (!r.note.empty())
                out << "  " << r.note;
            out << '\n';
        }
    }
    if (failing.empty())
        return kOk;
    err << "disagreement for n=" << n << ':';
    for (const auto& id : failing)
        err << ' ' << id;
    err << '\n';
    return kDisagreement;
}

// -------------------------------------------------------------------- scan

int cmd_scan(const ScanOptions& opts, const std::string& path, std::ostream& out, std::ostream& err)
{
    if (opts.from < 3 || opts.from > opts.to)
        throw UsageError("scan range must satisfy 3 <= from <= to");
    if (opts.to > scan_limit())
        throw UsageError("scan range exceeds the scan limit of " + std::to_string(scan_limit()));

    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    ScanSummary summary;
    if (path.empty() || path == "-") {
        summary = write_scan(opts, out, false);
    } else {
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file)
            throw IoError("cannot open " + path + " for writing");
        summary = write_scan(opts, file, json);
        file.flush();
        if (!file)
            throw IoError("write to " + path + " failed");
    }
    std::ostream& note = (path.empty() || path == "-") ? err : out;
    note << "scanned " << summary.scanned << ": " << summary.integral << " integral, " << summary.nonintegral
         << " nonintegral, " << summary.written << " written\n";
    return kOk;
}

// ---------------------------------------------------------------------- g2

int cmd_g2(std::int64_t n, const std::string& action, std::ostream& out)
{
    const Modulus m = modulus_arg(n);
    if (m.is_prime())
        throw UsageError("G2 is empty");
    if (action == "export") {
        const LabelledGraph g2 = g2_graph(m);
        out << edge_list(g2.graph, g2.labels);
        return kOk;
    }
    if (action == "components") {
        out << connected_components(g2_graph(m).graph) << '\n';
        return kOk;
    }
    const auto vertices = static_cast<std::size_t>(m.n() - m.phi() - 1);
    if (vertices > kG2CutLimit)
        throw UsageError("G2 has " + std::to_string(vertices) + " vertices; kappa is limited to " +
                         std::to_string(kG2CutLimit));
    if (!m.is_squarefree()) {
        out << "computed " << min_vertex_cut(g2_graph(m).graph) << ", no bound (n not squarefree)\n";
        return kOk;
    }
    const KappaG2Report k = kappa_g2_bound(m);
    out << "computed " << value_text(k.report.computed) << ", bound " << value_text(k.report.claimed) << ", "
        << (k.tight.value_or(false) ? "tight" : "not tight") << '\n';
    return k.report.failed() ? kDisagreement : kOk;
}

// ------------------------------------------------------------------- graph

int cmd_graph(std::int64_t n, const std::string& action, std::ostream& out)
{
    const Modulus m = modulus_arg(n);
    if (action == "classes") {
        out << class_summary(m).dump(2) << '\n';
        return kOk;
    }
    std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        labels[static_cast<std::size_t>(i)] = i;
    out << edge_list(explicit_graph(m), labels);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Laplacian spectra of comaximal graphs of Z_n", "comax"};
    app.require_subcommand(1);

    std::int64_t n = 0;
    std::string format = "pretty";
    auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum of Gamma(Z_n)");
    spectrum->add_option("n", n, "modulus")->required();
    spectrum->add_option("--format", format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    bool json = false;
    auto* verify = app.add_subcommand("verify", "Cross-check spectra and structural statements for n");
    verify->add_option("n", n, "modulus")->required();
    verify->add_flag("--json", json, "emit reports as JSON");

    ScanOptions scan_opts;
    scan_opts.workers = std::max(1U, std::thread::hardware_concurrency());
    std::string out_path;
    std::string filter = "all";
    auto* scan = app.add_subcommand("scan", "Integrality scan over a range of n");
    scan->add_option("--from", scan_opts.from, "first n")->required();
    scan->add_option("--to", scan_opts.to, "last n")->required();
    scan->add_option("--workers", scan_opts.workers, "worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--out", out_path, "output file; .json selects JSON, otherwise CSV");
    scan->add_option("--filter", filter, "all, integral or nonintegral")
        ->check(CLI::IsMember({"all", "integral", "nonintegral"}));
    scan->add_flag("--timing", scan_opts.timing, "record wall time per n");

    std::string action;
    auto* g2 = app.add_subcommand("g2", "Subgraph on nonzero non-units");
    g2->add_option("n", n, "modulus")->required();
    g2->add_option("action", action, "export, kappa or components")
        ->required()
        ->check(CLI::IsMember({"export", "kappa", "components"}));

    auto* graph = app.add_subcommand("graph", "Explicit Gamma(Z_n)");
    graph->add_option("n", n, "modulus")->required();
    graph->add_option("action", action, "edges or classes")->required()->check(CLI::IsMember({"edges", "classes"}));

    std::vector<std::string> argv_store{"comax"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*spectrum)
            return cmd_spectrum(n, format, out);
        if (*verify)
            return cmd_verify(n, json, out, err);
        if (*scan) {
            scan_opts.filter = filter == "integral"      ? ScanFilter::integral
                               : filter == "nonintegral" ? ScanFilter::nonintegral
                                                         : ScanFilter::all;
            return cmd_scan(scan_opts, out_path, out, err);
        }
        if (*g2)
            return cmd_g2(n, action, out);
        if (*graph)
            return cmd_graph(n, action, out);
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << e.what() << '\n';
        return kIoError;
    } catch (const std::length_error& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kUsage;
}

}  // namespace comax::cli
