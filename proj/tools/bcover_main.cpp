#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bcover/bounds.hpp"
#include "bcover/certificate.hpp"
#include "bcover/construct.hpp"
#include "bcover/covering_io.hpp"
#include "bcover/exact_log.hpp"
#include "bcover/search.hpp"
#include "bcover/types.hpp"
#include "bcover/verify.hpp"

namespace {

using namespace bcover;

constexpr int kExitOk = 0;        // success / complete
constexpr int kExitSemantic = 1;  // incomplete covering, bound violated, unproven optimum
constexpr int kExitUsage = 2;     // bad input: flags, files, parse errors
constexpr int kExitInternal = 3;  // invariant broken inside the tool

// Refuse to materialize coverings beyond ~100M vertex entries (hundreds of MB).
constexpr long long kMaxEntries = 100'000'000;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << data;
    return bool(out);
}

int report_parse_failure(const std::string& path, const ParseError& e) {
    std::cerr << path << ": parse error at line " << e.line << ", column " << e.column
              << " (byte " << e.offset << "): " << e.message;
    if (!e.token.empty()) std::cerr << " [token \"" << e.token << "\"]";
    std::cerr << "\n";
    return kExitUsage;
}

std::string chomp(std::string s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Number of vertex entries the covering file would hold.
BigInt estimated_entries(const std::string& method, std::uint64_t n, std::uint64_t x) {
    if (method == "bitstring" || method == "balanced")
        return BigInt(n) * ceil_log2(BigInt(n));
    const BigInt g = ceil_div(BigInt(n), BigInt(2) * x);
    return 2 * (g - 1) * n + BigInt(n) * ceil_log2(BigInt(2) * x);
}

int cmd_construct(long long n, std::optional<long long> x, const std::string& method,
                  const std::string& out) {
    if (n < 1) return usage_error("--n must be at least 1");
    std::optional<long long> xe = x;
    if (method == "balanced") {
        if (n % 2 != 0)
            return usage_error("method balanced covers K_{2x}; --n must be even");
        if (xe && *xe != n / 2)
            return usage_error("method balanced requires x = n/2 (got x=" +
                               std::to_string(*xe) + " for n=" + std::to_string(n) + ")");
        xe = n / 2;
    } else if (method == "partition") {
        if (!xe) return usage_error("method partition requires --x");
        if (*xe < 1) return usage_error("--x must be at least 1");
    }

    const std::uint64_t xu = xe ? std::uint64_t(*xe) : 1;
    const BigInt entries = estimated_entries(method, std::uint64_t(n), xu);
    if (entries > kMaxEntries)
        return usage_error("covering would hold about " + entries.convert_to<std::string>() +
                           " vertex entries; too large to materialize (use the bounds "
                           "subcommand for formulas at this size)");

    Covering cov;
    if (method == "bitstring") {
        cov = bitstring_cover(int(n));
    } else if (method == "balanced") {
        cov = balanced_cover(int(*xe));
    } else {
        // x beyond n/2 collapses to a single group; clamping keeps ints safe.
        cov = partition_cover(int(n), int(std::min<long long>(*xe, n)));
    }

    require_valid(cov);
    if (!is_complete_direct(cov).complete)
        throw std::logic_error("construction failed self-verification (incomplete)");
    if (method == "balanced") {
        for (const Biclique& b : cov.bicliques)
            if (static_cast<long long>(b.left.size()) != *xe ||
                static_cast<long long>(b.right.size()) != *xe)
                throw std::logic_error("balanced construction produced an unbalanced biclique");
    }
    if (method == "partition" && cov.max_component_size() > *xe)
        throw std::logic_error("partition construction exceeded the component bound");

    if (!write_file(out, write_covering(cov))) return usage_error("cannot write " + out);
    std::cout << "method: " << method << "\n"
              << "n: " << cov.n << "\n"
              << "bicliques: " << cov.count() << "\n"
              << "max component: " << cov.max_component_size() << "\n"
              << "complete: true\n"
              << "wrote: " << out << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& path, std::optional<long long> x) {
    if (x && *x < 1) return usage_error("--x must be at least 1");
    const auto text = read_file(path);
    if (!text) return usage_error("cannot open " + path);
    const ReadResult parsed = read_covering(*text);
    if (!parsed.ok()) return report_parse_failure(path, parsed.error);

    const Covering& cov = *parsed.covering;
    const CoverCheck direct = is_complete_direct(cov);
    const CoverCheck matrix = is_complete_matrix(cov);
    if (direct.complete != matrix.complete)
        throw std::logic_error("completeness verifiers disagree");
    const CertificateReport cert = size_sum_certificate(cov);

    std::cout << "n: " << cov.n << "\n"
              << "bicliques: " << cert.c << "\n"
              << "max component: " << cov.max_component_size() << "\n"
              << "size_sum: " << cert.size_sum << "\n"
              << "size threshold (ceil n*log2 n): " << cert.threshold_ceil << "\n"
              << "size bound met: " << yes_no(cert.meets_size_bound) << "\n"
              << "pigeonhole copies (sum 2^s_v): " << cert.copies_sum << "\n"
              << "pigeonhole holes (2^c): " << cert.holes << "\n"
              << "pigeonhole met: " << yes_no(cert.meets_pigeonhole) << "\n"
              << "complete (direct): " << yes_no(direct.complete) << "\n"
              << "complete (matrix): " << yes_no(matrix.complete) << "\n";
    bool ok = direct.complete;
    if (!direct.complete && direct.witness)
        std::cout << "witness uncovered pair: {" << direct.witness->first << ", "
                  << direct.witness->second << "}\n";
    if (x) {
        const bool within = cov.max_component_size() <= *x;
        std::cout << "within x=" << *x << ": " << yes_no(within) << "\n";
        ok = ok && within;
    }
    return ok ? kExitOk : kExitSemantic;
}

int cmd_bounds(std::uint64_t n, std::uint64_t x, const std::string& csv) {
    if (n < 1) return usage_error("--n must be at least 1");
    if (x < 1) return usage_error("--x must be at least 1");
    const BoundsReport r = bounds_report(n, x);
    std::cout << "n: " << r.n << "\n"
              << "x: " << r.x << "\n"
              << "lower_edges: " << r.lower_edges << "\n"
              << "lower_size: " << r.lower_size << "\n"
              << "lower_size_weak: " << r.lower_size_weak << "\n"
              << "lower_combined: " << r.lower_combined << "\n"
              << "upper_formula: " << r.upper_formula << "\n";
    if (r.ratio) {
        std::cout << "ratio: " << format_rational_fixed6(*r.ratio) << " (= "
                  << boost::multiprecision::numerator(*r.ratio) << "/"
                  << boost::multiprecision::denominator(*r.ratio) << ")\n";
    } else {
        std::cout << "ratio: undef\n";
    }
    if (!csv.empty()) {
        const std::string data = bounds_csv_header() + bounds_csv_row(r);
        if (csv == "-") std::cout << data;
        else if (!write_file(csv, data)) return usage_error("cannot write " + csv);
    }
    return kExitOk;
}

int cmd_search(int n, std::optional<int> x, std::optional<long long> node_limit,
               const std::string& seed_path, const std::string& out) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.x_max = x;
    cfg.node_limit = node_limit;
    if (!seed_path.empty()) {
        const auto text = read_file(seed_path);
        if (!text) return usage_error("cannot open " + seed_path);
        const ReadResult parsed = read_covering(*text);
        if (!parsed.ok()) return report_parse_failure(seed_path, parsed.error);
        cfg.upper_seed = *parsed.covering;
    }
    const SearchResult res = min_cover(cfg);
    std::cout << "min_size: " << res.min_size << "\n"
              << "nodes: " << res.nodes_explored << "\n"
              << "proven optimal: " << yes_no(res.proven_optimal) << "\n";
    if (!out.empty()) {
        if (!write_file(out, write_covering(res.optimal)))
            return usage_error("cannot write " + out);
        std::cout << "wrote: " << out << "\n";
    }
    return res.proven_optimal ? kExitOk : kExitSemantic;
}

int cmd_bench(const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& xs,
              const std::string& csv, bool bounds_only) {
    for (const auto n : ns)
        if (n < 1) return usage_error("--n values must be at least 1");
    for (const auto x : xs)
        if (x < 1) return usage_error("--x values must be at least 1");

    std::string out = chomp(bounds_csv_header()) + ",method,time_ms\n";
    std::optional<BigRational> max_ratio;
    for (const auto n : ns) {
        for (const auto x : xs) {
            const auto t0 = std::chrono::steady_clock::now();
            std::optional<BigInt> achieved;
            if (!bounds_only) {
                if (estimated_entries("partition", n, x) > kMaxEntries)
                    return usage_error("cell n=" + std::to_string(n) + " x=" +
                                       std::to_string(x) +
                                       " is too large to materialize; rerun with --bounds-only");
                const Covering cov =
                    partition_cover(int(n), int(std::min<std::uint64_t>(x, n)));
                require_valid(cov);
                if (!is_complete_direct(cov).complete)
                    throw std::logic_error("partition construction failed verification in bench");
                if (std::uint64_t(cov.max_component_size()) > x)
                    throw std::logic_error("partition construction exceeded the component bound in bench");
                achieved = cov.count();
            }
            const BoundsReport r = bounds_report(n, x, achieved);
            if (achieved && BigInt(*achieved) > r.upper_formula)
                throw std::logic_error("construction exceeded its formula upper bound in bench");
            const auto t1 = std::chrono::steady_clock::now();
            const long long ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            out += chomp(bounds_csv_row(r)) + ",partition," + std::to_string(ms) + "\n";
            if (r.ratio && (!max_ratio || *r.ratio > *max_ratio)) max_ratio = r.ratio;
        }
    }

    if (csv == "-") std::cout << out;
    else if (!write_file(csv, out)) return usage_error("cannot write " + csv);
    std::cout << "cells: " << ns.size() * xs.size() << "\n"
              << "max ratio: " << (max_ratio ? format_rational_fixed6(*max_ratio) : "undef")
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biclique edge-coverings of complete graphs: construct, verify, bound, search, bench"};
    app.require_subcommand(1);

    long long con_n = 0;
    std::optional<long long> con_x;
    std::string con_method, con_out;
    auto* construct = app.add_subcommand("construct", "build a covering and write it to a file");
    construct->add_option("--n", con_n, "ground-set size")->required();
    construct->add_option("--x", con_x, "component bound (balanced: must equal n/2; bitstring: ignored)");
    construct->add_option("--method", con_method, "bitstring | balanced | partition")
        ->required()
        ->check(CLI::IsMember({"bitstring", "balanced", "partition"}));
    construct->add_option("--out", con_out, "output covering file")->required();

    std::string ver_in;
    std::optional<long long> ver_x;
    auto* verify = app.add_subcommand("verify", "check a covering file and print its certificate");
    verify->add_option("file", ver_in, "covering file")->required();
    verify->add_option("--x", ver_x, "component bound to enforce");

    std::uint64_t bnd_n = 0, bnd_x = 0;
    std::string bnd_csv;
    auto* bounds = app.add_subcommand("bounds", "print lower/upper bounds and their ratio");
    bounds->add_option("--n", bnd_n, "ground-set size")->required();
    bounds->add_option("--x", bnd_x, "component bound")->required();
    bounds->add_option("--csv", bnd_csv, "write a one-row CSV here ('-' for stdout)");

    int sea_n = 0;
    std::optional<int> sea_x;
    std::optional<long long> sea_limit;
    std::string sea_seed, sea_out;
    auto* search = app.add_subcommand("search", "exact minimum covering for small n");
    search->add_option("--n", sea_n, "ground-set size")->required();
    search->add_option("--x", sea_x, "component bound");
    search->add_option("--node-limit", sea_limit, "search node cap");
    search->add_option("--seed", sea_seed, "warm-start covering file");
    search->add_option("--out", sea_out, "write the optimal covering here");

    std::vector<std::uint64_t> ben_ns, ben_xs;
    std::string ben_csv;
    bool ben_bounds_only = false;
    auto* bench = app.add_subcommand("bench", "bounds/construction grid as CSV");
    bench->add_option("--n", ben_ns, "comma-separated n values")->required()->delimiter(',');
    bench->add_option("--x", ben_xs, "comma-separated x values")->required()->delimiter(',');
    bench->add_option("--csv", ben_csv, "output CSV path ('-' for stdout)")->required();
    bench->add_flag("--bounds-only", ben_bounds_only, "skip construction; leave achieved blank");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct) return cmd_construct(con_n, con_x, con_method, con_out);
        if (*verify) return cmd_verify(ver_in, ver_x);
        if (*bounds) return cmd_bounds(bnd_n, bnd_x, bnd_csv);
        if (*search) return cmd_search(sea_n, sea_x, sea_limit, sea_seed, sea_out);
        if (*bench) return cmd_bench(ben_ns, ben_xs, ben_csv, ben_bounds_only);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return usage_error("no subcommand given");
}
