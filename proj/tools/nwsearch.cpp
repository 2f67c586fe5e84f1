// Command-line front end: search, verify, classify, and export near
// Williamson quadruples.  Exit codes: 0 success, 1 a verification failed,
// 2 usage / input errors.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nw/equivalence.hpp"
#include "nw/gaussian.hpp"
#include "nw/io.hpp"
#include "nw/matrix.hpp"
#include "nw/search.hpp"

namespace {

int default_jobs() {
    if (const char* env = std::getenv("NW_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

const char* mode_name(nw::SearchMode mode) {
    return mode == nw::SearchMode::Full ? "full" : "almost-symmetric";
}

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::string gaussian_entry(nw::GaussianInt g) {
    if (g == nw::GaussianInt{1, 0}) return "1";
    if (g == nw::GaussianInt{-1, 0}) return "-1";
    if (g == nw::GaussianInt{0, 1}) return "i";
    return "-i";
}

int run_search(int order, const std::string& mode_str, int jobs, bool first_only,
               const std::string& out_path) {
    nw::SearchConfig cfg;
    cfg.order = order;
    cfg.mode = mode_str == "almost-symmetric" ? nw::SearchMode::AlmostSymmetricA
                                              : nw::SearchMode::Full;
    cfg.jobs = jobs;
    if (first_only) cfg.limit = 1;
    const auto t0 = std::chrono::steady_clock::now();
    const nw::SearchResult res = nw::search(cfg);
    std::vector<nw::QuadrupleRecord> recs;
    recs.reserve(res.solutions.size());
    for (const nw::Quadruple& q : res.solutions)
        recs.push_back({q, q.row_sums(), cfg.mode});
    nw::write_quadruple_file(out_path, recs);
    std::cout << "order: " << order << "\n"
              << "mode: " << mode_name(cfg.mode) << "\n"
              << "jobs: " << (first_only ? 1 : jobs) << "\n"
              << "decompositions: " << res.stats.decompositions << "\n"
              << "units: " << res.stats.a_candidates << "\n"
              << "systems: " << res.stats.systems << "\n"
              << "solutions: " << res.solutions.size() << "\n"
              << "output: " << out_path << "\n"
              << "elapsed_ms: " << elapsed_ms(t0) << "\n";
    return 0;
}

int run_verify(const std::string& path) {
    const std::vector<nw::QuadrupleRecord> recs = nw::parse_quadruple_file(path);
    int failures = 0;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const nw::Quadruple& q = recs[i].quadruple;
        const int n = q.order();
        const bool additive = nw::verify_additivity(q);
        bool amicable = false;
        bool hadamard = false;
        if (additive) {
            amicable = nw::verify_amicability(
                {q.a, q.b, q.c, q.d},
                {nw::SymmetryKind::General, nw::SymmetryKind::Symmetric,
                 nw::SymmetryKind::Symmetric, nw::SymmetryKind::Symmetric});
            hadamard = nw::is_hadamard(nw::build_williamson_block(q));
        }
        const bool ok = additive && amicable && hadamard;
        if (!ok) ++failures;
        std::cout << "record: " << i + 1 << "\n"
                  << "order: " << n << "\n"
                  << "additive: " << (additive ? "yes" : "no") << "\n"
                  << "amicable: " << (amicable ? "yes" : "no") << "\n"
                  << "hadamard: " << 4 * n << "x" << 4 * n << " "
                  << (hadamard ? "yes" : "no") << "\n";
    }
    std::cout << "records: " << recs.size() << "\n"
              << "failures: " << failures << "\n";
    return failures == 0 ? 0 : 1;
}

int run_canon(const std::string& path, const std::string& out_path) {
    const std::vector<nw::QuadrupleRecord> recs = nw::parse_quadruple_file(path);
    std::vector<nw::Quadruple> qs;
    qs.reserve(recs.size());
    for (const nw::QuadrupleRecord& r : recs) qs.push_back(r.quadruple);
    const std::vector<nw::Quadruple> reps = nw::classify(qs);
    std::vector<nw::QuadrupleRecord> out;
    out.reserve(reps.size());
    for (const nw::Quadruple& q : reps) out.push_back({q, std::nullopt, std::nullopt});
    nw::write_quadruple_file(out_path, out);
    std::cout << "records: " << recs.size() << "\n"
              << "classes: " << reps.size() << "\n"
              << "output: " << out_path << "\n";
    return 0;
}

int run_quaternary(const std::string& path, const std::string& out_path) {
    const std::vector<nw::QuadrupleRecord> recs = nw::parse_quadruple_file(path);
    std::string text;
    int failures = 0;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const nw::Quadruple& q = recs[i].quadruple;
        const nw::GaussianMatrix h = nw::build_quaternary(q);
        const bool ok = nw::verify_quaternary(h);
        if (!ok) ++failures;
        std::cout << "record: " << i + 1 << "\n"
                  << "quaternary: " << h.dim() << "x" << h.dim() << " "
                  << (ok ? "yes" : "no") << "\n";
        if (i > 0) text += '\n';
        for (int r = 0; r < h.dim(); ++r) {
            for (int c = 0; c < h.dim(); ++c) {
                if (c > 0) text += ',';
                text += gaussian_entry(h.at(r, c));
            }
            text += '\n';
        }
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw nw::Error("cannot open " + out_path + " for writing");
    out << text;
    std::cout << "records: " << recs.size() << "\n"
              << "failures: " << failures << "\n"
              << "output: " << out_path << "\n";
    return failures == 0 ? 0 : 1;
}

int run_decompose(int order) {
    const std::vector<nw::SquareDecomposition> decs =
        nw::four_square_decompositions(order);
    std::cout << "order: " << order << "\n"
              << "count: " << decs.size() << "\n";
    for (const nw::SquareDecomposition& d : decs)
        std::cout << "dec: " << d.a << " " << d.b << " " << d.c << " " << d.d
                  << "\n";
    return 0;
}

int run_count(int order, const std::string& mode_str, int jobs) {
    nw::SearchConfig cfg;
    cfg.order = order;
    cfg.mode = mode_str == "almost-symmetric" ? nw::SearchMode::AlmostSymmetricA
                                              : nw::SearchMode::Full;
    cfg.jobs = jobs;
    const auto t0 = std::chrono::steady_clock::now();
    const nw::SearchResult res = nw::search(cfg);
    std::set<nw::CanonicalKey> keys;
    for (const nw::Quadruple& q : res.solutions) keys.insert(nw::canonical_form(q));
    std::cout << "order: " << order << "\n"
              << "mode: " << mode_name(cfg.mode) << "\n"
              << "solutions: " << res.solutions.size() << "\n"
              << "classes: " << keys.size() << "\n"
              << "elapsed_ms: " << elapsed_ms(t0) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"near Williamson quadruple search and verification"};
    app.require_subcommand(1);

    int order = 1;
    std::string mode_str = "full";
    int jobs = default_jobs();
    bool first_only = false;
    std::string in_path, out_path;

    const auto mode_check = CLI::IsMember({"full", "almost-symmetric"});

    CLI::App* search = app.add_subcommand("search", "exhaustive search at one order");
    search->add_option("--order", order, "odd order n")->required();
    search->add_option("--mode", mode_str, "candidate family for the first row")
        ->check(mode_check)
        ->capture_default_str();
    search->add_option("--jobs", jobs, "worker threads (NW_JOBS overrides default)")
        ->check(CLI::PositiveNumber);
    search->add_flag("--first-only", first_only,
                     "stop at the first quadruple (forces a sequential run)");
    search->add_option("--out", out_path, "output file")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "check additivity, amicability, and the Hadamard block");
    verify->add_option("file", in_path, "quadruple file")->required();

    CLI::App* canon = app.add_subcommand(
        "canon", "reduce records to canonical class representatives");
    canon->add_option("file", in_path, "quadruple file")->required();
    canon->add_option("--out", out_path, "output file")->required();

    CLI::App* quat = app.add_subcommand(
        "quaternary", "export the order-2n quaternary Hadamard matrix");
    quat->add_option("file", in_path, "quadruple file")->required();
    quat->add_option("--out", out_path, "output file")->required();

    CLI::App* dec = app.add_subcommand("decompose",
                                       "four-square decompositions of 4n");
    dec->add_option("order", order, "odd order n")->required();

    CLI::App* count = app.add_subcommand("count", "search and classify, no output file");
    count->add_option("--order", order, "odd order n")->required();
    count->add_option("--mode", mode_str, "candidate family for the first row")
        ->check(mode_check)
        ->capture_default_str();
    count->add_option("--jobs", jobs, "worker threads (NW_JOBS overrides default)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (search->parsed()) return run_search(order, mode_str, jobs, first_only, out_path);
        if (verify->parsed()) return run_verify(in_path);
        if (canon->parsed()) return run_canon(in_path, out_path);
        if (quat->parsed()) return run_quaternary(in_path, out_path);
        if (dec->parsed()) return run_decompose(order);
        if (count->parsed()) return run_count(order, mode_str, jobs);
    } catch (const nw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
