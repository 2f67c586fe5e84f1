#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "nw/candidates.hpp"
#include "nw/cdsolver.hpp"
#include "nw/decompose.hpp"
#include "nw/equivalence.hpp"
#include "nw/quadruple.hpp"
#include "nw/spectrum.hpp"

namespace nw {

struct SearchConfig {
    int order = 1;
    SearchMode mode = SearchMode::Full;
    double epsilon = 1e-6;
    int jobs = 1;
    std::uint64_t limit = 0;  // stop after this many solutions; 0 = exhaustive
};

struct SearchStats {
    std::uint64_t decompositions = 0;
    std::uint64_t a_candidates = 0;   // (decomposition, A) pairs examined
    std::uint64_t ab_pairs = 0;       // (A, B) pairs reaching the spectral test
    std::uint64_t ab_pruned = 0;      // of those, cut by the spectral bound
    std::uint64_t systems = 0;        // constraint systems handed to the solver
    std::uint64_t solutions = 0;
};

struct SearchResult {
    std::vector<Quadruple> solutions;  // sorted; exactly the canonical raw set
    SearchStats stats;
};

namespace detail {

struct BEntry {
    CirculantRow row;
    std::vector<int> paf;
    std::vector<double> spec;
};

// One work unit: a square decomposition together with one A candidate.  Units
// are processed in index order (possibly by several threads) and merged in
// index order, so the output never depends on the thread count.
struct SearchUnit {
    SquareDecomposition dec;
    CirculantRow a;
    std::vector<int> paf_a;
    std::vector<double> spec_a;
};

inline void run_unit(const SearchUnit& unit, const std::vector<BEntry>& bs,
                     const CDStructure& st, double epsilon,
                     std::vector<Quadruple>& out, SearchStats& stats) {
    const int n = unit.dec.n;
    for (const BEntry& be : bs) {
        ++stats.ab_pairs;
        if (!pair_prune(unit.spec_a, be.spec, n, epsilon)) {
            ++stats.ab_pruned;
            continue;
        }
        ++stats.systems;
        CDSystem sys = derive_cd_system(unit.paf_a, be.paf, unit.dec.c, unit.dec.d);
        for (const auto& [c, d] : complete_cd(sys, st)) {
            Quadruple q{unit.a, be.row, c, d};
            if (!verify_additivity(q)) continue;  // every output re-checks exactly
            out.push_back(q);
        }
    }
}

}  // namespace detail

// Exhaustive search for the canonical raw solution set at the given order:
// quadruples (A, B, C, D) with first entries +1, A maximal over signed
// shifts (within the almost-symmetric family in that mode), B symmetric and
// maximal in its multiplier orbit, C and D symmetric, |sum B| >= |sum C| >=
// |sum D|, and total autocorrelation zero at every nonzero shift.
inline SearchResult search(const SearchConfig& config) {
    const int n = config.order;
    SearchResult result;
    const std::vector<SquareDecomposition> decs = four_square_decompositions(n);
    result.stats.decompositions = decs.size();
    const CDStructure st(n);

    // candidate caches shared across decompositions
    std::map<int, std::vector<detail::BEntry>> b_cache;
    for (const SquareDecomposition& dec : decs) {
        if (b_cache.contains(dec.b)) continue;
        std::vector<detail::BEntry>& entries = b_cache[dec.b];
        const CandidateSet reps =
            orbit_representatives(enumerate_symmetric_rows(n, dec.b), n, config.epsilon);
        for (const CirculantRow& r : reps.rows)
            entries.push_back({r, r.paf_vector(), spectrum(r)});
    }
    std::map<int, std::vector<CirculantRow>> a_cache;
    for (const SquareDecomposition& dec : decs)
        if (!a_cache.contains(dec.a))
            a_cache[dec.a] = enumerate_A_candidates(n, dec.a, config.mode, config.epsilon);

    std::vector<detail::SearchUnit> units;
    for (const SquareDecomposition& dec : decs)
        for (const CirculantRow& a : a_cache[dec.a])
            units.push_back({dec, a, a.paf_vector(), spectrum(a)});
    result.stats.a_candidates = units.size();

    std::vector<std::vector<Quadruple>> slots(units.size());
    const bool sequential = config.jobs <= 1 || config.limit > 0;
    if (sequential) {
        std::uint64_t found = 0;
        for (std::size_t i = 0; i < units.size(); ++i) {
            detail::run_unit(units[i], b_cache[units[i].dec.b], st, config.epsilon,
                             slots[i], result.stats);
            found += slots[i].size();
            if (config.limit > 0 && found >= config.limit) break;
        }
    } else {
        const std::size_t jobs =
            std::min<std::size_t>(static_cast<std::size_t>(config.jobs),
                                  std::max<std::size_t>(units.size(), 1));
        std::atomic<std::size_t> next{0};
        std::mutex stats_mutex;
        auto worker = [&] {
            SearchStats local{};
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= units.size()) break;
                detail::run_unit(units[i], b_cache[units[i].dec.b], st,
                                 config.epsilon, slots[i], local);
            }
            std::lock_guard<std::mutex> lock(stats_mutex);
            result.stats.ab_pairs += local.ab_pairs;
            result.stats.ab_pruned += local.ab_pruned;
            result.stats.systems += local.systems;
        };
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    for (std::vector<Quadruple>& slot : slots)
        result.solutions.insert(result.solutions.end(), slot.begin(), slot.end());
    if (config.limit > 0 && result.solutions.size() > config.limit)
        result.solutions.resize(config.limit);
    std::sort(result.solutions.begin(), result.solutions.end());
    result.solutions.erase(
        std::unique(result.solutions.begin(), result.solutions.end()),
        result.solutions.end());
    result.stats.solutions = result.solutions.size();
    return result;
}

}  // namespace nw
