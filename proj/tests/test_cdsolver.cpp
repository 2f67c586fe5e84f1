#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "nw/candidates.hpp"
#include "nw/cdsolver.hpp"
#include "nw/decompose.hpp"

using nw::CDStructure;
using nw::CDSystem;
using nw::CirculantRow;
using nw::Mod4System;

namespace {

std::vector<CirculantRow> all_symmetric(int n) {
    std::vector<CirculantRow> out;
    for (std::uint64_t w = 0; w < (1ull << (n - 1)); ++w) {
        CirculantRow r(n, (1ull << (n - 1)) | w);
        if (r.is_symmetric()) out.push_back(r);
    }
    return out;
}

// brute-force reference for the mod-4 solver: try all odd assignments
std::vector<std::vector<int>> brute_mod4(const Mod4System& sys) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (1ull << sys.m); ++mask) {
        std::vector<int> x(sys.m);
        for (int j = 0; j < sys.m; ++j) x[j] = (mask >> j & 1) ? 3 : 1;
        bool ok = true;
        for (std::size_t r = 0; r < sys.rows.size() && ok; ++r) {
            int acc = 0;
            for (int j = 0; j < sys.m; ++j) acc += sys.rows[r][j] * x[j];
            ok = ((acc % 4) + 4) % 4 == sys.rhs[r];
        }
        if (!ok) continue;
        std::vector<int> sol(sys.m);
        for (int j = 0; j < sys.m; ++j) sol[j] = x[j] == 1 ? 1 : -1;
        out.push_back(std::move(sol));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("quadratic structure reproduces the autocorrelation exactly") {
    for (int n : {3, 5, 7, 9, 11, 13}) {
        const int m = (n - 1) / 2;
        const CDStructure st(n);
        for (int k = 1; k <= m; ++k) {
            REQUIRE(static_cast<int>(st.eq[k - 1].pairs.size()) == m - 1);
            REQUIRE(st.eq[k - 1].lin == std::min(k, n - k));
        }
        for (const CirculantRow& r : all_symmetric(n)) {
            for (int k = 1; k <= m; ++k) {
                int val = 1 + 2 * r.entry(st.eq[k - 1].lin);
                for (auto [u, v] : st.eq[k - 1].pairs)
                    val += 2 * r.entry(u) * r.entry(v);
                REQUIRE(val == r.paf(k));
            }
        }
    }
}

TEST_CASE("system derivation") {
    CirculantRow a = CirculantRow::from_signs({1, 1, -1, 1, -1, 1, 1});
    CirculantRow b = CirculantRow::from_signs({1, -1, 1, 1, 1, 1, -1});
    CDSystem sys = nw::derive_cd_system(a.paf_vector(), b.paf_vector(), 3, -1);
    REQUIRE(sys.n == 7);
    REQUIRE(sys.m == 3);
    REQUIRE(sys.target_c == 3);
    REQUIRE(sys.target_d == -1);
    for (int k = 1; k <= 3; ++k) REQUIRE(sys.rhs[k - 1] == -a.paf(k) - b.paf(k));
    REQUIRE_THROWS_AS(
        nw::derive_cd_system(a.paf_vector(), CirculantRow::all_plus(5).paf_vector(), 1, 1),
        nw::MixedOrders);
}

TEST_CASE("mod-4 solver on corner systems") {
    // no constraints at all: every odd vector solves
    Mod4System empty;
    empty.m = 3;
    REQUIRE(nw::solve_mod4(empty).size() == 8);
    // 0 * c = 2 has no solution
    Mod4System contra;
    contra.m = 2;
    contra.rows.push_back({0, 0});
    contra.rhs.push_back(2);
    REQUIRE(nw::solve_mod4(contra).empty());
    // 0 * c = 0 constrains nothing
    Mod4System zero;
    zero.m = 2;
    zero.rows.push_back({0, 0});
    zero.rhs.push_back(0);
    REQUIRE(nw::solve_mod4(zero).size() == 4);
    // a residual row with an even coefficient is a constant check: 2c1 = 2
    // holds for both odd values of c1
    Mod4System even;
    even.m = 1;
    even.rows.push_back({2});
    even.rhs.push_back(2);
    REQUIRE(nw::solve_mod4(even).size() == 2);
    // ... and 2c1 = 0 never holds
    Mod4System even_bad;
    even_bad.m = 1;
    even_bad.rows.push_back({2});
    even_bad.rhs.push_back(0);
    REQUIRE(nw::solve_mod4(even_bad).empty());
    // trivial system with no variables has the empty solution
    Mod4System none;
    none.m = 0;
    REQUIRE(nw::solve_mod4(none).size() == 1);
}

TEST_CASE("mod-4 solver matches brute force on random systems") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> mdist(1, 6);
    std::uniform_int_distribution<int> cdist(0, 3);
    for (int rep = 0; rep < 300; ++rep) {
        Mod4System sys;
        sys.m = mdist(rng);
        std::uniform_int_distribution<int> rdist(0, sys.m + 1);
        const int nrows = rdist(rng);
        for (int r = 0; r < nrows; ++r) {
            std::vector<std::uint8_t> row(sys.m);
            for (auto& v : row) v = static_cast<std::uint8_t>(cdist(rng));
            sys.rows.push_back(std::move(row));
            sys.rhs.push_back(static_cast<std::uint8_t>(cdist(rng)));
        }
        REQUIRE(nw::solve_mod4(sys) == brute_mod4(sys));
    }
}

TEST_CASE("echelon form has unit pivots swept from all other rows") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> cdist(0, 3);
    for (int rep = 0; rep < 50; ++rep) {
        Mod4System sys;
        sys.m = 5;
        for (int r = 0; r < 6; ++r) {
            std::vector<std::uint8_t> row(5);
            for (auto& v : row) v = static_cast<std::uint8_t>(cdist(rng));
            sys.rows.push_back(std::move(row));
            sys.rhs.push_back(static_cast<std::uint8_t>(cdist(rng)));
        }
        nw::echelonize(sys);
        REQUIRE(sys.form == Mod4System::Form::Echelon);
        std::vector<int> pivots;
        for (std::size_t r = 0; r < sys.rows.size(); ++r) {
            const int pc = sys.pivot_of_row[r];
            if (pc < 0) {
                // residual rows are entirely even
                for (auto v : sys.rows[r]) REQUIRE(v % 2 == 0);
                continue;
            }
            REQUIRE(sys.rows[r][pc] == 1);
            pivots.push_back(pc);
        }
        REQUIRE(std::is_sorted(pivots.begin(), pivots.end()));
        // each pivot column is zero everywhere else
        for (int pc : pivots)
            for (std::size_t r = 0; r < sys.rows.size(); ++r)
                if (sys.pivot_of_row[r] != pc) REQUIRE(sys.rows[r][pc] == 0);
        // echelonizing twice is a no-op
        Mod4System again = sys;
        nw::echelonize(again);
        REQUIRE(again.rows == sys.rows);
        REQUIRE(again.rhs == sys.rhs);
    }
}

TEST_CASE("sign determination and completion match brute force") {
    // For every decomposition and every canonical (A, B) pair at small
    // orders, the solver's (C, D) list must equal the direct enumeration
    // of all symmetric pairs with the target sums and exact additivity.
    for (int n : {3, 5, 7, 9}) {
        const CDStructure st(n);
        const std::vector<CirculantRow> syms = all_symmetric(n);
        for (const nw::SquareDecomposition& dec : nw::four_square_decompositions(n)) {
            const auto as = nw::enumerate_A_candidates(n, dec.a, nw::SearchMode::Full);
            nw::CandidateSet breps = nw::orbit_representatives(
                nw::enumerate_symmetric_rows(n, dec.b), n, 1e-6);
            for (const CirculantRow& a : as) {
                for (const CirculantRow& b : breps.rows) {
                    CDSystem sys = nw::derive_cd_system(a.paf_vector(),
                                                        b.paf_vector(), dec.c, dec.d);
                    auto got = nw::complete_cd(sys, st);
                    std::vector<std::pair<CirculantRow, CirculantRow>> want;
                    for (const CirculantRow& c : syms) {
                        if (c.row_sum() != dec.c) continue;
                        for (const CirculantRow& d : syms) {
                            if (d.row_sum() != dec.d) continue;
                            bool ok = true;
                            for (int k = 1; k <= sys.m && ok; ++k)
                                ok = c.paf(k) + d.paf(k) == sys.rhs[k - 1];
                            if (ok) want.emplace_back(c, d);
                        }
                    }
                    std::sort(want.begin(), want.end());
                    REQUIRE(got == want);
                }
            }
        }
    }
}

TEST_CASE("sign vectors are unique for real systems") {
    // The joint parity reduction pins every sign; the general solver should
    // report exactly one candidate (or none) for systems arising from
    // actual search states.
    for (int n : {5, 7, 9, 11}) {
        const CDStructure st(n);
        int nonempty = 0;
        for (const nw::SquareDecomposition& dec : nw::four_square_decompositions(n)) {
            const auto as = nw::enumerate_A_candidates(n, dec.a, nw::SearchMode::Full);
            const auto bs = nw::enumerate_symmetric_rows(n, dec.b);
            for (const CirculantRow& a : as)
                for (const CirculantRow& b : bs.rows) {
                    CDSystem sys = nw::derive_cd_system(
                        a.paf_vector(), b.paf_vector(), dec.c, dec.d);
                    const auto ss = nw::sign_split(sys, st);
                    REQUIRE(ss.size() <= 1);
                    nonempty += !ss.empty();
                }
        }
        REQUIRE(nonempty > 0);
    }
}

TEST_CASE("infeasible row-sum targets yield no sign vector") {
    // rhs admits solutions but the +-half split cannot reach the targets
    const int n = 5;
    const CDStructure st(n);
    CirculantRow a = CirculantRow::all_plus(5);
    CDSystem sys = nw::derive_cd_system(a.paf_vector(), a.paf_vector(), 5, 5);
    // S+ would need (5+5-2)/4 = 2 from at most m = 2 positive half-entries;
    // parity: 2 = 2 works, so force a failure with targets needing |S-| > m
    CDSystem bad = sys;
    bad.target_c = 5;
    bad.target_d = -15;  // |S-| = 5 > m
    REQUIRE(nw::sign_split(bad, st).empty());
}

TEST_CASE("linearize requires signs and spots non-divisible right sides") {
    const int n = 5;
    const CDStructure st(n);
    CirculantRow a = CirculantRow::from_signs({1, 1, -1, -1, 1});
    CDSystem sys = nw::derive_cd_system(a.paf_vector(), a.paf_vector(), 1, 1);
    REQUIRE_THROWS_AS(nw::linearize_mod4(sys, st), nw::Error);
    sys.signs = std::vector<int>{1, -1};
    const auto lin = nw::linearize_mod4(sys, st);
    // P_k = 2 (mod 4) holds for every +-1 pair of rows, so the divisibility
    // marker never fires on real input
    REQUIRE(lin.has_value());
    REQUIRE(lin->m == 2);
    REQUIRE(lin->rows.size() == 2);
}
