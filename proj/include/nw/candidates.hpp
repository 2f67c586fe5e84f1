#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nw/row.hpp"
#include "nw/spectrum.hpp"

namespace nw {

enum class SearchMode { Full, AlmostSymmetricA };

// Candidate rows sharing one row sum; `filtered` records whether the spectral
// bound has already been applied to them.
struct CandidateSet {
    std::vector<CirculantRow> rows;
    bool filtered = false;
};

inline std::vector<int> units(int n) {
    std::vector<int> out;
    for (int u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) out.push_back(u);
    return out;  // empty for n = 1: the trivial group
}

// Index automorphism x -> u*x of Z_n applied to a row: out[k] = in[(u*k) % n].
// Permutes the PAF (p_k -> p_{uk mod n}), so the spectrum multiset and any
// completion-existence question are invariant along the orbit.
inline CirculantRow automorphism_images(const CirculantRow& row, int u) {
    const int n = row.order();
    if (u < 1 || u >= std::max(n, 2) || std::gcd(u, n) != 1)
        throw NotAUnit("automorphism multiplier must be a unit mod n");
    std::uint64_t bits = 0;
    for (int k = 0; k < n; ++k)
        bits = (bits << 1) | (row.entry(static_cast<int>((static_cast<long long>(u) * k) % n)) == 1 ? 1u : 0u);
    return CirculantRow(n, bits);
}

// Gosper's hack: next word with the same popcount.  Returns 0 on wrap.
inline std::uint64_t next_same_popcount(std::uint64_t w) {
    const std::uint64_t c = w & (~w + 1);
    const std::uint64_t r = w + c;
    if (r == 0) return 0;
    return (((w ^ r) >> 2) / c) | r;
}

// All symmetric rows (1, c_1..c_m, c_m..c_1) with the given row sum: the free
// half-vector needs t = (n - row_sum)/4 entries at -1, so the count is
// C(m, t).  Rows come out in increasing bit order.
inline CandidateSet enumerate_symmetric_rows(int n, int row_sum) {
    const int m = (n - 1) / 2;
    if (((row_sum % 4) + 4) % 4 != n % 4 || std::abs(row_sum) > n)
        throw InfeasibleSum("symmetric row sum must match n mod 4 and fit the order");
    const int half_sum = (row_sum - 1) / 2;           // sum of c_1..c_m
    if ((half_sum - m) % 2 != 0 || std::abs(half_sum) > m)
        throw InfeasibleSum("row sum incompatible with half-row length");
    const int t = (m - half_sum) / 2;                 // -1 count in the half
    CandidateSet out;
    if (n == 1) {
        out.rows.push_back(CirculantRow::all_plus(1));
        return out;
    }
    // Half-vector packed into m bits (bit m-i holds c_i); expand into a full
    // palindromic row below.  Enumerate all C(m, t) placements of the -1s.
    auto expand = [&](std::uint64_t halfplus) {
        std::uint64_t bits = 1;  // entry 0
        for (int i = 1; i <= m; ++i)
            bits = (bits << 1) | ((halfplus >> (m - i)) & 1ull);
        for (int i = m; i >= 1; --i)
            bits = (bits << 1) | ((halfplus >> (m - i)) & 1ull);
        return CirculantRow(n, bits);
    };
    if (t == m) {
        out.rows.push_back(expand(0));
        return out;
    }
    for (std::uint64_t w = (1ull << (m - t)) - 1; w < (1ull << m);) {
        out.rows.push_back(expand(w));
        const std::uint64_t nx = next_same_popcount(w);
        if (nx == 0 || nx >= (1ull << m)) break;
        w = nx;
    }
    std::sort(out.rows.begin(), out.rows.end());
    return out;
}

// One lexicographically largest representative per Aut(Z_n)-orbit, then the
// spectral cut lambda_i <= 4n + eps.
inline CandidateSet orbit_representatives(const CandidateSet& set, int n,
                                          double epsilon = 1e-6) {
    const std::vector<int> us = units(n);
    CandidateSet out;
    out.filtered = true;
    for (const CirculantRow& r : set.rows) {
        bool maximal = true;
        for (int u : us)
            if (automorphism_images(r, u).bits() > r.bits()) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        if (!spectrum_within_bound(spectrum(r), n, epsilon)) continue;
        out.rows.push_back(r);
    }
    return out;
}

// Canonical A candidates with row sum a: first entry +1, lexicographically
// maximal over the 2n transforms {+-S^j} (or over the almost-symmetric subset
// of those in AlmostSymmetricA mode), passing lambda_i <= 4n + eps.
inline std::vector<CirculantRow> enumerate_A_candidates(int n, int a,
                                                        SearchMode mode,
                                                        double epsilon = 1e-6) {
    std::vector<CirculantRow> out;
    if (std::abs(a) > n || (a % 2 == 0)) return out;
    if (n == 1) {
        if (a == 1) out.push_back(CirculantRow::all_plus(1));
        return out;
    }
    const int minus = (n - a) / 2;  // count of -1 entries in the full row
    if (minus < 0 || minus > n - 1) return out;  // entry 0 is pinned to +1
    auto consider = [&](CirculantRow row) {
        if (mode == SearchMode::AlmostSymmetricA) {
            if (!row.is_almost_symmetric()) return;
            if (!row.is_shift_canonical_almost_symmetric()) return;
        } else {
            if (!row.is_shift_canonical()) return;
        }
        if (!spectrum_within_bound(spectrum(row), n, epsilon)) return;
        out.push_back(row);
    };
    if (mode == SearchMode::AlmostSymmetricA) {
        // Free bits: entries 1 and n-1, plus one bit per pair {k, n-k},
        // k = 2..m.  Small enough to enumerate exhaustively by mask.
        const int m = (n - 1) / 2;
        const int freebits = m + 1;
        for (std::uint64_t f = 0; f < (1ull << freebits); ++f) {
            std::uint64_t bits = 1;  // entry 0
            std::vector<int> sign(n, 1);
            sign[1] = (f & 1) ? 1 : -1;
            sign[n - 1] = (f & 2) ? 1 : -1;
            for (int k = 2; k <= m; ++k) {
                const int s = (f >> k) & 1 ? 1 : -1;
                sign[k] = s;
                sign[n - k] = s;
            }
            int sum = 1;
            for (int k = 1; k < n; ++k) sum += sign[k];
            if (sum != a) continue;
            for (int k = 1; k < n; ++k) bits = (bits << 1) | (sign[k] == 1 ? 1u : 0u);
            consider(CirculantRow(n, bits));
        }
    } else {
        const int lowplus = n - 1 - minus;  // +1 entries among positions 1..n-1
        const std::uint64_t top = 1ull << (n - 1);
        if (lowplus == 0) {
            consider(CirculantRow(n, top));
        } else {
            for (std::uint64_t w = (1ull << lowplus) - 1; w < top;) {
                consider(CirculantRow(n, top | w));
                const std::uint64_t nx = next_same_popcount(w);
                if (nx == 0 || nx >= top) break;
                w = nx;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nw
