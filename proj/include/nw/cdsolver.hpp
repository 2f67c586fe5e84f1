#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "nw/row.hpp"

namespace nw {

// Constraint system for the last two rows: given fixed A and B, symmetric C
// and D with first entries +1 must satisfy p_k(C) + p_k(D) = rhs[k] for
// k = 1..m plus the row-sum targets from the decomposition.
struct CDSystem {
    int n = 1;
    int m = 0;
    std::vector<int> rhs;  // rhs[k-1] = -p_k(A) - p_k(B)
    std::optional<std::vector<int>> signs;  // s_i with d_i = s_i * c_i
    int target_c = 1;
    int target_d = 1;
};

inline CDSystem derive_cd_system(const std::vector<int>& paf_a,
                                 const std::vector<int>& paf_b, int c, int d) {
    if (paf_a.size() != paf_b.size())
        throw MixedOrders("PAF vectors of different orders");
    CDSystem sys;
    sys.n = static_cast<int>(paf_a.size());
    sys.m = (sys.n - 1) / 2;
    sys.target_c = c;
    sys.target_d = d;
    sys.rhs.resize(sys.m);
    for (int k = 1; k <= sys.m; ++k) sys.rhs[k - 1] = -paf_a[k] - paf_b[k];
    return sys;
}

// Quadratic shape of p_k(C) for symmetric C in the half-entries c_1..c_m:
//   p_k(C) = 1 + 2 c_{lin(k)} + 2 * sum over pairs(k) of c_u c_v,
// with exactly m-1 products.  The constant comes from the unique fixed point
// of j -> -k-j; the linear term from the j=0 / j=-k orbit.
struct CDStructure {
    struct Equation {
        int lin;                                // 1-based variable index
        std::vector<std::pair<int, int>> pairs; // 1-based variable pairs
    };
    int n = 1;
    std::vector<Equation> eq;  // eq[k-1] describes p_k, k = 1..m

    static int fold(int j, int n) { return std::min(((j % n) + n) % n, ((-j % n) + n) % n); }

    explicit CDStructure(int n_) : n(n_) {
        const int m = (n - 1) / 2;
        const int inv2 = (n + 1) / 2;  // 2 * inv2 = n + 1 = 1 (mod n)
        eq.resize(m);
        for (int k = 1; k <= m; ++k) {
            Equation& e = eq[k - 1];
            e.lin = fold(k, n);
            const int j0 = fold_pos(-static_cast<long long>(k) * inv2, n);
            std::vector<char> seen(n, 0);
            seen[0] = seen[fold_pos(-k, n)] = seen[j0] = 1;
            for (int j = 0; j < n; ++j) {
                if (seen[j]) continue;
                seen[j] = 1;
                seen[fold_pos(-k - j, n)] = 1;
                e.pairs.emplace_back(fold(j, n), fold(j + k, n));
            }
        }
    }

  private:
    static int fold_pos(long long j, int n) { return static_cast<int>(((j % n) + n) % n); }
};

// Linear system over Z/4 in the half-entries of C, with solutions restricted
// to odd residues (the mod-4 images of +-1).
struct Mod4System {
    enum class Form { Raw, Echelon };
    int m = 0;
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<std::uint8_t> rhs;
    Form form = Form::Raw;
    bool infeasible = false;  // set when an even residual row is contradictory
    std::vector<int> pivot_of_row;  // echelon only; -1 for residual rows
};

// Reduce to a Jordan-style echelon: unit pivots (first odd coefficient) with
// the pivot column cleared from every other stored row, then the all-even
// residual rows.  Over Z/4 a stray even coefficient left at another pivot
// column breaks back-substitution, so the full sweep is load-bearing.
inline void echelonize(Mod4System& sys) {
    if (sys.form == Mod4System::Form::Echelon) return;
    const int m = sys.m;
    std::vector<std::vector<std::uint8_t>> pivrow;
    std::vector<std::uint8_t> pivrhs;
    std::vector<int> pivcol;
    std::vector<std::vector<std::uint8_t>> evens;
    std::vector<std::uint8_t> evenrhs;
    auto submul = [m](std::vector<std::uint8_t>& row, std::uint8_t& b, std::uint8_t f,
                      const std::vector<std::uint8_t>& prow, std::uint8_t pb) {
        for (int j = 0; j < m; ++j) row[j] = (row[j] + 4 - (f * prow[j]) % 4) % 4;
        b = (b + 4 - (f * pb) % 4) % 4;
    };
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        std::vector<std::uint8_t> row = sys.rows[r];
        for (auto& v : row) v %= 4;
        std::uint8_t b = sys.rhs[r] % 4;
        for (std::size_t p = 0; p < pivrow.size(); ++p)
            if (std::uint8_t f = row[pivcol[p]]; f != 0)
                submul(row, b, f, pivrow[p], pivrhs[p]);
        int pc = -1;
        for (int j = 0; j < m; ++j)
            if (row[j] % 2 == 1) {
                pc = j;
                break;
            }
        if (pc < 0) {
            evens.push_back(std::move(row));
            evenrhs.push_back(b);
            continue;
        }
        const std::uint8_t inv = row[pc];  // 1 and 3 are self-inverse mod 4
        for (auto& v : row) v = (v * inv) % 4;
        b = (b * inv) % 4;
        for (std::size_t p = 0; p < pivrow.size(); ++p)
            if (std::uint8_t f = pivrow[p][pc]; f != 0)
                submul(pivrow[p], pivrhs[p], f, row, b);
        for (std::size_t e = 0; e < evens.size(); ++e)
            if (std::uint8_t f = evens[e][pc]; f != 0)
                submul(evens[e], evenrhs[e], f, row, b);
        pivrow.push_back(std::move(row));
        pivrhs.push_back(b);
        pivcol.push_back(pc);
    }
    // order unit-pivot rows by pivot column, then append residuals
    std::vector<std::size_t> order(pivrow.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return pivcol[x] < pivcol[y]; });
    sys.rows.clear();
    sys.rhs.clear();
    sys.pivot_of_row.clear();
    for (std::size_t i : order) {
        sys.rows.push_back(std::move(pivrow[i]));
        sys.rhs.push_back(pivrhs[i]);
        sys.pivot_of_row.push_back(pivcol[i]);
    }
    sys.infeasible = false;
    for (std::size_t e = 0; e < evens.size(); ++e) {
        // with every variable odd, an all-even row has constant left side
        int twos = 0;
        for (int j = 0; j < m; ++j)
            if (evens[e][j] == 2) ++twos;
        if ((2 * twos) % 4 != evenrhs[e]) sys.infeasible = true;
        sys.rows.push_back(std::move(evens[e]));
        sys.rhs.push_back(evenrhs[e]);
        sys.pivot_of_row.push_back(-1);
    }
    sys.form = Mod4System::Form::Echelon;
}

// All +-1 vectors (as {1,3} mod-4 residues internally) solving the system,
// sorted.  Free variables are enumerated; bound ones must land on odd values.
inline std::vector<std::vector<int>> solve_mod4(Mod4System sys) {
    echelonize(sys);
    std::vector<std::vector<int>> out;
    if (sys.infeasible) return out;
    const int m = sys.m;
    std::vector<char> is_pivot(m, 0);
    for (int pc : sys.pivot_of_row)
        if (pc >= 0) is_pivot[pc] = 1;
    std::vector<int> freecols;
    for (int j = 0; j < m; ++j)
        if (!is_pivot[j]) freecols.push_back(j);
    const int f = static_cast<int>(freecols.size());
    std::vector<std::uint8_t> x(m, 0);
    for (std::uint64_t mask = 0; mask < (1ull << f); ++mask) {
        for (int i = 0; i < f; ++i) x[freecols[i]] = (mask >> i) & 1 ? 3 : 1;
        bool ok = true;
        for (std::size_t r = 0; r < sys.rows.size() && ok; ++r) {
            const int pc = sys.pivot_of_row[r];
            if (pc < 0) continue;  // residual rows already checked
            int acc = sys.rhs[r];
            for (int j : freecols) acc -= sys.rows[r][j] * x[j];
            const std::uint8_t v = static_cast<std::uint8_t>(((acc % 4) + 4) % 4);
            if (v % 2 == 0) ok = false;
            x[pc] = v;
        }
        if (!ok) continue;
        std::vector<int> sol(m);
        for (int j = 0; j < m; ++j) sol[j] = x[j] == 1 ? 1 : -1;
        out.push_back(std::move(sol));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Determine the relative signs s_i (d_i = s_i c_i) from the joint mod-4
// reduction of the system.  Each equation contributes a GF(2) constraint on
// tau_i = [s_i = +1]; in every order checked the matrix is a permutation, so
// the result is unique, but the general affine space is enumerated so an
// unexpected rank drop can only add candidates, never lose solutions.  An
// empty result is the Infeasible prune.  Candidate sign vectors must also be
// compatible with the target row sums: over {i : s_i = +1} the half-entries
// of C sum to (c+d-2)/4, over the rest to (c-d)/4.
inline std::vector<std::vector<int>> sign_split(const CDSystem& sys,
                                                const CDStructure& st) {
    const int m = sys.m;
    std::vector<std::uint64_t> rows;  // GF(2) rows, bit j = variable j+1
    std::vector<int> rhs;
    for (int k = 1; k <= m; ++k) {
        const CDStructure::Equation& e = st.eq[k - 1];
        std::vector<int> gamma(m, 0);
        gamma[e.lin - 1] += 1;
        for (auto [u, v] : e.pairs) {
            gamma[u - 1] += 1;
            gamma[v - 1] += 1;
        }
        // joint equation mod 4: sum gamma_i (c_i + d_i) = P_k/2 - 1 + 2*(m-1);
        // with c_i + d_i in {0, 2} the even-gamma terms vanish
        const int rk = sys.rhs[k - 1] / 2 - 1 + 2 * static_cast<int>(e.pairs.size());
        if (((rk % 2) + 2) % 2 != 0) return {};  // odd q_i: infeasible
        std::uint64_t bits = 0;
        for (int j = 0; j < m; ++j)
            if (gamma[j] % 2) bits |= 1ull << j;
        rows.push_back(bits);
        rhs.push_back(((rk / 2) % 2 + 2) % 2);
    }
    // GF(2) elimination
    std::vector<std::uint64_t> pivrow;
    std::vector<int> pivrhs, pivcol;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint64_t row = rows[r];
        int b = rhs[r];
        for (std::size_t p = 0; p < pivrow.size(); ++p)
            if (row >> pivcol[p] & 1) {
                row ^= pivrow[p];
                b ^= pivrhs[p];
            }
        if (row == 0) {
            if (b) return {};
            continue;
        }
        const int pc = std::countr_zero(row);
        pivrow.push_back(row);
        pivrhs.push_back(b);
        pivcol.push_back(pc);
    }
    std::vector<char> is_pivot(m, 0);
    for (int pc : pivcol) is_pivot[pc] = 1;
    std::vector<int> freecols;
    for (int j = 0; j < m; ++j)
        if (!is_pivot[j]) freecols.push_back(j);
    // back-substitution order: descending pivot column (row pivot is its
    // lowest set bit, so higher columns in the row are already resolved)
    std::vector<std::size_t> order(pivrow.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivcol[a] > pivcol[b]; });
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (1ull << freecols.size()); ++mask) {
        std::uint64_t tau = 0;
        for (std::size_t i = 0; i < freecols.size(); ++i)
            if (mask >> i & 1) tau |= 1ull << freecols[i];
        for (std::size_t i : order) {
            const int pc = pivcol[i];
            const int v = pivrhs[i] ^ (std::popcount(pivrow[i] & tau & ~(1ull << pc)) & 1);
            if (v) tau |= 1ull << pc;
        }
        std::vector<int> s(m);
        int plus = 0;
        for (int j = 0; j < m; ++j) {
            s[j] = (tau >> j & 1) ? 1 : -1;
            plus += (s[j] == 1);
        }
        // row-sum compatibility for this sign pattern
        const int sp = (sys.target_c + sys.target_d - 2) / 4;
        const int sn = (sys.target_c - sys.target_d) / 4;
        const int minus = m - plus;
        if (std::abs(sp) > plus || ((sp - plus) % 2 + 2) % 2 != 0) continue;
        if (std::abs(sn) > minus || ((sn - minus) % 2 + 2) % 2 != 0) continue;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Substitute d_i = s_i c_i and divide by 4: the exact identity
//   2(1+s_lin) c_lin + sum 2(1+s_u s_v) c_u c_v = P_k - 2
// becomes, after checking 4 | (P_k - 2) and halving twice,
//   [s_lin=+1] c_lin + sum over {s_u s_v = +1} of c_u c_v = (P_k - 2)/4,
// and each surviving product linearizes as c_u + c_v - 1 (mod 4).
inline std::optional<Mod4System> linearize_mod4(const CDSystem& sys,
                                                const CDStructure& st) {
    if (!sys.signs)
        throw Error("linearize_mod4 requires a sign-split system");
    const std::vector<int>& s = *sys.signs;
    Mod4System out;
    out.m = sys.m;
    for (int k = 1; k <= sys.m; ++k) {
        const CDStructure::Equation& e = st.eq[k - 1];
        if ((((sys.rhs[k - 1] - 2) % 4) + 4) % 4 != 0) return std::nullopt;
        std::vector<std::uint8_t> row(sys.m, 0);
        int rhs = (sys.rhs[k - 1] - 2) / 4;
        if (s[e.lin - 1] == 1) row[e.lin - 1] = (row[e.lin - 1] + 1) % 4;
        for (auto [u, v] : e.pairs)
            if (s[u - 1] * s[v - 1] == 1) {
                row[u - 1] = (row[u - 1] + 1) % 4;
                row[v - 1] = (row[v - 1] + 1) % 4;
                rhs += 1;  // the -1 of c_u + c_v - 1 moves to the right side
            }
        out.rows.push_back(std::move(row));
        out.rhs.push_back(static_cast<std::uint8_t>(((rhs % 4) + 4) % 4));
    }
    return out;
}

// Full D-step completion: all symmetric (C, D) with the target row sums and
// p_k(C) + p_k(D) = rhs for every k, found via the mod-4 relaxation and then
// re-verified exactly.
inline std::vector<std::pair<CirculantRow, CirculantRow>> complete_cd(
    const CDSystem& sys, const CDStructure& st) {
    std::vector<std::pair<CirculantRow, CirculantRow>> out;
    const int n = sys.n;
    const int m = sys.m;
    auto build_row = [n, m](const std::vector<int>& half) {
        std::uint64_t bits = 1;
        for (int i = 1; i <= m; ++i) bits = (bits << 1) | (half[i - 1] == 1 ? 1u : 0u);
        for (int i = m; i >= 1; --i) bits = (bits << 1) | (half[i - 1] == 1 ? 1u : 0u);
        return CirculantRow(n, bits);
    };
    for (std::vector<int>& s : sign_split(sys, st)) {
        CDSystem signed_sys = sys;
        signed_sys.signs = s;
        std::optional<Mod4System> lin = linearize_mod4(signed_sys, st);
        if (!lin) continue;
        for (const std::vector<int>& half : solve_mod4(*lin)) {
            std::vector<int> dhalf(m);
            for (int i = 0; i < m; ++i) dhalf[i] = s[i] * half[i];
            CirculantRow c = build_row(half);
            CirculantRow d = build_row(dhalf);
            if (c.row_sum() != sys.target_c || d.row_sum() != sys.target_d) continue;
            bool exact = true;
            for (int k = 1; k <= m && exact; ++k)
                exact = c.paf(k) + d.paf(k) == sys.rhs[k - 1];
            if (exact) out.emplace_back(c, d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nw
