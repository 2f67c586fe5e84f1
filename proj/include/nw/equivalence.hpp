#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nw/candidates.hpp"
#include "nw/quadruple.hpp"
#include "nw/row.hpp"

namespace nw {

// One group element: a multiplier automorphism applied to all four rows, a
// cyclic shift of the first row, per-slot negations, and a permutation of the
// three symmetric slots.  apply_transform renormalizes first entries back to
// +1 afterwards, so the result stays inside the search convention.
struct EquivalenceTransform {
    int sigma = 1;
    int shift_a = 0;
    std::array<int, 4> neg{1, 1, 1, 1};
    std::array<int, 3> perm_bcd{0, 1, 2};
};

inline Quadruple apply_transform(const Quadruple& q, const EquivalenceTransform& t) {
    const int n = q.order();
    const int u = n == 1 ? 1 : t.sigma;
    std::array<CirculantRow, 4> rows{
        automorphism_images(q.a, u), automorphism_images(q.b, u),
        automorphism_images(q.c, u), automorphism_images(q.d, u)};
    rows[0] = rows[0].shifted(t.shift_a);
    for (int i = 0; i < 4; ++i)
        if (t.neg[i] == -1) rows[i] = rows[i].negated();
    std::array<CirculantRow, 4> out{rows[0], rows[1 + t.perm_bcd[0]],
                                    rows[1 + t.perm_bcd[1]], rows[1 + t.perm_bcd[2]]};
    for (CirculantRow& r : out)
        if (r.entry(0) == -1) r = r.negated();
    return Quadruple{out[0], out[1], out[2], out[3]};
}

// Flat, totally ordered fingerprint of an equivalence class.  Word order is
// the distinguished (shift-maximal) slot followed by the three symmetric
// slots sorted descending, so keys compare the way the rows print.
struct CanonicalKey {
    int n = 1;
    std::array<std::uint64_t, 4> words{};

    auto operator<=>(const CanonicalKey&) const = default;

    Quadruple to_quadruple() const {
        return Quadruple{CirculantRow(n, words[0]), CirculantRow(n, words[1]),
                         CirculantRow(n, words[2]), CirculantRow(n, words[3])};
    }
};

// Whether classification may move any row into the distinguished slot
// (WideSlots) or must keep the original first row there (FixedSlotA, the
// narrower books-only group).  FixedSlotA merges strictly less; it exists to
// let tests demonstrate the gap, and WideSlots is what reproduces the
// published class counts.
enum class GroupScope { WideSlots, FixedSlotA };

// The +-shift variant of r that is symmetric with first entry +1, if one
// exists.  For odd n it is unique: two distinct symmetric normalizations
// would force a period dividing gcd(2j, n) and hence an equal row, and the
// sign is pinned because an odd-order row cannot equal its own negation.
inline std::optional<CirculantRow> symmetric_variant(const CirculantRow& r) {
    for (int j = 0; j < r.order(); ++j) {
        CirculantRow v = r.shifted(j);
        if (v.entry(0) == -1) v = v.negated();
        if (v.is_symmetric()) return v;
    }
    return std::nullopt;
}

// Largest word over the 2n signed shifts of r.
inline std::uint64_t shift_orbit_max(const CirculantRow& r) {
    std::uint64_t best = 0;
    for (int j = 0; j < r.order(); ++j) {
        const CirculantRow v = r.shifted(j);
        best = std::max({best, v.bits(), v.negated().bits()});
    }
    return best;
}

// Maximum key over the group orbit: multiplier x slot choice x signed shifts
// of the distinguished slot x realignment of the symmetric slots.  A slot
// choice only counts when the other three rows admit symmetric variants;
// the original arrangement always does, so every quadruple gets a key, and
// the key is constant on orbits because the candidate set itself is.
inline CanonicalKey canonical_form(const Quadruple& q,
                                   GroupScope scope = GroupScope::WideSlots) {
    const int n = q.order();
    std::vector<int> mults = units(n);
    if (mults.empty()) mults.push_back(1);
    std::optional<CanonicalKey> best;
    for (int u : mults) {
        const std::array<CirculantRow, 4> rows{
            automorphism_images(q.a, u), automorphism_images(q.b, u),
            automorphism_images(q.c, u), automorphism_images(q.d, u)};
        std::array<std::optional<CirculantRow>, 4> sym;
        for (int i = 0; i < 4; ++i) sym[i] = symmetric_variant(rows[i]);
        const int slots = scope == GroupScope::WideSlots ? 4 : 1;
        for (int ai = 0; ai < slots; ++ai) {
            std::array<std::uint64_t, 3> rest;
            bool ok = true;
            for (int i = 0, j = 0; i < 4; ++i) {
                if (i == ai) continue;
                if (!sym[i]) {
                    ok = false;
                    break;
                }
                rest[j++] = sym[i]->bits();
            }
            if (!ok) continue;
            std::sort(rest.begin(), rest.end(), std::greater<>());
            CanonicalKey key{n, {shift_orbit_max(rows[ai]), rest[0], rest[1], rest[2]}};
            if (!best || key > *best) best = key;
        }
    }
    return *best;
}

// Group the input by canonical key; returns one representative per class
// (the decoded key itself), sorted by key.
inline std::vector<Quadruple> classify(const std::vector<Quadruple>& qs,
                                       GroupScope scope = GroupScope::WideSlots) {
    std::map<CanonicalKey, bool> seen;
    for (const Quadruple& q : qs) seen.emplace(canonical_form(q, scope), true);
    std::vector<Quadruple> out;
    out.reserve(seen.size());
    for (const auto& [key, unused] : seen) out.push_back(key.to_quadruple());
    return out;
}

}  // namespace nw
