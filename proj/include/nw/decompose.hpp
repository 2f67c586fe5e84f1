#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "nw/errors.hpp"

namespace nw {

// Row-sum pattern of a solution: a^2+b^2+c^2+d^2 = 4n with a odd (either
// sign), b = c = d = n (mod 4), |b| >= |c| >= |d|.  The congruence pins the
// sign of each of b, c, d: a symmetric first row of odd order n has its -1
// entries in pairs, so its sum is n - 4t, and exactly one of +-|x| matches
// that residue.
struct SquareDecomposition {
    int n, a, b, c, d;

    friend bool operator==(const SquareDecomposition& x, const SquareDecomposition& y) {
        return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator<(const SquareDecomposition& x, const SquareDecomposition& y) {
        return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
    }
};

inline int exact_odd_sqrt(int v) {
    for (int r = 1; r * r <= v; r += 2)
        if (r * r == v) return r;
    return 0;
}

inline std::vector<SquareDecomposition> four_square_decompositions(int n) {
    if (n < 1 || n % 2 == 0)
        throw EvenOrder("decomposable order must be odd and positive");
    const int target = 4 * n;
    const int res = n % 4;
    auto pinned = [res](int mag) { return mag % 4 == res ? mag : -mag; };
    std::vector<SquareDecomposition> out;
    for (int am = 1; am * am <= target; am += 2) {
        const int r1 = target - am * am;
        for (int bb = 1; bb * bb <= r1; bb += 2) {
            const int r2 = r1 - bb * bb;
            for (int cc = 1; cc <= bb && cc * cc <= r2; cc += 2) {
                const int dd = exact_odd_sqrt(r2 - cc * cc);
                if (dd == 0 || dd > cc) continue;
                out.push_back({n, am, pinned(bb), pinned(cc), pinned(dd)});
                out.push_back({n, -am, pinned(bb), pinned(cc), pinned(dd)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nw
