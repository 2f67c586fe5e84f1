#pragma once

#include <array>

#include "nw/row.hpp"

namespace nw {

enum class SymmetryKind { Symmetric, AlmostSymmetric, General };

// Four circulant rows of one odd order; B, C, D symmetric, A unrestricted.
struct Quadruple {
    CirculantRow a, b, c, d;

    int order() const { return a.order(); }

    std::array<const CirculantRow*, 4> rows() const { return {&a, &b, &c, &d}; }

    std::array<int, 4> row_sums() const {
        return {a.row_sum(), b.row_sum(), c.row_sum(), d.row_sum()};
    }

    friend bool operator==(const Quadruple& x, const Quadruple& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator<(const Quadruple& x, const Quadruple& y) {
        if (!(x.a == y.a)) return x.a < y.a;
        if (!(x.b == y.b)) return x.b < y.b;
        if (!(x.c == y.c)) return x.c < y.c;
        return x.d < y.d;
    }
};

// Exact form of the additivity identity AA^T+BB^T+CC^T+DD^T = 4nI for
// circulants: the k=0 autocorrelation sum is 4n automatically, and the rest
// must vanish.  Integer arithmetic only.
inline bool verify_additivity(const Quadruple& q) {
    const int n = q.order();
    if (q.b.order() != n || q.c.order() != n || q.d.order() != n)
        throw MixedOrders("quadruple rows have mixed orders");
    for (int k = 1; k < n; ++k)
        if (q.a.paf(k) + q.b.paf(k) + q.c.paf(k) + q.d.paf(k) != 0) return false;
    return true;
}

}  // namespace nw
